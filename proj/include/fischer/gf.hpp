#ifndef FISCHER_GF_HPP
#define FISCHER_GF_HPP

// Table-driven arithmetic for the fields with 2, 3 and 4 elements.
//
// Elements are stored as small integer codes. For F4 the codes are
//   0 -> 0, 1 -> 1, 2 -> alpha, 3 -> alpha-bar = alpha^2 = alpha + 1
// so that addition is the XOR of the two-bit codes.
//
// Converting from `int` is the ring map Z -> F (so Gf<F4>(2) == 0); use
// `from_code` to name a specific element.

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace fischer {

enum class FieldId : std::uint8_t { F2, F3, F4 };

constexpr int field_order(FieldId id)
{
  switch (id) {
  case FieldId::F2: return 2;
  case FieldId::F3: return 3;
  case FieldId::F4: return 4;
  }
  return 0;
}

constexpr int field_characteristic(FieldId id) { return id == FieldId::F3 ? 3 : 2; }

constexpr std::string_view field_name(FieldId id)
{
  switch (id) {
  case FieldId::F2: return "F2";
  case FieldId::F3: return "F3";
  case FieldId::F4: return "F4";
  }
  return "?";
}

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

namespace detail {

using Table = std::array<std::array<std::uint8_t, 4>, 4>;

template <FieldId Id> struct FieldTables;

template <> struct FieldTables<FieldId::F2> {
  static constexpr int order = 2;
  static constexpr Table add = {{{0, 1, 0, 0}, {1, 0, 0, 0}}};
  static constexpr Table mul = {{{0, 0, 0, 0}, {0, 1, 0, 0}}};
  static constexpr std::array<std::uint8_t, 4> neg = {0, 1, 0, 0};
  static constexpr std::array<std::uint8_t, 4> inv = {0, 1, 0, 0};
  static constexpr std::array<std::uint8_t, 4> conj = {0, 1, 0, 0};
};

template <> struct FieldTables<FieldId::F3> {
  static constexpr int order = 3;
  static constexpr Table add = {{{0, 1, 2, 0}, {1, 2, 0, 0}, {2, 0, 1, 0}}};
  static constexpr Table mul = {{{0, 0, 0, 0}, {0, 1, 2, 0}, {0, 2, 1, 0}}};
  static constexpr std::array<std::uint8_t, 4> neg = {0, 2, 1, 0};
  static constexpr std::array<std::uint8_t, 4> inv = {0, 1, 2, 0};
  static constexpr std::array<std::uint8_t, 4> conj = {0, 1, 2, 0};
};

template <> struct FieldTables<FieldId::F4> {
  static constexpr int order = 4;
  static constexpr Table add = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr Table mul = {{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
  static constexpr std::array<std::uint8_t, 4> neg = {0, 1, 2, 3};
  static constexpr std::array<std::uint8_t, 4> inv = {0, 1, 3, 2};
  // Frobenius x -> x^2
  static constexpr std::array<std::uint8_t, 4> conj = {0, 1, 3, 2};
};

} // namespace detail

template <FieldId Id>
class Gf {
  using Tables = detail::FieldTables<Id>;

public:
  static constexpr FieldId id = Id;
  static constexpr int order = Tables::order;

  constexpr Gf() = default;

  /// Image of an integer under Z -> F.
  constexpr Gf(int n) // NOLINT(google-explicit-constructor): Eigen needs Scalar(0), Scalar(1)
  : code_(reduce(n))
  {}

  static constexpr Gf from_code(int code)
  {
    if (code < 0 || code >= order)
      throw DomainError("invalid element code for field");
    Gf x;
    x.code_ = static_cast<std::uint8_t>(code);
    return x;
  }

  constexpr int code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr Gf operator+(Gf a, Gf b) { return raw(Tables::add[a.code_][b.code_]); }
  friend constexpr Gf operator-(Gf a, Gf b) { return a + (-b); }
  friend constexpr Gf operator*(Gf a, Gf b) { return raw(Tables::mul[a.code_][b.code_]); }
  friend constexpr Gf operator/(Gf a, Gf b) { return a * b.inverse(); }
  constexpr Gf operator-() const { return raw(Tables::neg[code_]); }

  constexpr Gf& operator+=(Gf b) { return *this = *this + b; }
  constexpr Gf& operator-=(Gf b) { return *this = *this - b; }
  constexpr Gf& operator*=(Gf b) { return *this = *this * b; }
  constexpr Gf& operator/=(Gf b) { return *this = *this / b; }

  friend constexpr bool operator==(Gf a, Gf b) { return a.code_ == b.code_; }
  friend constexpr bool operator!=(Gf a, Gf b) { return a.code_ != b.code_; }
  // Code order; only used for deterministic sorting.
  friend constexpr bool operator<(Gf a, Gf b) { return a.code_ < b.code_; }

  constexpr Gf inverse() const
  {
    if (code_ == 0)
      throw DomainError("inverse of zero");
    return raw(Tables::inv[code_]);
  }

  constexpr Gf conjugate() const { return raw(Tables::conj[code_]); }

  friend std::ostream& operator<<(std::ostream& os, Gf x)
  {
    if constexpr (Id == FieldId::F4) {
      static constexpr std::array<const char*, 4> names = {"0", "1", "a", "A"};
      return os << names[x.code_];
    } else {
      return os << static_cast<int>(x.code_);
    }
  }

private:
  static constexpr std::uint8_t reduce(int n)
  {
    const int p = field_characteristic(Id);
    int r = n % p;
    if (r < 0)
      r += p;
    return static_cast<std::uint8_t>(r);
  }

  static constexpr Gf raw(std::uint8_t c)
  {
    Gf x;
    x.code_ = c;
    return x;
  }

  std::uint8_t code_ = 0;
};

using GF2 = Gf<FieldId::F2>;
using GF3 = Gf<FieldId::F3>;
using GF4 = Gf<FieldId::F4>;

template <class T> struct is_gf : std::false_type {};
template <FieldId Id> struct is_gf<Gf<Id>> : std::true_type {};
template <class T> concept FiniteField = is_gf<T>::value;

template <FiniteField F> constexpr F conjugate(F x) { return x.conjugate(); }

template <FiniteField F> constexpr F scalar_inverse(F x) { return x.inverse(); }

/// All elements: 0, 1, then the remaining codes ascending.
template <FiniteField F> constexpr std::array<F, F::order> enumerate_scalars()
{
  std::array<F, F::order> out{};
  for (int c = 0; c < F::order; ++c)
    out[c] = F::from_code(c);
  return out;
}

/// Codes of every element of the named field, in enumeration order.
inline std::vector<int> scalar_codes(FieldId id)
{
  std::vector<int> out;
  for (int c = 0; c < field_order(id); ++c)
    out.push_back(c);
  return out;
}

inline constexpr GF4 kAlpha = GF4::from_code(2);
inline constexpr GF4 kAlphaBar = GF4::from_code(3);

} // namespace fischer

namespace Eigen {

template <fischer::FieldId Id>
struct NumTraits<fischer::Gf<Id>> : GenericNumTraits<fischer::Gf<Id>> {
  using Real = fischer::Gf<Id>;
  using NonInteger = fischer::Gf<Id>;
  using Literal = fischer::Gf<Id>;
  using Nested = fischer::Gf<Id>;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real::from_code(Real::order - 1); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

} // namespace Eigen

#endif
