#ifndef FISCHER_FORMSPACE_HPP
#define FISCHER_FORMSPACE_HPP

// Symplectic, unitary and orthogonal spaces over F2, F4 and F3.
//
// A FormSpace carries its defining basis implicitly: vectors are coordinate
// columns in that basis and the form is given by its Gram matrix. The
// unitary form is linear in the first argument and conjugate-linear in the
// second, (u, w) = u^T G conj(w).

#include "fischer/errors.hpp"
#include "fischer/gf.hpp"
#include "fischer/linalg.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fischer {

enum class FormKind { Symplectic, Unitary, OrthogonalF2, OrthogonalF3 };

constexpr std::string_view kind_name(FormKind k)
{
  switch (k) {
  case FormKind::Symplectic: return "symplectic";
  case FormKind::Unitary: return "unitary";
  case FormKind::OrthogonalF2: return "orthogonal-F2";
  case FormKind::OrthogonalF3: return "orthogonal-F3";
  }
  return "?";
}

constexpr FieldId field_of(FormKind k)
{
  switch (k) {
  case FormKind::Symplectic:
  case FormKind::OrthogonalF2: return FieldId::F2;
  case FormKind::Unitary: return FieldId::F4;
  case FormKind::OrthogonalF3: return FieldId::F3;
  }
  return FieldId::F2;
}

enum class Sign : signed char { Plus = 1, Minus = -1 };

constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// +1 -> 1, -1 -> 2 in F3.
constexpr GF3 sign_to_f3(Sign s) { return s == Sign::Plus ? GF3(1) : GF3(-1); }

template <FiniteField F> class FormSpace {
public:
  using Scalar = F;

  FormSpace(FormKind kind, Mat<F> gram, Vec<F> qdiag = {})
  : kind_(kind)
  , gram_(std::move(gram))
  , qdiag_(std::move(qdiag))
  {
    validate();
  }

  FormKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(gram_.rows()); }
  const Mat<F>& gram() const { return gram_; }
  const Vec<F>& qdiag() const { return qdiag_; }

  bool has_quadratic() const { return kind_ != FormKind::Symplectic; }
  bool nondegenerate() const { return rank<F>(gram_) == dim(); }

  F bilinear(const Vec<F>& u, const Vec<F>& w) const
  {
    if (u.size() != dim() || w.size() != dim())
      throw PreconditionError("vector dimension does not match space");
    F s(0);
    for (int i = 0; i < dim(); ++i) {
      if (u(i).is_zero())
        continue;
      F row(0);
      for (int j = 0; j < dim(); ++j) {
        if (!w(j).is_zero())
          row += gram_(i, j) * w(j).conjugate();
      }
      s += u(i) * row;
    }
    return s;
  }

  F quadratic(const Vec<F>& v) const
  {
    if (v.size() != dim())
      throw PreconditionError("vector dimension does not match space");
    switch (kind_) {
    case FormKind::Symplectic: throw Unsupported("no quadratic form is modeled on a symplectic space");
    case FormKind::Unitary: return bilinear(v, v);
    case FormKind::OrthogonalF3: return -bilinear(v, v);
    case FormKind::OrthogonalF2: {
      F s(0);
      for (int i = 0; i < dim(); ++i) {
        if (v(i).is_zero())
          continue;
        s += v(i) * v(i) * qdiag_(i);
        for (int j = i + 1; j < dim(); ++j)
          s += v(i) * v(j) * gram_(i, j);
      }
      return s;
    }
    }
    return F(0);
  }

  /// M is an isometry iff M^T G conj(M) = G, and for OrthogonalF2 Q(M e_i) = Q(e_i).
  bool is_isometry(const Mat<F>& m) const
  {
    if (m.rows() != dim() || m.cols() != dim())
      return false;
    const Mat<F> congruent = m.transpose() * gram_ * conj<F>(m);
    if (congruent != gram_)
      return false;
    if (kind_ == FormKind::OrthogonalF2) {
      for (int i = 0; i < dim(); ++i) {
        if (quadratic(Vec<F>(m.col(i))) != qdiag_(i))
          return false;
      }
    }
    return true;
  }

  friend bool operator==(const FormSpace& a, const FormSpace& b)
  {
    return a.kind_ == b.kind_ && a.gram_ == b.gram_ && a.qdiag_.size() == b.qdiag_.size() &&
           (a.qdiag_.size() == 0 || a.qdiag_ == b.qdiag_);
  }

private:
  void validate() const
  {
    if (field_of(kind_) != F::id)
      throw ConfigError(std::string(kind_name(kind_)) + " space requires field " +
                        std::string(field_name(field_of(kind_))));
    if (gram_.rows() != gram_.cols() || gram_.rows() < 1)
      throw ConfigError("Gram matrix must be square and nonempty");
    const int n = dim();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const F a = gram_(i, j);
        const F b = gram_(j, i);
        const bool ok = kind_ == FormKind::Unitary ? a == b.conjugate() : a == b;
        if (!ok)
          throw ConfigError("Gram matrix violates the symmetry law of the form");
      }
      const bool alternating = kind_ == FormKind::Symplectic || kind_ == FormKind::OrthogonalF2;
      if (alternating && !gram_(i, i).is_zero())
        throw ConfigError("alternating form needs a zero diagonal");
    }
    if (kind_ == FormKind::OrthogonalF2) {
      if (qdiag_.size() != n)
        throw ConfigError("orthogonal-F2 space needs Q on every basis vector");
    } else if (qdiag_.size() != 0) {
      throw ConfigError("Q values are only stored for orthogonal-F2 spaces");
    }
  }

  FormKind kind_;
  Mat<F> gram_;
  Vec<F> qdiag_;
};

template <FiniteField F> F bilinear(const FormSpace<F>& s, const Vec<F>& u, const Vec<F>& w) { return s.bilinear(u, w); }

template <FiniteField F> F quadratic(const FormSpace<F>& s, const Vec<F>& v) { return s.quadratic(v); }

/// Named bases used by the group models and the permutation constructions.
struct BasisPreset {
  enum class Tag {
    SymplecticPairs,      // (v1,v2) = (v3,v4) = ... = 1
    SymplecticChainBasis, // (vi,vj) = 1 for i != j <= n-2, plus the pair (v_{n-1}, v_n)
    UnitaryOrthonormal,   // Gram = I over F4
    F3Diagonal,           // diag(1, ..., 1, s)
    F2PairsQuadratic,     // pairs Gram; Q(vi) = 1 for i < n; Q(vn) picked for the type
    F2Hyperbolic,         // hyperbolic pairs, last pair anisotropic for type -, radical vector for odd n
    F2AllOnesOffDiag      // (wi,wj) = 1 for i != j; Q(wi) from qvalues
  };

  Tag tag;
  Sign sign = Sign::Plus;
  std::vector<int> qvalues;

  static BasisPreset symplectic_pairs() { return {Tag::SymplecticPairs, Sign::Plus, {}}; }
  static BasisPreset symplectic_chain_basis() { return {Tag::SymplecticChainBasis, Sign::Plus, {}}; }
  static BasisPreset unitary_orthonormal() { return {Tag::UnitaryOrthonormal, Sign::Plus, {}}; }
  static BasisPreset f3_diagonal(Sign last) { return {Tag::F3Diagonal, last, {}}; }
  static BasisPreset f2_pairs_quadratic(Sign type) { return {Tag::F2PairsQuadratic, type, {}}; }
  static BasisPreset f2_hyperbolic(Sign type) { return {Tag::F2Hyperbolic, type, {}}; }
  static BasisPreset f2_all_ones(std::vector<int> q = {}) { return {Tag::F2AllOnesOffDiag, Sign::Plus, std::move(q)}; }
};

namespace detail {

template <FiniteField F> void set_pair(Mat<F>& g, int i, int j, F value)
{
  g(i, j) = value;
  g(j, i) = value.conjugate();
}

} // namespace detail

template <FiniteField F> FormSpace<F> make_space(FormKind kind, int dim, const BasisPreset& preset)
{
  using Tag = BasisPreset::Tag;
  if (dim < 1)
    throw ConfigError("dimension must be positive");
  if (field_of(kind) != F::id)
    throw ConfigError("field does not match form kind");

  Mat<F> g = Mat<F>::Zero(dim, dim);
  Vec<F> q;

  auto require = [&](bool ok, const char* what) {
    if (!ok)
      throw ConfigError(std::string("preset incompatible with kind/dimension: ") + what);
  };

  switch (preset.tag) {
  case Tag::SymplecticPairs:
    require(kind == FormKind::Symplectic && dim % 2 == 0, "symplectic pairs need an even symplectic space");
    for (int i = 0; i + 1 < dim; i += 2)
      detail::set_pair<F>(g, i, i + 1, F(1));
    break;
  case Tag::SymplecticChainBasis:
    require(kind == FormKind::Symplectic && dim % 2 == 0 && dim >= 2, "chain basis needs an even symplectic space");
    for (int i = 0; i < dim - 2; ++i)
      for (int j = i + 1; j < dim - 2; ++j)
        detail::set_pair<F>(g, i, j, F(1));
    detail::set_pair<F>(g, dim - 2, dim - 1, F(1));
    break;
  case Tag::UnitaryOrthonormal:
    require(kind == FormKind::Unitary, "orthonormal preset is unitary");
    g = Mat<F>::Identity(dim, dim);
    break;
  case Tag::F3Diagonal:
    require(kind == FormKind::OrthogonalF3, "diagonal preset is orthogonal over F3");
    g = Mat<F>::Identity(dim, dim);
    if (preset.sign == Sign::Minus)
      g(dim - 1, dim - 1) = F(-1);
    break;
  case Tag::F2PairsQuadratic: {
    require(kind == FormKind::OrthogonalF2 && dim % 2 == 0, "pairs quadratic preset needs even orthogonal-F2");
    for (int i = 0; i + 1 < dim; i += 2)
      detail::set_pair<F>(g, i, i + 1, F(1));
    q = Vec<F>::Constant(dim, F(1));
    // Each (1,1) pair is anisotropic; a (1,0) pair is hyperbolic.
    const bool last_one = (dim % 4 == 0) == (preset.sign == Sign::Plus);
    q(dim - 1) = last_one ? F(1) : F(0);
    break;
  }
  case Tag::F2Hyperbolic: {
    require(kind == FormKind::OrthogonalF2 && dim >= 2, "hyperbolic preset needs orthogonal-F2 of dim >= 2");
    const int even = dim - dim % 2;
    for (int i = 0; i + 1 < even; i += 2)
      detail::set_pair<F>(g, i, i + 1, F(1));
    q = Vec<F>::Zero(dim);
    if (preset.sign == Sign::Minus) {
      q(even - 2) = F(1);
      q(even - 1) = F(1);
    }
    if (dim % 2 == 1)
      q(dim - 1) = F(1);
    break;
  }
  case Tag::F2AllOnesOffDiag: {
    require(kind == FormKind::Symplectic || kind == FormKind::OrthogonalF2, "all-ones preset is over F2");
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        detail::set_pair<F>(g, i, j, F(1));
    if (kind == FormKind::OrthogonalF2) {
      q = Vec<F>::Zero(dim);
      if (preset.qvalues.size() == 1) {
        q.setConstant(F(preset.qvalues[0]));
      } else if (!preset.qvalues.empty()) {
        require(static_cast<int>(preset.qvalues.size()) == dim, "one Q value per basis vector");
        for (int i = 0; i < dim; ++i)
          q(i) = F(preset.qvalues[static_cast<std::size_t>(i)]);
      }
    }
    break;
  }
  }
  return FormSpace<F>(kind, std::move(g), std::move(q));
}

template <FiniteField F> struct Subspace {
  std::vector<Vec<F>> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

template <FiniteField F> Subspace<F> make_subspace(const FormSpace<F>& space, std::vector<Vec<F>> vectors)
{
  for (const auto& v : vectors) {
    if (v.size() != space.dim())
      throw PreconditionError("subspace vector has the wrong dimension");
  }
  if (!linearly_independent(vectors, space.dim()))
    throw PreconditionError("subspace basis is linearly dependent");
  return Subspace<F>{std::move(vectors)};
}

template <FiniteField F> bool in_span(const Subspace<F>& s, const Vec<F>& v, int n)
{
  EchelonBasis<F> e(n);
  for (const auto& b : s.basis)
    e.insert(b);
  return e.contains(v);
}

/// All x with bilinear(x, c_i) = s_i for every constraint (c_i, s_i).
template <FiniteField F>
AffineSolution<F> solve_linear(const FormSpace<F>& space, const std::vector<std::pair<Vec<F>, F>>& constraints)
{
  const int n = space.dim();
  Mat<F> a(static_cast<Eigen::Index>(constraints.size()), n);
  Vec<F> b(static_cast<Eigen::Index>(constraints.size()));
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& [c, s] = constraints[i];
    if (c.size() != n)
      throw PreconditionError("constraint vector has the wrong dimension");
    // (x, c) = x^T (G conj(c))
    a.row(static_cast<Eigen::Index>(i)) = (space.gram() * conj<F>(c)).transpose();
    b(static_cast<Eigen::Index>(i)) = s;
  }
  if (constraints.empty())
    return solve_system<F>(Mat<F>::Zero(0, n), Vec<F>::Zero(0));
  return solve_system<F>(a, b);
}

/// Orthogonal complement of a single vector.
template <FiniteField F> Subspace<F> perp(const FormSpace<F>& space, const Vec<F>& v)
{
  return Subspace<F>{solve_linear<F>(space, {{v, F(0)}}).kernel};
}

/// Radical of the form restricted to `sub`.
template <FiniteField F> Subspace<F> radical(const FormSpace<F>& space, const Subspace<F>& sub)
{
  const int k = sub.dim();
  if (k == 0)
    return {};
  Mat<F> gram_sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      gram_sub(i, j) = space.bilinear(sub.basis[static_cast<std::size_t>(i)], sub.basis[static_cast<std::size_t>(j)]);
  // sum_i a_i (b_i, b_j) = 0 for all j
  const std::vector<Vec<F>> coeffs = nullspace<F>(gram_sub.transpose());
  Subspace<F> out;
  for (const auto& a : coeffs) {
    Vec<F> x = Vec<F>::Zero(space.dim());
    for (int i = 0; i < k; ++i)
      x += a(i) * sub.basis[static_cast<std::size_t>(i)];
    out.basis.push_back(std::move(x));
  }
  return out;
}

/// perp(v) / <r>, with the induced form.
template <FiniteField F> class QuotientSpace {
public:
  QuotientSpace(FormSpace<F> parent, Vec<F> constraint, Vec<F> modded, std::vector<Vec<F>> section_basis,
                FormSpace<F> induced)
  : parent_(std::move(parent))
  , constraint_(std::move(constraint))
  , modded_(std::move(modded))
  , section_(std::move(section_basis))
  , induced_(std::move(induced))
  {
    coords_basis_ = columns_to_matrix(section_, parent_.dim());
    coords_basis_.conservativeResize(Eigen::NoChange, coords_basis_.cols() + 1);
    coords_basis_.col(coords_basis_.cols() - 1) = modded_;
  }

  const FormSpace<F>& parent() const { return parent_; }
  const FormSpace<F>& induced() const { return induced_; }
  const Vec<F>& constraint() const { return constraint_; }
  const Vec<F>& modded() const { return modded_; }
  const std::vector<Vec<F>>& section_basis() const { return section_; }
  int dim() const { return induced_.dim(); }

  bool in_domain(const Vec<F>& x) const { return parent_.bilinear(x, constraint_).is_zero(); }

  /// Quotient coordinates of x in perp(v).
  Vec<F> project(const Vec<F>& x) const
  {
    if (!in_domain(x))
      throw PreconditionError("vector is not orthogonal to the constraint vector");
    const AffineSolution<F> sol = solve_system<F>(coords_basis_, x);
    if (sol.empty())
      throw ContractFailure("perp vector outside the section + radical span");
    return sol.particular->head(dim());
  }

  /// The lift of quotient coordinates through the stored section.
  Vec<F> lift(const Vec<F>& y) const
  {
    Vec<F> x = Vec<F>::Zero(parent_.dim());
    for (int i = 0; i < dim(); ++i)
      x += y(i) * section_[static_cast<std::size_t>(i)];
    return x;
  }

  /// Matrix of the map induced on the quotient by a parent operator that
  /// preserves perp(v) and <r>.
  Mat<F> induced_operator(const Mat<F>& g) const
  {
    Mat<F> out(dim(), dim());
    for (int j = 0; j < dim(); ++j)
      out.col(j) = project(Vec<F>(g * section_[static_cast<std::size_t>(j)]));
    return out;
  }

private:
  FormSpace<F> parent_;
  Vec<F> constraint_;
  Vec<F> modded_;
  std::vector<Vec<F>> section_;
  FormSpace<F> induced_;
  Mat<F> coords_basis_;
};

template <FiniteField F> QuotientSpace<F> perp_quotient(const FormSpace<F>& space, const Vec<F>& v, const Vec<F>& r)
{
  const int n = space.dim();
  if (v.size() != n || r.size() != n)
    throw PreconditionError("invalid quotient: dimension mismatch");
  if (is_zero(r))
    throw PreconditionError("invalid quotient: modded vector is zero");
  const Subspace<F> w = perp(space, v);
  if (!space.bilinear(r, v).is_zero())
    throw PreconditionError("invalid quotient: r is not orthogonal to v");
  for (const auto& y : w.basis) {
    if (!space.bilinear(r, y).is_zero() || !space.bilinear(y, r).is_zero())
      throw PreconditionError("invalid quotient: r is not in the radical of perp(v)");
  }
  if (space.has_quadratic() && !space.quadratic(r).is_zero())
    throw PreconditionError("invalid quotient: r is not singular");

  EchelonBasis<F> e(n);
  e.insert(r);
  std::vector<Vec<F>> section;
  for (const auto& y : w.basis) {
    if (e.insert(y))
      section.push_back(y);
  }
  const int m = static_cast<int>(section.size());
  if (m < 1)
    throw PreconditionError("invalid quotient: induced space would be zero-dimensional");

  Mat<F> g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g(i, j) = space.bilinear(section[static_cast<std::size_t>(i)], section[static_cast<std::size_t>(j)]);
  Vec<F> q;
  if (space.kind() == FormKind::OrthogonalF2) {
    q.resize(m);
    for (int i = 0; i < m; ++i)
      q(i) = space.quadratic(section[static_cast<std::size_t>(i)]);
  }
  FormSpace<F> induced(space.kind(), std::move(g), std::move(q));
  return QuotientSpace<F>(space, v, r, std::move(section), std::move(induced));
}

/// Number of nonzero singular vectors of an orthogonal-F2 space.
template <FiniteField F> std::uint64_t count_singular_nonzero(const FormSpace<F>& space)
{
  const std::uint64_t total = ipow(F::order, space.dim());
  std::uint64_t count = 0;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    if (space.quadratic(vector_at<F>(space.dim(), idx)).is_zero())
      ++count;
  }
  return count;
}

/// Type of a nondegenerate even-dimensional orthogonal space over F2, from
/// the count 2^(n-1) + eps 2^(n/2-1) - 1 of nonzero singular vectors.
template <FiniteField F> Sign orthogonal_type_f2(const FormSpace<F>& space)
{
  static_assert(F::id == FieldId::F2);
  if (space.kind() != FormKind::OrthogonalF2)
    throw PreconditionError("orthogonal type needs an orthogonal-F2 space");
  const int n = space.dim();
  if (n % 2 != 0)
    throw PreconditionError("orthogonal type needs even dimension");
  if (!space.nondegenerate())
    throw PreconditionError("orthogonal type needs a nondegenerate polar form");
  const std::uint64_t count = count_singular_nonzero(space);
  const std::uint64_t half = ipow(2, n - 1);
  const std::uint64_t shift = ipow(2, n / 2 - 1);
  if (count + 1 == half + shift)
    return Sign::Plus;
  if (count + 1 == half - shift)
    return Sign::Minus;
  throw ContractFailure("singular vector count matches neither orthogonal type");
}

/// Square class of det(gram) over F3: + for 1, - for 2.
template <FiniteField F> Sign discriminant_f3(const FormSpace<F>& space)
{
  static_assert(F::id == FieldId::F3);
  if (space.kind() != FormKind::OrthogonalF3)
    throw PreconditionError("discriminant needs an orthogonal-F3 space");
  const F det = determinant<F>(space.gram());
  if (det.is_zero())
    throw PreconditionError("degenerate space has no discriminant");
  return det == F(1) ? Sign::Plus : Sign::Minus;
}

} // namespace fischer

#endif
