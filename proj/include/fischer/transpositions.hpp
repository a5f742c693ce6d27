#ifndef FISCHER_TRANSPOSITIONS_HPP
#define FISCHER_TRANSPOSITIONS_HPP

// The class D of transvections / reflections t(v) and their matrices.

#include "fischer/errors.hpp"
#include "fischer/formspace.hpp"
#include "fischer/linalg.hpp"

#include <string>
#include <vector>

namespace fischer {

/// Which vectors give the class D. For OrthogonalF3, `pi` is the value of Q.
struct ClassSpec {
  FormKind family;
  Sign pi = Sign::Plus;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

template <FiniteField F> ClassSpec default_class(const FormSpace<F>& space, Sign pi = Sign::Plus)
{
  return ClassSpec{space.kind(), pi};
}

namespace detail {

template <FiniteField F> void check_class(const FormSpace<F>& space, const ClassSpec& cls)
{
  if (cls.family != space.kind())
    throw PreconditionError("class family does not match the space");
}

/// True when v is orthogonal to the whole space.
template <FiniteField F> bool in_form_radical(const FormSpace<F>& space, const Vec<F>& v)
{
  return is_zero(Vec<F>(space.gram() * conj<F>(v)));
}

} // namespace detail

template <FiniteField F> bool in_class_D(const FormSpace<F>& space, const ClassSpec& cls, const Vec<F>& v)
{
  detail::check_class(space, cls);
  if (v.size() != space.dim())
    throw PreconditionError("vector dimension does not match space");
  if (is_zero(v))
    return false;
  switch (cls.family) {
  case FormKind::Symplectic: return !detail::in_form_radical(space, v);
  case FormKind::Unitary: return space.quadratic(v).is_zero() && !detail::in_form_radical(space, v);
  case FormKind::OrthogonalF2:
    // A radical vector with Q = 1 gives t(v) = 1, which is not an involution.
    return space.quadratic(v) == F(1) && !detail::in_form_radical(space, v);
  case FormKind::OrthogonalF3: {
    if constexpr (F::id == FieldId::F3)
      return space.quadratic(v) == sign_to_f3(cls.pi);
    return false;
  }
  }
  return false;
}

/// Image of w under t(v).
template <FiniteField F>
Vec<F> apply_transposition(const FormSpace<F>& space, const ClassSpec& cls, const Vec<F>& v, const Vec<F>& w)
{
  if (!in_class_D(space, cls, v))
    throw PreconditionError("vector is not in the class D");
  const F c = space.bilinear(w, v);
  if (cls.family == FormKind::OrthogonalF3) {
    // w - (w,v) Q(v)^{-1} v
    return w - c * space.quadratic(v).inverse() * v;
  }
  // w + (w,v) v; linear in w because the form is linear in its first slot
  return w + c * v;
}

template <FiniteField F> Mat<F> matrix_of(const FormSpace<F>& space, const ClassSpec& cls, const Vec<F>& v)
{
  if (!in_class_D(space, cls, v))
    throw PreconditionError("vector is not in the class D");
  const int n = space.dim();
  // column j is t(v) e_j = e_j + coef * (e_j, v) v
  const Vec<F> gv = space.gram() * conj<F>(v);
  const F coef = cls.family == FormKind::OrthogonalF3 ? -space.quadratic(v).inverse() : F(1);
  Mat<F> m = Mat<F>::Identity(n, n);
  m += coef * v * gv.transpose();
  return m;
}

/// t(v) for a projective point: equality of reps encodes t(v) = t(cv).
template <FiniteField F> struct ClassElement {
  Vec<F> rep;

  friend bool operator==(const ClassElement& a, const ClassElement& b) { return a.rep == b.rep; }
};

template <FiniteField F> ClassElement<F> make_element(const FormSpace<F>& space, const ClassSpec& cls, const Vec<F>& v)
{
  if (!in_class_D(space, cls, v))
    throw PreconditionError("vector is not in the class D");
  return ClassElement<F>{canonical_rep(v)};
}

template <FiniteField F> bool commutes(const FormSpace<F>& space, const ClassElement<F>& a, const ClassElement<F>& b)
{
  if (a.rep.size() != space.dim() || b.rep.size() != space.dim())
    throw PreconditionError("class elements belong to a different space");
  return space.bilinear(a.rep, b.rep).is_zero();
}

/// Multiplicative order of m, or 0 if it exceeds `cap`.
template <FiniteField F> int matrix_order(const Mat<F>& m, int cap)
{
  const Mat<F> id = Mat<F>::Identity(m.rows(), m.cols());
  Mat<F> p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == id)
      return k;
    p = (p * m).eval();
  }
  return 0;
}

inline constexpr int kDefaultOrderCap = 12;

template <FiniteField F>
int product_order(const FormSpace<F>& space, const ClassSpec& cls, const std::vector<ClassElement<F>>& elems,
                  int cap = kDefaultOrderCap)
{
  if (elems.empty())
    throw PreconditionError("product_order of an empty list");
  Mat<F> prod = Mat<F>::Identity(space.dim(), space.dim());
  for (const auto& e : elems)
    prod = (prod * matrix_of(space, cls, e.rep)).eval();
  const int order = matrix_order<F>(prod, cap);
  if (order == 0)
    throw ContractFailure("element order exceeds cap " + std::to_string(cap));
  return order;
}

/// Canonical reps of D in lexicographic order.
template <FiniteField F> std::vector<Vec<F>> enumerate_class(const FormSpace<F>& space, const ClassSpec& cls)
{
  std::vector<Vec<F>> out;
  for (auto& v : projective_points<F>(space.dim())) {
    if (in_class_D(space, cls, v))
      out.push_back(std::move(v));
  }
  return out;
}

} // namespace fischer

#endif
