#ifndef FISCHER_LINALG_HPP
#define FISCHER_LINALG_HPP

// Dense linear algebra over GF(2), GF(3), GF(4) on top of Eigen storage.
// Eigen provides the containers and products; elimination is done here
// because Eigen's decompositions assume an ordered, normed scalar.

#include "fischer/errors.hpp"
#include "fischer/gf.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace fischer {

template <FiniteField F> using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;
template <FiniteField F> using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;

template <FiniteField F> Vec<F> zero_vector(int n) { return Vec<F>::Zero(n); }

template <FiniteField F> Vec<F> unit_vector(int n, int i)
{
  Vec<F> v = Vec<F>::Zero(n);
  v(i) = F(1);
  return v;
}

template <FiniteField F> Mat<F> identity_matrix(int n) { return Mat<F>::Identity(n, n); }

template <FiniteField F> bool is_zero(const Vec<F>& v)
{
  return std::all_of(v.begin(), v.end(), [](F x) { return x.is_zero(); });
}

template <FiniteField F> std::vector<int> codes(const Vec<F>& v)
{
  std::vector<int> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out[static_cast<std::size_t>(i)] = v(i).code();
  return out;
}

template <FiniteField F> Vec<F> from_codes(const std::vector<int>& cs)
{
  Vec<F> v(static_cast<Eigen::Index>(cs.size()));
  for (std::size_t i = 0; i < cs.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = F::from_code(cs[i]);
  return v;
}

/// Lexicographic order on coordinate codes, coordinate 0 most significant.
template <FiniteField F> bool lex_less(const Vec<F>& a, const Vec<F>& b)
{
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Position of v in the lexicographic enumeration of F^n.
template <FiniteField F> std::uint64_t lex_index(const Vec<F>& v)
{
  std::uint64_t idx = 0;
  for (F x : v)
    idx = idx * static_cast<std::uint64_t>(F::order) + static_cast<std::uint64_t>(x.code());
  return idx;
}

template <FiniteField F> Vec<F> vector_at(int n, std::uint64_t idx)
{
  Vec<F> v(n);
  for (int i = n - 1; i >= 0; --i) {
    v(i) = F::from_code(static_cast<int>(idx % F::order));
    idx /= F::order;
  }
  return v;
}

inline std::uint64_t ipow(std::uint64_t base, int e)
{
  std::uint64_t r = 1;
  while (e-- > 0)
    r *= base;
  return r;
}

/// Scales v so that its first nonzero coordinate is 1.
template <FiniteField F> Vec<F> canonical_rep(const Vec<F>& v)
{
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero())
      return (v * v(i).inverse()).eval();
  }
  throw PreconditionError("canonical_rep of the zero vector");
}

template <FiniteField F> bool is_canonical(const Vec<F>& v)
{
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero())
      return v(i) == F(1);
  }
  return false;
}

/// Every canonical nonzero vector of F^n in lexicographic order.
template <FiniteField F> std::vector<Vec<F>> projective_points(int n)
{
  std::vector<Vec<F>> out;
  const std::uint64_t total = ipow(F::order, n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vec<F> v = vector_at<F>(n, idx);
    if (is_canonical(v))
      out.push_back(std::move(v));
  }
  return out;
}

/// Reduced row echelon form, in place. Returns pivot columns.
template <FiniteField F> std::vector<int> row_reduce(Mat<F>& a)
{
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col).is_zero())
      ++p;
    if (p == a.rows())
      continue;
    a.row(p).swap(a.row(row));
    const F inv = a(row, col).inverse();
    a.row(row) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != row && !a(r, col).is_zero()) {
        const F f = a(r, col);
        a.row(r) -= f * a.row(row);
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

template <FiniteField F> int rank(Mat<F> a) { return static_cast<int>(row_reduce(a).size()); }

template <FiniteField F> Mat<F> columns_to_matrix(const std::vector<Vec<F>>& cols, int n)
{
  Mat<F> m(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = cols[j];
  return m;
}

template <FiniteField F> int rank_of(const std::vector<Vec<F>>& vs, int n)
{
  if (vs.empty())
    return 0;
  return rank<F>(columns_to_matrix(vs, n));
}

template <FiniteField F> bool linearly_independent(const std::vector<Vec<F>>& vs, int n)
{
  return rank_of(vs, n) == static_cast<int>(vs.size());
}

/// Solution set of A x = b: one particular solution and a kernel basis.
template <FiniteField F> struct AffineSolution {
  std::optional<Vec<F>> particular;
  std::vector<Vec<F>> kernel;

  bool empty() const { return !particular.has_value(); }
};

template <FiniteField F> AffineSolution<F> solve_system(const Mat<F>& a, const Vec<F>& b)
{
  const auto n = a.cols();
  Mat<F> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const std::vector<int> pivots = row_reduce(aug);

  AffineSolution<F> sol;
  if (!pivots.empty() && pivots.back() == n)
    return sol;

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;

  Vec<F> x = Vec<F>::Zero(n);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), n);
  sol.particular = x;

  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)])
      continue;
    Vec<F> k = Vec<F>::Zero(n);
    k(free) = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r]) = -aug(static_cast<Eigen::Index>(r), free);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

template <FiniteField F> std::vector<Vec<F>> nullspace(const Mat<F>& a)
{
  return solve_system<F>(a, Vec<F>::Zero(a.rows())).kernel;
}

/// Calls fn on every element of the affine set, in lexicographic order of
/// the kernel coefficients. Stops early when fn returns true.
template <FiniteField F, class Fn> bool for_each_solution(const AffineSolution<F>& sol, Fn&& fn)
{
  if (sol.empty())
    return false;
  const int k = static_cast<int>(sol.kernel.size());
  const std::uint64_t total = ipow(F::order, k);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec<F> x = *sol.particular;
    std::uint64_t rest = idx;
    for (int j = k - 1; j >= 0; --j) {
      const F c = F::from_code(static_cast<int>(rest % F::order));
      rest /= F::order;
      if (!c.is_zero())
        x += c * sol.kernel[static_cast<std::size_t>(j)];
    }
    if (fn(x))
      return true;
  }
  return false;
}

template <FiniteField F> F determinant(Mat<F> a)
{
  if (a.rows() != a.cols())
    throw PreconditionError("determinant of a non-square matrix");
  F det(1);
  const auto n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && a(p, col).is_zero())
      ++p;
    if (p == n)
      return F(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    const F inv = a(col, col).inverse();
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        const F f = a(r, col) * inv;
        a.row(r) -= f * a.row(col);
      }
    }
  }
  return det;
}

template <FiniteField F> std::optional<Mat<F>> inverse(const Mat<F>& a)
{
  const auto n = a.rows();
  Mat<F> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<F>::Identity(n, n);
  const auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    return std::nullopt;
  return Mat<F>(aug.rightCols(n));
}

/// Entry-wise conjugate (identity outside F4).
template <FiniteField F> Mat<F> conj(const Mat<F>& a) { return a.unaryExpr([](F x) { return x.conjugate(); }); }

template <FiniteField F> Vec<F> conj(const Vec<F>& a) { return a.unaryExpr([](F x) { return x.conjugate(); }); }

/// Incrementally maintained echelon basis; answers span-membership queries.
template <FiniteField F> class EchelonBasis {
public:
  explicit EchelonBasis(int n)
  : n_(n)
  {}

  int dim() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Residue of v after reduction by the stored rows.
  Vec<F> reduce(Vec<F> v) const
  {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F c = v(pivots_[r]);
      if (!c.is_zero())
        v -= c * rows_[r];
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero(reduce(v)); }

  /// Adds v if independent; returns whether it was added.
  bool insert(const Vec<F>& v)
  {
    Vec<F> r = reduce(v);
    int piv = -1;
    for (int i = 0; i < n_; ++i) {
      if (!r(i).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0)
      return false;
    r *= r(piv).inverse();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F c = rows_[k](piv);
      if (!c.is_zero())
        rows_[k] -= c * r;
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }

private:
  int n_;
  std::vector<Vec<F>> rows_;
  std::vector<int> pivots_;
};

} // namespace fischer

#endif
