#ifndef FISCHER_COXETER_HPP
#define FISCHER_COXETER_HPP

// Checks on candidate images s_1, ..., s_m of the adjacent transpositions
// (1 2), ..., (m m+1) of S_{m+1}.

#include "fischer/linalg.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fischer {

template <FiniteField F> bool is_identity(const Mat<F>& m)
{
  return m.rows() == m.cols() && m == Mat<F>::Identity(m.rows(), m.cols());
}

struct RelationCheck {
  bool ok = true;
  std::string failure;
};

/// s_i^2 = 1, (s_i s_{i+1})^3 = 1, (s_i s_j)^2 = 1 for |i - j| >= 2.
template <FiniteField F> RelationCheck check_type_a_relations(const std::vector<Mat<F>>& gens)
{
  RelationCheck out;
  const auto m = gens.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_identity<F>(gens[i] * gens[i])) {
      out.ok = false;
      out.failure = "s_" + std::to_string(i + 1) + "^2 != 1";
      return out;
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      const Mat<F> p = gens[i] * gens[j];
      const bool adjacent = j == i + 1;
      const Mat<F> power = adjacent ? Mat<F>(p * p * p) : Mat<F>(p * p);
      if (!is_identity<F>(power)) {
        out.ok = false;
        out.failure = "(s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1) + ")^" + (adjacent ? "3" : "2") +
                      " != 1";
        return out;
      }
    }
  }
  return out;
}

/// Faithfulness through the normal subgroups of S_{m+1}: the image of (1 2)
/// is nontrivial, (1 2) and (2 3) have distinct images, and for S_4 the
/// Klein element (1 2)(3 4) is not in the kernel.
template <FiniteField F> RelationCheck check_kernel_argument(const std::vector<Mat<F>>& gens)
{
  RelationCheck out;
  if (gens.empty())
    return out;
  if (is_identity<F>(gens[0])) {
    out.ok = false;
    out.failure = "image of (1 2) is the identity";
    return out;
  }
  if (gens.size() >= 2 && gens[0] == gens[1]) {
    out.ok = false;
    out.failure = "images of (1 2) and (2 3) coincide";
    return out;
  }
  if (gens.size() == 3 && is_identity<F>(gens[0] * gens[2])) {
    out.ok = false;
    out.failure = "image of (1 2)(3 4) is the identity";
    return out;
  }
  return out;
}

namespace detail {

template <FiniteField F> std::vector<std::uint8_t> matrix_key(const Mat<F>& m)
{
  std::vector<std::uint8_t> key(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i)
    key[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(m(i).code());
  return key;
}

} // namespace detail

/// Walks all (m+1)! permutations in Steinhaus-Johnson-Trotter order, where
/// each step swaps two adjacent positions, and counts the distinct images.
/// Only meaningful once the type-A relations hold.
template <FiniteField F> std::uint64_t count_distinct_images(const std::vector<Mat<F>>& gens, int dim)
{
  const int n = static_cast<int>(gens.size()) + 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<int> dir(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    perm[static_cast<std::size_t>(i)] = i;

  std::set<std::vector<std::uint8_t>> seen;
  Mat<F> image = Mat<F>::Identity(dim, dim);
  seen.insert(detail::matrix_key<F>(image));

  while (true) {
    // largest mobile element
    int mobile = -1;
    int pos = -1;
    for (int i = 0; i < n; ++i) {
      const int j = i + dir[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      if (j < 0 || j >= n)
        continue;
      if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)] &&
          perm[static_cast<std::size_t>(i)] > mobile) {
        mobile = perm[static_cast<std::size_t>(i)];
        pos = i;
      }
    }
    if (mobile < 0)
      break;
    const int other = pos + dir[static_cast<std::size_t>(mobile)];
    const int lo = std::min(pos, other);
    std::swap(perm[static_cast<std::size_t>(pos)], perm[static_cast<std::size_t>(other)]);
    // swapping positions lo, lo+1 is right multiplication by (lo+1 lo+2)
    image = (image * gens[static_cast<std::size_t>(lo)]).eval();
    seen.insert(detail::matrix_key<F>(image));
    for (int v = mobile + 1; v < n; ++v)
      dir[static_cast<std::size_t>(v)] = -dir[static_cast<std::size_t>(v)];
  }
  return seen.size();
}

inline std::uint64_t factorial(int n)
{
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i)
    r *= static_cast<std::uint64_t>(i);
  return r;
}

template <FiniteField F> bool injective_by_enumeration(const std::vector<Mat<F>>& gens, int dim)
{
  return count_distinct_images<F>(gens, dim) == factorial(static_cast<int>(gens.size()) + 1);
}

} // namespace fischer

#endif
