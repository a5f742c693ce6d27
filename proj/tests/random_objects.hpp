#ifndef FISCHER_TESTS_RANDOM_OBJECTS_HPP
#define FISCHER_TESTS_RANDOM_OBJECTS_HPP

// Random chains and partial isometries for the lemma checks.

#include "fischer/chains.hpp"

#include <random>

namespace fischer::testing {

template <class T> const T& pick(const std::vector<T>& xs, std::mt19937_64& rng)
{
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

/// A random walk through the chain tree, stopping at a random depth or at a leaf.
template <FiniteField F>
std::vector<Vec<F>> random_chain(const FormSpace<F>& s, const ClassSpec& cls, std::mt19937_64& rng, int max_len)
{
  std::vector<Vec<F>> c;
  const int target = std::uniform_int_distribution<int>(1, max_len)(rng);
  while (static_cast<int>(c.size()) < target) {
    if (!c.empty() && !linearly_independent(c, s.dim()))
      break; // a dependent element ends the chain
    const auto next = extend_candidates(s, cls, c);
    if (next.empty())
      break;
    c.push_back(pick(next, rng));
  }
  return c;
}

/// A random chain prefix whose elements are linearly independent.
template <FiniteField F>
std::vector<Vec<F>> random_independent_prefix(const FormSpace<F>& s, const ClassSpec& cls, std::mt19937_64& rng,
                                              int max_len)
{
  std::vector<Vec<F>> c;
  const int target = std::uniform_int_distribution<int>(1, max_len)(rng);
  while (static_cast<int>(c.size()) < target) {
    std::vector<Vec<F>> next;
    for (const auto& x : extend_candidates(s, cls, c)) {
      auto t = c;
      t.push_back(x);
      if (linearly_independent(t, s.dim()))
        next.push_back(x);
    }
    if (next.empty())
      break;
    c.push_back(pick(next, rng));
  }
  return c;
}

/// Independent vectors u and their images g u under a random word in D.
template <FiniteField F>
PartialIsometry<F> random_partial_isometry(const FormSpace<F>& s, const ClassSpec& cls, std::mt19937_64& rng)
{
  const int n = s.dim();
  const auto d = enumerate_class(s, cls);
  Mat<F> g = Mat<F>::Identity(n, n);
  for (int k = 0; k < 12; ++k)
    g = (g * matrix_of(s, cls, pick(d, rng))).eval();
  PartialIsometry<F> p;
  const int k = std::uniform_int_distribution<int>(1, n)(rng);
  std::uniform_int_distribution<std::uint64_t> any(1, ipow(F::order, n) - 1);
  while (static_cast<int>(p.domain.size()) < k) {
    const Vec<F> u = vector_at<F>(n, any(rng));
    auto t = p.domain;
    t.push_back(u);
    if (!linearly_independent(t, n))
      continue;
    p.domain.push_back(u);
    p.image.push_back(g * u);
  }
  return p;
}

} // namespace fischer::testing

#endif
