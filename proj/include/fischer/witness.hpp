#ifndef FISCHER_WITNESS_HPP
#define FISCHER_WITNESS_HPP

// The explicit chains written out in the proofs for Sp, U, PO3 and O2,
// each with the space it lives in and the length the proof claims.

#include "fischer/chains.hpp"
#include "fischer/spec.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fischer {

template <FiniteField F> struct WitnessCase {
  GroupSpec spec;
  FormSpace<F> space;
  Chain<F> chain;
  int claimed_length = 0;
  std::string basis; // how the space's Gram (and Q) was chosen
  ChainCheck check;

  bool valid() const { return check.ok && chain.length() == claimed_length; }
};

using AnyWitness = std::variant<WitnessCase<GF2>, WitnessCase<GF3>, WitnessCase<GF4>>;

/// Throws Unsupported for cases the proofs do not write out.
AnyWitness paper_witness_chain(const GroupSpec& spec);

/// Every implemented case with n <= max_n, in a fixed order.
std::vector<GroupSpec> witness_cases(int max_n);

inline bool witness_valid(const AnyWitness& w)
{
  return std::visit([](const auto& c) { return c.valid(); }, w);
}

/// 1-based index sum with coefficients: {{1, 1}, {2, -1}} is v1 - v2.
template <FiniteField F> Vec<F> combo(int n, const std::vector<std::pair<int, int>>& terms)
{
  Vec<F> v = Vec<F>::Zero(n);
  for (const auto& [i, c] : terms)
    v(i - 1) += F(c);
  return v;
}

/// v_a + ... + v_b (1-based, inclusive; empty when b < a).
template <FiniteField F> Vec<F> run_sum(int n, int a, int b)
{
  Vec<F> v = Vec<F>::Zero(n);
  for (int i = a; i <= b; ++i)
    v(i - 1) = F(1);
  return v;
}

/// A form on F2^n, if any, for which `vs` is a chain of Q = 1 vectors;
/// the first solution (in kernel order) that is nondegenerate of type eps.
std::optional<FormSpace<GF2>> solve_chain_form(const std::vector<Vec<GF2>>& vs, Sign eps);

} // namespace fischer

#endif
