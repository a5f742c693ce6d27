#ifndef FISCHER_NORTON_HPP
#define FISCHER_NORTON_HPP

// Products pq of distinct commuting transpositions, and the orders of
// products of two of them.

#include "fischer/spec.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace fischer {

inline constexpr std::uint64_t kDefaultNortonBudget = 2'000'000;
inline constexpr int kNortonOrderBound = 6;

struct NortonViolation {
  int i = 0; // indices into S, in its sorted order
  int j = 0;
  int order = 0; // 0 when above the order cap
};

struct NortonReport {
  GroupSpec spec;
  std::uint64_t class_size = 0;     // |D|
  std::uint64_t s_size = 0;         // |S| after removing equal matrices
  std::uint64_t pairs_total = 0;    // unordered pairs {s, t}, s = t allowed
  std::uint64_t pairs_tested = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;           // used only when sampling
  int max_order_seen = 0;
  std::map<int, std::uint64_t> histogram; // order -> count; key 0 means above the cap
  std::vector<NortonViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustive when the pair count fits in `budget`; otherwise `budget`
/// pairs drawn row by row from a generator seeded with `seed`.
NortonReport norton_check(const GroupSpec& spec, std::uint64_t budget = kDefaultNortonBudget, std::uint64_t seed = 0,
                          int threads = 1);

} // namespace fischer

#endif
