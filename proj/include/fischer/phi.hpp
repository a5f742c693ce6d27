#ifndef FISCHER_PHI_HPP
#define FISCHER_PHI_HPP

// phi from the formulas and from exhaustive search, and the records of
// where the two written sources and the search disagree.

#include "fischer/chains.hpp"
#include "fischer/spec.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fischer {

/// The form space and class D that model a classical group.
template <FiniteField F> struct Realized {
  FormSpace<F> space;
  ClassSpec cls;
};

using AnyRealized = std::variant<Realized<GF2>, Realized<GF3>, Realized<GF4>>;

/// Builds the space for the spec as given (not normalized): odd O2 is the
/// degenerate space with a radical vector, PO3 with pi = - uses Q(v) = -1.
/// Throws Unsupported for S(n) and the sporadic groups.
AnyRealized realize(const GroupSpec& spec);

struct PhiReport {
  GroupSpec spec;
  GroupSpec normalized;
  int phi_props = 0;
  int phi_conclusion = 0;
  std::optional<int> phi_search;
  std::string field; // field of the searched space, empty without search
  std::vector<std::vector<int>> witness; // coordinate codes, one row per chain element
  std::uint64_t nodes = 0;
  std::string reduction;

  bool sources_agree() const { return phi_props == phi_conclusion; }
  std::optional<bool> props_agree() const;
  std::optional<bool> conclusion_agree() const;
};

/// Both formula values; no search.
PhiReport phi_formulas(const GroupSpec& spec);

/// Formula values plus the search on the realized space of `spec`.
/// S(n) gives n without a search; sporadic groups throw Unsupported;
/// an exhausted budget throws SearchIncomplete.
PhiReport phi_bruteforce(const GroupSpec& spec, const SearchOptions& opt = {});

struct Discrepancy {
  GroupSpec spec;
  int props = 0;
  int conclusion = 0;
  int oracle = 0;

  bool operator==(const Discrepancy&) const = default;
};

/// Normalized classical specs with dimension in [1, max_dim], in a fixed
/// order: Sp, U, O2(+), O2(-), PO3(+,+), PO3(-,+).
std::vector<GroupSpec> classical_specs(int max_dim, std::optional<Family> family = std::nullopt);

/// Searches every spec of classical_specs(max_dim, family) and returns the
/// ones where the two sources and the search do not all agree.
std::vector<Discrepancy> discrepancy_report(int max_dim, std::optional<Family> family = std::nullopt,
                                            const SearchOptions& opt = {});

/// The disagreements established by search. Complete for every dimension
/// up to kDocumentedCompleteDim; above it, Sp(10), O2(10, 12) and PO3(10)
/// have been searched, U(10) has not.
const std::vector<Discrepancy>& documented_discrepancies();

inline constexpr int kDocumentedCompleteDim = 9;

/// documented_discrepancies() restricted to dimension <= max_dim.
std::vector<Discrepancy> documented_discrepancies(int max_dim);

/// phi from the Propositions, replaced by the documented search value where
/// one disagrees. `corrected` is set when the replacement happened.
int phi_corrected(const GroupSpec& spec, bool* corrected = nullptr);

inline constexpr int kFilterBound = 12;

/// Specs with phi_corrected <= 12, in input order.
std::vector<GroupSpec> fischer_filter(const std::vector<GroupSpec>& specs);

/// Per family (and sign), the largest n kept by the filter over a range
/// wide enough that every larger n is rejected.
struct FilterBound {
  std::string family; // "sp", "u", "o2(+)", "o2(-)", "po3(+,+)", "po3(-,+)", "fischer"
  int max_n = 0;
  int max_n_uncorrected = 0;
  std::vector<int> fischer_phi; // for "fischer": phi of M(22), M(23), M(24)
};

struct FilterCorrection {
  GroupSpec spec;
  int props = 0;
  int oracle = 0;
};

struct FilterSummary {
  std::vector<FilterBound> bounds;
  std::vector<FilterCorrection> corrections; // corrections that changed a kept/rejected decision
};

/// The candidate list of groups with phi <= 12, computed over n <= max_n.
FilterSummary fischer_filter_summary(int max_n = 24);

template <FiniteField F> std::vector<std::vector<int>> chain_codes(const Chain<F>& c)
{
  std::vector<std::vector<int>> out;
  for (const auto& v : c.elems)
    out.push_back(codes<F>(v));
  return out;
}

} // namespace fischer

#endif
