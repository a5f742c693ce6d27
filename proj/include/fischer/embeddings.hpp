#ifndef FISCHER_EMBEDDINGS_HPP
#define FISCHER_EMBEDDINGS_HPP

// S_n acting on a permutation space by moving basis vectors, restricted to
// perp(v) and factored by a radical vector where the construction does.

#include "fischer/chains.hpp"
#include "fischer/phi.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fischer {

enum class EmbedTarget { Sp, U, PO3a, PO3b, O2 };

const char* target_name(EmbedTarget t);
std::optional<EmbedTarget> parse_target(const std::string& s);

/// Whether embed_symmetric(n, t) is defined.
bool admissible(int n, EmbedTarget t);

struct Clause {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct EmbeddingCheck {
  std::vector<Clause> clauses; // form, relations, class, faithful, type

  bool ok() const;
  const Clause* failure() const;
};

/// The Gram matrix of the F3 constructions in the basis written out for them.
struct GramIdentity {
  Mat<GF3> a;
  bool basis_of_quotient = false;
  bool a_minus_i_squared_zero = false;
  int rank_a_minus_i = 0;
  GF3 det{0};
};

template <FiniteField F> struct EmbeddingReport {
  int n = 0;
  EmbedTarget construction = EmbedTarget::Sp;
  std::string variant; // which Q preset, for the O2 cases
  GroupSpec target;
  FormSpace<F> ambient;
  std::optional<QuotientSpace<F>> quotient;
  ClassSpec cls;
  std::vector<Mat<F>> generators;    // images of (i, i+1) on the target space
  std::vector<Vec<F>> class_vectors; // w_i + w_{i+1} (w_i - w_{i+1} over F3) in target coordinates
  EmbeddingCheck check;
  std::optional<bool> injective; // n! enumeration, when run
  std::optional<GramIdentity> gram;

  const FormSpace<F>& space() const { return quotient ? quotient->induced() : ambient; }
};

using AnyEmbedding = std::variant<EmbeddingReport<GF2>, EmbeddingReport<GF3>, EmbeddingReport<GF4>>;

/// One report per Q preset (two for O2 when n is not a multiple of 4).
/// Throws ConfigError when n is not admissible and ContractFailure when a
/// check fails. `full_injectivity` enumerates all n! images.
std::vector<AnyEmbedding> embed_symmetric(int n, EmbedTarget t, bool full_injectivity = false);

/// Reruns the five clause groups on the stored generators.
template <FiniteField F> EmbeddingCheck verify_embedding(const EmbeddingReport<F>& r);

EmbeddingCheck verify_any(const AnyEmbedding& e);

/// The same report with generator k replaced by the identity.
AnyEmbedding tamper(const AnyEmbedding& e, int k = 0);

struct Consistency {
  bool ok = false;
  int phi = 0;
  std::string construction; // "sp(8)", "o2(9, Q(w_i)=0, Q(w_{n+1})=1)", or "chain"
  std::string detail;
};

/// Whether S_phi, phi the search value, is realized in the group of `spec`
/// by a permutation construction or else by the generators of a maximal chain.
Consistency embedding_phi_consistency(const GroupSpec& spec, const SearchOptions& opt = {});

} // namespace fischer

#endif
