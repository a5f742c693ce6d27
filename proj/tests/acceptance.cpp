// Acceptance run: one [PASS]/[FAIL] line per criterion.
//   acceptance        all nine
//   acceptance K      criterion K only

#include "fischer/embeddings.hpp"
#include "fischer/norton.hpp"
#include "fischer/phi.hpp"
#include "fischer/witness.hpp"
#include "random_objects.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>

using namespace fischer;

namespace {

const Sign P = Sign::Plus;
const Sign M = Sign::Minus;

struct Result {
  bool ok = true;
  std::ostringstream notes;

  void fail(const std::string& what)
  {
    if (notes.tellp() > 0)
      notes << "; ";
    ok = false;
    notes << what;
  }
};

int search(const GroupSpec& g) { return *phi_bruteforce(g).phi_search; }

const Discrepancy* documented(const GroupSpec& g)
{
  for (const auto& d : documented_discrepancies())
    if (d.spec == g)
      return &d;
  return nullptr;
}

// 1 ---------------------------------------------------------------------------

bool in_table_range(const GroupSpec& g)
{
  switch (g.family) {
  case Family::Sp: return g.n <= 8;
  case Family::U: return g.n <= 6;
  case Family::OF2: return g.n <= 8;
  case Family::POF3: return g.n <= 6;
  default: return false;
  }
}

void table(Result& r)
{
  const auto t0 = std::chrono::steady_clock::now();
  int rows = 0, flagged = 0;
  for (const auto& g : classical_specs(8)) {
    if (!in_table_range(g))
      continue;
    ++rows;
    const PhiReport rep = phi_bruteforce(g);
    const int s = *rep.phi_search;
    if (s == rep.phi_props && rep.sources_agree())
      continue;
    const Discrepancy* d = documented(g);
    if (!d || d->oracle != s || d->props != rep.phi_props || d->conclusion != rep.phi_conclusion) {
      r.fail(to_string(g) + ": search " + std::to_string(s) + ", props " + std::to_string(rep.phi_props) +
             ", not documented");
      continue;
    }
    if (rep.sources_agree() && *rep.props_agree())
      r.fail(to_string(g) + " documented but not flagged");
    ++flagged;
  }
  // the two conflicts named in advance must be among the flagged ones
  for (const auto& g : {GroupSpec::u(2), GroupSpec::pof3(3, M), GroupSpec::pof3(5, M), GroupSpec::pof3(6, M)})
    if (!documented(g))
      r.fail(to_string(g) + " missing from the documented set");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > 120)
    r.fail("took " + std::to_string(secs) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d specs, %d documented discrepancies, %.1f s", rows, flagged, secs);
  r.notes << (r.ok ? "" : "; ") << buf;
}

// 2 ---------------------------------------------------------------------------

void spot(Result& r)
{
  const std::vector<std::pair<GroupSpec, int>> want = {
      {GroupSpec::sp(4), 6},         {GroupSpec::sp(8), 10},        {GroupSpec::u(4), 6}, {GroupSpec::u(5), 6},
      {GroupSpec::of2(6, P), 8},     {GroupSpec::of2(6, M), 6},     {GroupSpec::pof3(6, P, P), 7},
  };
  for (const auto& [g, v] : want) {
    const int s = search(g);
    r.notes << (r.notes.tellp() > 0 ? " " : "") << to_string(g) << "=" << s;
    if (s != v)
      r.fail(to_string(g) + " expected " + std::to_string(v));
  }
}

// 3 ---------------------------------------------------------------------------

void witnesses(Result& r)
{
  int n_ok = 0, total = 0;
  std::string bad;
  for (const auto& g : witness_cases(12)) {
    const int lim = g.family == Family::Sp ? 10 : g.family == Family::OF2 ? 12 : 7;
    if (g.n > lim)
      continue;
    ++total;
    const auto w = paper_witness_chain(g);
    std::visit(
        [&](const auto& c) {
          if (c.valid()) {
            ++n_ok;
            return;
          }
          bad += (bad.empty() ? "" : ", ") + to_string(g) + " (" +
                 (c.check.ok ? "length " + std::to_string(c.chain.length()) + " != " +
                                   std::to_string(c.claimed_length)
                             : c.check.violation) +
                 ")";
        },
        w);
  }
  r.notes << n_ok << "/" << total << " valid";
  if (!bad.empty())
    r.fail("invalid: " + bad);
}

// 4 ---------------------------------------------------------------------------

template <FiniteField F> bool small_lemma_holds(const std::vector<Vec<F>>& c, int dim)
{
  if (c.size() < 2)
    return true;
  return linearly_independent(std::vector<Vec<F>>(c.begin(), c.end() - 1), dim);
}

void lemmas(Result& r)
{
  std::mt19937_64 rng(20240601);
  int witnesses_checked = 0, nodes = 0, prefixes = 0, isometries = 0;

  std::vector<GroupSpec> spaces;
  for (const auto& g : classical_specs(6))
    if (space_dimension(g) >= 2)
      spaces.push_back(g);

  // small lemma on search witnesses, then on random nodes of the chain tree
  for (const auto& g : spaces)
    std::visit(
        [&](const auto& real) {
          using F = typename std::decay_t<decltype(real.space)>::Scalar;
          const auto out = max_chain<F>(real.space, real.cls);
          ++witnesses_checked;
          if (!small_lemma_holds(out.witness.elems, real.space.dim()))
            r.fail("small lemma fails on the witness of " + to_string(g));
        },
        realize(g));
  while (nodes < 1000)
    for (const auto& g : spaces) {
      if (nodes >= 1000)
        break;
      std::visit(
          [&](const auto& real) {
            using F = typename std::decay_t<decltype(real.space)>::Scalar;
            const auto c = testing::random_chain<F>(real.space, real.cls, rng, real.space.dim() + 1);
            for (std::size_t l = 1; l <= c.size() && nodes < 1000; ++l, ++nodes)
              if (!small_lemma_holds(std::vector<Vec<F>>(c.begin(), c.begin() + static_cast<long>(l)),
                                     real.space.dim()))
                r.fail("small lemma fails on a random node in " + to_string(g));
          },
          realize(g));
    }

  // main lemma: independent prefixes extend to a chain of maximal length
  for (const auto& g : spaces)
    std::visit(
        [&](const auto& real) {
          using F = typename std::decay_t<decltype(real.space)>::Scalar;
          const int best = max_chain<F>(real.space, real.cls).max_length;
          if (best == 0)
            return;
          for (int t = 0; t < 50; ++t) {
            const auto pre = testing::random_independent_prefix<F>(real.space, real.cls, rng, real.space.dim());
            ++prefixes;
            const int got = max_chain_from<F>(real.space, real.cls, pre).max_length;
            if (got != best) {
              r.fail("main lemma: prefix of length " + std::to_string(pre.size()) + " in " + to_string(g) +
                     " reaches " + std::to_string(got) + " < " + std::to_string(best));
              return;
            }
          }
        },
        realize(g));

  // Witt extension, 100 per form kind at dim <= 5
  auto witt = [&](const char* kind, const std::vector<GroupSpec>& pool) {
    for (int t = 0; t < 100; ++t) {
      const GroupSpec& g = pool[static_cast<std::size_t>(t) % pool.size()];
      std::visit(
          [&](const auto& real) {
            using F = typename std::decay_t<decltype(real.space)>::Scalar;
            const auto p = testing::random_partial_isometry<F>(real.space, real.cls, rng);
            try {
              const Mat<F> m = witt_extend(real.space, p);
              bool good = real.space.is_isometry(m);
              for (std::size_t i = 0; i < p.domain.size(); ++i)
                good = good && m * p.domain[i] == p.image[i];
              if (!good)
                r.fail(std::string("witt_extend output fails the contract (") + kind + ")");
            } catch (const std::exception& e) {
              r.fail(std::string("witt_extend threw on ") + to_string(g) + ": " + e.what());
            }
            ++isometries;
          },
          realize(g));
    }
  };
  witt("symplectic", {GroupSpec::sp(2), GroupSpec::sp(4)});
  witt("unitary", {GroupSpec::u(2), GroupSpec::u(3), GroupSpec::u(4), GroupSpec::u(5)});
  witt("orthogonal F2", {GroupSpec::of2(2, M), GroupSpec::of2(4, P), GroupSpec::of2(4, M)});
  witt("orthogonal F3", {GroupSpec::pof3(2, P), GroupSpec::pof3(3, P), GroupSpec::pof3(4, M), GroupSpec::pof3(5, P),
                         GroupSpec::pof3(5, M)});

  r.notes << (r.ok ? "" : "; ") << witnesses_checked << " witnesses, " << nodes << " random nodes, " << prefixes
          << " prefixes, " << isometries << " partial isometries";
}

// 5 ---------------------------------------------------------------------------

void embeddings(Result& r)
{
  int reports = 0, injective = 0, grams = 0;
  for (auto t : {EmbedTarget::Sp, EmbedTarget::U, EmbedTarget::PO3a, EmbedTarget::PO3b, EmbedTarget::O2})
    for (int n = 5; n <= 10; ++n) {
      if (!admissible(n, t))
        continue;
      std::vector<AnyEmbedding> es;
      try {
        es = embed_symmetric(n, t, n <= 7);
      } catch (const std::exception& e) {
        r.fail(std::string(target_name(t)) + " n=" + std::to_string(n) + ": " + e.what());
        continue;
      }
      for (const auto& e : es)
        std::visit(
            [&](const auto& rep) {
              ++reports;
              const std::string name = std::string(target_name(t)) + " n=" + std::to_string(n);
              if (const Clause* c = rep.check.failure())
                r.fail(name + ": " + c->name);
              if (n <= 7) {
                if (rep.injective && *rep.injective)
                  ++injective;
                else
                  r.fail(name + ": not injective");
              }
              if constexpr (std::is_same_v<std::decay_t<decltype(rep)>, EmbeddingReport<GF3>>) {
                if (t != EmbedTarget::PO3a)
                  return;
                if (!rep.gram) {
                  r.fail(name + ": no Gram identity");
                  return;
                }
                const auto& gi = *rep.gram;
                const bool want = n % 3 == 1 ? gi.a_minus_i_squared_zero && gi.det == GF3(1)
                                             : gi.rank_a_minus_i == 2 && gi.det == GF3(1);
                if (!want || !gi.basis_of_quotient)
                  r.fail(name + ": Gram identity");
                ++grams;
              }
            },
            e);
    }
  r.notes << (r.ok ? "" : "; ") << reports << " constructions, " << injective << " checked injective, " << grams
          << " Gram identities";
}

// 6 ---------------------------------------------------------------------------

void tightness(Result& r)
{
  for (const auto& g : {GroupSpec::sp(6), GroupSpec::u(6), GroupSpec::of2(8, P), GroupSpec::of2(8, M),
                        GroupSpec::pof3(6, P, P), GroupSpec::pof3(4, M, P)}) {
    const auto c = embedding_phi_consistency(g);
    r.notes << (r.notes.tellp() > 0 ? " " : "") << to_string(g) << ":S" << c.phi << " via " << c.construction;
    if (!c.ok)
      r.fail(to_string(g) + ": " + c.detail);
  }
}

// 7 ---------------------------------------------------------------------------

void norton(Result& r)
{
  for (const auto& g : {GroupSpec::sp(4), GroupSpec::sp(6), GroupSpec::u(4), GroupSpec::of2(6, P),
                        GroupSpec::of2(6, M), GroupSpec::pof3(4, P), GroupSpec::pof3(4, M)}) {
    const auto rep = norton_check(g);
    r.notes << (r.notes.tellp() > 0 ? " " : "") << to_string(g) << ":" << rep.pairs_tested << "/max"
            << rep.max_order_seen;
    if (!rep.exhaustive)
      r.fail(to_string(g) + " not exhaustive");
    if (!rep.ok())
      r.fail(to_string(g) + ": " + std::to_string(rep.violations.size()) + " violations");
  }
}

// 8 ---------------------------------------------------------------------------

void isomorphisms(Result& r)
{
  const int sp4 = search(GroupSpec::sp(4));
  const int sp6 = search(GroupSpec::sp(6));
  if (sp4 != 6 || sp6 != 8)
    r.fail("Sp(4), Sp(6) = " + std::to_string(sp4) + ", " + std::to_string(sp6));
  for (Sign e : {P, M}) {
    if (search(GroupSpec::of2(5, e)) != sp4)
      r.fail(to_string(GroupSpec::of2(5, e)) + " differs from Sp(4)");
    if (search(GroupSpec::of2(7, e)) != sp6)
      r.fail(to_string(GroupSpec::of2(7, e)) + " differs from Sp(6)");
  }
  int pairs = 0;
  for (int n = 1; n <= 5; ++n)
    for (Sign mu : {P, M}) {
      const GroupSpec a = GroupSpec::pof3(n, mu, P);
      const GroupSpec b = GroupSpec::pof3(n, n % 2 ? -mu : mu, M);
      ++pairs;
      if (search(a) != search(b))
        r.fail(to_string(a) + " vs " + to_string(b));
    }
  r.notes << (r.ok ? "" : "; ") << "O2(5)=Sp(4)=" << sp4 << ", O2(7)=Sp(6)=" << sp6 << ", " << pairs
          << " PO3 sign-flip pairs";
}

// 9 ---------------------------------------------------------------------------

std::string filter_family(const GroupSpec& g)
{
  switch (g.family) {
  case Family::Sp: return "sp";
  case Family::U: return "u";
  case Family::OF2: return g.eps == P ? "o2(+)" : "o2(-)";
  case Family::POF3: return g.mu == P ? "po3(+,+)" : "po3(-,+)";
  default: return "";
  }
}

void filter(Result& r)
{
  const std::map<std::string, int> theorem = {{"sp", 10},    {"u", 11},          {"o2(+)", 11},
                                              {"o2(-)", 11}, {"po3(+,+)", 11},   {"po3(-,+)", 12}};
  const FilterSummary s = fischer_filter_summary();
  for (const auto& b : s.bounds) {
    if (b.family == "fischer") {
      if (b.fischer_phi != std::vector<int>{10, 12, 12})
        r.fail("Fischer constants");
      continue;
    }
    const int want = theorem.at(b.family);
    r.notes << (r.notes.tellp() > 0 ? " " : "") << b.family << "<=" << b.max_n;
    if (b.max_n == want)
      continue;
    // a deviation is allowed only when the propositions give the theorem
    // bound and a listed correction in the family explains it
    bool explained = b.max_n_uncorrected == want;
    bool listed = false;
    for (const auto& c : s.corrections)
      listed = listed || filter_family(c.spec) == b.family;
    if (!explained || !listed)
      r.fail(b.family + " bound " + std::to_string(b.max_n) + " vs " + std::to_string(want));
  }
  r.notes << "; corrections:";
  for (const auto& c : s.corrections)
    r.notes << " " << to_string(c.spec) << " " << c.props << "->" << c.oracle;
  r.notes << "; Fischer 10/12/12 stored";
}

struct Criterion {
  const char* title;
  std::function<void(Result&)> run;
};

} // namespace

int main(int argc, char** argv)
{
  const std::vector<Criterion> all = {
      {"phi table reproduction", table},      {"spot values", spot},
      {"witness chains", witnesses},          {"lemma suite", lemmas},
      {"embedding verification", embeddings}, {"tightness", tightness},
      {"norton check", norton},               {"isomorphism consistency", isomorphisms},
      {"phi <= 12 filter", filter},
  };
  std::vector<int> which;
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > static_cast<int>(all.size())) {
      std::cerr << "criterion must be 1.." << all.size() << '\n';
      return 2;
    }
    which.push_back(k);
  } else {
    for (int k = 1; k <= static_cast<int>(all.size()); ++k)
      which.push_back(k);
  }
  bool ok = true;
  for (int k : which) {
    Result r;
    try {
      all[static_cast<std::size_t>(k - 1)].run(r);
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::cout << (r.ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << all[static_cast<std::size_t>(k - 1)].title
              << " -- " << r.notes.str() << std::endl;
    ok = ok && r.ok;
  }
  return ok ? 0 : 1;
}
