// fischer: phi of the groups in Fischer's list, by formula and by search.

#include "output.hpp"

#include "fischer/embeddings.hpp"
#include "fischer/norton.hpp"
#include "fischer/phi.hpp"
#include "fischer/witness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace fischer;
using cli::CommandOutput;
using cli::Json;
using cli::tagged;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct SpecArgs {
  std::string family;
  int n = 0;
  std::string eps = "+";
  std::string mu = "+";
  std::string pi = "+";
};

struct Globals {
  bool json = false;
  bool tsv = false;
  std::uint64_t seed = 0;
  int threads = 0;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Sign parse_sign(const std::string& s, const char* what)
{
  if (s == "+" || s == "plus")
    return Sign::Plus;
  if (s == "-" || s == "minus")
    return Sign::Minus;
  throw UsageError(std::string("--") + what + " takes + or -");
}

GroupSpec to_spec(const SpecArgs& a)
{
  GroupSpec g;
  if (a.family == "sym")
    g = GroupSpec::sym(a.n);
  else if (a.family == "sp")
    g = GroupSpec::sp(a.n);
  else if (a.family == "u")
    g = GroupSpec::u(a.n);
  else if (a.family == "o2")
    g = GroupSpec::of2(a.n, parse_sign(a.eps, "eps"));
  else if (a.family == "po3")
    g = GroupSpec::pof3(a.n, parse_sign(a.mu, "mu"), parse_sign(a.pi, "pi"));
  else if (a.family == "fischer")
    g = GroupSpec::fischer(a.n);
  else
    throw UsageError("unknown family " + a.family);
  try {
    validate(g);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return g;
}

void add_spec_options(CLI::App* sub, SpecArgs& a, bool signs = true)
{
  sub->add_option("--family", a.family, "sym, sp, u, o2, po3 or fischer")
      ->required()
      ->check(CLI::IsMember({"sym", "sp", "u", "o2", "po3", "fischer"}));
  sub->add_option("--n", a.n, "dimension, or degree for sym, or 22/23/24 for fischer")->required();
  if (signs) {
    sub->add_option("--eps", a.eps, "type of an O2 space (+ or -)");
    sub->add_option("--mu", a.mu, "discriminant of a PO3 space (+ or -)");
    sub->add_option("--pi", a.pi, "Q value of the PO3 class (+ or -)");
  }
}

Json spec_args_json(const SpecArgs& a)
{
  Json j = Json::object();
  j["family"] = a.family;
  j["n"] = a.n;
  if (a.family == "o2")
    j["eps"] = a.eps;
  if (a.family == "po3") {
    j["mu"] = a.mu;
    j["pi"] = a.pi;
  }
  return j;
}

std::string field_legend(const std::string& field)
{
  if (field == "F4")
    return "F4, codes 0 1 2 3 = 0 1 alpha alpha-bar";
  if (field == "F3")
    return "F3, codes 0 1 2 = 0 1 -1";
  return field;
}

std::string codes_string(const std::vector<int>& v)
{
  std::string s;
  for (int c : v)
    s += static_cast<char>('0' + c);
  return s;
}

std::string tuple_string(const std::vector<int>& v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Json witness_json(const std::vector<std::vector<int>>& w)
{
  Json arr = Json::array();
  for (const auto& v : w)
    arr.push_back(v);
  return arr;
}

std::string witness_cell(const std::vector<std::vector<int>>& w)
{
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? ";" : "") + codes_string(w[i]);
  return s;
}

void human_witness(std::ostringstream& os, const std::vector<std::vector<int>>& w, const std::string& field)
{
  os << "  witness over " << field_legend(field) << ":\n";
  for (std::size_t i = 0; i < w.size(); ++i)
    os << "    " << i + 1 << ": " << tuple_string(w[i]) << '\n';
}

CommandOutput error_output(int code, const std::string& msg)
{
  CommandOutput out;
  out.exit_code = code;
  out.payload["error"] = msg;
  out.table.columns = {"error"};
  out.table.add({msg});
  out.human = "error: " + msg + "\n";
  return out;
}

bool documented(const GroupSpec& g, int search)
{
  const GroupSpec n = normalize_spec(g);
  for (const auto& d : documented_discrepancies())
    if (d.spec == n)
      return d.oracle == search;
  return false;
}

// ---------------------------------------------------------------------------

struct PhiArgs {
  SpecArgs spec;
  std::string mode = "formula";
  std::string source;
};

CommandOutput cmd_phi(const PhiArgs& a, const SearchOptions& opt)
{
  const GroupSpec g = to_spec(a.spec);
  const bool want_search = a.mode != "formula";
  if (want_search && g.family == Family::Fischer)
    return error_output(kExitBudget, "phi of " + to_string(g) +
                                         " is a stored constant; search in the sporadic groups is not supported");
  const PhiReport r = want_search ? phi_bruteforce(g, opt) : phi_formulas(g);
  const bool props = a.source.empty() || a.source == "props";
  const bool concl = a.source.empty() || a.source == "conclusion";
  const bool formula = a.mode != "search";

  CommandOutput out;
  Json& p = out.payload;
  p["spec"] = to_string(g);
  p["normalized"] = to_string(r.normalized);
  Json values = Json::array();
  if (formula && props)
    values.push_back(tagged(r.phi_props, source_tag(FormulaSource::Propositions)));
  if (formula && concl)
    values.push_back(tagged(r.phi_conclusion, source_tag(FormulaSource::Conclusion)));
  if (r.phi_search)
    values.push_back(tagged(*r.phi_search, "search"));
  p["phi"] = values;
  if (g.family == Family::Fischer)
    p["note"] = "stored constant, not computed";
  if (r.phi_search && g.family != Family::Sym) {
    Json s = Json::object();
    s["field"] = r.field;
    s["nodes"] = r.nodes;
    s["reduction"] = r.reduction;
    s["witness"] = witness_json(r.witness);
    p["search"] = s;
  }
  Json flags = Json::object();
  flags["sources_agree"] = r.sources_agree();
  if (r.phi_search) {
    flags["props_agree"] = *r.props_agree();
    flags["conclusion_agree"] = *r.conclusion_agree();
    flags["documented_discrepancy"] = documented(g, *r.phi_search);
  }
  p["flags"] = flags;
  if (r.phi_search && !*r.props_agree() && !documented(g, *r.phi_search))
    out.exit_code = kExitMismatch;

  out.table.columns = {"spec", "normalized", "value", "source"};
  for (const auto& v : values)
    out.table.add({to_string(g), to_string(r.normalized), std::to_string(v["value"].get<int>()),
                   v["source"].get<std::string>()});

  std::ostringstream os;
  os << "phi(" << to_string(g) << ")";
  if (r.normalized != g)
    os << " = phi(" << to_string(r.normalized) << ")";
  os << '\n';
  for (const auto& v : values)
    os << "  " << v["value"].get<int>() << "  [" << v["source"].get<std::string>() << "]\n";
  if (g.family == Family::Fischer)
    os << "  stored constant, not computed\n";
  if (r.phi_search && g.family != Family::Sym) {
    os << "  search: " << r.nodes << " nodes, reduction " << r.reduction << '\n';
    human_witness(os, r.witness, r.field);
  }
  if (!r.sources_agree())
    os << "  the two formula sources disagree\n";
  if (r.phi_search && !*r.props_agree())
    os << (documented(g, *r.phi_search) ? "  search disagrees with the propositions (documented)\n"
                                        : "  search disagrees with the propositions\n");
  out.human = os.str();
  return out;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  SpecArgs spec;
  bool witness = false;
  bool no_reduction = false;
  std::uint64_t budget = kDefaultNodeBudget;
};

CommandOutput cmd_search(const SearchArgs& a, SearchOptions opt)
{
  const GroupSpec g = to_spec(a.spec);
  if (!is_classical(g))
    return error_output(kExitBudget, "search needs a classical group, got " + to_string(g));
  opt.node_budget = a.budget;
  if (a.no_reduction)
    opt.reduction = Reduction::None;
  CommandOutput out;
  std::visit(
      [&](const auto& real) {
        using F = typename std::decay_t<decltype(real.space)>::Scalar;
        const auto s = max_chain<F>(real.space, real.cls, opt);
        const auto w = chain_codes<F>(s.witness);
        const std::string field(field_name(F::id));
        Json& p = out.payload;
        p["spec"] = to_string(g);
        p["dimension"] = real.space.dim();
        p["class_size"] = ChainSearch<F>(real.space, real.cls).points().size();
        p["max_length"] = tagged(s.max_length, "search");
        p["phi"] = tagged(s.max_length + 1, "search");
        Json st = Json::object();
        st["nodes"] = s.nodes_explored;
        st["node_budget"] = a.budget;
        st["reduction"] = reduction_name(s.reduction);
        st["reached_dimension_bound"] = s.reached_dimension_bound;
        p["search"] = st;
        if (a.witness) {
          p["field"] = field;
          p["witness"] = witness_json(w);
        }
        out.table.columns = {"spec", "max_length", "phi", "source", "nodes", "reduction", "witness"};
        out.table.add({to_string(g), std::to_string(s.max_length), std::to_string(s.max_length + 1), "search",
                       std::to_string(s.nodes_explored), reduction_name(s.reduction), a.witness ? witness_cell(w) : ""});
        std::ostringstream os;
        os << to_string(g) << ": longest chain " << s.max_length << ", phi " << s.max_length + 1 << "  [search]\n";
        os << "  " << s.nodes_explored << " nodes, reduction " << reduction_name(s.reduction) << '\n';
        if (a.witness)
          human_witness(os, w, field);
        out.human = os.str();
      },
      realize(g));
  return out;
}

// ---------------------------------------------------------------------------

CommandOutput cmd_verify_table(int max_dim, const SearchOptions& opt)
{
  if (max_dim < 1)
    throw UsageError("--max-dim must be positive");
  CommandOutput out;
  Json rows = Json::array();
  std::ostringstream os;
  out.table.columns = {"kind", "name", "formula_props", "formula_conclusion", "search", "status"};
  os << "spec            props  concl  search  status\n";
  bool all_ok = true;
  for (const auto& g : classical_specs(max_dim)) {
    const PhiReport r = phi_bruteforce(g, opt);
    const int s = *r.phi_search;
    std::string status = "ok";
    if (r.phi_props != s || r.phi_conclusion != s)
      status = documented(g, s) ? "documented" : "mismatch";
    // a documented record the search no longer reproduces is a mismatch too
    for (const auto& d : documented_discrepancies())
      if (d.spec == g && (d.oracle != s || d.props != r.phi_props || d.conclusion != r.phi_conclusion))
        status = "mismatch";
    all_ok = all_ok && status != "mismatch";
    Json row = Json::object();
    row["spec"] = to_string(g);
    row["phi"] = Json::array({tagged(r.phi_props, source_tag(FormulaSource::Propositions)),
                              tagged(r.phi_conclusion, source_tag(FormulaSource::Conclusion)), tagged(s, "search")});
    row["status"] = status;
    rows.push_back(row);
    out.table.add({"spec", to_string(g), std::to_string(r.phi_props), std::to_string(r.phi_conclusion),
                   std::to_string(s), status});
    char line[96];
    std::snprintf(line, sizeof line, "%-15s %5d  %5d  %6d  %s\n", to_string(g).c_str(), r.phi_props,
                  r.phi_conclusion, s, status.c_str());
    os << line;
  }
  out.payload["max_dim"] = max_dim;
  out.payload["rows"] = rows;

  Json consts = Json::array();
  os << "\nM(22), M(23), M(24): phi = 10, 12, 12 are stored constants; no search is done in the sporadic groups.\n";
  for (int n : {22, 23, 24}) {
    const GroupSpec f = GroupSpec::fischer(n);
    const int v = phi_formula(f, FormulaSource::Propositions);
    Json c = Json::object();
    c["spec"] = to_string(f);
    c["phi"] = Json::array({tagged(v, source_tag(FormulaSource::Propositions)),
                            tagged(phi_formula(f, FormulaSource::Conclusion), source_tag(FormulaSource::Conclusion))});
    c["stored_constant"] = true;
    consts.push_back(c);
    out.table.add({"constant", to_string(f), std::to_string(v), std::to_string(phi_formula(f, FormulaSource::Conclusion)),
                   "", "stored-constant"});
  }
  out.payload["sporadic"] = consts;
  out.payload["sporadic_note"] = "phi of M(22), M(23), M(24) are stored constants, not computed";

  const FilterSummary fs = fischer_filter_summary();
  Json bounds = Json::array();
  os << "\nphi <= 12 filter (propositions, corrected by search where documented):\n";
  for (const auto& b : fs.bounds) {
    Json j = Json::object();
    j["family"] = b.family;
    if (b.family == "fischer") {
      j["kept"] = Json::array({"M(22)", "M(23)", "M(24)"});
      j["phi"] = b.fischer_phi;
      os << "  fischer: M(22), M(23), M(24) kept (stored constants)\n";
      out.table.add({"filter-bound", b.family, "", "", "", "M(22) M(23) M(24)"});
    } else {
      j["max_n"] = b.max_n;
      j["max_n_uncorrected"] = b.max_n_uncorrected;
      os << "  " << b.family << ": n <= " << b.max_n;
      if (b.max_n != b.max_n_uncorrected)
        os << " (propositions alone: n <= " << b.max_n_uncorrected << ")";
      os << '\n';
      out.table.add({"filter-bound", b.family, std::to_string(b.max_n_uncorrected), "", std::to_string(b.max_n),
                     b.max_n == b.max_n_uncorrected ? "ok" : "corrected"});
    }
    bounds.push_back(j);
  }
  Json corr = Json::array();
  os << "  search corrections:\n";
  for (const auto& c : fs.corrections) {
    Json j = Json::object();
    j["spec"] = to_string(c.spec);
    j["phi"] = Json::array({tagged(c.props, source_tag(FormulaSource::Propositions)), tagged(c.oracle, "search")});
    corr.push_back(j);
    os << "    " << to_string(c.spec) << ": " << c.props << " [formula-props] -> " << c.oracle << " [search]\n";
    out.table.add({"filter-correction", to_string(c.spec), std::to_string(c.props), "", std::to_string(c.oracle),
                   "corrected"});
  }
  Json filter = Json::object();
  filter["bound"] = kFilterBound;
  filter["families"] = bounds;
  filter["corrections"] = corr;
  out.payload["filter"] = filter;
  out.payload["ok"] = all_ok;
  os << (all_ok ? "\nall rows match the documented values\n" : "\nsome rows do not match the documented values\n");
  out.human = os.str();
  out.exit_code = all_ok ? 0 : kExitMismatch;
  return out;
}

// ---------------------------------------------------------------------------

CommandOutput cmd_witness(const SpecArgs& a)
{
  const GroupSpec g = to_spec(a);
  std::optional<AnyWitness> w;
  try {
    w = paper_witness_chain(g);
  } catch (const Unsupported& e) {
    return error_output(kExitBudget, e.what());
  }
  CommandOutput out;
  std::visit(
      [&](const auto& c) {
        using F = typename std::decay_t<decltype(c.space)>::Scalar;
        const std::string field(field_name(F::id));
        const auto codes_list = chain_codes<F>(c.chain);
        Json& p = out.payload;
        p["spec"] = to_string(g);
        p["normalized"] = to_string(normalize_spec(g));
        p["field"] = field;
        p["basis"] = c.basis;
        Json gram = Json::array();
        for (int i = 0; i < c.space.dim(); ++i) {
          std::vector<int> row;
          for (int j = 0; j < c.space.dim(); ++j)
            row.push_back(c.space.gram()(i, j).code());
          gram.push_back(row);
        }
        p["gram"] = gram;
        if (c.space.kind() == FormKind::OrthogonalF2)
          p["q"] = codes<F>(c.space.qdiag());
        p["chain"] = witness_json(codes_list);
        p["length"] = c.chain.length();
        p["claimed_length"] = c.claimed_length;
        p["is_chain"] = c.check.ok;
        if (!c.check.ok)
          p["violation"] = c.check.violation;
        p["valid"] = c.valid();
        out.exit_code = c.valid() ? 0 : kExitMismatch;
        out.table.columns = {"spec", "field", "claimed_length", "valid", "index", "coordinates"};
        for (std::size_t i = 0; i < codes_list.size(); ++i)
          out.table.add({to_string(g), field, std::to_string(c.claimed_length), c.valid() ? "true" : "false",
                         std::to_string(i + 1), codes_string(codes_list[i])});
        std::ostringstream os;
        os << "witness chain for " << to_string(g) << " (" << c.basis << ")\n";
        human_witness(os, codes_list, field);
        os << "  length " << c.chain.length() << ", claimed " << c.claimed_length << ", "
           << (c.check.ok ? "is a chain" : "not a chain: " + c.check.violation) << '\n';
        out.human = os.str();
      },
      *w);
  return out;
}

// ---------------------------------------------------------------------------

CommandOutput cmd_embed(int n, const std::string& target, bool full)
{
  const auto t = parse_target(target);
  if (!t)
    throw UsageError("unknown target " + target);
  if (!admissible(n, *t))
    throw UsageError(std::string("no ") + target + " construction for n = " + std::to_string(n));
  std::vector<AnyEmbedding> reps;
  try {
    reps = embed_symmetric(n, *t, full);
  } catch (const ContractFailure& e) {
    return error_output(kExitMismatch, e.what());
  }
  CommandOutput out;
  out.table.columns = {"construction", "n", "variant", "target", "check", "ok", "detail"};
  Json arr = Json::array();
  std::ostringstream os;
  for (const auto& e : reps) {
    std::visit(
        [&](const auto& r) {
          Json j = Json::object();
          const std::string tgt = to_string(r.target);
          j["construction"] = target_name(r.construction);
          j["n"] = r.n;
          j["variant"] = r.variant;
          j["target"] = tgt;
          j["ambient_dimension"] = r.ambient.dim();
          j["quotient"] = r.quotient.has_value();
          Json clauses = Json::array();
          os << "S_" << r.n << " -> " << tgt << " (" << target_name(r.construction)
             << (r.variant.empty() ? "" : ", " + r.variant) << ")\n";
          for (const auto& c : r.check.clauses) {
            Json cj = Json::object();
            cj["clause"] = c.name;
            cj["ok"] = c.ok;
            cj["detail"] = c.detail;
            clauses.push_back(cj);
            out.table.add({target_name(r.construction), std::to_string(r.n), r.variant, tgt, c.name,
                           c.ok ? "true" : "false", c.detail});
            os << "  " << c.name << ": " << (c.ok ? "pass" : "FAIL") << (c.detail.empty() ? "" : " (" + c.detail + ")")
               << '\n';
          }
          j["checks"] = clauses;
          if (r.injective) {
            j["injective_by_enumeration"] = *r.injective;
            out.table.add({target_name(r.construction), std::to_string(r.n), r.variant, tgt, "injective",
                           *r.injective ? "true" : "false", std::to_string(factorial(r.n)) + " images"});
            os << "  injective on all " << factorial(r.n) << " permutations: " << (*r.injective ? "yes" : "NO") << '\n';
            if (!*r.injective)
              out.exit_code = kExitMismatch;
          }
          if constexpr (std::is_same_v<std::decay_t<decltype(r)>, EmbeddingReport<GF3>>) {
            if (r.gram) {
              Json gj = Json::object();
              Json a = Json::array();
              for (int i = 0; i < r.gram->a.rows(); ++i) {
                std::vector<int> row;
                for (int k = 0; k < r.gram->a.cols(); ++k)
                  row.push_back(r.gram->a(i, k).code());
                a.push_back(row);
              }
              gj["a"] = a;
              gj["basis_of_quotient"] = r.gram->basis_of_quotient;
              gj["a_minus_i_squared_zero"] = r.gram->a_minus_i_squared_zero;
              gj["rank_a_minus_i"] = r.gram->rank_a_minus_i;
              gj["det"] = r.gram->det.code();
              j["gram"] = gj;
              const std::string summary = "(A-I)^2=0: " + std::string(r.gram->a_minus_i_squared_zero ? "yes" : "no") +
                                          ", rank(A-I)=" + std::to_string(r.gram->rank_a_minus_i) +
                                          ", det=" + std::to_string(r.gram->det.code());
              out.table.add({target_name(r.construction), std::to_string(r.n), r.variant, tgt, "gram", "true", summary});
              os << "  Gram matrix: " << summary << '\n';
            }
          }
          arr.push_back(j);
        },
        e);
  }
  out.payload["embeddings"] = arr;
  out.human = os.str();
  return out;
}

// ---------------------------------------------------------------------------

CommandOutput cmd_norton(const SpecArgs& a, std::uint64_t budget, std::uint64_t seed, int threads)
{
  const GroupSpec g = to_spec(a);
  if (!is_classical(g))
    return error_output(kExitBudget, "norton check needs a classical group, got " + to_string(g));
  const NortonReport r = norton_check(g, budget, seed, threads);
  CommandOutput out;
  Json& p = out.payload;
  p["spec"] = to_string(g);
  p["class_size"] = r.class_size;
  p["s_size"] = r.s_size;
  p["pairs_total"] = r.pairs_total;
  p["pairs_tested"] = r.pairs_tested;
  p["exhaustive"] = r.exhaustive;
  if (!r.exhaustive)
    p["seed"] = r.seed;
  p["max_order_seen"] = r.max_order_seen;
  Json hist = Json::array();
  for (const auto& [o, c] : r.histogram) {
    Json h = Json::object();
    h["order"] = o;
    h["count"] = c;
    hist.push_back(h);
  }
  p["histogram"] = hist;
  Json viol = Json::array();
  for (const auto& v : r.violations)
    viol.push_back(Json::array({v.i, v.j, v.order}));
  p["violations"] = viol;
  out.exit_code = r.ok() ? 0 : kExitMismatch;
  out.table.columns = {"spec", "exhaustive", "pairs_tested", "order", "count"};
  for (const auto& [o, c] : r.histogram)
    out.table.add({to_string(g), r.exhaustive ? "true" : "false", std::to_string(r.pairs_tested), std::to_string(o),
                   std::to_string(c)});
  std::ostringstream os;
  os << to_string(g) << ": |D| = " << r.class_size << ", |S| = " << r.s_size << ", " << r.pairs_tested << " of "
     << r.pairs_total << " pairs" << (r.exhaustive ? " (exhaustive)" : " (sampled, seed " + std::to_string(seed) + ")")
     << '\n';
  for (const auto& [o, c] : r.histogram)
    os << "  order " << (o == 0 ? std::string("> ") + std::to_string(kDefaultOrderCap) : std::to_string(o)) << ": "
       << c << '\n';
  os << "  " << (r.ok() ? "no" : std::to_string(r.violations.size())) << " products of order above "
     << kNortonOrderBound << '\n';
  out.human = os.str();
  return out;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"phi of 3-transposition groups: formulas, exhaustive chain search, witnesses, embeddings"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", gl.json, "JSON envelope on stdout");
  fmt->add_flag("--tsv", gl.tsv, "tab-separated table on stdout");
  fmt->require_option(0, 1);
  app.add_option("--seed", gl.seed, "seed for sampled norton checks");
  app.add_option("--threads", gl.threads, "worker threads (default: FISCHER_THREADS or 1)");

  PhiArgs phi;
  auto* c_phi = app.add_subcommand("phi", "phi by formula and/or search");
  add_spec_options(c_phi, phi.spec);
  c_phi->add_option("--mode", phi.mode)->check(CLI::IsMember({"formula", "search", "both"}));
  c_phi->add_option("--source", phi.source)->check(CLI::IsMember({"props", "conclusion"}));

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "exhaustive chain search");
  add_spec_options(c_search, search.spec);
  c_search->add_flag("--witness", search.witness, "print a longest chain");
  c_search->add_flag("--no-symmetry-reduction", search.no_reduction, "search every first vertex");
  c_search->add_option("--node-budget", search.budget);

  int max_dim = 0;
  auto* c_table = app.add_subcommand("verify-table", "search every classical group up to a dimension");
  c_table->add_option("--max-dim", max_dim)->required();

  SpecArgs wit;
  auto* c_wit = app.add_subcommand("witness", "the chain written out in the proof, checked");
  add_spec_options(c_wit, wit);

  int sn = 0;
  std::string target;
  bool full = false;
  auto* c_embed = app.add_subcommand("embed", "S_n in a classical group by permuting a basis");
  c_embed->add_option("--sn", sn)->required();
  c_embed->add_option("--target", target)->required()->check(CLI::IsMember({"sp", "u", "po3a", "po3b", "o2"}));
  c_embed->add_flag("--full-injectivity", full, "enumerate all n! images");

  SpecArgs nort;
  std::uint64_t budget = kDefaultNortonBudget;
  auto* c_nort = app.add_subcommand("norton", "orders of products of pairs from S");
  add_spec_options(c_nort, nort);
  c_nort->add_option("--budget", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gl.threads <= 0) {
    gl.threads = 1;
    if (const char* env = std::getenv("FISCHER_THREADS"))
      gl.threads = std::max(1, std::atoi(env));
  }
  const cli::Format format = gl.json ? cli::Format::Json : gl.tsv ? cli::Format::Tsv : cli::Format::Human;
  SearchOptions opt;
  opt.threads = gl.threads;

  std::string name;
  Json args = Json::object();
  CommandOutput out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (c_phi->parsed()) {
      name = "phi";
      args = spec_args_json(phi.spec);
      args["mode"] = phi.mode;
      if (!phi.source.empty())
        args["source"] = phi.source;
      out = cmd_phi(phi, opt);
    } else if (c_search->parsed()) {
      name = "search";
      args = spec_args_json(search.spec);
      args["witness"] = search.witness;
      args["symmetry_reduction"] = !search.no_reduction;
      args["node_budget"] = search.budget;
      out = cmd_search(search, opt);
    } else if (c_table->parsed()) {
      name = "verify-table";
      args["max_dim"] = max_dim;
      out = cmd_verify_table(max_dim, opt);
    } else if (c_wit->parsed()) {
      name = "witness";
      args = spec_args_json(wit);
      out = cmd_witness(wit);
    } else if (c_embed->parsed()) {
      name = "embed";
      args["sn"] = sn;
      args["target"] = target;
      args["full_injectivity"] = full;
      out = cmd_embed(sn, target, full);
    } else if (c_nort->parsed()) {
      name = "norton";
      args = spec_args_json(nort);
      args["budget"] = budget;
      out = cmd_norton(nort, budget, gl.seed, gl.threads);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SearchIncomplete& e) {
    out = error_output(kExitBudget, e.what());
  } catch (const Unsupported& e) {
    out = error_output(kExitBudget, e.what());
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractFailure& e) {
    out = error_output(kExitMismatch, e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << cli::render(name, args, out, format);
  std::cerr << name << ": " << secs << " s, " << gl.threads << " thread(s)\n";
  return out.exit_code;
}
