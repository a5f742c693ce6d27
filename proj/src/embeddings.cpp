#include "fischer/embeddings.hpp"

#include "fischer/coxeter.hpp"
#include "fischer/witness.hpp"

namespace fischer {

const char* target_name(EmbedTarget t)
{
  switch (t) {
  case EmbedTarget::Sp: return "sp";
  case EmbedTarget::U: return "u";
  case EmbedTarget::PO3a: return "po3a";
  case EmbedTarget::PO3b: return "po3b";
  case EmbedTarget::O2: return "o2";
  }
  return "?";
}

std::optional<EmbedTarget> parse_target(const std::string& s)
{
  for (EmbedTarget t : {EmbedTarget::Sp, EmbedTarget::U, EmbedTarget::PO3a, EmbedTarget::PO3b, EmbedTarget::O2})
    if (s == target_name(t))
      return t;
  return std::nullopt;
}

bool admissible(int n, EmbedTarget t)
{
  if (n < 5)
    return false;
  switch (t) {
  case EmbedTarget::Sp:
  case EmbedTarget::U: return n % 2 == 0;
  case EmbedTarget::PO3a: return n % 3 != 2;
  case EmbedTarget::PO3b: return n % 3 == 0;
  case EmbedTarget::O2: return n % 4 != 3;
  }
  return false;
}

bool EmbeddingCheck::ok() const { return failure() == nullptr; }

const Clause* EmbeddingCheck::failure() const
{
  for (const auto& c : clauses)
    if (!c.ok)
      return &c;
  return nullptr;
}

template <FiniteField F> EmbeddingCheck verify_embedding(const EmbeddingReport<F>& r)
{
  const FormSpace<F>& v = r.space();
  EmbeddingCheck out;

  Clause form{"form", true, ""};
  for (std::size_t k = 0; k < r.generators.size() && form.ok; ++k)
    if (!v.is_isometry(r.generators[k])) {
      form.ok = false;
      form.detail = "image of (" + std::to_string(k + 1) + " " + std::to_string(k + 2) + ") is not an isometry";
    }
  out.clauses.push_back(form);

  const RelationCheck rel = check_type_a_relations<F>(r.generators);
  out.clauses.push_back({"relations", rel.ok, rel.failure});

  Clause cls{"class", true, ""};
  for (std::size_t k = 0; k < r.generators.size() && cls.ok; ++k) {
    const Vec<F>& c = r.class_vectors[k];
    const std::string which = "(" + std::to_string(k + 1) + " " + std::to_string(k + 2) + ")";
    if (!in_class_D(v, r.cls, c)) {
      cls.ok = false;
      cls.detail = "vector for " + which + " is not in D";
    } else if (matrix_of(v, r.cls, c) != r.generators[k]) {
      cls.ok = false;
      cls.detail = "image of " + which + " is not the transvection of its vector";
    }
  }
  if (cls.ok && r.cls.family == FormKind::Unitary)
    cls.detail = "every w_i + w_{i+1} is singular";
  out.clauses.push_back(cls);

  const RelationCheck ker = check_kernel_argument<F>(r.generators);
  out.clauses.push_back({"faithful", ker.ok, ker.failure});

  Clause type{"type", true, ""};
  auto fail = [&](std::string why) {
    type.ok = false;
    type.detail = std::move(why);
  };
  if (!v.nondegenerate()) {
    fail("target space is degenerate");
  } else if (v.dim() != r.target.n) {
    fail("target space has dimension " + std::to_string(v.dim()));
  } else if constexpr (F::id == FieldId::F3) {
    const Sign mu = discriminant_f3(v);
    if (mu != r.target.mu)
      fail(std::string("discriminant is ") + sign_char(mu));
    else if (r.cls.pi != r.target.pi)
      fail("class does not match pi");
  } else if constexpr (F::id == FieldId::F2) {
    if (v.kind() == FormKind::OrthogonalF2) {
      const Sign eps = orthogonal_type_f2(v);
      if (eps != r.target.eps)
        fail(std::string("type is ") + sign_char(eps));
    }
  }
  out.clauses.push_back(type);
  return out;
}

template EmbeddingCheck verify_embedding<GF2>(const EmbeddingReport<GF2>&);
template EmbeddingCheck verify_embedding<GF3>(const EmbeddingReport<GF3>&);
template EmbeddingCheck verify_embedding<GF4>(const EmbeddingReport<GF4>&);

EmbeddingCheck verify_any(const AnyEmbedding& e)
{
  return std::visit([](const auto& r) { return verify_embedding(r); }, e);
}

AnyEmbedding tamper(const AnyEmbedding& e, int k)
{
  return std::visit(
      [k](auto r) -> AnyEmbedding {
        auto& g = r.generators.at(static_cast<std::size_t>(k));
        g.setIdentity();
        return r;
      },
      e);
}

namespace {

template <FiniteField F> Mat<F> swap_matrix(int dim, int i)
{
  Mat<F> p = Mat<F>::Identity(dim, dim);
  p(i, i) = F(0);
  p(i + 1, i + 1) = F(0);
  p(i, i + 1) = F(1);
  p(i + 1, i) = F(1);
  return p;
}

template <FiniteField F>
EmbeddingReport<F> build(int n, EmbedTarget t, std::string variant, FormSpace<F> ambient, std::optional<Vec<F>> v,
                         ClassSpec cls, GroupSpec target)
{
  EmbeddingReport<F> r{n, t, std::move(variant), target, std::move(ambient), std::nullopt, cls, {}, {}, {}, {}, {}};
  const int dim = r.ambient.dim();
  if (v)
    r.quotient = perp_quotient(r.ambient, *v, *v);
  for (int i = 0; i + 1 < n; ++i) {
    const Mat<F> p = swap_matrix<F>(dim, i);
    Vec<F> c = Vec<F>::Zero(dim);
    c(i) = F(1);
    c(i + 1) = F::id == FieldId::F3 ? F(-1) : F(1);
    if (r.quotient) {
      r.generators.push_back(r.quotient->induced_operator(p));
      r.class_vectors.push_back(r.quotient->project(c));
    } else {
      r.generators.push_back(p);
      r.class_vectors.push_back(c);
    }
  }
  return r;
}

template <FiniteField F> void finish(EmbeddingReport<F>& r, bool full_injectivity)
{
  r.check = verify_embedding(r);
  if (const Clause* c = r.check.failure())
    throw ContractFailure(std::string(target_name(r.construction)) + " construction, n = " + std::to_string(r.n) +
                          ": clause " + c->name + " fails: " + c->detail);
  if (full_injectivity)
    r.injective = injective_by_enumeration<F>(r.generators, r.space().dim());
}

// The images of w_1 - w_i (and w_{n+1} when 3 | n), with their Gram matrix.
GramIdentity po3_gram(const EmbeddingReport<GF3>& r)
{
  using F = GF3;
  const int n = r.n;
  const int dim = r.ambient.dim();
  std::vector<Vec<F>> basis;
  const int last = n % 3 == 1 ? n : n - 1;
  for (int i = 2; i <= last; ++i) {
    Vec<F> b = Vec<F>::Zero(dim);
    b(0) = F(1);
    b(i - 1) = F(-1);
    basis.push_back(b);
  }
  if (n % 3 == 0)
    basis.push_back(unit_vector<F>(dim, n));
  GramIdentity g;
  const int m = static_cast<int>(basis.size());
  g.a = Mat<F>(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g.a(i, j) = r.ambient.bilinear(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
  std::vector<Vec<F>> projected;
  for (const auto& b : basis)
    projected.push_back(r.quotient->project(b));
  g.basis_of_quotient = m == r.quotient->dim() && rank_of(projected, r.quotient->dim()) == m;
  const Mat<F> d = g.a - Mat<F>::Identity(m, m);
  g.a_minus_i_squared_zero = Mat<F>(d * d) == Mat<F>::Zero(m, m);
  g.rank_a_minus_i = rank<F>(d);
  g.det = determinant<F>(g.a);
  return g;
}

std::string q_variant(const std::vector<int>& q, int n)
{
  if (static_cast<int>(q.size()) == n)
    return "Q(w_i)=" + std::to_string(q.front());
  return "Q(w_i)=" + std::to_string(q.front()) + ", Q(w_{n+1})=" + std::to_string(q.back());
}

} // namespace

std::vector<AnyEmbedding> embed_symmetric(int n, EmbedTarget t, bool full_injectivity)
{
  if (!admissible(n, t))
    throw ConfigError(std::string("embedding into ") + target_name(t) + " is not defined for n = " + std::to_string(n));
  std::vector<AnyEmbedding> out;
  switch (t) {
  case EmbedTarget::Sp: {
    using F = GF2;
    auto r = build<F>(n, t, "", make_space<F>(FormKind::Symplectic, n, BasisPreset::f2_all_ones()),
                      run_sum<F>(n, 1, n), {FormKind::Symplectic}, GroupSpec::sp(n - 2));
    finish(r, full_injectivity);
    out.emplace_back(std::move(r));
    break;
  }
  case EmbedTarget::U: {
    using F = GF4;
    auto r = build<F>(n, t, "", make_space<F>(FormKind::Unitary, n, BasisPreset::unitary_orthonormal()),
                      run_sum<F>(n, 1, n), {FormKind::Unitary}, GroupSpec::u(n - 2));
    finish(r, full_injectivity);
    out.emplace_back(std::move(r));
    break;
  }
  case EmbedTarget::PO3a: {
    using F = GF3;
    const Vec<F> v = run_sum<F>(n + 1, 1, n % 3 == 0 ? n : n + 1);
    auto r = build<F>(n, t, "", make_space<F>(FormKind::OrthogonalF3, n + 1, BasisPreset::f3_diagonal(Sign::Minus)), v,
                      {FormKind::OrthogonalF3, Sign::Plus}, GroupSpec::pof3(n - 1, Sign::Plus));
    finish(r, full_injectivity);
    r.gram = po3_gram(r);
    out.emplace_back(std::move(r));
    break;
  }
  case EmbedTarget::PO3b: {
    using F = GF3;
    auto r = build<F>(n, t, "", make_space<F>(FormKind::OrthogonalF3, n, BasisPreset::f3_diagonal(Sign::Plus)),
                      run_sum<F>(n, 1, n), {FormKind::OrthogonalF3, Sign::Plus}, GroupSpec::pof3(n - 2, Sign::Minus));
    finish(r, full_injectivity);
    out.emplace_back(std::move(r));
    break;
  }
  case EmbedTarget::O2: {
    using F = GF2;
    const ClassSpec cls{FormKind::OrthogonalF2};
    if (n % 4 == 0) {
      const Sign eps = n % 8 == 0 ? Sign::Plus : Sign::Minus;
      auto r = build<F>(n, t, q_variant(std::vector<int>(static_cast<std::size_t>(n), 0), n), make_space<F>(FormKind::OrthogonalF2, n, BasisPreset::f2_all_ones({0})),
                        run_sum<F>(n, 1, n), cls, GroupSpec::of2(n - 2, eps));
      finish(r, full_injectivity);
      out.emplace_back(std::move(r));
      break;
    }
    // The target type is whatever the preset gives; both presets are built.
    const int dim = n % 4 == 2 ? n : n + 1;
    std::vector<Sign> types;
    for (int a : {0, 1}) {
      std::vector<int> q(static_cast<std::size_t>(n), a);
      if (dim > n)
        q.push_back(1 - a);
      FormSpace<F> ambient = make_space<F>(FormKind::OrthogonalF2, dim, BasisPreset::f2_all_ones(q));
      std::optional<Vec<F>> v;
      if (dim > n)
        v = run_sum<F>(dim, 1, dim);
      auto r = build<F>(n, t, q_variant(q, n), std::move(ambient), v, cls, GroupSpec::of2(dim > n ? n - 1 : n, Sign::Plus));
      r.target.eps = orthogonal_type_f2(r.space());
      types.push_back(r.target.eps);
      finish(r, full_injectivity);
      out.emplace_back(std::move(r));
    }
    if (n % 4 == 2 && types[0] == types[1])
      throw ContractFailure("O2 construction, n = " + std::to_string(n) + ": both presets give the same type");
    break;
  }
  }
  return out;
}

namespace {

std::string construction_label(const AnyEmbedding& e)
{
  return std::visit(
      [](const auto& r) {
        std::string s = std::string(target_name(r.construction)) + " n=" + std::to_string(r.n);
        if (!r.variant.empty())
          s += " " + r.variant;
        return s + " -> " + to_string(r.target);
      },
      e);
}

GroupSpec target_of(const AnyEmbedding& e)
{
  return std::visit([](const auto& r) { return r.target; }, e);
}

} // namespace

Consistency embedding_phi_consistency(const GroupSpec& spec, const SearchOptions& opt)
{
  Consistency c;
  if (!is_classical(spec)) {
    c.detail = to_string(spec) + " is not a classical group";
    return c;
  }
  const GroupSpec g = normalize_spec(spec);
  const PhiReport rep = phi_bruteforce(g, opt);
  c.phi = *rep.phi_search;

  std::vector<std::pair<EmbedTarget, int>> candidates;
  const int m = g.n;
  switch (g.family) {
  case Family::Sp: candidates = {{EmbedTarget::Sp, m + 2}}; break;
  case Family::U: candidates = {{EmbedTarget::U, m + 2}}; break;
  case Family::POF3:
    candidates = {{g.mu == Sign::Plus ? EmbedTarget::PO3a : EmbedTarget::PO3b, g.mu == Sign::Plus ? m + 1 : m + 2}};
    break;
  case Family::OF2: candidates = {{EmbedTarget::O2, m + 2}, {EmbedTarget::O2, m + 1}, {EmbedTarget::O2, m}}; break;
  default: break;
  }
  std::vector<std::string> tried;
  for (const auto& [t, n] : candidates) {
    if (n != c.phi || !admissible(n, t))
      continue;
    for (const auto& e : embed_symmetric(n, t)) {
      if (target_of(e) == g && verify_any(e).ok()) {
        c.ok = true;
        c.construction = construction_label(e);
        return c;
      }
      tried.push_back(construction_label(e));
    }
  }

  std::visit(
      [&](const auto& real) {
        using F = typename std::decay_t<decltype(real.space)>::Scalar;
        const auto out = max_chain<F>(real.space, real.cls, opt);
        const auto sn = chain_to_sn_embedding<F>(real.space, out.witness, 0);
        if (sn.ok() && sn.degree == c.phi) {
          c.ok = true;
          c.construction = "chain";
        }
      },
      realize(g));
  if (!tried.empty())
    c.detail = "permutation constructions reach other targets: ";
  for (std::size_t i = 0; i < tried.size(); ++i)
    c.detail += (i ? "; " : "") + tried[i];
  if (!c.ok)
    c.detail = "no construction realizes S_" + std::to_string(c.phi);
  return c;
}

} // namespace fischer
