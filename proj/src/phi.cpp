#include "fischer/phi.hpp"

#include <algorithm>

namespace fischer {

AnyRealized realize(const GroupSpec& spec)
{
  validate(spec);
  const int n = spec.n;
  switch (spec.family) {
  case Family::Sp:
    return Realized<GF2>{make_space<GF2>(FormKind::Symplectic, n, BasisPreset::symplectic_pairs()),
                         {FormKind::Symplectic}};
  case Family::U:
    return Realized<GF4>{make_space<GF4>(FormKind::Unitary, n, BasisPreset::unitary_orthonormal()),
                         {FormKind::Unitary}};
  case Family::OF2:
    return Realized<GF2>{make_space<GF2>(FormKind::OrthogonalF2, n, BasisPreset::f2_hyperbolic(spec.eps)),
                         {FormKind::OrthogonalF2}};
  case Family::POF3:
    return Realized<GF3>{make_space<GF3>(FormKind::OrthogonalF3, n, BasisPreset::f3_diagonal(spec.mu)),
                         {FormKind::OrthogonalF3, spec.pi}};
  case Family::Sym:
  case Family::Fischer: break;
  }
  throw Unsupported("no form space models " + to_string(spec));
}

std::optional<bool> PhiReport::props_agree() const
{
  if (!phi_search)
    return std::nullopt;
  return *phi_search == phi_props;
}

std::optional<bool> PhiReport::conclusion_agree() const
{
  if (!phi_search)
    return std::nullopt;
  return *phi_search == phi_conclusion;
}

PhiReport phi_formulas(const GroupSpec& spec)
{
  PhiReport r;
  r.spec = spec;
  r.normalized = normalize_spec(spec);
  r.phi_props = phi_formula(r.normalized, FormulaSource::Propositions);
  r.phi_conclusion = phi_formula(r.normalized, FormulaSource::Conclusion);
  return r;
}

PhiReport phi_bruteforce(const GroupSpec& spec, const SearchOptions& opt)
{
  PhiReport r = phi_formulas(spec);
  if (spec.family == Family::Sym) {
    r.phi_search = spec.n;
    r.reduction = "none";
    return r;
  }
  if (spec.family == Family::Fischer)
    throw Unsupported("phi of " + to_string(spec) + " is a stored constant; no search in the sporadic groups");
  std::visit(
      [&](const auto& real) {
        using F = typename std::decay_t<decltype(real.space)>::Scalar;
        const auto out = max_chain<F>(real.space, real.cls, opt);
        r.phi_search = out.max_length + 1;
        r.field = std::string(field_name(F::id));
        r.witness = chain_codes<F>(out.witness);
        r.nodes = out.nodes_explored;
        r.reduction = reduction_name(out.reduction);
      },
      realize(spec));
  return r;
}

std::vector<GroupSpec> classical_specs(int max_dim, std::optional<Family> family)
{
  std::vector<GroupSpec> out;
  auto want = [&](Family f) { return !family || *family == f; };
  if (want(Family::Sp))
    for (int n = 2; n <= max_dim; n += 2)
      out.push_back(GroupSpec::sp(n));
  if (want(Family::U))
    for (int n = 1; n <= max_dim; ++n)
      out.push_back(GroupSpec::u(n));
  if (want(Family::OF2))
    for (Sign eps : {Sign::Plus, Sign::Minus})
      for (int n = 2; n <= max_dim; n += 2)
        out.push_back(GroupSpec::of2(n, eps));
  if (want(Family::POF3))
    for (Sign mu : {Sign::Plus, Sign::Minus})
      for (int n = 1; n <= max_dim; ++n)
        out.push_back(GroupSpec::pof3(n, mu));
  return out;
}

std::vector<Discrepancy> discrepancy_report(int max_dim, std::optional<Family> family, const SearchOptions& opt)
{
  std::vector<Discrepancy> out;
  for (const auto& g : classical_specs(max_dim, family)) {
    const PhiReport r = phi_bruteforce(g, opt);
    const int oracle = *r.phi_search;
    if (r.phi_props != oracle || r.phi_conclusion != oracle)
      out.push_back({g, r.phi_props, r.phi_conclusion, oracle});
  }
  return out;
}

const std::vector<Discrepancy>& documented_discrepancies()
{
  using S = Sign;
  static const std::vector<Discrepancy> table = {
      {GroupSpec::u(2), 3, 2, 3},
      {GroupSpec::of2(12, S::Plus), 13, 13, 12},
      {GroupSpec::of2(8, S::Minus), 9, 9, 8},
      {GroupSpec::pof3(2, S::Plus), 2, 3, 2},
      {GroupSpec::pof3(1, S::Minus), 2, 3, 2},
      {GroupSpec::pof3(3, S::Minus), 2, 4, 2},
      {GroupSpec::pof3(5, S::Minus), 6, 5, 6},
      {GroupSpec::pof3(6, S::Minus), 6, 7, 6},
      {GroupSpec::pof3(8, S::Minus), 9, 8, 9},
      {GroupSpec::pof3(9, S::Minus), 9, 10, 9},
  };
  return table;
}

std::vector<Discrepancy> documented_discrepancies(int max_dim)
{
  std::vector<Discrepancy> out;
  for (const auto& d : documented_discrepancies())
    if (d.spec.n <= max_dim)
      out.push_back(d);
  return out;
}

int phi_corrected(const GroupSpec& spec, bool* corrected)
{
  const GroupSpec g = normalize_spec(spec);
  const int props = phi_formula(g, FormulaSource::Propositions);
  int value = props;
  for (const auto& d : documented_discrepancies())
    if (d.spec == g)
      value = d.oracle;
  if (corrected)
    *corrected = value != props;
  return value;
}

std::vector<GroupSpec> fischer_filter(const std::vector<GroupSpec>& specs)
{
  std::vector<GroupSpec> out;
  std::copy_if(specs.begin(), specs.end(), std::back_inserter(out),
               [](const GroupSpec& g) { return phi_corrected(g) <= kFilterBound; });
  return out;
}

FilterSummary fischer_filter_summary(int max_n)
{
  FilterSummary s;
  auto family_bound = [&](const std::string& name, const std::vector<GroupSpec>& specs) {
    FilterBound b{name, 0, 0, {}};
    for (const auto& g : specs) {
      bool corrected = false;
      const int phi = phi_corrected(g, &corrected);
      const int props = phi_formula(normalize_spec(g), FormulaSource::Propositions);
      if (phi <= kFilterBound)
        b.max_n = std::max(b.max_n, g.n);
      if (props <= kFilterBound)
        b.max_n_uncorrected = std::max(b.max_n_uncorrected, g.n);
      if (corrected && g == normalize_spec(g))
        s.corrections.push_back({g, props, phi});
    }
    s.bounds.push_back(b);
  };
  std::vector<GroupSpec> sp, u, o2p, o2m, pp, pm;
  for (int n = 1; n <= max_n; ++n) {
    if (n % 2 == 0)
      sp.push_back(GroupSpec::sp(n));
    u.push_back(GroupSpec::u(n));
    if (n >= 2) {
      o2p.push_back(GroupSpec::of2(n, Sign::Plus));
      o2m.push_back(GroupSpec::of2(n, Sign::Minus));
    }
    pp.push_back(GroupSpec::pof3(n, Sign::Plus));
    pm.push_back(GroupSpec::pof3(n, Sign::Minus));
  }
  family_bound("sp", sp);
  family_bound("u", u);
  family_bound("o2(+)", o2p);
  family_bound("o2(-)", o2m);
  family_bound("po3(+,+)", pp);
  family_bound("po3(-,+)", pm);
  FilterBound f{"fischer", 0, 0, {}};
  for (int n : {22, 23, 24}) {
    const int phi = phi_corrected(GroupSpec::fischer(n));
    f.fischer_phi.push_back(phi);
    if (phi <= kFilterBound)
      f.max_n = f.max_n_uncorrected = n;
  }
  s.bounds.push_back(f);
  return s;
}

} // namespace fischer
