#include "fischer/witness.hpp"

#include <map>

namespace fischer {

std::optional<FormSpace<GF2>> solve_chain_form(const std::vector<Vec<GF2>>& vs, Sign eps)
{
  if (vs.empty())
    throw PreconditionError("solve_chain_form of an empty list");
  const int n = static_cast<int>(vs.front().size());
  // unknowns: G(i,j) for i < j, then Q(e_i)
  std::map<std::pair<int, int>, int> gidx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      gidx.emplace(std::pair{i, j}, static_cast<int>(gidx.size()));
  const int qbase = static_cast<int>(gidx.size());
  const int unknowns = qbase + n;

  std::vector<Vec<GF2>> rows;
  std::vector<GF2> rhs;
  const int k = static_cast<int>(vs.size());
  for (int a = 0; a < k; ++a) {
    const auto& u = vs[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < k; ++b) {
      const auto& w = vs[static_cast<std::size_t>(b)];
      Vec<GF2> r = Vec<GF2>::Zero(unknowns);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && u(i) == GF2(1) && w(j) == GF2(1))
            r(gidx.at({std::min(i, j), std::max(i, j)})) += GF2(1);
      rows.push_back(r);
      rhs.push_back(GF2(b == a + 1 ? 1 : 0));
    }
    Vec<GF2> r = Vec<GF2>::Zero(unknowns);
    for (int i = 0; i < n; ++i) {
      if (u(i) != GF2(1))
        continue;
      r(qbase + i) += GF2(1);
      for (int j = i + 1; j < n; ++j)
        if (u(j) == GF2(1))
          r(gidx.at({i, j})) += GF2(1);
    }
    rows.push_back(r);
    rhs.push_back(GF2(1));
  }
  Mat<GF2> a(static_cast<Eigen::Index>(rows.size()), unknowns);
  Vec<GF2> b(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    a.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    b(static_cast<Eigen::Index>(i)) = rhs[i];
  }
  const auto sol = solve_system<GF2>(a, b);

  std::optional<FormSpace<GF2>> found;
  for_each_solution(sol, [&](const Vec<GF2>& x) {
    Mat<GF2> g = Mat<GF2>::Zero(n, n);
    for (const auto& [ij, idx] : gidx) {
      g(ij.first, ij.second) = x(idx);
      g(ij.second, ij.first) = x(idx);
    }
    Vec<GF2> q = x.segment(qbase, n);
    FormSpace<GF2> s(FormKind::OrthogonalF2, std::move(g), std::move(q));
    if (n % 2 != 0 || !s.nondegenerate() || orthogonal_type_f2(s) != eps)
      return false;
    found = std::move(s);
    return true;
  });
  return found;
}

namespace {

template <FiniteField F> WitnessCase<F> finish(GroupSpec spec, FormSpace<F> space, ClassSpec cls,
                                               std::vector<Vec<F>> vs, int claimed, std::string basis)
{
  WitnessCase<F> w{spec, std::move(space), Chain<F>{cls, {}}, claimed, std::move(basis), {}};
  for (auto& v : vs)
    w.chain.elems.push_back(std::move(v));
  w.check = is_chain(w.space, w.chain);
  return w;
}

WitnessCase<GF2> sp_case(const GroupSpec& g)
{
  const int n = g.n;
  if (n < 4)
    throw Unsupported("Sp witness needs dimension >= 4");
  using F = GF2;
  std::vector<Vec<F>> vs;
  for (int i = 1; i < n; ++i)
    vs.push_back(combo<F>(n, {{i, 1}, {i + 1, 1}}));
  Vec<F> t = run_sum<F>(n, 1, n - 2);
  t(n - 1) += F(1);
  vs.push_back(t);
  vs.push_back(run_sum<F>(n, 1, n));
  return finish<F>(g, make_space<F>(FormKind::Symplectic, n, BasisPreset::symplectic_chain_basis()),
                   {FormKind::Symplectic}, std::move(vs), n + 1,
                   "(vi,vj) = 1 for i != j <= n-2, (v_{n-1},v_n) = 1");
}

WitnessCase<GF4> u_case(const GroupSpec& g)
{
  const int n = g.n;
  if (n < 4)
    throw Unsupported("U witness needs n >= 4");
  using F = GF4;
  std::vector<Vec<F>> vs;
  for (int i = 1; i < n; ++i)
    vs.push_back(combo<F>(n, {{i, 1}, {i + 1, 1}}));
  int claimed = n;
  if (n % 2 == 1) {
    vs.push_back(run_sum<F>(n, 1, n - 1));
  } else {
    Vec<F> t = run_sum<F>(n, 1, n - 1);
    t(n - 1) = kAlpha;
    vs.push_back(t);
    vs.push_back(run_sum<F>(n, 1, n));
    claimed = n + 1;
  }
  return finish<F>(g, make_space<F>(FormKind::Unitary, n, BasisPreset::unitary_orthonormal()), {FormKind::Unitary},
                   std::move(vs), claimed, "orthonormal");
}

WitnessCase<GF3> po3_case(const GroupSpec& g)
{
  const int n = g.n;
  using F = GF3;
  std::vector<Vec<F>> vs;
  int claimed = 0;
  auto diffs = [&](int upto) {
    for (int i = 1; i < upto; ++i)
      vs.push_back(combo<F>(n, {{i, 1}, {i + 1, -1}}));
  };
  if (g.mu == Sign::Plus) {
    if (n < 3)
      throw Unsupported("PO3(+,+) witness needs n >= 3");
    diffs(n);
    if (n % 3 == 0) {
      vs.push_back(run_sum<F>(n, 1, n - 1));
      claimed = n;
    } else if (n % 3 == 1) {
      claimed = n - 1;
    } else {
      Vec<F> t = run_sum<F>(n, 1, n - 1);
      t(n - 1) = F(-1);
      vs.push_back(t);
      claimed = n;
    }
  } else {
    if (n < 4 || (n % 3 == 2 && n < 5) || (n % 3 == 0 && n < 6))
      throw Unsupported("PO3(-,+) witness needs n >= 4 (>= 5, >= 6 by residue)");
    diffs(n - 1);
    if (n % 3 == 1) {
      Vec<F> a = run_sum<F>(n, 1, n - 2);
      a(n - 2) = F(-1);
      a(n - 1) = F(1);
      Vec<F> b = run_sum<F>(n, 1, n - 1);
      b(n - 1) = F(-1);
      vs.push_back(a);
      vs.push_back(b);
      vs.push_back(run_sum<F>(n, 1, n));
      claimed = n + 1;
    } else if (n % 3 == 2) {
      Vec<F> a = run_sum<F>(n, 1, n - 2);
      a(n - 1) = F(1);
      vs.push_back(a);
      vs.push_back(unit_vector<F>(n, n - 1));
      claimed = n;
    } else {
      Vec<F> a = run_sum<F>(n, 1, n - 2);
      a(n - 2) = F(-1);
      vs.push_back(a);
      claimed = n - 1;
    }
  }
  return finish<F>(g, make_space<F>(FormKind::OrthogonalF3, n, BasisPreset::f3_diagonal(g.mu)),
                   {FormKind::OrthogonalF3, Sign::Plus}, std::move(vs), claimed,
                   g.mu == Sign::Plus ? "diag(1,...,1)" : "diag(1,...,1,-1)");
}

// The four vector lists of the O2 proof, named by the residue of n mod 8
// they are written for in the + case.
enum class O2List { L0, L2, L4, L6 };

std::vector<Vec<GF2>> o2_list(int n, O2List which)
{
  using F = GF2;
  std::vector<Vec<F>> vs;
  for (int i = 1; i <= n - 3; ++i) {
    Vec<F> v = combo<F>(n, {{i, 1}, {i + 1, 1}});
    if (i % 2 == 0)
      v(n - 2) += F(1);
    vs.push_back(v);
  }
  // v_j + v_{j+1} for j = start, start + 4, ... up to `upto`
  auto pairs = [&](int start, int upto) {
    Vec<F> v = Vec<F>::Zero(n);
    for (int j = start; j + 1 <= upto; j += 4) {
      v(j - 1) += F(1);
      v(j) += F(1);
    }
    return v;
  };
  auto with = [&](Vec<F> v, std::initializer_list<int> extra) {
    for (int i : extra)
      v(i - 1) += F(1);
    return v;
  };
  switch (which) {
  case O2List::L0:
    vs.push_back(with(run_sum<F>(n, 1, n - 4), {n - 2}));
    vs.push_back(with(pairs(1, n - 2), {n}));
    vs.push_back(unit_vector<F>(n, n - 2));
    break;
  case O2List::L2:
    vs.push_back(with(run_sum<F>(n, 1, n - 4), {n - 2, n - 1}));
    vs.push_back(run_sum<F>(n, 1, n - 1));
    break;
  case O2List::L4:
    vs.push_back(with(run_sum<F>(n, 1, n - 4), {n - 2}));
    vs.push_back(run_sum<F>(n, 1, n - 2));
    vs.push_back(with(pairs(3, n - 4), {n}));
    break;
  case O2List::L6:
    vs.push_back(with(run_sum<F>(n, 1, n - 4), {n - 2, n - 1}));
    vs.push_back(run_sum<F>(n, 1, n - 1));
    vs.push_back(with(pairs(3, n - 4), {n}));
    vs.push_back(unit_vector<F>(n, n - 2));
    break;
  }
  return vs;
}

WitnessCase<GF2> o2_case(const GroupSpec& g)
{
  const int n = g.n;
  const bool plus = g.eps == Sign::Plus;
  if (n % 2 != 0 || n < (plus ? 6 : 4))
    throw Unsupported(plus ? "O2(+) witness needs even n >= 6" : "O2(-) witness needs even n >= 4");
  // The - case shifts the residues by 4.
  const int r = (plus ? n : n + 4) % 8;
  O2List which = O2List::L0;
  int claimed = n;
  switch (r) {
  case 0: which = O2List::L0; claimed = n; break;
  case 2: which = O2List::L2; claimed = n - 1; break;
  case 4: which = O2List::L4; claimed = n; break;
  case 6: which = O2List::L6; claimed = n + 1; break;
  }
  auto vs = o2_list(n, which);
  const ClassSpec cls{FormKind::OrthogonalF2};
  if (auto space = solve_chain_form(vs, g.eps))
    return finish<GF2>(g, std::move(*space), cls, std::move(vs), claimed,
                       "Gram and Q solved so that the listed vectors form a chain");
  return finish<GF2>(g, make_space<GF2>(FormKind::OrthogonalF2, n, BasisPreset::f2_pairs_quadratic(g.eps)), cls,
                     std::move(vs), claimed, "no form of this type makes the list a chain; stated pairs basis");
}

} // namespace

AnyWitness paper_witness_chain(const GroupSpec& spec)
{
  const GroupSpec g = normalize_spec(spec);
  switch (g.family) {
  case Family::Sp: return sp_case(g);
  case Family::U: return u_case(g);
  case Family::POF3: return po3_case(g);
  case Family::OF2: return o2_case(g);
  case Family::Sym:
  case Family::Fischer: break;
  }
  throw Unsupported("no written witness chain for " + to_string(g));
}

std::vector<GroupSpec> witness_cases(int max_n)
{
  std::vector<GroupSpec> out;
  for (int n = 4; n <= max_n; n += 2)
    out.push_back(GroupSpec::sp(n));
  for (int n = 4; n <= max_n; ++n)
    out.push_back(GroupSpec::u(n));
  for (int n = 3; n <= max_n; ++n)
    out.push_back(GroupSpec::pof3(n, Sign::Plus));
  for (int n = 4; n <= max_n; ++n) {
    if ((n % 3 == 2 && n < 5) || (n % 3 == 0 && n < 6))
      continue;
    out.push_back(GroupSpec::pof3(n, Sign::Minus));
  }
  for (int n = 4; n <= max_n; n += 2) {
    if (n >= 6)
      out.push_back(GroupSpec::of2(n, Sign::Plus));
    out.push_back(GroupSpec::of2(n, Sign::Minus));
  }
  return out;
}

} // namespace fischer
