#include <doctest.h>

#include "fischer/witness.hpp"

using namespace fischer;

namespace {

int length_of(const AnyWitness& w)
{
  return std::visit([](const auto& c) { return c.chain.length(); }, w);
}

} // namespace

TEST_CASE("case list")
{
  const auto cases = witness_cases(12);
  CHECK(cases.front() == GroupSpec::sp(4));
  CHECK(std::count(cases.begin(), cases.end(), GroupSpec::sp(10)) == 1);
  CHECK(std::count(cases.begin(), cases.end(), GroupSpec::u(7)) == 1);
  CHECK(std::count(cases.begin(), cases.end(), GroupSpec::pof3(7, Sign::Minus)) == 1);
  CHECK(std::count(cases.begin(), cases.end(), GroupSpec::of2(12, Sign::Plus)) == 1);
  CHECK(std::count(cases.begin(), cases.end(), GroupSpec::of2(12, Sign::Minus)) == 1);
}

TEST_CASE("symplectic, unitary and PO3 witnesses")
{
  for (int n = 4; n <= 10; n += 2) {
    const auto w = paper_witness_chain(GroupSpec::sp(n));
    CHECK(witness_valid(w));
    CHECK(length_of(w) == n + 1);
  }
  for (int n = 4; n <= 7; ++n)
    CHECK(witness_valid(paper_witness_chain(GroupSpec::u(n))));
  for (int n = 3; n <= 7; ++n)
    CHECK(witness_valid(paper_witness_chain(GroupSpec::pof3(n, Sign::Plus))));
  // each proof claims phi - 1
  for (const auto& g : witness_cases(7))
    if (g.family != Family::OF2)
      CHECK_MESSAGE(length_of(paper_witness_chain(g)) == phi_formula(g, FormulaSource::Propositions) - 1, to_string(g));
}

TEST_CASE("O2 witnesses")
{
  // the lists the proof writes down for these two cases are not chains in
  // any form of the stated type
  for (const auto& g : witness_cases(12)) {
    if (g.family != Family::OF2)
      continue;
    const bool expected = !(g == GroupSpec::of2(8, Sign::Minus) || g == GroupSpec::of2(12, Sign::Plus));
    CHECK_MESSAGE(witness_valid(paper_witness_chain(g)) == expected, to_string(g));
  }
  CHECK(length_of(paper_witness_chain(GroupSpec::of2(6, Sign::Plus))) == 7);
  CHECK(length_of(paper_witness_chain(GroupSpec::of2(6, Sign::Minus))) == 5);
}

TEST_CASE("unsupported cases")
{
  CHECK_THROWS_AS(paper_witness_chain(GroupSpec::fischer(22)), Unsupported);
  CHECK_THROWS_AS(paper_witness_chain(GroupSpec::sym(5)), Unsupported);
}

TEST_CASE("solve_chain_form")
{
  // a path of length 3 in F2^4 with Q = 1 on each element
  const std::vector<Vec<GF2>> vs = {run_sum<GF2>(4, 1, 1), run_sum<GF2>(4, 2, 2), run_sum<GF2>(4, 3, 3)};
  const auto s = solve_chain_form(vs, Sign::Minus);
  REQUIRE(s);
  CHECK(s->nondegenerate());
  CHECK(orthogonal_type_f2(*s) == Sign::Minus);
  CHECK(is_chain(*s, {FormKind::OrthogonalF2}, vs).ok);
  // O2(4,+) has no chain of length 3
  CHECK_FALSE(solve_chain_form(vs, Sign::Plus));
  CHECK(combo<GF3>(3, {{1, 1}, {3, -1}}) == from_codes<GF3>({1, 0, 2}));
}
