#include <doctest.h>

#include "fischer/linalg.hpp"

using namespace fischer;

TEST_CASE("F4 arithmetic")
{
  const GF4 a = kAlpha;
  const GF4 b = a.conjugate();
  CHECK(a * a == b);
  CHECK(a * a == a + GF4(1));
  CHECK(a * a * a == GF4(1));
  CHECK(b.code() == 3);
  CHECK(a.inverse() == b);
  CHECK(GF4(2) == GF4(0)); // ring map Z -> F4
  CHECK(GF4::from_code(2) == a);
  CHECK_THROWS_AS(GF4::from_code(4), DomainError);
  CHECK_THROWS_AS(GF4(0).inverse(), DomainError);
  for (int c = 0; c < 4; ++c) {
    const GF4 x = GF4::from_code(c);
    CHECK(x + x == GF4(0));
    CHECK(x.conjugate().conjugate() == x);
    CHECK((x * x.conjugate()).conjugate() == x * x.conjugate()); // norm lands in F2
  }
}

TEST_CASE("F3 and F2 arithmetic")
{
  CHECK(GF3(-1).code() == 2);
  CHECK(GF3(2) * GF3(2) == GF3(1));
  CHECK(GF3(5) == GF3(2));
  CHECK(-GF3(1) == GF3(2));
  CHECK(GF3(2).inverse() == GF3(2));
  CHECK(GF2(3) == GF2(1));
  CHECK(-GF2(1) == GF2(1));
}

TEST_CASE("row reduction and solving")
{
  Mat<GF2> m(3, 3);
  m << GF2(1), GF2(1), GF2(0), GF2(0), GF2(1), GF2(1), GF2(1), GF2(0), GF2(1);
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == GF2(0));
  CHECK(nullspace(m).size() == 1);

  Mat<GF3> a = Mat<GF3>::Identity(3, 3);
  a(0, 1) = GF3(1);
  a(2, 2) = GF3(2);
  CHECK(determinant(a) == GF3(2));
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(Mat<GF3>(a * *inv) == Mat<GF3>::Identity(3, 3));

  Vec<GF3> rhs = from_codes<GF3>({1, 2, 0});
  const auto sol = solve_system(a, rhs);
  REQUIRE(sol.particular);
  CHECK(Vec<GF3>(a * *sol.particular) == rhs);
  CHECK(sol.kernel.empty());
}

TEST_CASE("inconsistent system has no particular solution")
{
  Mat<GF2> a = Mat<GF2>::Zero(2, 2);
  a(0, 0) = GF2(1);
  a(1, 0) = GF2(1);
  const auto sol = solve_system(a, from_codes<GF2>({1, 0}));
  CHECK_FALSE(sol.particular);
}

TEST_CASE("projective points")
{
  CHECK(projective_points<GF2>(4).size() == 15);
  CHECK(projective_points<GF3>(3).size() == 13);
  CHECK(projective_points<GF4>(3).size() == 21);
  for (const auto& p : projective_points<GF4>(2))
    CHECK(is_canonical(p));
  const Vec<GF3> v = from_codes<GF3>({0, 2, 1});
  CHECK(codes(canonical_rep(v)) == std::vector<int>{0, 1, 2});
}

TEST_CASE("lexicographic order on codes")
{
  CHECK(lex_less(from_codes<GF4>({0, 3}), from_codes<GF4>({1, 0})));
  CHECK_FALSE(lex_less(from_codes<GF4>({1, 0}), from_codes<GF4>({1, 0})));
}
