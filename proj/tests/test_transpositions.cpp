#include <doctest.h>

#include "fischer/transpositions.hpp"

using namespace fischer;

namespace {

template <FiniteField F> void check_three_transposition_class(const FormSpace<F>& s, const ClassSpec& cls)
{
  const auto d = enumerate_class(s, cls);
  REQUIRE_FALSE(d.empty());
  const Mat<F> id = Mat<F>::Identity(s.dim(), s.dim());
  std::vector<Mat<F>> ms;
  for (const auto& v : d) {
    const Mat<F> m = matrix_of(s, cls, v);
    CHECK(s.is_isometry(m));
    CHECK(m != id);
    CHECK(Mat<F>(m * m) == id);
    ms.push_back(m);
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      const int o = matrix_order<F>(Mat<F>(ms[i] * ms[j]), 6);
      const bool comm = s.bilinear(d[i], d[j]).is_zero();
      if (i == j)
        CHECK(o == 1);
      else
        CHECK(o == (comm ? 2 : 3));
    }
}

} // namespace

TEST_CASE("class sizes")
{
  using K = FormKind;
  CHECK(enumerate_class(make_space<GF2>(K::Symplectic, 4, BasisPreset::symplectic_pairs()), {K::Symplectic}).size() ==
        15);
  CHECK(enumerate_class(make_space<GF4>(K::Unitary, 4, BasisPreset::unitary_orthonormal()), {K::Unitary}).size() ==
        45);
  CHECK(enumerate_class(make_space<GF2>(K::OrthogonalF2, 6, BasisPreset::f2_hyperbolic(Sign::Plus)),
                        {K::OrthogonalF2})
            .size() == 28); // transpositions of S8
  CHECK(enumerate_class(make_space<GF2>(K::OrthogonalF2, 6, BasisPreset::f2_hyperbolic(Sign::Minus)),
                        {K::OrthogonalF2})
            .size() == 36); // reflections of W(E6)
  CHECK(enumerate_class(make_space<GF2>(K::OrthogonalF2, 4, BasisPreset::f2_hyperbolic(Sign::Minus)),
                        {K::OrthogonalF2})
            .size() == 10); // S5
  CHECK(enumerate_class(make_space<GF3>(K::OrthogonalF3, 3, BasisPreset::f3_diagonal(Sign::Plus)),
                        {K::OrthogonalF3, Sign::Plus})
            .size() == 6);
}

TEST_CASE("radical vectors are not in D")
{
  const auto s = make_space<GF2>(FormKind::OrthogonalF2, 5, BasisPreset::f2_hyperbolic(Sign::Plus));
  const Vec<GF2> r = from_codes<GF2>({0, 0, 0, 0, 1});
  CHECK(s.quadratic(r) == GF2(1));
  CHECK_FALSE(in_class_D(s, {FormKind::OrthogonalF2}, r));
}

TEST_CASE("D is a class of 3-transpositions")
{
  using K = FormKind;
  check_three_transposition_class(make_space<GF2>(K::Symplectic, 4, BasisPreset::symplectic_pairs()),
                                  {K::Symplectic});
  check_three_transposition_class(make_space<GF4>(K::Unitary, 3, BasisPreset::unitary_orthonormal()), {K::Unitary});
  check_three_transposition_class(make_space<GF2>(K::OrthogonalF2, 4, BasisPreset::f2_hyperbolic(Sign::Minus)),
                                  {K::OrthogonalF2});
  check_three_transposition_class(make_space<GF3>(K::OrthogonalF3, 4, BasisPreset::f3_diagonal(Sign::Minus)),
                                  {K::OrthogonalF3, Sign::Plus});
  check_three_transposition_class(make_space<GF3>(K::OrthogonalF3, 3, BasisPreset::f3_diagonal(Sign::Plus)),
                                  {K::OrthogonalF3, Sign::Minus});
}

TEST_CASE("F3 reflection")
{
  const auto s = make_space<GF3>(FormKind::OrthogonalF3, 2, BasisPreset::f3_diagonal(Sign::Plus));
  const ClassSpec cls{FormKind::OrthogonalF3, Sign::Plus};
  const Vec<GF3> v = from_codes<GF3>({1, 1}); // Q(v) = -(1 + 1) = 1
  REQUIRE(in_class_D(s, cls, v));
  CHECK(apply_transposition(s, cls, v, v) == Vec<GF3>(-v));
  const Vec<GF3> u = from_codes<GF3>({1, 2});
  CHECK(apply_transposition(s, cls, v, u) == u); // (u, v) = 0
  CHECK(matrix_of(s, cls, v) * u == u);
  CHECK_THROWS_AS(matrix_of(s, cls, from_codes<GF3>({1, 0})), PreconditionError); // Q = -1
}

TEST_CASE("transvection matrix agrees with the formula")
{
  const auto s = make_space<GF4>(FormKind::Unitary, 3, BasisPreset::unitary_orthonormal());
  const ClassSpec cls{FormKind::Unitary};
  const auto d = enumerate_class(s, cls);
  for (const auto& v : d)
    for (std::uint64_t k = 0; k < 64; k += 7) {
      const Vec<GF4> w = vector_at<GF4>(3, k);
      CHECK(matrix_of(s, cls, v) * w == apply_transposition(s, cls, v, w));
    }
}

TEST_CASE("product orders")
{
  const auto s = make_space<GF2>(FormKind::Symplectic, 2, BasisPreset::symplectic_pairs());
  const ClassSpec cls{FormKind::Symplectic};
  const auto a = make_element(s, cls, from_codes<GF2>({1, 0}));
  const auto b = make_element(s, cls, from_codes<GF2>({0, 1}));
  CHECK_FALSE(commutes(s, a, b));
  CHECK(product_order(s, cls, {a, b}) == 3);
  CHECK(product_order(s, cls, {a, a}) == 1);
  CHECK(matrix_order<GF2>(Mat<GF2>::Identity(2, 2), 1) == 1);
}
