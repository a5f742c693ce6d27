#include <doctest.h>

#include "fischer/embeddings.hpp"

using namespace fischer;

namespace {

template <class Fn> void each(const std::vector<AnyEmbedding>& es, Fn&& fn)
{
  for (const auto& e : es)
    std::visit(fn, e);
}

} // namespace

TEST_CASE("admissible degrees")
{
  CHECK(admissible(6, EmbedTarget::Sp));
  CHECK_FALSE(admissible(7, EmbedTarget::Sp));
  CHECK_FALSE(admissible(4, EmbedTarget::U));
  CHECK_FALSE(admissible(8, EmbedTarget::PO3a));
  CHECK(admissible(9, EmbedTarget::PO3b));
  CHECK_FALSE(admissible(8, EmbedTarget::PO3b));
  CHECK_FALSE(admissible(7, EmbedTarget::O2));
  CHECK(admissible(9, EmbedTarget::O2));
  CHECK_THROWS_AS(embed_symmetric(7, EmbedTarget::Sp), ConfigError);
  CHECK(parse_target("po3a") == EmbedTarget::PO3a);
  CHECK_FALSE(parse_target("so"));
}

TEST_CASE("targets")
{
  const auto target = [](int n, EmbedTarget t) {
    std::vector<std::string> out;
    each(embed_symmetric(n, t), [&](const auto& r) { out.push_back(to_string(r.target)); });
    return out;
  };
  CHECK(target(8, EmbedTarget::Sp) == std::vector<std::string>{"Sp(6)"});
  CHECK(target(8, EmbedTarget::U) == std::vector<std::string>{"U(6)"});
  CHECK(target(7, EmbedTarget::PO3a) == std::vector<std::string>{"PO3(6,+,+)"});
  CHECK(target(6, EmbedTarget::PO3b) == std::vector<std::string>{"PO3(4,-,+)"});
  CHECK(target(8, EmbedTarget::O2) == std::vector<std::string>{"O2(6,+)"});
  CHECK(target(6, EmbedTarget::O2) == std::vector<std::string>{"O2(6,-)", "O2(6,+)"});
  CHECK(target(5, EmbedTarget::O2) == std::vector<std::string>{"O2(4,-)", "O2(4,-)"});
  CHECK(target(9, EmbedTarget::O2) == std::vector<std::string>{"O2(8,+)", "O2(8,+)"});
  CHECK(target(10, EmbedTarget::O2) == std::vector<std::string>{"O2(10,+)", "O2(10,-)"});
}

TEST_CASE("all checks pass and S_n is faithful")
{
  for (auto t : {EmbedTarget::Sp, EmbedTarget::U, EmbedTarget::PO3a, EmbedTarget::PO3b, EmbedTarget::O2})
    for (int n = 5; n <= 7; ++n) {
      if (!admissible(n, t))
        continue;
      each(embed_symmetric(n, t, true), [&](const auto& r) {
        CHECK_MESSAGE(r.check.ok(), target_name(t), " n=", n);
        REQUIRE(r.injective);
        CHECK(*r.injective);
        CHECK(r.generators.size() == static_cast<std::size_t>(n - 1));
      });
    }
}

TEST_CASE("Gram identities for the F3 constructions")
{
  for (int n : {7, 10}) { // n = 1 mod 3
    each(embed_symmetric(n, EmbedTarget::PO3a), [&](const auto& r) {
      if constexpr (std::is_same_v<std::decay_t<decltype(r)>, EmbeddingReport<GF3>>) {
        REQUIRE(r.gram);
        CHECK(r.gram->basis_of_quotient);
        CHECK(r.gram->a_minus_i_squared_zero);
        CHECK(r.gram->rank_a_minus_i == 1);
        CHECK(r.gram->det == GF3(1));
      }
    });
  }
  for (int n : {6, 9}) { // n = 0 mod 3
    each(embed_symmetric(n, EmbedTarget::PO3a), [&](const auto& r) {
      if constexpr (std::is_same_v<std::decay_t<decltype(r)>, EmbeddingReport<GF3>>) {
        REQUIRE(r.gram);
        CHECK(r.gram->rank_a_minus_i == 2);
        CHECK(r.gram->det == GF3(1));
      }
    });
  }
}

TEST_CASE("tampering is caught")
{
  const auto es = embed_symmetric(6, EmbedTarget::Sp);
  const auto bad = tamper(es.front(), 2);
  const auto chk = verify_any(bad);
  CHECK_FALSE(chk.ok());
  REQUIRE(chk.failure());
  CHECK(chk.failure()->name == "relations");
  CHECK(verify_any(es.front()).ok());
}

TEST_CASE("S_phi is realized")
{
  const auto c = embedding_phi_consistency(GroupSpec::sp(6));
  CHECK(c.ok);
  CHECK(c.phi == 8);
  CHECK(c.construction == "sp n=8 -> Sp(6)");
  const auto m = embedding_phi_consistency(GroupSpec::of2(8, Sign::Minus));
  CHECK(m.ok);
  CHECK(m.phi == 8);
  CHECK(m.construction == "chain");
}
