#include <doctest.h>

#include "fischer/norton.hpp"

using namespace fischer;

TEST_CASE("exhaustive Sp(4)")
{
  const auto r = norton_check(GroupSpec::sp(4));
  CHECK(r.exhaustive);
  CHECK(r.class_size == 15);
  CHECK(r.s_size == 45);
  CHECK(r.pairs_total == 45 * 46 / 2);
  CHECK(r.pairs_tested == r.pairs_total);
  CHECK(r.max_order_seen == 5);
  CHECK(r.ok());
  CHECK(r.histogram.at(1) == 45);
  CHECK(r.histogram.count(0) == 0);
}

TEST_CASE("PO3(4,+,+) and PO3(4,-,+)")
{
  CHECK(norton_check(GroupSpec::pof3(4, Sign::Plus)).max_order_seen == 4);
  CHECK(norton_check(GroupSpec::pof3(4, Sign::Minus)).max_order_seen == 5);
}

TEST_CASE("sampling is seeded and independent of threads")
{
  const auto a = norton_check(GroupSpec::u(4), 500, 9, 1);
  const auto b = norton_check(GroupSpec::u(4), 500, 9, 3);
  const auto c = norton_check(GroupSpec::u(4), 500, 10, 1);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.pairs_tested == b.pairs_tested);
  CHECK(a.histogram == b.histogram);
  CHECK(a.seed == 9);
  CHECK(c.histogram != a.histogram);
}

TEST_CASE("non-classical groups")
{
  CHECK_THROWS(norton_check(GroupSpec::fischer(22)));
}
