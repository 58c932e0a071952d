#include <doctest.h>

#include <set>
#include <stdexcept>

#include "wordmetrics/subset.hpp"

using namespace wordmetrics;

TEST_CASE("basic membership") {
  const auto u = next_universe_id();
  Subset s(u, 10, {1, 3, 9});
  CHECK(s.count() == 3);
  CHECK(s.contains(9));
  CHECK(!s.contains(2));
  s.insert(2);
  s.erase(9);
  CHECK(s.elements() == std::vector<Elem>{1, 2, 3});
  CHECK(s.first() == 1);
  CHECK(s.to_string() == "[1,2,3]");
  CHECK(Subset(u, 10).empty());
}

TEST_CASE("set operations agree with std::set on a carrier wider than one word") {
  const auto u = next_universe_id();
  const std::size_t n = 150;
  std::set<Elem> a, b;
  for (Elem x = 0; x < n; ++x) {
    if (x % 3 == 0) a.insert(x);
    if (x % 5 == 1) b.insert(x);
  }
  const Subset sa(u, n, std::vector<Elem>(a.begin(), a.end()));
  const Subset sb(u, n, std::vector<Elem>(b.begin(), b.end()));
  std::set<Elem> uni = a, inter, diff;
  uni.insert(b.begin(), b.end());
  for (Elem x : a) {
    (b.count(x) ? inter : diff).insert(x);
  }
  CHECK((sa | sb).elements() == std::vector<Elem>(uni.begin(), uni.end()));
  CHECK((sa & sb).elements() == std::vector<Elem>(inter.begin(), inter.end()));
  CHECK((sa - sb).elements() == std::vector<Elem>(diff.begin(), diff.end()));
  CHECK(sa.complement().count() == n - a.size());
  CHECK((sa & sb).is_subset_of(sa));
  CHECK(sa.intersects(sb));
  std::vector<Elem> seen;
  sa.for_each([&](Elem x) { seen.push_back(x); });
  CHECK(seen == sa.elements());
}

TEST_CASE("parsing literals") {
  const auto u = next_universe_id();
  CHECK(parse_subset("[ 5, 0,1]", u, 6).to_string() == "[0,1,5]");
  CHECK(parse_subset("[]", u, 6).empty());
  CHECK_THROWS(parse_subset("[6]", u, 6));
  CHECK_THROWS(parse_subset("0,1", u, 6));
}

TEST_CASE("subsets of different carriers do not mix") {
  const Subset a(next_universe_id(), 4, {0});
  const Subset b(next_universe_id(), 4, {0});
  CHECK_THROWS_AS((void)(a | b), std::invalid_argument);
  CHECK(a != b);
}

TEST_CASE("masks round-trip") {
  const auto u = next_universe_id();
  for (std::uint64_t m = 0; m < 64; ++m) {
    const Subset s = Subset::from_mask(u, 6, m);
    CHECK(s.mask() == m);
    CHECK(s.count() == static_cast<std::size_t>(__builtin_popcountll(m)));
  }
  CHECK(Subset::full(u, 6).mask() == 63);
}
