#include <doctest.h>

#include <map>

#include "wordmetrics/catalog.hpp"

using namespace wordmetrics;

TEST_CASE("one group per isomorphism class up to order 16") {
  // number of groups of each order 1..16
  const std::map<std::size_t, std::size_t> expected{
      {1, 1}, {2, 1}, {3, 1}, {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},
      {9, 2}, {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  const auto cat = group_catalog(16, false);
  std::map<std::size_t, std::size_t> counts;
  for (const auto& c : cat) {
    CHECK(check_group_axioms(*c.group).empty());
    ++counts[c.group->order()];
  }
  CHECK(counts == expected);
  CHECK(cat.size() == 42);
  CHECK(group_catalog(16, true).back().group->order() == 24);
  CHECK(group_catalog(4, false).size() == 5);
}

TEST_CASE("catalog groups are pairwise non-isomorphic up to order 12") {
  const auto cat = group_catalog(12, false);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].group->order() == cat[j].group->order()) {
        INFO(cat[i].name << " vs " << cat[j].name);
        CHECK(!find_isomorphism(*cat[i].group, *cat[j].group).has_value());
      }
    }
  }
}

TEST_CASE("lookup by name") {
  CHECK(catalog_group("Q8")->order() == 8);
  CHECK(!catalog_group("Q8")->is_abelian());
  CHECK(catalog_group("S4")->order() == 24);
  CHECK_THROWS_AS(catalog_group("nope"), std::invalid_argument);
  CHECK(catalog_names().size() >= 43);
}

TEST_CASE("normal subgroups") {
  CHECK(normal_subgroups(*symmetric(3)).size() == 3);
  CHECK(normal_subgroups(*dihedral(4)).size() == 6);
  CHECK(normal_subgroups(*dicyclic(2)).size() == 6);
  CHECK(normal_subgroups(*cyclic(12)).size() == 6);
  const GroupPtr s4 = symmetric(4);
  const auto ns = normal_subgroups(*s4);
  CHECK(ns.size() == 4);
  for (const Subset& n : ns) {
    CHECK(is_normal_subgroup(*s4, n));
  }
}

TEST_CASE("standard quotients and contexts") {
  const auto qs = standard_quotients();
  REQUIRE(qs.size() == 4);
  std::vector<std::size_t> orders;
  for (const auto& q : qs) {
    CHECK(q.f.is_surjective());
    orders.push_back(q.f.target()->order());
  }
  CHECK(orders == std::vector<std::size_t>{4, 3, 2, 4});
  // normal subgroups of Z1, Z2, Z3, Z4, Z2xZ2, Z5, Z6, S3
  CHECK(all_quotients(6).size() == 1 + 2 + 2 + 3 + 5 + 2 + 4 + 3);
  CHECK(s3_semidirect().group->order() == 6);
}

TEST_CASE("star-set and action catalogs") {
  for (const StarSet& x : quandle_catalog()) {
    CHECK(x.is_quandle());
  }
  for (const StarSet& x : star_set_catalog()) {
    CHECK(!x.is_quandle());
  }
  CHECK(action_catalog().size() >= 9);
  CHECK(natural_symmetric_action(4).carrier() == 4);
}
