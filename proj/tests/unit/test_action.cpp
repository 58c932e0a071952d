#include <doctest.h>

#include "wordmetrics/action.hpp"
#include "wordmetrics/catalog.hpp"
#include "wordmetrics/subset_algebra.hpp"

using namespace wordmetrics;

namespace {

// Shortest paths on the point graph y -> ys.
MetricTable point_graph_distances(const GroupAction& a, const Subset& s) {
  const std::size_t n = a.carrier();
  MetricTable d(n, Flavor::additive);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d.at(i, j) = i == j ? ExtNat(0) : kInfinity;
    }
    for (Elem g : s.elements()) {
      const Elem j = a.act(static_cast<Elem>(i), g);
      if (j != i) {
        d.at(i, j) = 1;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d.at(i, j) = min(d.at(i, j), d.at(i, k) + d.at(k, j));
      }
    }
  }
  return d;
}

}  // namespace

TEST_CASE("S3 on three points") {
  const GroupAction a = natural_symmetric_action(3);
  const FiniteGroup& g = *a.group();
  const Subset transpositions = g.subset({1, 2, 5});
  CHECK(action_word_metric(a, transpositions, 0, 2) == ExtNat(1));
  // index 1 swaps the points 1 and 2 and fixes 0
  CHECK(action_word_metric(a, g.subset({1}), 0, 2) == kInfinity);
  CHECK(action_ball(a, g.subset({3}), 0, 1).count() == 2);
  CHECK(!a.is_free_at(0));
  CHECK(a.orbit(0) == a.all_points());
  CHECK(orbit_strict_pair(a, transpositions, 0).has_value());
}

TEST_CASE("distances agree with shortest paths for every S") {
  for (const GroupAction& a : action_catalog()) {
    const FiniteGroup& g = *a.group();
    if (g.order() > 8) {
      continue;
    }
    INFO(a.name());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
      const Subset s = g.subset_from_mask(m);
      CHECK(action_metric_table(a, s).values == point_graph_distances(a, s).values);
    }
  }
}

TEST_CASE("right translation reproduces the word metric") {
  for (const GroupPtr& g : {cyclic(5), dihedral(3), dicyclic(2)}) {
    const GroupAction a = GroupAction::right_translation(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g->order()); m += 7) {
      const Subset s = g->subset_from_mask(m);
      CHECK(action_metric_table(a, s).values == word_metric_table(*g, s).values);
    }
  }
}

TEST_CASE("facts and bounds on the catalog") {
  for (const GroupAction& a : action_catalog()) {
    INFO(a.name());
    const FiniteGroup& g = *a.group();
    const auto fam = starred_double_prime_family(g);
    const std::size_t n = std::min<std::size_t>(fam.size(), 12);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(action_metric_facts(a, fam[i]).ok());
      CHECK(orbit_map_check(a, fam[i], 0).ok());
      CHECK(comparison_bound_check(a, fam[i], fam[(i + 3) % n]).ok());
    }
    std::vector<Subset> part(fam.begin(), fam.begin() + static_cast<std::ptrdiff_t>(n));
    CHECK(function_space_embedding_check(a, part).ok());
  }
}

TEST_CASE("actions are validated") {
  const GroupPtr z2 = cyclic(2);
  CHECK_THROWS_AS(GroupAction(z2, 2, {0, 1, 0, 0}), GroupAxiomError);
  CHECK_THROWS_AS(GroupAction(z2, 2, {0, 2, 1, 0}), GroupAxiomError);
}

TEST_CASE("inner automorphisms of dihedral quandles") {
  const QuandleAction r3 = automorphism_action(StarSet::dihedral_quandle(3));
  CHECK(r3.action.group()->order() == 6);
  CHECK(find_isomorphism(*r3.action.group(), *symmetric(3)).has_value());
  CHECK(r3.dis.count() == 3);
  CHECK(r3.inn_generators.count() == 3);

  const QuandleAction r4 = automorphism_action(StarSet::dihedral_quandle(4));
  CHECK(r4.action.group()->order() == 4);
  CHECK(r4.dis.count() == 2);

  CHECK_THROWS_AS(automorphism_action(StarSet::dihedral_quandle(9)), std::length_error);
}

TEST_CASE("symmetries") {
  const StarSet x = StarSet::dihedral_quandle(5);
  const QuandleAction qa = automorphism_action(x);
  const auto autos = quandle_automorphisms(x);
  CHECK(autos.size() == 20);
  std::vector<EquivariantMap> maps;
  for (const auto& h : autos) {
    maps.push_back(quandle_symmetry(x, qa, h));
  }
  CHECK(symmetry_monotonicity_check(qa.action, maps, qa.inn_generators).ok());
  CHECK(symmetry_monotonicity_check(qa.action, {inner_symmetry(qa.action, qa.sigma[1])},
                                    qa.action.group()->subset({qa.sigma[0], qa.sigma[1]}))
            .ok());
  EquivariantMap bad = identity_symmetry(qa.action);
  bad.point[0] = 1;
  CHECK_THROWS_AS(validate_equivariant(qa.action, bad), GroupAxiomError);
}
