#include <doctest.h>

#include "wordmetrics/catalog.hpp"
#include "wordmetrics/metric.hpp"
#include "wordmetrics/star_set.hpp"

using namespace wordmetrics;

TEST_CASE("powers in R5") {
  const StarSet x = StarSet::dihedral_quandle(5);
  CHECK(x.is_quandle());
  const Subset s = x.subset({0, 1});
  const auto p = star_powers(x, s, 3);
  CHECK(p[1].to_string() == "[0,1]");
  CHECK(p[2].to_string() == "[0,1,2,4]");
  CHECK(star_power(x, s, kInfinity) == x.full_set());
  CHECK(star_word_length(x, s, 3) == ExtNat(3));
  CHECK_THROWS_AS(star_power(x, s, 0), std::domain_error);
}

TEST_CASE("powers agree with the brute-force word oracle") {
  std::vector<StarSet> sets = quandle_catalog();
  for (auto& y : star_set_catalog()) {
    sets.push_back(y);
  }
  for (const StarSet& x : sets) {
    INFO(x.name());
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << x.size()); m += 3) {
      Subset s = x.empty_set();
      for (Elem e = 0; e < x.size(); ++e) {
        if ((m >> e) & 1U) {
          s.insert(e);
        }
      }
      const auto p = star_powers(x, s, 4);
      for (std::uint64_t n = 1; n <= 4; ++n) {
        CHECK(p[n] == star_power_by_words(x, s, n));
      }
    }
  }
}

TEST_CASE("a group table gives back the group word lengths") {
  for (const GroupPtr& g : {cyclic(6), symmetric(3), dicyclic(2)}) {
    const StarSet x = StarSet::from_group(*g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g->order()); ++m) {
      const auto lengths = word_lengths(*g, g->subset_from_mask(m));
      Subset s = x.empty_set();
      for (Elem e : g->subset_from_mask(m).elements()) {
        s.insert(e);
      }
      CHECK(star_word_lengths(x, s) == lengths);
    }
  }
}

TEST_CASE("the two metrics") {
  const StarSet x = StarSet::dihedral_quandle(5);
  const Subset s = x.subset({0, 1});
  CHECK(star_metric_facts(x, s).ok());
  for (Elem a = 0; a < 5; ++a) {
    for (Elem b = 0; b < 5; ++b) {
      CHECK(star_word_metric(x, s, a, b, StarMetricVariant::all_parenthesizations) <=
            star_word_metric(x, s, a, b, StarMetricVariant::left_normed));
    }
  }
  CHECK(star_word_metric(x, s, 2, 2, StarMetricVariant::left_normed) == ExtNat(0));
}

TEST_CASE("nu_H on star-sets") {
  const StarSet x = StarSet::dihedral_quandle(5);
  CHECK(star_nu_H(x, x.subset({0, 1}), x.subset({2})) == ExtNat(2));
  CHECK(star_nu_H(x, x.subset({0}), x.subset({1})) == kInfinity);
  CHECK_THROWS_AS(star_nu_H(x, x.empty_set(), x.subset({1})), std::domain_error);
  std::vector<Subset> fam;
  for (std::uint64_t m = 1; m < 32; ++m) {
    Subset s = x.empty_set();
    for (Elem e = 0; e < 5; ++e) {
      if ((m >> e) & 1U) s.insert(e);
    }
    fam.push_back(s);
  }
  CHECK(star_nu_H_facts(x, fam).ok());
  CHECK(star_power_facts(x, x.subset({0, 1})).ok());
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(StarSet(2, {{0, 1, 1, 2}}), StarSetError);
  CHECK_THROWS_AS(StarSet(2, {{0, 1, 1}}), StarSetError);
  // unit 0 requires row 0 and column 0 to be the identity map
  CHECK_THROWS_AS(StarSet(2, {{0, 0, 1, 1}}, Elem{0}), StarSetError);
  CHECK(!StarSet(2, {{0, 0, 0, 0}}).is_quandle());
  CHECK(StarSet::trivial_quandle(3).is_quandle());
}

TEST_CASE("phi-invariance with translations of R5") {
  const StarSet x = StarSet::dihedral_quandle(5);
  StarSymmetry r;
  for (Elem a = 0; a < 5; ++a) {
    std::vector<Elem> sigma(5);
    for (Elem y = 0; y < 5; ++y) {
      sigma[y] = x.op(0, y, a);
    }
    r.maps.push_back(sigma);
  }
  validate_symmetry(x, r);
  CHECK(phi_invariance_suite(x, r, x.subset({0, 1})).ok());
  CHECK(phi_fg_family_check(x, r).ok());
  CHECK(act_on_set(symmetry_closure(x, r), x.subset({0})) == x.full_set());
  StarSymmetry bad{{{1, 0, 2, 3, 4}}, std::nullopt};
  CHECK_THROWS_AS(validate_symmetry(x, bad), StarSetError);
}
