#include <doctest.h>

#include "wordmetrics/metric.hpp"
#include "wordmetrics/subset_algebra.hpp"

using namespace wordmetrics;

namespace {

// All-pairs shortest paths on the right Cayley graph x -> xs.
MetricTable floyd_warshall(const FiniteGroup& g, const Subset& s) {
  const std::size_t n = g.order();
  MetricTable d(n, Flavor::additive);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d.at(i, j) = i == j ? ExtNat(0) : kInfinity;
    }
    for (Elem a : s.elements()) {
      const Elem j = g.mul(static_cast<Elem>(i), a);
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

TEST_CASE("word metric examples") {
  const GroupPtr z6 = cyclic(6);
  const Subset s = z6->subset({1, 5});
  CHECK(word_metric(*z6, s, 2, 5) == ExtNat(3));
  CHECK(ball(*z6, s, z6->subset({0}), 2).to_string() == "[0,1,2,4,5]");
  CHECK(hausdorff_metric(*z6, s, z6->subset({0}), z6->subset({2, 3})) == ExtNat(3));

  const GroupPtr z4 = cyclic(4);
  const Subset one = z4->subset({1});
  CHECK(word_metric(*z4, one, 1, 0) == ExtNat(3));
  CHECK(word_metric(*z4, one, 0, 1) == ExtNat(1));
  CHECK(word_length(*z4, z4->subset({2}), 1) == kInfinity);
}

TEST_CASE("breadth-first tables agree with Floyd-Warshall for every S") {
  for (const GroupPtr& g : {cyclic(6), symmetric(3), direct_product(cyclic(2), cyclic(2))}) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g->order()); ++m) {
      const Subset s = g->subset_from_mask(m);
      CHECK(word_metric_table(*g, s).values == floyd_warshall(*g, s).values);
    }
  }
}

TEST_CASE("axiom classification") {
  const GroupPtr z6 = cyclic(6);
  const AxiomReport sym = check_metric_axioms(word_metric_table(*z6, z6->subset({1, 5})));
  CHECK(sym.is_metric());
  CHECK(sym.classification(Flavor::additive) == "metric");

  const GroupPtr z4 = cyclic(4);
  const AxiomReport asym = check_metric_axioms(word_metric_table(*z4, z4->subset({1})));
  CHECK(!asym.symmetric);
  CHECK(asym.is_asymmetric_metric());
  CHECK(asym.classification(Flavor::additive) == "nondegenerate asymmetric metric");
  CHECK(check_metric_axioms(symmetrize_metric(word_metric_table(*z4, z4->subset({1})))).is_metric());

  MetricTable bad(2, Flavor::additive);
  bad.at(0, 1) = 5;
  bad.at(1, 0) = 1;
  bad.at(1, 1) = 1;
  const AxiomReport r = check_metric_axioms(bad);
  CHECK(!r.reflexive);
  CHECK(r.reflexive_witness.has_value());
}

TEST_CASE("Hausdorff extension conventions") {
  const GroupPtr z6 = cyclic(6);
  const Subset s = z6->subset({1});
  const MetricTable d = word_metric_table(*z6, s);
  CHECK(hausdorff_metric(*z6, s, z6->subset({0}), z6->empty_set()) == ExtNat(0));
  CHECK(hausdorff_metric(*z6, s, z6->empty_set(), z6->subset({1})) == kInfinity);
  for (std::uint64_t a = 1; a < 64; a += 5) {
    for (std::uint64_t b = 0; b < 64; b += 3) {
      CHECK(hausdorff_metric(*z6, s, z6->subset_from_mask(a), z6->subset_from_mask(b)) ==
            hausdorff_from_table(d, z6->subset_from_mask(a), z6->subset_from_mask(b)));
    }
  }
}

TEST_CASE("nu_H values") {
  const GroupPtr s3 = symmetric(3);
  const Subset t = s3->subset({0, 1, 2, 5});
  CHECK(nu_H(*s3, t, s3->full_set()) == ExtNat(2));
  CHECK(nu_H(*s3, s3->full_set(), t) == ExtNat(1));
  CHECK(nu_H_hat(*s3, t, s3->full_set()) == ExtNat(2));
  CHECK(nu_H(*s3, s3->subset({0, 3}), t) == kInfinity);
  CHECK(nu_sup(*s3, t, s3->empty_set()) == ExtNat(0));
}

TEST_CASE("lambda on integer functions") {
  CHECK(lambda({1, 2}, {2, 2}) == ExtRatio(2, 1));
  CHECK(lambda({3, 2}, {1, 1}) == ExtRatio(1, 1));
  CHECK(lambda({2, 3}, {3, 4}) == ExtRatio(3, 2));
  CHECK(lambda({kInfinity}, {kInfinity}) == ExtRatio(1, 1));
  CHECK(lambda({2}, {kInfinity}).is_infinite());
  CHECK(mu({1.0, 2.0}, {3.0, 2.5}) == doctest::Approx(2.0));
}

TEST_CASE("property suites pass on small groups") {
  for (const GroupPtr& g : {cyclic(5), symmetric(3), dicyclic(2)}) {
    CHECK(nu_H_axiom_check(*g).ok());
    CHECK(zeta_check(*g).ok());
    CHECK(discrete_ball_check(*g).ok());
    CHECK(word_length_oracle_check(*g).ok());
  }
}

TEST_CASE("brute-force word lengths") {
  const GroupPtr z6 = cyclic(6);
  const auto len = naive_word_lengths(*z6, z6->subset({2}), 8);
  CHECK(len == std::vector<ExtNat>{0, kInfinity, 1, kInfinity, 2, kInfinity});
  CHECK(word_lengths(*z6, z6->subset({2})) == len);
}
