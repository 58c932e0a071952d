#include <doctest.h>

#include "wordmetrics/acceptance.hpp"
#include "wordmetrics/catalog.hpp"
#include "wordmetrics/invariants.hpp"

using namespace wordmetrics;

TEST_CASE("S3") {
  const GroupPtr s3 = symmetric(3);
  const RankResult r = rank_n(*s3);
  CHECK(r.value == ExtNat(1));
  REQUIRE(r.witness.size() == 1);
  CHECK(s3->element_order(r.witness[0]) == 2);
  CHECK(diam_nfg(*s3).value == ExtNat(1));
  const ExtremeResult d = delta(*s3);
  CHECK(d.value == ExtNat(2));
  CHECK(d.exact);
  CHECK(d.witness.to_string() == "[0,1,2,5]");
  CHECK(nfg_family(*s3).size() == 2);
  CHECK(symmetric_class_orbits(*s3, s3->full_set()).size() == 2);
}

TEST_CASE("small abelian groups") {
  CHECK(rank_n(*cyclic(6)).value == ExtNat(1));
  CHECK(rank_n(*direct_product(cyclic(2), cyclic(2))).value == ExtNat(2));
  CHECK(rank_n(*direct_product(cyclic(2), cyclic(2)), 1).exceeds_cap);
  CHECK(diam_nfg(*cyclic(1)).value == ExtNat(0));
  // In Z5 the symmetric generating sets are {e,1,4}, {e,2,3} and Z5 itself
  CHECK(nfg_family(*cyclic(5)).size() == 3);
  CHECK(delta(*cyclic(5)).value == ExtNat(2));
}

TEST_CASE("enumerator agrees with the naive scan on the catalog up to order 12") {
  for (const auto& c : group_catalog(12, false)) {
    INFO(c.name);
    const FiniteGroup& g = *c.group;
    const NaiveDiameters naive = naive_nfg_diameters(g);
    // the scan counts {e} for the trivial group; the starred family excludes it
    CHECK(nfg_family(g).size() == naive.family_size - (g.order() == 1 ? 1 : 0));
    CHECK(diam_nfg(g).value == ExtNat(naive.min));
    CHECK(delta(g).value == ExtNat(naive.max));
    const RankResult r = rank_n(g);
    CHECK(r.value == ExtNat(static_cast<std::uint64_t>(naive_rank_n(g))));
  }
}

TEST_CASE("family enumeration and the nfg facts") {
  const GroupPtr d4 = dihedral(4);
  const auto fam = nfg_family(*d4);
  CHECK(enumerate_family(*d4, Condition::nfg) == fam);
  CHECK(verify_nfg_family(*d4, fam).ok());
  for (const Subset& s : fam) {
    CHECK(s.contains(0));
    CHECK(diam_for(*d4, s).is_finite());
  }
}

TEST_CASE("ambient subgroup") {
  const GroupPtr s4 = symmetric(4);
  // the Klein four-group inside S4
  Subset v = s4->identity_set();
  for (Elem x = 1; x < s4->order(); ++x) {
    if (s4->element_order(x) == 2 && s4->conjugacy_class(x).count() == 3) {
      v.insert(x);
    }
  }
  REQUIRE(v.count() == 4);
  CHECK(rank_n(*s4, v, 4).value == ExtNat(2));
  CHECK(diam_nfg(*s4, v).value == ExtNat(1));
}
