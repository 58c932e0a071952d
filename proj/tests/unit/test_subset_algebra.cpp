#include <doctest.h>

#include "wordmetrics/identities.hpp"
#include "wordmetrics/sampling.hpp"
#include "wordmetrics/subset_algebra.hpp"

using namespace wordmetrics;

namespace {

// Products straight from the multiplication table.
Subset naive_product(const FiniteGroup& g, const Subset& s, const Subset& t) {
  Subset out = g.empty_set();
  for (Elem a : s.elements()) {
    for (Elem b : t.elements()) {
      out.insert(g.table()[a * g.order() + b]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("powers in Z6") {
  const GroupPtr g = cyclic(6);
  const Subset s = g->subset({1});
  CHECK(power(*g, s, 3).to_string() == "[3]");
  CHECK(power_leq(*g, s, 2).to_string() == "[0,1,2]");
  CHECK(power(*g, g->empty_set(), 0) == g->identity_set());
  CHECK(power(*g, g->empty_set(), 2).empty());
  CHECK(power(*g, g->subset({2}), kInfinity).to_string() == "[0,2,4]");
  CHECK(power_leq(*g, s, kInfinity) == g->full_set());
}

TEST_CASE("inverses, conjugation and closures in S3") {
  const GroupPtr g = symmetric(3);
  const Subset r = g->subset({3});  // a 3-cycle
  CHECK(inverse_set(*g, r).to_string() == "[4]");
  CHECK(symmetrize(*g, r).to_string() == "[3,4]");
  CHECK(conj_closure(*g, g->subset({1})).to_string() == "[1,2,5]");
  CHECK(sym_conj_closure(*g, r).to_string() == "[3,4]");
  CHECK(conjugate_by(*g, g->subset({1}), 3) == g->subset({g->conj(1, 3)}));
  CHECK(generated(*g, r, GenMode::submonoid).to_string() == "[0,3,4]");
  CHECK(generated(*g, g->subset({1}), GenMode::subgroup).to_string() == "[0,1]");
  CHECK(generated(*g, g->subset({1}), GenMode::normal) == g->full_set());
  CHECK(is_symmetric(*g, g->subset({1, 2})));
  CHECK(!is_symmetric(*g, r));
  CHECK(is_conj_invariant(*g, g->subset({3, 4})));
  CHECK(is_conj_invariant(*g, g->subset({1}), g->subset({0, 1})));
}

TEST_CASE("conditions") {
  const GroupPtr g = symmetric(3);
  const Subset t = g->subset({0, 1, 2, 5});
  CHECK(classify(*g, t, Condition::nfg));
  CHECK(classify(*g, t, Condition::s));
  CHECK(!classify(*g, g->subset({0, 3, 4}), Condition::g));
  CHECK(classify(*g, g->subset({0, 3, 4}), Condition::ng) == false);
  CHECK(classify(*g, g->subset({1, 3, 4}), Condition::fg));
  CHECK(!classify(*g, g->subset({1, 3}), Condition::fg));
  CHECK(classify(*g, g->subset({3}), Condition::f));
  for (Condition p : all_conditions()) {
    CHECK(parse_condition(to_string(p)) == p);
  }
  // fc and c agree on a finite group
  for (std::uint64_t m = 0; m < 64; ++m) {
    const Subset s = g->subset_from_mask(m);
    CHECK(classify(*g, s, Condition::fc) == classify(*g, s, Condition::c));
  }
}

TEST_CASE("starred families") {
  const GroupPtr g = cyclic(6);
  CHECK(starred_double_prime_family(*g).size() == 31);
  CHECK(starred_prime_family(*g).size() == 31);
  for (const Subset& s : starred_double_prime_family(*g)) {
    CHECK(s.contains(0));
    CHECK(s.count() >= 2);
  }
  const StarClass c = star_class(*g, g->subset({2}));
  CHECK(!c.contains_identity);
  CHECK(c.starred);
  CHECK(c.canonical.to_string() == "[0,2]");
  CHECK(!star_class(*g, g->identity_set()).starred);
  CHECK(starred_double_prime_family(*g, g->subset({0, 2, 4})).size() == 3);
}

TEST_CASE("product agrees with the table on random sets") {
  Sampler rng(11);
  for (const GroupPtr& g : {symmetric(4), dicyclic(3), cyclic(9)}) {
    for (int i = 0; i < 200; ++i) {
      const Subset s = rng.subset_of(g->full_set());
      const Subset t = rng.subset_of(g->full_set());
      CHECK(product(*g, s, t) == naive_product(*g, s, t));
    }
  }
}

TEST_CASE("identity suite is clean on small groups") {
  for (const GroupPtr& g : {cyclic(4), symmetric(3), direct_product(cyclic(2), cyclic(2))}) {
    const Report r = subset_identity_suite(*g);
    CHECK(r.ok());
    CHECK(r.total_checked() > 1000);
  }
}
