#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "wordmetrics/group.hpp"

using namespace wordmetrics;

namespace {

// Permutations of {0..n-1} in lexicographic order, independently of the
// library's enumeration.
std::vector<std::vector<Elem>> lex_perms(std::size_t n) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Elem>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("built-in constructions satisfy the axioms") {
  for (const GroupPtr& g : {cyclic(1), cyclic(7), dihedral(4), dicyclic(2), symmetric(4),
                            alternating(4), direct_product(cyclic(2), cyclic(4))}) {
    CHECK(check_group_axioms(*g).empty());
    CHECK(g->identity() == 0);
  }
  CHECK(dihedral(4)->order() == 8);
  CHECK(dicyclic(3)->order() == 12);
  CHECK(alternating(4)->order() == 12);
  CHECK(!dihedral(3)->is_abelian());
  CHECK(direct_product(cyclic(2), cyclic(3))->is_abelian());
}

TEST_CASE("symmetric group product applies the left factor first") {
  const auto perms = lex_perms(4);
  const GroupPtr g = symmetric(4);
  REQUIRE(g->order() == perms.size());
  for (Elem a = 0; a < g->order(); ++a) {
    for (Elem b = 0; b < g->order(); ++b) {
      std::vector<Elem> ab(4);
      for (Elem x = 0; x < 4; ++x) {
        ab[x] = perms[b][perms[a][x]];
      }
      const auto idx = std::find(perms.begin(), perms.end(), ab) - perms.begin();
      CHECK(g->mul(a, b) == static_cast<Elem>(idx));
    }
  }
}

TEST_CASE("from_table rejects tables that are not groups") {
  // x*y = x on two elements: associative, but no identity on the right
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", 2, {0, 0, 1, 1}), GroupAxiomError);
  CHECK_THROWS_AS(FiniteGroup::from_table("short", 2, {0, 1, 1}), GroupAxiomError);
  // Z3 with the identity at index 2
  const GroupPtr z3 = FiniteGroup::from_table("z3", 3, {1, 2, 0, 2, 0, 1, 0, 1, 2});
  CHECK(z3->identity() == 2);
  CHECK(z3->inv(0) == 1);
}

TEST_CASE("element orders, classes and conjugation") {
  const GroupPtr s3 = symmetric(3);
  std::vector<std::size_t> orders;
  for (Elem x = 0; x < 6; ++x) {
    orders.push_back(s3->element_order(x));
  }
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 3, 3, 2});
  const auto classes = s3->conjugacy_classes();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].to_string() == "[0]");
  CHECK(classes[1].to_string() == "[1,2,5]");
  CHECK(classes[2].to_string() == "[3,4]");
  for (Elem x = 0; x < 6; ++x) {
    for (Elem a = 0; a < 6; ++a) {
      CHECK(s3->conj(x, a) == s3->mul(s3->mul(s3->inv(a), x), a));
      CHECK(s3->conjugacy_class(x).contains(s3->conj(x, a)));
    }
  }
}

TEST_CASE("quotients, kernels and sections") {
  const GroupPtr z12 = cyclic(12);
  const Quotient q = quotient_by_normal(z12, z12->subset({0, 4, 8}));
  CHECK(q.group->order() == 4);
  CHECK(kernel(q.projection).to_string() == "[0,4,8]");
  CHECK(q.projection.is_surjective());

  const GroupPtr s3 = symmetric(3);
  CHECK(is_normal_subgroup(*s3, s3->subset({0, 3, 4})));
  CHECK(is_subgroup(*s3, s3->subset({0, 1})));
  CHECK(!is_normal_subgroup(*s3, s3->subset({0, 1})));
  CHECK_THROWS_AS(quotient_by_normal(s3, s3->subset({0, 1})), GroupAxiomError);

  // Z6 -> Z3: the symmetric section keeps g(2) = g(1)^-1
  const GroupPtr z6 = cyclic(6);
  const Quotient p = quotient_by_normal(z6, z6->subset({0, 3}));
  const Section plain = make_section(p.projection, false);
  const Section sym = make_section(p.projection, true);
  CHECK(plain.map == std::vector<Elem>{0, 1, 2});
  CHECK(sym.map == std::vector<Elem>{0, 1, 5});
}

TEST_CASE("homomorphisms") {
  const GroupPtr z6 = cyclic(6);
  const GroupPtr z3 = cyclic(3);
  const GroupHom f = GroupHom::from_generators(z6, z3, {1}, {1});
  for (Elem x = 0; x < 6; ++x) {
    CHECK(f(x) == x % 3);
  }
  CHECK_THROWS_AS(GroupHom(z3, z6, {0, 1, 2}), GroupAxiomError);
  CHECK(GroupHom(z3, z6, {0, 2, 4}).uncovered() == Elem{1});
}

TEST_CASE("permutation groups and isomorphism search") {
  const GroupPtr g = permutation_group(3, {{1, 2, 0}, {1, 0, 2}}, "S3 by generators");
  CHECK(g->order() == 6);
  CHECK(find_isomorphism(*g, *symmetric(3)).has_value());
  CHECK(find_isomorphism(*direct_product(cyclic(2), cyclic(3)), *cyclic(6)).has_value());
  CHECK(!find_isomorphism(*direct_product(cyclic(2), cyclic(2)), *cyclic(4)).has_value());
  CHECK(!find_isomorphism(*dihedral(4), *dicyclic(2)).has_value());
  CHECK_THROWS(permutation_group(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, "S5", nullptr, 100));
}

TEST_CASE("semidirect product of Z3 by Z2 is S3") {
  const GroupPtr g = semidirect_product(cyclic(2), cyclic(3), {{0, 1, 2}, {0, 2, 1}});
  CHECK(check_group_axioms(*g).empty());
  CHECK(find_isomorphism(*g, *symmetric(3)).has_value());
}
