#include <doctest.h>

#include "wordmetrics/catalog.hpp"
#include "wordmetrics/product.hpp"
#include "wordmetrics/subset_algebra.hpp"

using namespace wordmetrics;

TEST_CASE("factorization tables") {
  const SemidirectContext ctx = s3_semidirect();
  const FiniteGroup& g = *ctx.group;
  CHECK(g.order() == 6);
  CHECK(ctx.h.count() == 2);
  CHECK(ctx.k.count() == 3);
  for (Elem x = 0; x < g.order(); ++x) {
    CHECK(ctx.h.contains(ctx.p[x]));
    CHECK(ctx.k.contains(ctx.q[x]));
    CHECK(g.mul(ctx.p[x], ctx.q[x]) == x);
  }
  CHECK(noncommuting_witness(ctx).has_value());
  CHECK(!noncommuting_witness(direct_context(cyclic(2), cyclic(3))).has_value());
}

TEST_CASE("internal contexts are validated") {
  const GroupPtr s3 = symmetric(3);
  const SemidirectContext ctx = make_semidirect_context(s3, s3->subset({0, 1}), s3->subset({0, 3, 4}));
  CHECK(ctx.project(s3->full_set()).to_string() == "[0,1]");
  CHECK_THROWS_AS(make_semidirect_context(s3, s3->subset({0, 3, 4}), s3->subset({0, 1})),
                  GroupAxiomError);
  CHECK_THROWS_AS(make_semidirect_context(s3, s3->subset({0, 1}), s3->subset({0})),
                  GroupAxiomError);
}

TEST_CASE("psi on S3 with L = K") {
  const GroupPtr s3 = symmetric(3);
  const SemidirectContext ctx = make_semidirect_context(s3, s3->subset({0, 1}), s3->subset({0, 3, 4}));
  // H^K is {e} with the three transpositions
  CHECK(psi(ctx, ctx.h, s3->subset({0, 3}), ctx.k, false).to_string() == "[0,1,2,3,5]");
  CHECK(psi(ctx, ctx.h, ctx.k, ctx.k, true) == s3->full_set());
  const auto [a, b] = phi(ctx, psi(ctx, ctx.h, s3->subset({0, 3}), ctx.k, false));
  CHECK(a == ctx.h);
  CHECK(b.to_string() == "[0,3]");
  CHECK_THROWS_AS(psi(ctx, s3->subset({0}), ctx.k, ctx.k, false), std::domain_error);
}

TEST_CASE("formula reports") {
  const SemidirectContext ctx = s3_semidirect();
  const auto fs = starred_double_prime_family(*ctx.group, ctx.h);
  const auto fu = starred_double_prime_family(*ctx.group, ctx.k);
  CHECK(psi_identities(ctx, fs, fu, {ctx.k}).ok());
  CHECK(sdprod_metric_compare(ctx, ctx.k, fs, fu).ok());
  CHECK(image_characterization(ctx, ctx.k).ok());
  for (Condition p : all_conditions()) {
    CHECK(condition_preservation(ctx, p, ctx.k, fs, fu).ok());
  }
  CHECK_THROWS_AS(direct_product_collapse(ctx, fs, fu), std::invalid_argument);

  const SemidirectContext d = direct_context(cyclic(2), cyclic(3));
  const auto ds = starred_double_prime_family(*d.group, d.h);
  const auto du = starred_double_prime_family(*d.group, d.k);
  CHECK(direct_product_collapse(d, ds, du).ok());
  CHECK(direct_product_identities(d, ds, du).ok());
}
