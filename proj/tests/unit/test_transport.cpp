#include <doctest.h>

#include "wordmetrics/catalog.hpp"
#include "wordmetrics/invariants.hpp"
#include "wordmetrics/metric.hpp"
#include "wordmetrics/subset_algebra.hpp"
#include "wordmetrics/transport.hpp"

using namespace wordmetrics;

namespace {

Quotient z6_to_z3() {
  const GroupPtr z6 = cyclic(6);
  return quotient_by_normal(z6, z6->subset({0, 3}));
}

Quotient s3_to_z2() {
  const GroupPtr s3 = symmetric(3);
  return quotient_by_normal(s3, s3->subset({0, 3, 4}));
}

std::vector<Subset> all_subsets(const FiniteGroup& g) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    out.push_back(g.subset_from_mask(m));
  }
  return out;
}

}  // namespace

TEST_CASE("images and preimages") {
  const Quotient q = z6_to_z3();
  const FiniteGroup& g = *q.projection.source();
  const FiniteGroup& h = *q.group;
  CHECK(pushforward(q.projection, g.subset({1, 5})).to_string() == "[1,2]");
  CHECK(pullback(q.projection, h.subset({1})).to_string() == "[1,4]");
  CHECK(pullback(q.projection, h.empty_set()).empty());
}

TEST_CASE("the pullback identity needs e in S") {
  const Quotient q = z6_to_z3();
  const FiniteGroup& g = *q.projection.source();
  const FiniteGroup& h = *q.group;
  const Subset s = h.subset({1});
  const Subset t = h.subset({0, 1});
  CHECK(nu_H(h, s, t) == ExtNat(1));
  CHECK(nu_H(g, pullback(q.projection, s), pullback(q.projection, t)) == ExtNat(3));
  const Subset se = h.subset({0, 1});
  CHECK(nu_H(g, pullback(q.projection, se), pullback(q.projection, t)) == nu_H(h, se, t));
}

TEST_CASE("transport reports on small quotients") {
  for (const Quotient& q : {z6_to_z3(), s3_to_z2()}) {
    const auto sg = all_subsets(*q.projection.source());
    const auto sh = all_subsets(*q.group);
    CHECK(transport_identities(q.projection, sg, sh).ok());
    CHECK(verify_pushforward_lipschitz(q.projection, sg).ok());
    CHECK(verify_pullback_isometry(q.projection, sh).ok());
    const auto fam = starred_double_prime_family(*q.projection.source());
    CHECK(retraction_defect_check(q.projection, fam).ok());
    CHECK(kernel_generating_check(q.projection, fam).ok());
    CHECK(chi_omega_roundtrip(q.projection).ok());
    CHECK(theta_fact_check(q.projection, 100).ok());
  }
}

TEST_CASE("retraction defect of a single set") {
  const Quotient q = s3_to_z2();
  const FiniteGroup& g = *q.projection.source();
  const Subset t = g.subset({0, 1, 3});
  const RetractionDefect r = retraction_defect(q.projection, t);
  CHECK(r.saturation == g.full_set());
  CHECK(r.defect == nu_H_hat(g, t, g.full_set()));
  CHECK(r.bound == nu_H(g, t, g.subset({0, 3, 4})) + ExtNat(1));
  CHECK(r.defect.is_finite());
  CHECK(r.ok());
  // {e, (01)} does not generate, so both sides are infinite
  const RetractionDefect stuck = retraction_defect(q.projection, g.subset({0, 1}));
  CHECK(stuck.defect == kInfinity);
  CHECK(stuck.bound == kInfinity);
  CHECK_THROWS_AS(retraction_defect(q.projection, g.subset({0, 3})), std::domain_error);
}

TEST_CASE("kernel exponent and eta on S3 -> Z2") {
  const Quotient q = s3_to_z2();
  CHECK(uniform_kernel_exponent(q.projection) == 2);
  const KernelWitness w = kernel_witness(q.projection);
  CHECK(w.kernel.to_string() == "[0,3,4]");
  CHECK(w.m0 == 1);
  const GroupPtr& g = q.projection.source();
  const Subset eta = eta_construct(q.projection, q.group->full_set(), w);
  CHECK(eta.contains(0));
  CHECK(pushforward(q.projection, eta) == q.group->full_set());
  CHECK(classify(*g, eta, Condition::nfg));
  const auto fh = nfg_family(*q.group);
  const auto fg = nfg_family(*g);
  CHECK(qi_bounds_check(q.projection, w, w.m0, fh, fg).ok());
  CHECK(qi_bounds_check(q.projection, w, w.m0 + 1, fh, fg).ok());
}

TEST_CASE("lifts and the h map") {
  const Quotient q = s3_to_z2();
  const Lift lift = make_lift(q.projection, q.group->full_set());
  CHECK(lift.at(0) == 0);
  CHECK(lift_identities(lift).ok());
  const GroupPtr& g = q.projection.source();
  for (Elem x = 0; x < g->order(); ++x) {
    const Elem k = h_map(lift, x);
    CHECK(g->subset({0, 3, 4}).contains(k));
    CHECK(g->mul(lift.at(q.projection(x)), k) == x);
  }
}
