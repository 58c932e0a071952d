#include "wordmetrics/product.hpp"

#include <set>
#include <stdexcept>

#include "wordmetrics/metric.hpp"
#include "wordmetrics/sampling.hpp"

namespace wordmetrics {

Subset SemidirectContext::project(const Subset& t) const {
  Subset out = group->empty_set();
  t.for_each([&](Elem x) { out.insert(p[x]); });
  return out;
}

SemidirectContext make_semidirect_context(GroupPtr g, const Subset& h, const Subset& k) {
  g->require_member(h);
  g->require_member(k);
  if (!is_subgroup(*g, h)) {
    throw GroupAxiomError("semidirect context: H = " + h.to_string() + " is not a subgroup");
  }
  if (!is_normal_subgroup(*g, k)) {
    throw GroupAxiomError("semidirect context: K = " + k.to_string() +
                          " is not a normal subgroup");
  }
  if ((h & k) != g->identity_set()) {
    throw GroupAxiomError("semidirect context: H n K = " + (h & k).to_string() + " is not {e}");
  }
  if (h.count() * k.count() != g->order()) {
    throw GroupAxiomError("semidirect context: |H||K| = " + std::to_string(h.count() * k.count()) +
                          " differs from |G| = " + std::to_string(g->order()));
  }
  SemidirectContext ctx{g, h, k, std::vector<Elem>(g->order()), std::vector<Elem>(g->order())};
  std::vector<bool> seen(g->order(), false);
  h.for_each([&](Elem a) {
    k.for_each([&](Elem b) {
      const Elem x = g->mul(a, b);
      seen[x] = true;
      ctx.p[x] = a;
      ctx.q[x] = b;
    });
  });
  for (Elem x = 0; x < g->order(); ++x) {
    if (!seen[x]) {
      throw GroupAxiomError("semidirect context: " + std::to_string(x) + " is not in HK");
    }
  }
  return ctx;
}

SemidirectContext semidirect_context(const GroupPtr& h, const GroupPtr& k,
                                     const std::vector<std::vector<Elem>>& action) {
  GroupPtr g = semidirect_product(h, k, action);
  const std::size_t nk = k->order();
  Subset hs = g->empty_set();
  for (Elem a = 0; a < h->order(); ++a) {
    hs.insert(static_cast<Elem>(a * nk + k->identity()));
  }
  Subset ks = g->empty_set();
  for (Elem b = 0; b < nk; ++b) {
    ks.insert(static_cast<Elem>(h->identity() * nk + b));
  }
  return make_semidirect_context(g, hs, ks);
}

std::optional<std::pair<Elem, Elem>> noncommuting_witness(const SemidirectContext& ctx) {
  const FiniteGroup& g = *ctx.group;
  std::optional<std::pair<Elem, Elem>> out;
  ctx.h.for_each([&](Elem a) {
    ctx.k.for_each([&](Elem b) {
      if (!out && g.mul(a, b) != g.mul(b, a)) {
        out = std::make_pair(a, b);
      }
    });
  });
  return out;
}

std::pair<Subset, Subset> phi(const SemidirectContext& ctx, const Subset& t) {
  return {ctx.project(t), t & ctx.k};
}

namespace {

bool starred_in(const FiniteGroup& g, const Subset& s, const Subset& pool) {
  return s.contains(g.identity()) && s.is_subset_of(pool) && s.count() >= 2;
}

struct Pair {
  const Subset* s;
  const Subset* u;
};

std::string pair_text(const Subset& s, const Subset& u) {
  return "(" + s.to_string() + ", " + u.to_string() + ")";
}

}  // namespace

Subset psi(const SemidirectContext& ctx, const Subset& s, const Subset& u, const Subset& l,
           bool primed) {
  const FiniteGroup& g = *ctx.group;
  if (!starred_in(g, s, ctx.h)) {
    throw std::domain_error("psi: S = " + s.to_string() + " is not in S''(H)^*");
  }
  if (!starred_in(g, u, ctx.k)) {
    throw std::domain_error("psi: U = " + u.to_string() + " is not in S''(K)^*");
  }
  if (!l.contains(g.identity()) || !l.is_subset_of(ctx.k)) {
    throw std::domain_error("psi: L = " + l.to_string() + " is not in S''(K)");
  }
  const Subset sl = conjugate(g, s, l);
  return primed ? product(g, sl, u) : (sl | u);
}

Report psi_identities(const SemidirectContext& ctx, const std::vector<Subset>& family_s,
                      const std::vector<Subset>& family_u, const std::vector<Subset>& family_l) {
  const FiniteGroup& g = *ctx.group;
  Report report("psi identities on " + g.name());
  CheckItem& inverse = report.item("phi psi = phi psi' = id");
  CheckItem& close = report.item("nu_hat_H(psi, psi') <= 2");
  CheckItem& chain = report.item("S in S^L in S^L u U in S^L U");
  CheckItem& traces = report.item("S^L n H = S^L U n H = S, p(S^L) = S");
  CheckItem& commute = report.item("S^K U = U S^K");
  for (const auto& l : family_l) {
    for (const auto& s : family_s) {
      const Subset sl = conjugate(g, s, l);
      for (const auto& u : family_u) {
        auto w = [&] { return pair_text(s, u) + " L=" + l.to_string(); };
        const Subset t = psi(ctx, s, u, l, false);
        const Subset tp = psi(ctx, s, u, l, true);
        const auto a = phi(ctx, t);
        const auto b = phi(ctx, tp);
        inverse.record(a.first == s && a.second == u && b.first == s && b.second == u, w);
        close.record(nu_H_hat(g, t, tp) <= ExtNat(2), w);
        chain.record(s.is_subset_of(sl) && sl.is_subset_of(t) && t.is_subset_of(tp), w);
        traces.record((sl & ctx.h) == s && (tp & ctx.h) == s && ctx.project(sl) == s, w);
      }
    }
  }
  for (const auto& s : family_s) {
    const Subset sk = conjugate(g, s, ctx.k);
    for (const auto& u : family_u) {
      commute.record(product(g, sk, u) == product(g, u, sk), [&] { return pair_text(s, u); });
    }
  }
  return report;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n, std::size_t samples,
                                                             std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n == 0) {
    return out;
  }
  if (samples == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.emplace_back(i, j);
      }
    }
  } else {
    Sampler sampler(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      const auto i = static_cast<std::size_t>(sampler.below(n));
      const auto j = static_cast<std::size_t>(sampler.below(n));
      out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Pair> all_pairs(const std::vector<Subset>& family_s,
                            const std::vector<Subset>& family_u) {
  std::vector<Pair> out;
  for (const auto& s : family_s) {
    for (const auto& u : family_u) {
      out.push_back({&s, &u});
    }
  }
  return out;
}

}  // namespace

Report sdprod_metric_compare(const SemidirectContext& ctx, const Subset& l,
                             const std::vector<Subset>& family_s,
                             const std::vector<Subset>& family_u, std::size_t samples,
                             std::uint64_t seed) {
  const FiniteGroup& g = *ctx.group;
  Report report("semidirect metric comparison on " + g.name() + " L=" + l.to_string());
  CheckItem& eq = report.item("mu = max(nu_H^H(S,S'), nu_H^G(T,U'))");
  CheckItem& sandwich = report.item("max <= mu' <= 2 max");
  const auto pairs = all_pairs(family_s, family_u);
  std::vector<Subset> t;
  std::vector<Subset> tp;
  std::vector<std::vector<ExtNat>> lens_t;
  std::vector<std::vector<ExtNat>> lens_tp;
  std::vector<std::vector<ExtNat>> lens_s;
  for (const auto& pr : pairs) {
    t.push_back(psi(ctx, *pr.s, *pr.u, l, false));
    tp.push_back(psi(ctx, *pr.s, *pr.u, l, true));
    lens_t.push_back(word_lengths(g, t.back()));
    lens_tp.push_back(word_lengths(g, tp.back()));
    lens_s.push_back(word_lengths(g, *pr.s));  // S generates inside H
  }
  for (const auto& [i, j] : index_pairs(pairs.size(), samples, seed)) {
    const Subset& s2 = *pairs[j].s;
    const Subset& u2 = *pairs[j].u;
    const ExtNat hs = nu_sup(lens_s[i], s2);
    auto w = [&] {
      return pair_text(*pairs[i].s, *pairs[i].u) + " -> " + pair_text(s2, u2);
    };
    const ExtNat mu = nu_sup(lens_t[i], t[j]);
    const ExtNat m = max(hs, nu_sup(lens_t[i], u2));
    eq.record(mu == m, w);
    const ExtNat mu_p = nu_sup(lens_tp[i], tp[j]);
    const ExtNat m_p = max(hs, nu_sup(lens_tp[i], u2));
    sandwich.record(m_p <= mu_p && mu_p <= ExtNat(2) * m_p, w);
  }
  return report;
}

Report direct_product_collapse(const SemidirectContext& ctx, const std::vector<Subset>& family_s,
                               const std::vector<Subset>& family_u, std::size_t samples,
                               std::uint64_t seed) {
  if (auto w = noncommuting_witness(ctx)) {
    throw std::invalid_argument("not a direct product: " + std::to_string(w->first) + " and " +
                                std::to_string(w->second) + " do not commute");
  }
  const FiniteGroup& g = *ctx.group;
  Report report("direct product collapse on " + g.name());
  CheckItem& mu_item = report.item("mu = max(nu_H^H, nu_H^K)");
  CheckItem& mu_p_item = report.item("mu' = max(nu_H^H, nu_H^K)");
  CheckItem& powers = report.item("T' in T^n <=> S' in S^n and U' in U^n");
  const auto pairs = all_pairs(family_s, family_u);
  std::vector<Subset> t;
  std::vector<Subset> tp;
  std::vector<std::vector<ExtNat>> lens_t;
  std::vector<std::vector<ExtNat>> lens_tp;
  std::vector<std::vector<ExtNat>> lens_s;
  std::vector<std::vector<ExtNat>> lens_u;
  const Subset e = g.identity_set();
  for (const auto& pr : pairs) {
    t.push_back(psi(ctx, *pr.s, *pr.u, e, false));
    tp.push_back(psi(ctx, *pr.s, *pr.u, e, true));
    lens_t.push_back(word_lengths(g, t.back()));
    lens_tp.push_back(word_lengths(g, tp.back()));
    lens_s.push_back(word_lengths(g, *pr.s));
    lens_u.push_back(word_lengths(g, *pr.u));
  }
  for (const auto& [i, j] : index_pairs(pairs.size(), samples, seed)) {
    const Subset& s2 = *pairs[j].s;
    const Subset& u2 = *pairs[j].u;
    auto w = [&] {
      return pair_text(*pairs[i].s, *pairs[i].u) + " -> " + pair_text(s2, u2);
    };
    const ExtNat m = max(nu_sup(lens_s[i], s2), nu_sup(lens_u[i], u2));
    mu_item.record(nu_sup(lens_t[i], t[j]) == m, w);
    mu_p_item.record(nu_sup(lens_tp[i], tp[j]) == m, w);
    for (std::uint64_t n = 0; n <= g.order(); ++n) {
      const bool left = t[j].is_subset_of(power(g, t[i], n));
      const bool right =
          s2.is_subset_of(power(g, *pairs[i].s, n)) && u2.is_subset_of(power(g, *pairs[i].u, n));
      powers.record(left == right, [&] { return w() + " n=" + std::to_string(n); });
    }
  }
  return report;
}

Report direct_product_identities(const SemidirectContext& ctx,
                                 const std::vector<Subset>& family_s,
                                 const std::vector<Subset>& family_u, std::uint64_t max_power) {
  const FiniteGroup& g = *ctx.group;
  Report report("direct product identities on " + g.name());
  CheckItem& commute = report.item("SU = US");
  CheckItem& powers = report.item("(SU)^n = S^n U^n");
  CheckItem& union_pow = report.item("(S u U)^n contains S^n u U^n");
  CheckItem& conj_s = report.item("S^G = S^H");
  CheckItem& conj_u = report.item("U^G = U^K");
  CheckItem& conj_su = report.item("(SU)^G = S^H U^K");
  CheckItem& proj = report.item("q(S u U) = q(SU) = U");
  auto q_image = [&](const Subset& x) {
    Subset out = g.empty_set();
    x.for_each([&](Elem y) { out.insert(ctx.q[y]); });
    return out;
  };
  for (const auto& s : family_s) {
    const Subset sh = conjugate(g, s, ctx.h);
    conj_s.record(conj_closure(g, s) == sh, [&] { return "S=" + s.to_string(); });
    for (const auto& u : family_u) {
      auto w = [&] { return pair_text(s, u); };
      const Subset su = product(g, s, u);
      commute.record(su == product(g, u, s), w);
      for (std::uint64_t n = 0; n <= max_power; ++n) {
        powers.record(power(g, su, n) == product(g, power(g, s, n), power(g, u, n)), w);
        union_pow.record((power(g, s, n) | power(g, u, n)).is_subset_of(power(g, s | u, n)), w);
      }
      conj_su.record(conj_closure(g, su) == product(g, sh, conjugate(g, u, ctx.k)), w);
      proj.record(q_image(s | u) == u && q_image(su) == u, w);
    }
  }
  for (const auto& u : family_u) {
    conj_u.record(conj_closure(g, u) == conjugate(g, u, ctx.k),
                  [&] { return "U=" + u.to_string(); });
  }
  return report;
}

Report condition_preservation(const SemidirectContext& ctx, Condition p, const Subset& l,
                              const std::vector<Subset>& family_s,
                              const std::vector<Subset>& family_u) {
  const FiniteGroup& g = *ctx.group;
  const bool direct = !noncommuting_witness(ctx).has_value();
  const bool l_is_k = l == ctx.k;
  Report report("condition " + to_string(p) + " under psi on " + g.name());
  CheckItem& item = report.item("psi preserves " + to_string(p));
  CheckItem& item_p = report.item("psi' preserves " + to_string(p));

  // Which maps the statement covers, and the side condition on U.
  bool covers_psi = true;
  bool covers_psi_p = true;
  bool needs_l_k = false;
  bool needs_u_invariant = false;
  bool needs_u_sg = false;
  if (!direct) {
    switch (p) {
      case Condition::f:
      case Condition::g:
      case Condition::s:
      case Condition::fg:
        break;
      case Condition::c:
      case Condition::ng:
        needs_l_k = true;
        needs_u_invariant = true;
        break;
      case Condition::fc:
        needs_l_k = true;
        needs_u_invariant = true;
        covers_psi_p = false;
        break;
      case Condition::nfg:
        needs_l_k = true;
        needs_u_invariant = true;
        needs_u_sg = true;
        covers_psi_p = false;
        break;
    }
  }
  for (const auto& s : family_s) {
    for (const auto& u : family_u) {
      auto w = [&] { return pair_text(s, u) + " L=" + l.to_string(); };
      if (needs_l_k && !l_is_k) {
        item.skip("needs L = K");
        item_p.skip("needs L = K");
        continue;
      }
      const bool s_ok = classify(g, s, p, ctx.h);
      bool u_ok = needs_u_sg ? (classify(g, u, Condition::s, ctx.k) &&
                                classify(g, u, Condition::g, ctx.k))
                             : classify(g, u, p, ctx.k);
      if (!s_ok || !u_ok) {
        item.skip("inputs do not satisfy " + to_string(p));
        item_p.skip("inputs do not satisfy " + to_string(p));
        continue;
      }
      if (needs_u_invariant && !is_conj_invariant(g, u)) {
        item.skip("U not conjugation-invariant in G");
        item_p.skip("U not conjugation-invariant in G");
        continue;
      }
      if (covers_psi) {
        item.record(classify(g, psi(ctx, s, u, l, false), p), w);
      }
      if (covers_psi_p) {
        item_p.record(classify(g, psi(ctx, s, u, l, true), p), w);
      } else {
        item_p.skip("not covered for psi'");
      }
    }
  }
  return report;
}

Report image_characterization(const SemidirectContext& ctx, const Subset& l) {
  const FiniteGroup& g = *ctx.group;
  if (g.order() > 16) {
    throw std::length_error("image_characterization: order above 16");
  }
  Report report("image of psi on " + g.name() + " L=" + l.to_string());
  CheckItem& im = report.item("X in Im psi <=> X = (X n H)^L u (X n K)");
  CheckItem& im_p = report.item("X in Im psi' <=> X = (X n H)^L (X n K)");
  const auto fs = starred_double_prime_family(g, ctx.h);
  const auto fu = starred_double_prime_family(g, ctx.k);
  std::set<Subset> image;
  std::set<Subset> image_p;
  for (const auto& s : fs) {
    for (const auto& u : fu) {
      image.insert(psi(ctx, s, u, l, false));
      image_p.insert(psi(ctx, s, u, l, true));
    }
  }
  for (const Subset& x : starred_double_prime_family(g)) {
    const Subset xh = x & ctx.h;
    const Subset xk = x & ctx.k;
    const bool parts = xh.count() >= 2 && xk.count() >= 2;
    const Subset xhl = conjugate(g, xh, l);
    const bool rhs = parts && x == (xhl | xk);
    const bool rhs_p = parts && x == product(g, xhl, xk);
    im.record(image.contains(x) == rhs, [&] { return "X=" + x.to_string(); });
    im_p.record(image_p.contains(x) == rhs_p, [&] { return "X=" + x.to_string(); });
  }
  return report;
}

}  // namespace wordmetrics
