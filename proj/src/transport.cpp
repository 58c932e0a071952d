#include "wordmetrics/transport.hpp"

#include <stdexcept>

#include "wordmetrics/invariants.hpp"
#include "wordmetrics/metric.hpp"
#include "wordmetrics/sampling.hpp"
#include "wordmetrics/subset_algebra.hpp"

namespace wordmetrics {

Subset pushforward(const GroupHom& f, const Subset& s) {
  f.source()->require_member(s);
  Subset out = f.target()->empty_set();
  s.for_each([&](Elem x) { out.insert(f(x)); });
  return out;
}

Subset pullback(const GroupHom& f, const Subset& s) {
  f.target()->require_member(s);
  Subset out = f.source()->empty_set();
  for (Elem x = 0; x < f.source()->order(); ++x) {
    if (s.contains(f(x))) {
      out.insert(x);
    }
  }
  return out;
}

namespace {

std::string pair_text(const Subset& s, const Subset& t) {
  return "S=" + s.to_string() + " T=" + t.to_string();
}

void require_surjective(const GroupHom& f) {
  if (auto miss = f.uncovered()) {
    throw std::invalid_argument("homomorphism is not surjective: " + std::to_string(*miss) +
                                " has no preimage");
  }
}

bool is_starred(const FiniteGroup& g, const Subset& s) {
  return !s.empty() && !(s == g.identity_set());
}

}  // namespace

Report transport_identities(const GroupHom& f, const std::vector<Subset>& sample_g,
                            const std::vector<Subset>& sample_h, std::uint64_t max_power) {
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  Report report("transport identities " + g.name() + " -> " + h.name());
  CheckItem& prod = report.item("f(ST) = f(S)f(T)");
  CheckItem& conj = report.item("f(S^T) = f(S)^f(T)");
  CheckItem& inv = report.item("f(S^-1) = f(S)^-1");
  CheckItem& pow = report.item("f(S^n) = f(S)^n");
  CheckItem& pow_leq = report.item("f(S^<=n) = f(S)^<=n");
  CheckItem& pow_inf = report.item("f(S^inf) = f(S)^inf");
  CheckItem& closure = report.item("f(C_S) = C_f(S)");
  CheckItem& cond = report.item("S in S''_P(G) => f(S) in S''_P(H)");

  for (std::size_t i = 0; i < sample_g.size(); ++i) {
    const Subset& s = sample_g[i];
    const Subset& t = sample_g[(i + 1) % sample_g.size()];
    const Subset fs = pushforward(f, s);
    const Subset ft = pushforward(f, t);
    prod.record(pushforward(f, product(g, s, t)) == product(h, fs, ft),
                [&] { return pair_text(s, t); });
    conj.record(pushforward(f, conjugate(g, s, t)) == conjugate(h, fs, ft),
                [&] { return pair_text(s, t); });
    inv.record(pushforward(f, inverse_set(g, s)) == inverse_set(h, fs),
               [&] { return "S=" + s.to_string(); });
    for (std::uint64_t n = 0; n <= max_power; ++n) {
      pow.record(pushforward(f, power(g, s, n)) == power(h, fs, n),
                 [&] { return "S=" + s.to_string() + " n=" + std::to_string(n); });
      pow_leq.record(pushforward(f, power_leq(g, s, n)) == power_leq(h, fs, n),
                     [&] { return "S=" + s.to_string() + " n=" + std::to_string(n); });
    }
    pow_inf.record(pushforward(f, power(g, s, kInfinity)) == power(h, fs, kInfinity),
                   [&] { return "S=" + s.to_string(); });
    closure.record(pushforward(f, sym_conj_closure(g, s)) == sym_conj_closure(h, fs),
                   [&] { return "S=" + s.to_string(); });
    if (s.contains(g.identity())) {
      for (Condition p : all_conditions()) {
        if (classify(g, s, p)) {
          cond.record(classify(h, fs, p),
                      [&] { return "S=" + s.to_string() + " P=" + to_string(p); });
        }
      }
    }
  }

  if (!sample_h.empty()) {
    require_surjective(f);
    const Subset k = kernel(f);
    CheckItem& pre_prod = report.item("f^-1(AB) = f^-1(A)f^-1(B)");
    CheckItem& pre_pow = report.item("f^-1(S^n) = (f^-1 S)^n, n >= 1");
    CheckItem& pre_leq = report.item("f^-1(S^<=n) = (f^-1 S)^<=n u K");
    CheckItem& pre_ball = report.item("f^-1(A S^<=n) = f^-1(A) (f^-1 S)^<=n");
    CheckItem& pre_inv = report.item("f^-1(S^-1) = (f^-1 S)^-1");
    CheckItem& pre_inf = report.item("f^-1(S^inf) = (f^-1 S)^inf u K");
    for (std::size_t i = 0; i < sample_h.size(); ++i) {
      const Subset& s = sample_h[i];
      const Subset& a = sample_h[(i + 1) % sample_h.size()];
      const Subset ps = pullback(f, s);
      const Subset pa = pullback(f, a);
      pre_prod.record(pullback(f, product(h, a, s)) == product(g, pa, ps),
                      [&] { return pair_text(a, s); });
      for (std::uint64_t n = 0; n <= max_power; ++n) {
        auto w = [&] { return "S=" + s.to_string() + " n=" + std::to_string(n); };
        if (n >= 1) {
          pre_pow.record(pullback(f, power(h, s, n)) == power(g, ps, n), w);
        }
        pre_leq.record(pullback(f, power_leq(h, s, n)) == (power_leq(g, ps, n) | k), w);
        pre_ball.record(pullback(f, product(h, a, power_leq(h, s, n))) ==
                            product(g, pa, power_leq(g, ps, n)),
                        w);
      }
      pre_inv.record(pullback(f, inverse_set(h, s)) == inverse_set(g, ps),
                     [&] { return "S=" + s.to_string(); });
      pre_inf.record(pullback(f, power(h, s, kInfinity)) == (power(g, ps, kInfinity) | k),
                     [&] { return "S=" + s.to_string(); });
    }
  }
  return report;
}

Report verify_pushforward_lipschitz(const GroupHom& f, const std::vector<Subset>& sample) {
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  const Subset k = kernel(f);
  Report report("pushforward 1-Lipschitz " + g.name() + " -> " + h.name());
  CheckItem& pointwise = report.item("nu_f(S)(f(x)) <= nu_S(x)");
  CheckItem& hausdorff = report.item("(d_f(S))_H(f(A), f(B)) <= (d_S)_H(A, B)");
  CheckItem& lipschitz = report.item("nu_H(f(S), f(T)) <= nu_H(S, T)");

  std::vector<std::vector<ExtNat>> lens_g;
  std::vector<std::vector<ExtNat>> lens_h;
  std::vector<Subset> images;
  for (const auto& s : sample) {
    lens_g.push_back(word_lengths(g, s));
    images.push_back(pushforward(f, s));
    lens_h.push_back(word_lengths(h, images.back()));
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (Elem x = 0; x < g.order(); ++x) {
      pointwise.record(lens_h[i][f(x)] <= lens_g[i][x], [&] {
        return "S=" + sample[i].to_string() + " x=" + std::to_string(x);
      });
    }
    const Subset& a = sample[(i + 1) % sample.size()];
    const Subset& b = sample[(i + 2) % sample.size()];
    hausdorff.record(hausdorff_metric(h, images[i], pushforward(f, a), pushforward(f, b)) <=
                         hausdorff_metric(g, sample[i], a, b),
                     [&] { return "S=" + sample[i].to_string() + " " + pair_text(a, b); });
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      if (sample[i].is_subset_of(k) || sample[j].is_subset_of(k)) {
        lipschitz.skip("outside S(G)^* - S(K)");
        continue;
      }
      lipschitz.record(nu_sup(lens_h[i], images[j]) <= nu_sup(lens_g[i], sample[j]),
                       [&] { return pair_text(sample[i], sample[j]); });
    }
  }
  return report;
}

Report verify_pullback_isometry(const GroupHom& f, const std::vector<Subset>& sample_h) {
  require_surjective(f);
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  Report report("pullback isometry " + h.name() + " -> " + g.name());
  CheckItem& section = report.item("f_* f^* = id");
  CheckItem& hausdorff = report.item("(d_f^-1(S))_H(f^-1 A, f^-1 B) = (d_S)_H(A, B)");
  CheckItem& iso = report.item("nu_H(f^-1 S, f^-1 T) = nu_H(S, T) on S''(H)^*");

  std::vector<Subset> pre;
  std::vector<std::vector<ExtNat>> lens_g;
  std::vector<std::vector<ExtNat>> lens_h;
  for (const auto& s : sample_h) {
    pre.push_back(pullback(f, s));
    lens_g.push_back(word_lengths(g, pre.back()));
    lens_h.push_back(word_lengths(h, s));
  }
  for (std::size_t i = 0; i < sample_h.size(); ++i) {
    section.record(pushforward(f, pre[i]) == sample_h[i],
                   [&] { return "S=" + sample_h[i].to_string(); });
    const std::size_t a = (i + 1) % sample_h.size();
    const std::size_t b = (i + 2) % sample_h.size();
    hausdorff.record(hausdorff_metric(g, pre[i], pre[a], pre[b]) ==
                         hausdorff_metric(h, sample_h[i], sample_h[a], sample_h[b]),
                     [&] {
                       return "S=" + sample_h[i].to_string() + " " +
                              pair_text(sample_h[a], sample_h[b]);
                     });
  }
  for (std::size_t i = 0; i < sample_h.size(); ++i) {
    for (std::size_t j = 0; j < sample_h.size(); ++j) {
      if (!sample_h[i].contains(h.identity()) || !is_starred(h, sample_h[i]) ||
          !is_starred(h, sample_h[j])) {
        iso.skip("outside S''(H)^* x S(H)^*");
        continue;
      }
      iso.record(nu_sup(lens_g[i], pre[j]) == nu_sup(lens_h[i], sample_h[j]),
                 [&] { return pair_text(sample_h[i], sample_h[j]); });
    }
  }
  return report;
}

RetractionDefect retraction_defect(const GroupHom& f, const Subset& t) {
  const FiniteGroup& g = *f.source();
  const Subset k = kernel(f);
  g.require_member(t);
  if (!t.contains(g.identity()) || !is_starred(g, t)) {
    throw std::domain_error("retraction_defect: T = " + t.to_string() + " is not in S''(G)^*");
  }
  if (t.is_subset_of(k)) {
    throw std::domain_error("retraction_defect: T = " + t.to_string() + " lies in the kernel");
  }
  RetractionDefect r;
  r.saturation = pullback(f, pushforward(f, t));
  r.saturation_ok = t.is_subset_of(r.saturation) && r.saturation == product(g, t, k);
  const auto lens_t = word_lengths(g, t);
  const auto lens_sat = word_lengths(g, r.saturation);
  r.defect = max(nu_sup(lens_t, r.saturation), nu_sup(lens_sat, t));
  r.back = nu_sup(lens_sat, t);
  r.bound = nu_sup(lens_t, k) + 1;
  return r;
}

Report retraction_defect_check(const GroupHom& f, const std::vector<Subset>& family,
                               std::optional<std::uint64_t> m) {
  const FiniteGroup& g = *f.source();
  const Subset k = kernel(f);
  Report report("retraction defect " + g.name() + " -> " + f.target()->name());
  CheckItem& bound = report.item("nu_hat_H(T, f^*f_*T) <= nu_H(T,K) + 1");
  CheckItem& back = report.item("nu_H(f^*f_*T, T) = 1");
  CheckItem& sat = report.item("T in f^-1 f(T) = TK");
  CheckItem* qm = m ? &report.item("Q_m: nu_hat_H(T, f^*f_*T) <= m + 1") : nullptr;
  for (const auto& t : family) {
    if (!t.contains(g.identity()) || !is_starred(g, t) || t.is_subset_of(k)) {
      bound.skip("outside S''(G)^* - S(K)");
      continue;
    }
    const RetractionDefect r = retraction_defect(f, t);
    auto w = [&] {
      return "T=" + t.to_string() + " defect=" + r.defect.to_string() +
             " bound=" + r.bound.to_string();
    };
    bound.record(r.defect <= r.bound, w);
    back.record(r.back == ExtNat(1), w);
    sat.record(r.saturation_ok, w);
    if (qm != nullptr) {
      if (k.is_subset_of(power_leq(g, t, *m))) {
        qm->record(r.defect <= ExtNat(*m + 1), w);
      } else {
        qm->skip("T fails Q_m");
      }
    }
  }
  return report;
}

std::uint64_t uniform_kernel_exponent(const GroupHom& f) {
  const FiniteGroup& g = *f.source();
  const Subset k = kernel(f);
  const auto elems = k.elements();
  if (elems.size() > 20) {
    throw std::length_error("uniform_kernel_exponent: kernel order " +
                            std::to_string(elems.size()) + " exceeds 20");
  }
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elems.size()); ++mask) {
    Subset u = g.empty_set();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (((mask >> i) & 1U) != 0) {
        u.insert(elems[i]);
      }
    }
    if (power(g, u, kInfinity) != k) {
      continue;
    }
    const ExtNat v = nu_H(g, u, k);
    best = std::max(best, v.value());
  }
  return best;
}

Report kernel_generating_check(const GroupHom& f, const std::vector<Subset>& family) {
  const FiniteGroup& g = *f.source();
  const Subset k = kernel(f);
  const std::uint64_t m = uniform_kernel_exponent(f);
  Report report("kernel-generating family " + g.name() + " (m = " + std::to_string(m) + ")");
  CheckItem& qm = report.item("T n K generates K => K in T^<=m");
  CheckItem& bound = report.item("nu_hat_H(T, f^*f_*T) <= m + 1");
  for (const auto& t : family) {
    if (power(g, t & k, kInfinity) != k) {
      qm.skip("T n K does not generate K");
      continue;
    }
    qm.record(k.is_subset_of(power_leq(g, t, m)), [&] { return "T=" + t.to_string(); });
    if (!t.contains(g.identity()) || !is_starred(g, t) || t.is_subset_of(k)) {
      bound.skip("outside S''(G)^* - S(K)");
      continue;
    }
    const RetractionDefect r = retraction_defect(f, t);
    bound.record(r.defect <= ExtNat(m + 1), [&] {
      return "T=" + t.to_string() + " defect=" + r.defect.to_string();
    });
  }
  return report;
}

Elem Lift::at(Elem x) const {
  if (!target_set.contains(x)) {
    throw std::out_of_range("lift: " + std::to_string(x) + " is not in " +
                            target_set.to_string());
  }
  return choice[x];
}

Subset Lift::as_subset() const {
  Subset r = hom.source()->empty_set();
  target_set.for_each([&](Elem x) { r.insert(choice[x]); });
  return r;
}

Lift make_lift(const GroupHom& f, const Subset& s, LiftRule rule, const Section* section) {
  require_surjective(f);
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  h.require_member(s);
  Lift lift{f, s, std::vector<Elem>(h.order(), 0)};
  if (rule == LiftRule::via_section) {
    if (section == nullptr) {
      throw std::invalid_argument("make_lift: via_section needs a section");
    }
    s.for_each([&](Elem x) { lift.choice[x] = (*section)(x); });
    return lift;
  }
  std::vector<bool> set(h.order(), false);
  for (Elem y = 0; y < g.order(); ++y) {
    const Elem x = f(y);
    if (!set[x]) {
      set[x] = true;
      lift.choice[x] = y;
    }
  }
  lift.choice[h.identity()] = g.identity();
  return lift;
}

Elem h_map(const Lift& lift, Elem x) {
  const FiniteGroup& g = *lift.hom.source();
  return g.mul(g.inv(lift.at(lift.hom(x))), x);
}

Report lift_identities(const Lift& lift) {
  const GroupHom& f = lift.hom;
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  const Subset k = kernel(f);
  const Subset domain = pullback(f, lift.target_set);
  Report report("lift identities over " + lift.target_set.to_string());
  CheckItem& lift_ok = report.item("f(R_x) = x");
  CheckItem& factor = report.item("x = R_f(x) h(x)");
  CheckItem& in_kernel = report.item("h(x) in K");
  CheckItem& equivariant = report.item("h(xa) = h(x)a, a in K");
  lift.target_set.for_each([&](Elem x) {
    lift_ok.record(f(lift.at(x)) == x, [&] { return "x=" + std::to_string(x); });
  });
  domain.for_each([&](Elem x) {
    const Elem hx = h_map(lift, x);
    factor.record(g.mul(lift.at(f(x)), hx) == x, [&] { return "x=" + std::to_string(x); });
    in_kernel.record(k.contains(hx), [&] { return "x=" + std::to_string(x); });
    k.for_each([&](Elem a) {
      equivariant.record(h_map(lift, g.mul(x, a)) == g.mul(hx, a), [&] {
        return "x=" + std::to_string(x) + " a=" + std::to_string(a);
      });
    });
  });
  if (lift.target_set.contains(h.identity()) && lift.at(h.identity()) == g.identity()) {
    CheckItem& on_k = report.item("h|_K = id");
    CheckItem& fiber = report.item("h^-1(e) = R");
    k.for_each([&](Elem a) {
      on_k.record(h_map(lift, a) == a, [&] { return "a=" + std::to_string(a); });
    });
    Subset zero = g.empty_set();
    domain.for_each([&](Elem x) {
      if (h_map(lift, x) == g.identity()) {
        zero.insert(x);
      }
    });
    fiber.record(zero == lift.as_subset(), [&] { return "h^-1(e)=" + zero.to_string(); });
  }
  return report;
}

PairSet chi(const GroupHom& f, const Subset& t) {
  const Lift lift = make_lift(f, pushforward(f, t));
  PairSet out;
  t.for_each([&](Elem x) { out.emplace(f(x), h_map(lift, x)); });
  return out;
}

Subset omega(const GroupHom& f, const PairSet& w) {
  const FiniteGroup& g = *f.source();
  Subset p = f.target()->empty_set();
  for (const auto& [u, v] : w) {
    p.insert(u);
  }
  const Lift lift = make_lift(f, p);
  Subset out = g.empty_set();
  for (const auto& [u, v] : w) {
    out.insert(g.mul(lift.at(u), v));
  }
  return out;
}

Report chi_omega_roundtrip(const GroupHom& f, std::size_t exhaustive_limit, std::size_t samples,
                           std::uint64_t seed) {
  require_surjective(f);
  const FiniteGroup& g = *f.source();
  const Subset k = kernel(f);
  Report report("chi/omega round trip " + g.name() + " -> " + f.target()->name());
  CheckItem& oc = report.item("omega chi (T) = T");
  CheckItem& co = report.item("chi omega (W) = W");
  // H x K as a list of pairs; |H x K| = |G|.
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem u = 0; u < f.target()->order(); ++u) {
    k.for_each([&](Elem v) { pairs.emplace_back(u, v); });
  }
  auto pair_set = [&](std::uint64_t bits, const std::vector<bool>* pick) {
    PairSet w;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const bool in = pick != nullptr ? (*pick)[i] : ((bits >> i) & 1U) != 0;
      if (in) {
        w.insert(pairs[i]);
      }
    }
    return w;
  };
  auto check_t = [&](const Subset& t) {
    oc.record(omega(f, chi(f, t)) == t, [&] { return "T=" + t.to_string(); });
  };
  auto check_w = [&](const PairSet& w) {
    co.record(chi(f, omega(f, w)) == w, [&] { return "|W|=" + std::to_string(w.size()); });
  };
  if (g.order() <= exhaustive_limit && g.order() < 63) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
      check_t(g.subset_from_mask(mask));
      check_w(pair_set(mask, nullptr));
    }
  } else {
    Sampler sampler(seed);
    std::vector<bool> pick(pairs.size());
    for (std::size_t i = 0; i < samples; ++i) {
      check_t(sampler.subset_of(g.full_set()));
      for (std::size_t j = 0; j < pick.size(); ++j) {
        pick[j] = sampler.coin();
      }
      check_w(pair_set(0, &pick));
    }
  }
  return report;
}

Report theta_fact_check(const GroupHom& f, std::size_t samples, std::uint64_t seed) {
  require_surjective(f);
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  const Subset k = kernel(f);
  Report report("lift products " + g.name() + " -> " + h.name());
  CheckItem& image = report.item("f(R^L u U) = f(R^L U) = S");
  CheckItem& trace = report.item("(R^L u U) n K = (R^L U) n K = U");
  Sampler sampler(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Subset s = sampler.subset_of(h.full_set());
    s.insert(h.identity());
    // A random lift with R_e = e.
    Subset r = g.identity_set();
    s.for_each([&](Elem x) {
      if (x == h.identity()) {
        return;
      }
      const auto fiber = pullback(f, h.subset({x})).elements();
      r.insert(fiber[sampler.below(fiber.size())]);
    });
    Subset l = sampler.subset_of(k);
    l.insert(g.identity());
    Subset u = sampler.subset_of(k);
    u.insert(g.identity());
    const Subset rl = conjugate(g, r, l);
    const Subset joined = rl | u;
    const Subset prod = product(g, rl, u);
    auto w = [&] {
      return "S=" + s.to_string() + " R=" + r.to_string() + " L=" + l.to_string() +
             " U=" + u.to_string();
    };
    image.record(pushforward(f, joined) == s && pushforward(f, prod) == s, w);
    trace.record((joined & k) == u && (prod & k) == u, w);
  }
  return report;
}

KernelWitness kernel_witness(const GroupHom& f) {
  const FiniteGroup& g = *f.source();
  KernelWitness w;
  w.kernel = kernel(f);
  const ExtremeResult d = diam_nfg(g, w.kernel);
  w.b = d.witness;
  w.m0 = d.value.value();
  return w;
}

Subset eta_construct(const GroupHom& f, const Subset& s, const KernelWitness& witness) {
  require_surjective(f);
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  h.require_member(s);
  if (!s.contains(h.identity()) || !is_starred(h, s) || !classify(h, s, Condition::nfg)) {
    throw std::domain_error("eta: S = " + s.to_string() + " is not in S''_nfg(H)^*");
  }
  const Subset& k = witness.kernel;
  const Subset reached = power_leq(g, conjugate(g, witness.b, k), witness.m0);
  if (reached != k) {
    throw std::invalid_argument("eta: (B^K)^<=" + std::to_string(witness.m0) + " = " +
                                reached.to_string() + " does not equal K = " + k.to_string());
  }
  const Subset lift = make_lift(f, s).as_subset();  // theta(A) with A = S
  return sym_conj_closure(g, lift) | sym_conj_closure(g, witness.b);
}

Report qi_bounds_check(const GroupHom& f, const KernelWitness& witness, std::uint64_t m,
                       const std::vector<Subset>& family_h, const std::vector<Subset>& family_g) {
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  const Subset& k = witness.kernel;
  if (m < witness.m0) {
    throw std::invalid_argument("qi_bounds_check: m = " + std::to_string(m) + " is below m0 = " +
                                std::to_string(witness.m0));
  }
  Report report("eta bounds " + g.name() + " -> " + h.name() + " (m0 = " +
                std::to_string(witness.m0) + ", m = " + std::to_string(m) + ")");
  CheckItem& member = report.item("eta(S) in S''_nfg(G)^*");
  CheckItem& section = report.item("f(eta(S)) = S");
  CheckItem& qm0 = report.item("K in eta(S)^<=m0");
  CheckItem& qi = report.item("nu_hat_H(eta S, eta S') <= (m0+1) nu_hat_H(S, S')");
  CheckItem& back = report.item("nu_hat_H(T, eta(f T)) <= m + 1");
  CheckItem& lip = report.item("nu_hat_H(f T, f T') <= nu_hat_H(T, T')");

  std::vector<Subset> etas;
  std::vector<std::vector<ExtNat>> lens_eta;
  std::vector<std::vector<ExtNat>> lens_h;
  for (const auto& s : family_h) {
    const Subset t = eta_construct(f, s, witness);
    member.record(t.contains(g.identity()) && is_starred(g, t) && classify(g, t, Condition::nfg),
                  [&] { return "S=" + s.to_string() + " eta=" + t.to_string(); });
    section.record(pushforward(f, t) == s, [&] { return "S=" + s.to_string(); });
    qm0.record(k.is_subset_of(power_leq(g, t, witness.m0)),
               [&] { return "S=" + s.to_string(); });
    etas.push_back(t);
    lens_eta.push_back(word_lengths(g, t));
    lens_h.push_back(word_lengths(h, s));
  }
  const ExtNat factor = witness.m0 + 1;
  for (std::size_t i = 0; i < family_h.size(); ++i) {
    for (std::size_t j = 0; j < family_h.size(); ++j) {
      const ExtNat lhs = max(nu_sup(lens_eta[i], etas[j]), nu_sup(lens_eta[j], etas[i]));
      const ExtNat rhs = max(nu_sup(lens_h[i], family_h[j]), nu_sup(lens_h[j], family_h[i]));
      qi.record(lhs <= factor * rhs, [&] {
        return pair_text(family_h[i], family_h[j]) + " lhs=" + lhs.to_string() +
               " rhs=" + rhs.to_string();
      });
    }
  }

  std::vector<Subset> images;
  std::vector<std::vector<ExtNat>> lens_t;
  std::vector<std::vector<ExtNat>> lens_img;
  for (const auto& t : family_g) {
    images.push_back(pushforward(f, t));
    lens_t.push_back(word_lengths(g, t));
    lens_img.push_back(word_lengths(h, images.back()));
  }
  for (std::size_t i = 0; i < family_g.size(); ++i) {
    const Subset& t = family_g[i];
    if (!is_starred(g, t) || t.is_subset_of(k)) {
      back.skip("outside S''(G)^* - S(K)");
      continue;
    }
    if (!k.is_subset_of(power_leq(g, t, m))) {
      back.skip("T fails Q_m");
      continue;
    }
    const Subset e = eta_construct(f, images[i], witness);
    const ExtNat d = nu_H_hat(g, t, e);
    back.record(d <= ExtNat(m + 1), [&] {
      return "T=" + t.to_string() + " eta(fT)=" + e.to_string() + " d=" + d.to_string();
    });
  }
  for (std::size_t i = 0; i < family_g.size(); ++i) {
    for (std::size_t j = 0; j < family_g.size(); ++j) {
      if (family_g[i].is_subset_of(k) || family_g[j].is_subset_of(k)) {
        lip.skip("outside S''(G)^* - S(K)");
        continue;
      }
      const ExtNat lhs = max(nu_sup(lens_img[i], images[j]), nu_sup(lens_img[j], images[i]));
      const ExtNat rhs = max(nu_sup(lens_t[i], family_g[j]), nu_sup(lens_t[j], family_g[i]));
      lip.record(lhs <= rhs, [&] { return pair_text(family_g[i], family_g[j]); });
    }
  }
  return report;
}

}  // namespace wordmetrics
