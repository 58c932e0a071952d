#include "wordmetrics/metric.hpp"

#include <cmath>
#include <deque>
#include <limits>

#include "wordmetrics/sampling.hpp"
#include "wordmetrics/subset_algebra.hpp"

namespace wordmetrics {

std::vector<ExtNat> word_lengths(const FiniteGroup& g, const Subset& s) {
  g.require_member(s);
  std::vector<ExtNat> dist(g.order(), kInfinity);
  const auto gens = s.elements();
  dist[g.identity()] = 0;
  std::deque<Elem> queue{g.identity()};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    const ExtNat next = dist[x] + 1;
    for (Elem t : gens) {
      const Elem y = g.mul(x, t);
      if (dist[y].is_infinite()) {
        dist[y] = next;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

ExtNat word_length(const FiniteGroup& g, const Subset& s, Elem x) {
  return word_lengths(g, s)[x];
}

ExtNat word_metric(const FiniteGroup& g, const Subset& s, Elem x, Elem y) {
  return word_lengths(g, s)[g.mul(g.inv(x), y)];
}

MetricTable word_metric_table(const FiniteGroup& g, const Subset& s) {
  const auto len = word_lengths(g, s);
  MetricTable t(g.order(), Flavor::additive);
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      t.at(x, y) = len[g.mul(g.inv(x), y)];
    }
  }
  return t;
}

std::string AxiomReport::classification(Flavor flavor) const {
  std::string kind;
  if (nondegenerate && symmetric && triangle) {
    kind = "metric";
  } else if (reflexive && symmetric && triangle) {
    kind = "pseudo-metric";
  } else if (reflexive && nondegenerate && triangle) {
    kind = "nondegenerate asymmetric metric";
  } else if (reflexive && triangle) {
    kind = "asymmetric metric";
  } else {
    return "not a metric";
  }
  return flavor == Flavor::multiplicative ? "multiplicative " + kind : kind;
}

AxiomReport check_metric_axioms(const MetricTable& t) {
  AxiomReport r;
  const std::size_t n = t.size;
  const ExtNat unit = t.flavor == Flavor::additive ? ExtNat(0) : ExtNat(1);
  for (std::size_t x = 0; x < n; ++x) {
    if (t.at(x, x) != unit && r.reflexive) {
      r.reflexive = false;
      r.reflexive_witness = std::array<std::size_t, 3>{x, x, x};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const bool both_unit = t.at(x, y) == unit && t.at(y, x) == unit;
      if (both_unit != (x == y) && r.nondegenerate) {
        r.nondegenerate = false;
        r.nondegenerate_witness = std::array<std::size_t, 3>{x, y, y};
      }
      if (t.at(x, y) != t.at(y, x) && r.symmetric) {
        r.symmetric = false;
        r.symmetric_witness = std::array<std::size_t, 3>{x, y, y};
      }
    }
  }
  for (std::size_t x = 0; x < n && r.triangle; ++x) {
    for (std::size_t y = 0; y < n && r.triangle; ++y) {
      const ExtNat dxy = t.at(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        const ExtNat via = t.flavor == Flavor::additive ? dxy + t.at(y, z) : dxy * t.at(y, z);
        if (t.at(x, z) > via) {
          r.triangle = false;
          r.triangle_witness = std::array<std::size_t, 3>{x, y, z};
          break;
        }
      }
    }
  }
  return r;
}

MetricTable symmetrize_metric(const MetricTable& t) {
  MetricTable out = t;
  for (std::size_t x = 0; x < t.size; ++x) {
    for (std::size_t y = 0; y < t.size; ++y) {
      out.at(x, y) = max(t.at(x, y), t.at(y, x));
    }
  }
  return out;
}

Subset ball(const FiniteGroup& g, const Subset& s, const Subset& a, ExtNat r) {
  return product(g, a, power_leq(g, s, r));
}

ExtNat hausdorff_metric(const FiniteGroup& g, const Subset& s, const Subset& a,
                        const Subset& b) {
  g.require_member(s);
  g.require_member(a);
  g.require_member(b);
  if (b.empty()) {
    return 0;
  }
  if (a.empty()) {
    return kInfinity;
  }
  Subset reach = a;
  std::uint64_t n = 0;
  while (!b.is_subset_of(reach)) {
    Subset next = reach | product(g, reach, s);
    if (next == reach) {
      return kInfinity;
    }
    reach = std::move(next);
    ++n;
  }
  return n;
}

ExtNat hausdorff_from_table(const MetricTable& d, const Subset& a, const Subset& b) {
  ExtNat sup = 0;
  b.for_each([&](Elem y) {
    ExtNat inf = kInfinity;
    a.for_each([&](Elem x) { inf = min(inf, d.at(x, y)); });
    sup = max(sup, inf);
  });
  return sup;
}

Subset hausdorff_ball(const MetricTable& d, const Subset& a, ExtNat r) {
  Subset out(a.universe(), a.size());
  for (Elem x = 0; x < d.size; ++x) {
    Subset single(a.universe(), a.size(), {x});
    if (hausdorff_from_table(d, a, single) <= r) {
      out.insert(x);
    }
  }
  return out;
}

ExtNat nu_sup(const std::vector<ExtNat>& lengths, const Subset& a) {
  ExtNat sup = 0;
  a.for_each([&](Elem x) { sup = max(sup, lengths[x]); });
  return sup;
}

ExtNat nu_sup(const FiniteGroup& g, const Subset& s, const Subset& a) {
  g.require_member(a);
  return nu_sup(word_lengths(g, s), a);
}

ExtNat nu_H(const FiniteGroup& g, const Subset& s, const Subset& t) { return nu_sup(g, s, t); }

ExtNat nu_H_hat(const FiniteGroup& g, const Subset& s, const Subset& t) {
  return max(nu_H(g, s, t), nu_H(g, t, s));
}

double rho(const FiniteGroup& g, const Subset& s, const Subset& t) {
  return log_of(nu_H(g, s, t));
}

double rho_hat(const FiniteGroup& g, const Subset& s, const Subset& t) {
  return log_of(nu_H_hat(g, s, t));
}

ExtRatio lambda(const std::vector<ExtNat>& g, const std::vector<ExtNat>& g_prime) {
  if (g.size() != g_prime.size()) {
    throw std::invalid_argument("lambda: functions have different domains");
  }
  ExtRatio best(1, 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const ExtNat den = g[i];
    const ExtNat num = g_prime[i];
    if ((den.is_finite() && den.value() < 1) || (num.is_finite() && num.value() < 1)) {
      throw std::domain_error("lambda: values must be >= 1");
    }
    ExtRatio r;
    if (num.is_infinite() && den.is_infinite()) {
      r = ExtRatio(1, 1);
    } else if (den.is_infinite()) {
      r = ExtRatio(0, 1);
    } else if (num.is_infinite()) {
      r = ExtRatio::infinity();
    } else {
      r = ExtRatio(num.value(), den.value());
    }
    if (r > best) {
      best = r;
    }
  }
  return best;
}

double mu(const std::vector<double>& f, const std::vector<double>& f_prime) {
  if (f.size() != f_prime.size()) {
    throw std::invalid_argument("mu: functions have different domains");
  }
  const double inf = std::numeric_limits<double>::infinity();
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double diff = 0.0;
    if (std::isinf(f_prime[i]) && std::isinf(f[i])) {
      diff = 0.0;
    } else if (std::isinf(f[i])) {
      diff = 0.0;
    } else if (std::isinf(f_prime[i])) {
      diff = inf;
    } else {
      diff = f_prime[i] - f[i];
    }
    if (diff > best) {
      best = diff;
    }
  }
  return best;
}

std::vector<ExtNat> lengths_off_identity(const FiniteGroup& g, const Subset& s) {
  const auto all = word_lengths(g, s);
  std::vector<ExtNat> out;
  out.reserve(g.order() - 1);
  for (Elem x = 0; x < g.order(); ++x) {
    if (x != g.identity()) {
      out.push_back(all[x]);
    }
  }
  return out;
}

Report zeta_check(const FiniteGroup& g, std::size_t exhaustive_limit, std::size_t samples,
                  std::uint64_t seed) {
  Report report("zeta anti-isometry on " + g.name());
  CheckItem& direct = report.item("nu_H(S,T) = lambda(nu_T, nu_S)");
  CheckItem& hat = report.item("nu_H_hat(S,T) = max(lambda(nu_T,nu_S), lambda(nu_S,nu_T))");
  if (g.order() < 2) {
    return report;  // S'(G)^* is empty
  }
  auto check_pair = [&](const Subset& s, const Subset& t, const std::vector<ExtNat>& ls,
                        const std::vector<ExtNat>& lt) {
    const ExtNat expected = nu_sup(g, s, t);
    const ExtRatio lam = lambda(lt, ls);
    direct.record(lam == ExtRatio::from(expected), [&] {
      return "S=" + s.to_string() + " T=" + t.to_string() + " nu_H=" + expected.to_string() +
             " lambda=" + lam.to_string();
    });
    const ExtNat expected_hat = max(expected, nu_sup(g, t, s));
    const ExtRatio lam_back = lambda(ls, lt);
    const ExtRatio lam_hat = lam < lam_back ? lam_back : lam;
    hat.record(lam_hat == ExtRatio::from(expected_hat), [&] {
      return "S=" + s.to_string() + " T=" + t.to_string();
    });
  };
  if (g.order() <= exhaustive_limit) {
    const auto family = starred_prime_family(g);
    std::vector<std::vector<ExtNat>> lens;
    lens.reserve(family.size());
    for (const auto& s : family) {
      lens.push_back(lengths_off_identity(g, s));
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        check_pair(family[i], family[j], lens[i], lens[j]);
      }
    }
  } else {
    Sampler sampler(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      const Subset s = sampler.starred_prime(g);
      const Subset t = sampler.starred_prime(g);
      check_pair(s, t, lengths_off_identity(g, s), lengths_off_identity(g, t));
    }
  }
  return report;
}

Report nu_H_axiom_check(const FiniteGroup& g, std::size_t exhaustive_limit, std::size_t samples,
                        std::uint64_t seed) {
  Report report("nu_H axioms on S''(G)^* of " + g.name());
  CheckItem& refl = report.item("nu_H(S,S) = 1");
  CheckItem& tri = report.item("nu_H(S,U) <= nu_H(S,T) nu_H(T,U)");
  CheckItem& nondeg = report.item("nu_H(S,T) = nu_H(T,S) = 1 => S = T");
  CheckItem& one = report.item("nu_H(S,A) = 1 <=> A not in {e} and A in S u {e}");
  CheckItem& both = report.item("nu_H(S,T) = nu_H(T,S) = 1 <=> S - {e} = T - {e} != empty");
  CheckItem& range = report.item("nu_H(S,T) >= 1");
  if (g.order() < 2) {
    return report;  // S''(G)^* is empty
  }
  const Elem e = g.identity();
  const Subset unit = g.identity_set();
  auto pair_checks = [&](const Subset& s, const Subset& t, ExtNat st, ExtNat ts) {
    const auto w = [&] {
      return "S=" + s.to_string() + " T=" + t.to_string() + " nu_H(S,T)=" + st.to_string() +
             " nu_H(T,S)=" + ts.to_string();
    };
    range.record(st >= ExtNat(1), w);
    const bool ones = st == ExtNat(1) && ts == ExtNat(1);
    nondeg.record(!ones || s == t, w);
    const Subset s_off = s - unit;
    const Subset t_off = t - unit;
    both.record(ones == (s_off == t_off && !s_off.empty()), w);
    one.record((st == ExtNat(1)) == (!t.is_subset_of(unit) && t.is_subset_of(s | unit)), w);
  };
  auto triple_check = [&](const Subset& s, const Subset& t, const Subset& u, ExtNat su,
                          ExtNat st, ExtNat tu) {
    tri.record(su <= st * tu, [&] {
      return "S=" + s.to_string() + " T=" + t.to_string() + " U=" + u.to_string();
    });
  };
  if (g.order() <= exhaustive_limit) {
    const auto family = starred_double_prime_family(g);
    const std::size_t m = family.size();
    std::vector<std::vector<ExtNat>> nu(m, std::vector<ExtNat>(m));
    for (std::size_t i = 0; i < m; ++i) {
      const auto len = word_lengths(g, family[i]);
      for (std::size_t j = 0; j < m; ++j) {
        nu[i][j] = nu_sup(len, family[j]);
      }
    }
    const std::uint64_t base = tri.checked;
    for (std::size_t i = 0; i < m; ++i) {
      refl.record(nu[i][i] == ExtNat(1), [&] { return "S=" + family[i].to_string(); });
      for (std::size_t j = 0; j < m; ++j) {
        pair_checks(family[i], family[j], nu[i][j], nu[j][i]);
        for (std::size_t k = 0; k < m; ++k) {
          // Record only failures individually; the count is added below.
          if (!(nu[i][k] <= nu[i][j] * nu[j][k])) {
            triple_check(family[i], family[j], family[k], nu[i][k], nu[i][j], nu[j][k]);
          }
        }
      }
    }
    tri.checked = base + static_cast<std::uint64_t>(m) * m * m;
  } else {
    Sampler sampler(seed);
    for (std::size_t n = 0; n < samples; ++n) {
      const Subset s = sampler.starred_double_prime(g);
      const Subset t = sampler.starred_double_prime(g);
      const Subset u = sampler.starred_double_prime(g);
      const auto ls = word_lengths(g, s);
      const auto lt = word_lengths(g, t);
      refl.record(nu_sup(ls, s) == ExtNat(1), [&] { return "S=" + s.to_string(); });
      pair_checks(s, t, nu_sup(ls, t), nu_sup(lt, s));
      // A pair that shares S - {e}, so the equality side of the
      // characterizations is exercised too.
      const Subset s_alt = s.contains(e) ? s : s | unit;
      pair_checks(s, s_alt, nu_sup(ls, s_alt), nu_sup(word_lengths(g, s_alt), s));
      // A subset of S as the second argument.
      const Subset sub = sampler.subset_of(s);
      one.record((nu_sup(ls, sub) == ExtNat(1)) ==
                     (!sub.is_subset_of(unit) && sub.is_subset_of(s | unit)),
                 [&] { return "S=" + s.to_string() + " A=" + sub.to_string(); });
      triple_check(s, t, u, nu_sup(ls, u), nu_sup(ls, t), nu_sup(lt, u));
    }
  }
  return report;
}

Report discrete_ball_check(const FiniteGroup& g, std::size_t exhaustive_limit,
                           std::size_t max_generating_sets, std::uint64_t seed) {
  Report report("discrete balls on " + g.name());
  CheckItem& item = report.item("B_H(A,r) = B(A,r)");
  Sampler sampler(seed);
  const std::size_t n = g.order();
  const bool all_sets = n < 63 && (std::uint64_t{1} << n) <= max_generating_sets;
  std::vector<Subset> gens;
  if (all_sets) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      gens.push_back(g.subset_from_mask(mask));
    }
  } else {
    gens = {g.empty_set(), g.identity_set(), g.full_set()};
    while (gens.size() < max_generating_sets) {
      gens.push_back(sampler.subset_of(g.full_set()));
    }
  }
  std::vector<Subset> centers;
  if (n <= exhaustive_limit && n < 63) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      centers.push_back(g.subset_from_mask(mask));
    }
  } else {
    centers = {g.empty_set(), g.identity_set(), g.full_set()};
    while (centers.size() < max_generating_sets) {
      centers.push_back(sampler.subset_of(g.full_set()));
    }
  }
  for (const auto& s : gens) {
    const MetricTable d = word_metric_table(g, s);
    for (const auto& a : centers) {
      for (std::uint64_t r = 0; r <= n; ++r) {
        const Subset lhs = hausdorff_ball(d, a, r);
        const Subset rhs = ball(g, s, a, r);
        item.record(lhs == rhs, [&] {
          return "S=" + s.to_string() + " A=" + a.to_string() + " r=" + std::to_string(r) +
                 " B_H=" + lhs.to_string() + " B=" + rhs.to_string();
        });
      }
    }
  }
  return report;
}

std::vector<ExtNat> naive_word_lengths(const FiniteGroup& g, const Subset& s,
                                       std::uint64_t max_len) {
  g.require_member(s);
  const std::size_t n = g.order();
  const auto gens = s.elements();
  std::vector<ExtNat> out(n, kInfinity);
  std::vector<char> layer(n, 0);
  layer[g.identity()] = 1;
  for (std::uint64_t len = 0;; ++len) {
    for (Elem x = 0; x < n; ++x) {
      if (layer[x] != 0 && out[x].is_infinite()) {
        out[x] = len;
      }
    }
    if (len == max_len) {
      break;
    }
    std::vector<char> next(n, 0);
    for (Elem x = 0; x < n; ++x) {
      if (layer[x] != 0) {
        for (Elem t : gens) {
          next[g.mul(x, t)] = 1;
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

Report word_length_oracle_check(const FiniteGroup& g, std::uint64_t max_len,
                                std::size_t exhaustive_limit, std::size_t samples,
                                std::uint64_t seed) {
  Report report("word lengths against brute force on " + g.name());
  CheckItem& lengths = report.item("breadth-first nu_S = brute-force nu_S");
  CheckItem& powers = report.item("S^n and S^(<=n) = brute-force products");
  const std::size_t n = g.order();
  std::vector<Subset> sets;
  if (n <= exhaustive_limit && n < 63) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      sets.push_back(g.subset_from_mask(mask));
    }
  } else {
    Sampler sampler(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      sets.push_back(sampler.subset_of(g.full_set()));
    }
  }
  for (const auto& s : sets) {
    const auto fast = word_lengths(g, s);
    const auto slow = naive_word_lengths(g, s, max_len);
    for (Elem x = 0; x < n; ++x) {
      const bool ok = slow[x].is_finite()
                          ? fast[x] == slow[x]
                          : fast[x].is_infinite() || fast[x].value() > max_len;
      lengths.record(ok, [&] {
        return "S=" + s.to_string() + " x=" + std::to_string(x) + " bfs=" + fast[x].to_string() +
               " brute=" + slow[x].to_string();
      });
    }
    // The exact-n products, rebuilt layer by layer from the table.
    const auto gens = s.elements();
    Subset layer = g.identity_set();
    Subset upto = layer;
    for (std::uint64_t k = 0; k <= max_len; ++k) {
      if (k > 0) {
        Subset next = g.empty_set();
        layer.for_each([&](Elem x) {
          for (Elem t : gens) {
            next.insert(g.mul(x, t));
          }
        });
        layer = std::move(next);
        upto |= layer;
      }
      powers.record(power(g, s, k) == layer && power_leq(g, s, k) == upto, [&] {
        return "S=" + s.to_string() + " n=" + std::to_string(k);
      });
    }
  }
  return report;
}

}  // namespace wordmetrics
