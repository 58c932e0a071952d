#include "wordmetrics/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "wordmetrics/action.hpp"
#include "wordmetrics/catalog.hpp"
#include "wordmetrics/identities.hpp"
#include "wordmetrics/invariants.hpp"
#include "wordmetrics/metric.hpp"
#include "wordmetrics/product.hpp"
#include "wordmetrics/sampling.hpp"
#include "wordmetrics/star_set.hpp"
#include "wordmetrics/subset_algebra.hpp"
#include "wordmetrics/transport.hpp"

namespace wordmetrics {

namespace {

using Mask = std::uint64_t;

std::vector<Subset> all_subsets(const FiniteGroup& g) {
  std::vector<Subset> out;
  for (Mask m = 0; m < (Mask{1} << g.order()); ++m) {
    out.push_back(g.subset_from_mask(m));
  }
  return out;
}

std::vector<Subset> all_subsets(const StarSet& x) {
  std::vector<Subset> out;
  for (Mask m = 0; m < (Mask{1} << x.size()); ++m) {
    out.push_back(Subset::from_mask(x.id(), x.size(), m));
  }
  return out;
}

std::vector<Subset> nonempty_subsets(const StarSet& x) {
  auto out = all_subsets(x);
  out.erase(out.begin());
  return out;
}

// Every subset when |G| <= limit, otherwise `count` sets: the empty set,
// {e}, G and random ones.
std::vector<Subset> subsets_or_sample(const FiniteGroup& g, std::size_t limit, std::size_t count,
                                      Sampler& sampler) {
  if (g.order() <= limit) {
    return all_subsets(g);
  }
  std::vector<Subset> out{g.empty_set(), g.identity_set(), g.full_set()};
  while (out.size() < count) {
    out.push_back(sampler.subset_of(g.full_set()));
  }
  return out;
}

std::vector<CatalogGroup> catalog(const AcceptanceOptions& o) {
  return group_catalog(o.max_order, true);
}

// Groups of order 17..24 beyond the catalog, for the sampled identities.
std::vector<GroupPtr> extra_groups() {
  std::vector<GroupPtr> out;
  for (std::size_t n = 17; n <= 24; ++n) {
    out.push_back(cyclic(n));
  }
  for (std::size_t n = 9; n <= 12; ++n) {
    out.push_back(dihedral(n));
  }
  out.push_back(dicyclic(5));
  out.push_back(dicyclic(6));
  out.push_back(direct_product(symmetric(3), cyclic(3)));
  out.push_back(direct_product(alternating(4), cyclic(2)));
  out.push_back(direct_product(dihedral(4), cyclic(3)));
  return out;
}

const QuotientCase& quotient_named(const std::vector<QuotientCase>& cases, const std::string& n) {
  for (const auto& c : cases) {
    if (c.name == n) {
      return c;
    }
  }
  throw std::out_of_range("no standard quotient " + n);
}

// ---------------------------------------------------------------------------

Report criterion_nu_h_axioms(const AcceptanceOptions& o) {
  Report r;
  for (const auto& c : catalog(o)) {
    r.merge(nu_H_axiom_check(*c.group, 8, 1000, o.seed), c.name);
  }
  return r;
}

Report criterion_zeta(const AcceptanceOptions& o) {
  Report r;
  for (const auto& c : catalog(o)) {
    r.merge(zeta_check(*c.group, 8, 500, o.seed), c.name);
  }
  return r;
}

Report criterion_identities(const AcceptanceOptions& o) {
  Report r;
  for (const auto& c : catalog(o)) {
    r.merge(subset_identity_suite(*c.group, 8, 500, o.seed), c.name);
  }
  if (o.extended_identities) {
    for (const auto& g : extra_groups()) {
      r.merge(subset_identity_suite(*g, 8, 500, o.seed), g->name());
    }
  }
  return r;
}

Report criterion_balls(const AcceptanceOptions& o) {
  Report r;
  for (const auto& c : catalog(o)) {
    if (c.group->order() <= 8) {
      r.merge(discrete_ball_check(*c.group, 8, 64, o.seed), c.name);
    }
  }
  return r;
}

Report criterion_pullback(const AcceptanceOptions&) {
  Report r;
  for (const auto& q : standard_quotients()) {
    const auto sample_h = all_subsets(*q.f.target());
    r.merge(verify_pullback_isometry(q.f, sample_h), q.name);
  }
  return r;
}

Report criterion_retraction(const AcceptanceOptions&) {
  Report r;
  for (const auto& q : standard_quotients()) {
    r.merge(retraction_defect_check(q.f, starred_double_prime_family(*q.f.source())), q.name);
  }
  return r;
}

Report criterion_nfg_bounds(const AcceptanceOptions&) {
  Report r;
  const auto cases = standard_quotients();
  for (const char* name : {"S3->Z2", "D4->Z2xZ2"}) {
    const QuotientCase& q = quotient_named(cases, name);
    const KernelWitness w = kernel_witness(q.f);
    const auto family_h = nfg_family(*q.f.target());
    const auto family_g = nfg_family(*q.f.source());
    for (std::uint64_t m : {w.m0, w.m0 + 1}) {
      r.merge(qi_bounds_check(q.f, w, m, family_h, family_g),
              std::string(name) + " m=" + std::to_string(m));
    }
    r.item(std::string(name) + "/m0 = diam_nfg(K)")
        .record(w.m0 == diam_nfg(*q.f.source(), w.kernel).value.value(), [&] {
          return "m0=" + std::to_string(w.m0);
        });
  }
  return r;
}

Report criterion_semidirect(const AcceptanceOptions& o) {
  Report r;
  {
    const SemidirectContext ctx = s3_semidirect();
    const FiniteGroup& g = *ctx.group;
    const auto fs = starred_double_prime_family(g, ctx.h);
    const auto fu = starred_double_prime_family(g, ctx.k);
    r.merge(psi_identities(ctx, fs, fu, {ctx.k}), "S3 psi");
    r.merge(sdprod_metric_compare(ctx, ctx.k, fs, fu), "S3 L=K");
  }
  const auto direct = [&](const char* h, const char* k, std::size_t samples) {
    const SemidirectContext ctx = direct_context(catalog_group(h), catalog_group(k));
    const FiniteGroup& g = *ctx.group;
    const auto fs = starred_double_prime_family(g, ctx.h);
    const auto fu = starred_double_prime_family(g, ctx.k);
    const std::string label = std::string(h) + "x" + k;
    r.merge(direct_product_collapse(ctx, fs, fu, samples, o.seed), label);
    r.merge(psi_identities(ctx, fs, fu, {ctx.k}), label + " psi");
  };
  direct("Z2", "Z3", 0);
  direct("Z4", "Z3", 500);
  return r;
}

Report criterion_invariants(const AcceptanceOptions& o) {
  Report r;
  const GroupPtr s3 = catalog_group("S3");
  {
    const RankResult rank = rank_n(*s3);
    const int naive = naive_rank_n(*s3);
    r.item("rank_n(S3) = 1").record(rank.value == ExtNat(1) && naive == 1, [&] {
      return "enumerator=" + rank.value.to_string() + " naive=" + std::to_string(naive);
    });
    const ExtremeResult d = delta(*s3);
    const NaiveDiameters nd = naive_nfg_diameters(*s3);
    r.item("Delta(S3) = 2").record(d.exact && d.value == ExtNat(2) && nd.max == 2, [&] {
      return "enumerator=" + d.value.to_string() + " naive=" + std::to_string(nd.max);
    });
  }
  CheckItem& diam = r.item("diam_nfg(G) = 1");
  CheckItem& fam = r.item("nfg family = brute-force family");
  for (const auto& c : catalog(o)) {
    const FiniteGroup& g = *c.group;
    if (g.order() < 2) {
      diam.skip("trivial group");
      continue;
    }
    const ExtremeResult d = diam_nfg(g);
    const NaiveDiameters nd = naive_nfg_diameters(g);
    diam.record(d.value == ExtNat(1) && nd.min == 1, [&] {
      return c.name + ": enumerator=" + d.value.to_string() + " naive=" + std::to_string(nd.min);
    });
    fam.record(nfg_family(g).size() == nd.family_size, [&] {
      return c.name + ": " + std::to_string(nfg_family(g).size()) + " vs " +
             std::to_string(nd.family_size);
    });
    if (g.order() <= 8) {
      r.merge(verify_nfg_family(g, nfg_family(g)), c.name);
    }
  }
  return r;
}

Report criterion_actions(const AcceptanceOptions& o) {
  Report r;
  Sampler sampler(o.seed);
  for (const auto& a : action_catalog()) {
    const FiniteGroup& g = *a.group();
    const auto sets = subsets_or_sample(g, 8, 48, sampler);
    for (const auto& s : sets) {
      r.merge(action_metric_facts(a, s), a.name());
      for (Elem x = 0; x < a.carrier(); ++x) {
        r.merge(orbit_map_check(a, s, x), a.name());
      }
    }
    if (g.order() <= 6) {
      for (const auto& s : sets) {
        for (const auto& t : sets) {
          r.merge(comparison_bound_check(a, s, t), a.name());
        }
      }
    } else {
      for (int i = 0; i < 1500; ++i) {
        r.merge(comparison_bound_check(a, sets[sampler.below(sets.size())],
                                       sets[sampler.below(sets.size())]),
                a.name());
      }
    }
    if (a.carrier() >= 2) {
      std::vector<Subset> family;
      for (const auto& s : sets) {
        if (!s.empty() && !(s == g.identity_set()) && family.size() < 64) {
          family.push_back(s);
        }
      }
      r.merge(function_space_embedding_check(a, family), a.name());
    }
  }
  CheckItem& exact = r.item("right translation reproduces d_S");
  for (const auto& c : catalog(o)) {
    const GroupAction a = GroupAction::right_translation(c.group);
    for (const auto& s : subsets_or_sample(*c.group, 8, 32, sampler)) {
      exact.record(action_metric_table(a, s).values == word_metric_table(*c.group, s).values,
                   [&] { return c.name + " S=" + s.to_string(); });
    }
  }
  return r;
}

StarSymmetry translations_of(const StarSet& x) {
  StarSymmetry r;
  for (Elem a = 0; a < x.size(); ++a) {
    std::vector<Elem> f(x.size());
    for (Elem y = 0; y < x.size(); ++y) {
      f[y] = x.op(0, y, a);
    }
    r.maps.push_back(std::move(f));
  }
  return r;
}

StarSymmetry identity_of(const StarSet& x) {
  StarSymmetry r;
  std::vector<Elem> id(x.size());
  for (Elem y = 0; y < x.size(); ++y) {
    id[y] = y;
  }
  r.maps.push_back(std::move(id));
  r.compose = std::vector<std::vector<std::size_t>>{{0}};
  return r;
}

// x^a = a^-1 x a on a group table, with R = G and f_{ab} = f_b o f_a.
StarSymmetry inner_of(const FiniteGroup& g) {
  StarSymmetry r;
  std::vector<std::vector<std::size_t>> compose(g.order(), std::vector<std::size_t>(g.order()));
  for (Elem a = 0; a < g.order(); ++a) {
    std::vector<Elem> f(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      f[x] = g.conj(x, a);
    }
    r.maps.push_back(std::move(f));
    for (Elem b = 0; b < g.order(); ++b) {
      compose[a][b] = g.mul(a, b);
    }
  }
  r.compose = std::move(compose);
  return r;
}

std::vector<StarSet> small_star_sets() {
  std::vector<StarSet> out = quandle_catalog();
  for (auto& x : star_set_catalog()) {
    out.push_back(std::move(x));
  }
  out.push_back(StarSet::from_group(*catalog_group("S3")));
  out.push_back(StarSet::from_group(*catalog_group("Z4")));
  return out;
}

Report criterion_star_sets(const AcceptanceOptions& o) {
  Report r;
  Sampler sampler(o.seed);
  CheckItem& eq = r.item("star word length on a group table = group word length");
  for (const auto& c : catalog(o)) {
    const StarSet x = StarSet::from_group(*c.group);
    for (const auto& s : subsets_or_sample(*c.group, 8, 16, sampler)) {
      const auto lhs = star_word_lengths(x, x.subset(s.elements()));
      const auto rhs = word_lengths(*c.group, s);
      eq.record(lhs == rhs, [&] { return c.name + " S=" + s.to_string(); });
    }
  }
  for (const auto& x : small_star_sets()) {
    const auto family = nonempty_subsets(x);
    for (const auto& s : family) {
      r.merge(star_power_facts(x, s), x.name());
      r.merge(star_metric_facts(x, s), x.name());
    }
    r.merge(star_nu_H_facts(x, family), x.name());
    r.merge(phi_invariance_suite(x, identity_of(x), x.full_set(), 64, o.seed),
            x.name() + " trivial R");
  }
  for (const auto& q : quandle_catalog()) {
    const StarSymmetry sigma = translations_of(q);
    StarSymmetry autos;
    autos.maps = quandle_automorphisms(q);
    for (const auto& s : nonempty_subsets(q)) {
      r.merge(phi_invariance_suite(q, sigma, s, 256, o.seed), q.name() + " sigma");
      r.merge(phi_invariance_suite(q, autos, s, 256, o.seed), q.name() + " Aut");
    }
    r.merge(phi_fg_family_check(q, sigma), q.name() + " sigma");
  }
  {
    const GroupPtr s3 = catalog_group("S3");
    const StarSet x = StarSet::from_group(*s3);
    const StarSymmetry inner = inner_of(*s3);
    for (const auto& s : nonempty_subsets(x)) {
      r.merge(phi_invariance_suite(x, inner, s, 256, o.seed), "S3 inner");
    }
  }
  return r;
}

// [x0, S, n] by brute force: every word x0 s1 ... sn, every bracketing,
// every operation.  all_brackets = false keeps only ((x0 s1) s2) ... sn.
Subset star_reach_by_words(const StarSet& x, const Subset& s, Elem x0, std::uint64_t n,
                           bool all_brackets) {
  const auto letters = s.elements();
  Subset out = x.empty_set();
  if (n == 0) {
    out.insert(x0);
    return out;
  }
  if (letters.empty()) {
    return out;
  }
  const std::size_t len = n + 1;
  std::vector<std::size_t> word(n, 0);
  std::vector<std::vector<Subset>> vals(len, std::vector<Subset>(len));
  while (true) {
    std::vector<Elem> w{x0};
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(letters[word[i]]);
    }
    if (all_brackets) {
      for (std::size_t i = 0; i < len; ++i) {
        vals[i][i] = x.subset({w[i]});
      }
      for (std::size_t span = 2; span <= len; ++span) {
        for (std::size_t i = 0; i + span <= len; ++i) {
          const std::size_t j = i + span - 1;
          Subset v = x.empty_set();
          for (std::size_t k = i; k < j; ++k) {
            vals[i][k].for_each([&](Elem a) {
              vals[k + 1][j].for_each([&](Elem b) {
                for (std::size_t op = 0; op < x.op_count(); ++op) {
                  v.insert(x.op(op, a, b));
                }
              });
            });
          }
          vals[i][j] = std::move(v);
        }
      }
      out |= vals[0][len - 1];
    } else {
      Subset acc = x.subset({x0});
      for (std::size_t i = 1; i < len; ++i) {
        Subset next = x.empty_set();
        acc.for_each([&](Elem a) {
          for (std::size_t op = 0; op < x.op_count(); ++op) {
            next.insert(x.op(op, a, w[i]));
          }
        });
        acc = std::move(next);
      }
      out |= acc;
    }
    std::size_t pos = 0;
    while (pos < n && ++word[pos] == letters.size()) {
      word[pos] = 0;
      ++pos;
    }
    if (pos == n) {
      break;
    }
  }
  return out;
}

// The largest n <= 8 with |S|^n <= budget words.
std::uint64_t word_horizon(std::size_t letters, std::uint64_t budget) {
  std::uint64_t n = 0;
  std::uint64_t words = 1;
  while (n < 8 && words * letters <= budget) {
    words *= letters;
    ++n;
  }
  return n;
}

Report criterion_oracles(const AcceptanceOptions& o) {
  Report r;
  for (const auto& c : catalog(o)) {
    if (c.group->order() <= 8) {
      r.merge(word_length_oracle_check(*c.group, 8, 8, 64, o.seed), c.name);
    }
  }

  constexpr std::uint64_t kBudget = 4096;
  CheckItem& pw = r.item("S^n = brute-force S^n (star-sets)");
  CheckItem& len = r.item("star nu_S = brute-force nu_S");
  CheckItem& dist = r.item("d_S = brute-force d_S (star-sets)");
  CheckItem& dist_p = r.item("d'_S = brute-force d'_S (star-sets)");
  for (const auto& x : small_star_sets()) {
    if (x.size() > 8) {
      continue;
    }
    for (const auto& s : nonempty_subsets(x)) {
      const std::uint64_t horizon = word_horizon(s.count(), kBudget);
      const auto fast = star_word_lengths(x, s);
      std::vector<ExtNat> slow(x.size(), kInfinity);
      if (x.unit()) {
        slow[*x.unit()] = 0;
      }
      for (std::uint64_t n = 1; n <= horizon; ++n) {
        const Subset brute = star_power_by_words(x, s, n);
        pw.record(star_power(x, s, n) == brute, [&] {
          return x.name() + " S=" + s.to_string() + " n=" + std::to_string(n);
        });
        brute.for_each([&](Elem y) {
          if (slow[y].is_infinite()) {
            slow[y] = n;
          }
        });
      }
      for (Elem y = 0; y < x.size(); ++y) {
        const bool ok = slow[y].is_finite() ? fast[y] == slow[y]
                                            : fast[y].is_infinite() || fast[y].value() > horizon;
        len.record(ok, [&] {
          return x.name() + " S=" + s.to_string() + " y=" + std::to_string(y) +
                 " fixpoint=" + fast[y].to_string() + " brute=" + slow[y].to_string();
        });
      }
      const std::uint64_t dh = word_horizon(s.count(), kBudget / 8);
      for (Elem x0 = 0; x0 < x.size(); ++x0) {
        for (bool all : {true, false}) {
          const auto d = star_distances_from(
              x, s, x0,
              all ? StarMetricVariant::all_parenthesizations : StarMetricVariant::left_normed);
          std::vector<ExtNat> brute(x.size(), kInfinity);
          for (std::uint64_t n = 0; n <= dh; ++n) {
            star_reach_by_words(x, s, x0, n, all).for_each([&](Elem y) {
              if (brute[y].is_infinite()) {
                brute[y] = n;
              }
            });
          }
          for (Elem y = 0; y < x.size(); ++y) {
            const bool ok = brute[y].is_finite() ? d[y] == brute[y]
                                                 : d[y].is_infinite() || d[y].value() > dh;
            (all ? dist : dist_p).record(ok, [&] {
              return x.name() + " S=" + s.to_string() + " " + std::to_string(x0) + "->" +
                     std::to_string(y) + " got=" + d[y].to_string() +
                     " brute=" + brute[y].to_string();
            });
          }
        }
      }
    }
  }

  CheckItem& act = r.item("action d_S = brute-force d_S");
  for (const auto& a : action_catalog()) {
    const FiniteGroup& g = *a.group();
    if (g.order() > 8) {
      continue;
    }
    for (const auto& s : all_subsets(g)) {
      const auto lengths = naive_word_lengths(g, s, 8);
      for (Elem x0 = 0; x0 < a.carrier(); ++x0) {
        std::vector<ExtNat> brute(a.carrier(), kInfinity);
        for (Elem h = 0; h < g.order(); ++h) {
          const Elem y = a.act(x0, h);
          brute[y] = min(brute[y], lengths[h]);
        }
        const auto d = action_distances_from(a, s, x0);
        act.record(d == brute, [&] {
          return a.name() + " S=" + s.to_string() + " x=" + std::to_string(x0);
        });
      }
    }
  }
  return r;
}

struct CriterionDef {
  const char* title;
  Report (*run)(const AcceptanceOptions&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"nu_H metric axioms on S''(G)^*", criterion_nu_h_axioms},
    {"zeta anti-isometry nu_H(S,T) = lambda(nu_T, nu_S)", criterion_zeta},
    {"subset-algebra identities", criterion_identities},
    {"discrete-ball identity B_H(A,r) = B(A,r)", criterion_balls},
    {"pullback isometry and f_* f^* = id", criterion_pullback},
    {"retraction defect bound", criterion_retraction},
    {"quasi-isometry bounds for eta", criterion_nfg_bounds},
    {"semidirect and direct product formulas", criterion_semidirect},
    {"rank_n, Delta and diam_nfg", criterion_invariants},
    {"group actions: orbit maps and comparison bound", criterion_actions},
    {"star-sets: lengths, subadditivity, d_S <= d'_S, phi-invariance", criterion_star_sets},
    {"word lengths against brute-force products", criterion_oracles},
};

}  // namespace

CriterionResult run_criterion(int number, const AcceptanceOptions& options) {
  if (number < 1 || number > kCriterionCount) {
    throw std::out_of_range("criterion number must be 1.." + std::to_string(kCriterionCount));
  }
  const CriterionDef& def = kCriteria[number - 1];
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result{number, def.title, Report(def.title), 0};
  try {
    result.report = def.run(options);
  } catch (const std::exception& e) {
    result.report = Report(def.title);
    result.report.item("completed without error").record(false, [&] { return e.what(); });
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options, const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int n = 1; n <= kCriterionCount; ++n) {
    out.push_back(run_criterion(n, options));
    if (progress) {
      progress(out.back());
    }
  }
  return out;
}

std::string criterion_line(const CriterionResult& r, bool with_time) {
  std::string line = "criterion " + std::to_string(r.number) + (r.passed() ? " PASS " : " FAIL ") +
                     r.title + " (checked=" + std::to_string(r.report.total_checked()) +
                     ", violations=" + std::to_string(r.report.total_violations());
  if (with_time) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.1f s", r.seconds);
    line += buf;
  }
  return line + ")";
}

// ---------------------------------------------------------------------------
// Brute-force oracles on bitmasks.

namespace {

struct MaskGroup {
  const FiniteGroup& g;
  std::size_t n;
  Mask full;

  explicit MaskGroup(const FiniteGroup& group)
      : g(group), n(group.order()), full(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1) {
    if (n > 24) {
      throw std::length_error("brute-force oracle limited to order 24");
    }
  }
  Mask bit(Elem x) const { return Mask{1} << x; }
  Mask mul(Mask a, Mask b) const {
    Mask out = 0;
    for (Elem x = 0; x < n; ++x) {
      if ((a >> x) & 1U) {
        for (Elem y = 0; y < n; ++y) {
          if ((b >> y) & 1U) {
            out |= bit(g.mul(x, y));
          }
        }
      }
    }
    return out;
  }
  Mask inv(Mask a) const {
    Mask out = 0;
    for (Elem x = 0; x < n; ++x) {
      if ((a >> x) & 1U) {
        out |= bit(g.inv(x));
      }
    }
    return out;
  }
  Mask conj_closure(Mask a) const {
    Mask out = 0;
    for (Elem x = 0; x < n; ++x) {
      if ((a >> x) & 1U) {
        for (Elem c = 0; c < n; ++c) {
          out |= bit(g.conj(x, c));
        }
      }
    }
    return out;
  }
};

}  // namespace

int naive_rank_n(const FiniteGroup& g, std::size_t cap) {
  const MaskGroup m(g);
  const auto normal_closure = [&](Mask a) {
    Mask gens = m.conj_closure(a | m.inv(a));
    Mask reach = m.bit(g.identity());
    while (true) {
      const Mask next = reach | m.mul(reach, gens);
      if (next == reach) {
        return reach;
      }
      reach = next;
    }
  };
  for (std::size_t k = 0; k <= cap; ++k) {
    // Every k-subset of G, by Gosper's hack over n-bit masks.
    if (k == 0) {
      if (normal_closure(0) == m.full) {
        return 0;
      }
      continue;
    }
    if (k > m.n) {
      break;
    }
    Mask a = (Mask{1} << k) - 1;
    while (a <= m.full) {
      if (normal_closure(a) == m.full) {
        return static_cast<int>(k);
      }
      const Mask c = a & (~a + 1);
      const Mask r = a + c;
      a = (((r ^ a) >> 2) / c) | r;
    }
  }
  return -1;
}

NaiveDiameters naive_nfg_diameters(const FiniteGroup& g) {
  const MaskGroup m(g);
  NaiveDiameters out;
  out.min = ~std::uint64_t{0};
  const Elem e = g.identity();
  std::vector<Mask> cls(m.n);
  std::vector<Elem> inv(m.n);
  for (Elem x = 0; x < m.n; ++x) {
    cls[x] = m.conj_closure(m.bit(x));
    inv[x] = g.inv(x);
  }
  std::vector<Elem> others;
  for (Elem x = 0; x < m.n; ++x) {
    if (x != e) {
      others.push_back(x);
    }
  }
  for (Mask sub = 0; sub < (Mask{1} << others.size()); ++sub) {
    Mask s = m.bit(e);
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((sub >> i) & 1U) {
        s |= m.bit(others[i]);
      }
    }
    bool ok = true;
    for (Elem x = 0; x < m.n && ok; ++x) {
      if ((s >> x) & 1U) {
        ok = ((s >> inv[x]) & 1U) != 0 && (cls[x] & ~s) == 0;
      }
    }
    if (!ok) {
      continue;
    }
    // e in S, so S^n = S^{<=n}: count the layers until G is covered.
    Mask reach = m.bit(e);
    std::uint64_t steps = 0;
    while (reach != m.full) {
      const Mask next = m.mul(reach, s);
      if (next == reach) {
        break;
      }
      reach = next;
      ++steps;
    }
    if (reach != m.full) {
      continue;  // does not generate
    }
    if (m.n == 1) {
      steps = 0;
    }
    ++out.family_size;
    out.min = std::min(out.min, steps);
    out.max = std::max(out.max, steps);
  }
  if (out.family_size == 0) {
    out.min = 0;
  }
  return out;
}

}  // namespace wordmetrics
