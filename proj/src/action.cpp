#include "wordmetrics/action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wordmetrics/subset_algebra.hpp"

namespace wordmetrics {

namespace {

std::string pt(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

bool is_bijection(const std::vector<Elem>& f) {
  std::vector<bool> hit(f.size(), false);
  for (Elem v : f) {
    if (v >= f.size() || hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return true;
}

}  // namespace

GroupAction::GroupAction(GroupPtr group, std::size_t carrier, std::vector<Elem> table,
                         std::string name)
    : group_(std::move(group)), carrier_(carrier), table_(std::move(table)),
      name_(std::move(name)), id_(next_universe_id()) {
  if (!group_) {
    throw GroupAxiomError("action needs a group");
  }
  const std::size_t n = group_->order();
  if (carrier_ == 0) {
    throw GroupAxiomError("action carrier must be nonempty");
  }
  if (table_.size() != carrier_ * n) {
    throw GroupAxiomError("action table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(carrier_ * n));
  }
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (table_[k] >= carrier_) {
      throw GroupAxiomError("action entry (x,a) = " +
                            pt(static_cast<Elem>(k / n), static_cast<Elem>(k % n)) +
                            " is outside the carrier");
    }
  }
  const Elem e = group_->identity();
  for (Elem x = 0; x < carrier_; ++x) {
    if (act(x, e) != x) {
      throw GroupAxiomError("identity axiom fails: x e != x at x=" + std::to_string(x));
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (act(act(x, a), b) != act(x, group_->mul(a, b))) {
          throw GroupAxiomError("compatibility fails: (xa)b != x(ab) at x=" + std::to_string(x) +
                                " (a,b)=" + pt(a, b));
        }
      }
    }
  }
  if (name_.empty()) {
    name_ = group_->name() + " on " + std::to_string(carrier_) + " points";
  }
}

GroupAction GroupAction::right_translation(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem a = 0; a < n; ++a) {
      t[x * n + a] = g->mul(x, a);
    }
  }
  return GroupAction(g, n, std::move(t), g->name() + " by right translation");
}

GroupAction GroupAction::from_permutations(const GroupPtr& g,
                                           const std::vector<std::vector<Elem>>& perms,
                                           std::string name) {
  const std::size_t n = g->order();
  if (perms.size() != n || perms.empty()) {
    throw GroupAxiomError("need one permutation per group element");
  }
  const std::size_t m = perms[0].size();
  std::vector<Elem> t(m * n);
  for (Elem a = 0; a < n; ++a) {
    if (perms[a].size() != m) {
      throw GroupAxiomError("permutation " + std::to_string(a) + " has the wrong degree");
    }
    for (Elem x = 0; x < m; ++x) {
      t[x * n + a] = perms[a][x];
    }
  }
  return GroupAction(g, m, std::move(t), std::move(name));
}

Subset GroupAction::orbit(Elem x) const {
  Subset o = Subset(id_, carrier_);
  for (Elem a = 0; a < group_->order(); ++a) {
    o.insert(act(x, a));
  }
  return o;
}

bool GroupAction::is_free_at(Elem x) const { return orbit(x).count() == group_->order(); }

std::vector<ExtNat> action_distances_from(const GroupAction& a, const Subset& s, Elem x0) {
  a.group()->require_member(s);
  if (x0 >= a.carrier()) {
    throw std::out_of_range("point " + std::to_string(x0) + " is outside the carrier");
  }
  std::vector<ExtNat> dist(a.carrier(), kInfinity);
  dist[x0] = 0;
  const auto gens = s.elements();
  std::deque<Elem> queue{x0};
  while (!queue.empty()) {
    const Elem y = queue.front();
    queue.pop_front();
    const ExtNat next = dist[y] + ExtNat(1);
    for (Elem g : gens) {
      const Elem z = a.act(y, g);
      if (dist[z].is_infinite()) {
        dist[z] = next;
        queue.push_back(z);
      }
    }
  }
  return dist;
}

ExtNat action_word_metric(const GroupAction& a, const Subset& s, Elem x, Elem y) {
  if (y >= a.carrier()) {
    throw std::out_of_range("point " + std::to_string(y) + " is outside the carrier");
  }
  return action_distances_from(a, s, x)[y];
}

MetricTable action_metric_table(const GroupAction& a, const Subset& s) {
  MetricTable t(a.carrier(), Flavor::additive);
  for (Elem x = 0; x < a.carrier(); ++x) {
    const auto row = action_distances_from(a, s, x);
    std::copy(row.begin(), row.end(), t.values.begin() + static_cast<std::ptrdiff_t>(x * t.size));
  }
  return t;
}

Subset action_ball(const GroupAction& a, const Subset& s, Elem x, ExtNat n) {
  const Subset p = power_leq(*a.group(), s, n);
  Subset out = Subset(a.id(), a.carrier());
  p.for_each([&](Elem g) { out.insert(a.act(x, g)); });
  return out;
}

Report action_metric_facts(const GroupAction& a, const Subset& s) {
  const FiniteGroup& g = *a.group();
  g.require_member(s);
  Report report("action word metric on " + a.name() + " S=" + s.to_string());
  const Elem m = static_cast<Elem>(a.carrier());
  const MetricTable d = action_metric_table(a, s);
  const AxiomReport ax = check_metric_axioms(d);
  report.item("d_S is an asymmetric metric").record(ax.is_asymmetric_metric(), [&] {
    return ax.classification(Flavor::additive);
  });
  CheckItem& nondeg = report.item("d_S(x,y) = 0 iff x = y");
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      nondeg.record((d.at(x, y) == ExtNat(0)) == (x == y), [&] { return pt(x, y); });
    }
  }

  const MetricTable dinv = action_metric_table(a, inverse_set(g, s));
  CheckItem& dual = report.item("d_S(x,y) = d_{S^-1}(y,x)");
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      dual.record(d.at(x, y) == dinv.at(y, x), [&] { return pt(x, y); });
    }
  }
  CheckItem& sym = report.item("S symmetric implies d_S symmetric");
  if (is_symmetric(g, s)) {
    sym.record(ax.symmetric, [&] { return std::string("asymmetric pair found"); });
  } else {
    sym.skip("S not symmetric");
  }

  CheckItem& balls = report.item("B(x,n) = x S^{<=n}");
  for (Elem x = 0; x < m; ++x) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      const Subset b = action_ball(a, s, x, n);
      Subset expected = b - b;
      for (Elem y = 0; y < m; ++y) {
        if (d.at(x, y) <= ExtNat(n)) {
          expected.insert(y);
        }
      }
      balls.record(b == expected, [&] { return "x=" + std::to_string(x) + " n=" + std::to_string(n); });
    }
  }

  Subset se = s;
  se.insert(g.identity());
  const MetricTable de = action_metric_table(a, se);
  report.item("d_S = d_{S u {e}}").record(de.values == d.values, [&] {
    return std::string("tables differ");
  });

  CheckItem& ones = report.item("d_S(x,.)^{-1}(1) = xS - {x}");
  for (Elem x = 0; x < m; ++x) {
    Subset level = Subset(a.id(), a.carrier());
    Subset xs = level;
    for (Elem y = 0; y < m; ++y) {
      if (d.at(x, y) == ExtNat(1)) {
        level.insert(y);
      }
    }
    s.for_each([&](Elem u) { xs.insert(a.act(x, u)); });
    xs.erase(x);
    ones.record(level == xs, [&] { return "x=" + std::to_string(x); });
  }

  CheckItem& conj = report.item("d_{S^a}(xa,ya) = d_S(x,y)");
  CheckItem& conj_inv = report.item("conjugation-invariant S: d_S(xa,ya) = d_S(x,y)");
  const bool invariant = is_conj_invariant(g, s);
  if (!invariant) {
    conj_inv.skip("S not conjugation-invariant");
  }
  for (Elem u = 0; u < g.order(); ++u) {
    const MetricTable du = action_metric_table(a, conjugate_by(g, s, u));
    for (Elem x = 0; x < m; ++x) {
      for (Elem y = 0; y < m; ++y) {
        const Elem xu = a.act(x, u);
        const Elem yu = a.act(y, u);
        conj.record(du.at(xu, yu) == d.at(x, y),
                    [&] { return "a=" + std::to_string(u) + " " + pt(x, y); });
        if (invariant) {
          conj_inv.record(d.at(xu, yu) == d.at(x, y),
                          [&] { return "a=" + std::to_string(u) + " " + pt(x, y); });
        }
      }
    }
  }
  return report;
}

Report action_monotonicity_check(const GroupAction& a, const Subset& s, const Subset& t) {
  Report report("d_S >= d_T for S in T on " + a.name());
  CheckItem& item = report.item("S in T implies d_S >= d_T");
  if (!s.is_subset_of(t)) {
    item.skip("S not contained in T");
    return report;
  }
  const MetricTable ds = action_metric_table(a, s);
  const MetricTable dt = action_metric_table(a, t);
  for (Elem x = 0; x < a.carrier(); ++x) {
    for (Elem y = 0; y < a.carrier(); ++y) {
      item.record(dt.at(x, y) <= ds.at(x, y), [&] { return pt(x, y); });
    }
  }
  return report;
}

Report orbit_map_check(const GroupAction& a, const Subset& s, Elem x) {
  const FiniteGroup& g = *a.group();
  Report report("orbit map at x=" + std::to_string(x) + " on " + a.name());
  const MetricTable dx = action_metric_table(a, s);
  const MetricTable dg = word_metric_table(g, s);
  CheckItem& lip = report.item("d_S^X(xa,xb) <= d_S(a,b)");
  CheckItem& iso = report.item("free point: d_S^X(xa,xb) = d_S(a,b)");
  const bool free = a.is_free_at(x);
  if (!free) {
    iso.skip("the orbit map is not injective");
  }
  for (Elem u = 0; u < g.order(); ++u) {
    for (Elem v = 0; v < g.order(); ++v) {
      const ExtNat lhs = dx.at(a.act(x, u), a.act(x, v));
      const ExtNat rhs = dg.at(u, v);
      const auto wit = [&] {
        return pt(u, v) + " " + lhs.to_string() + " vs " + rhs.to_string();
      };
      lip.record(lhs <= rhs, wit);
      if (free) {
        iso.record(lhs == rhs, wit);
      }
    }
  }
  return report;
}

std::optional<std::pair<Elem, Elem>> orbit_strict_pair(const GroupAction& a, const Subset& s,
                                                       Elem x) {
  const FiniteGroup& g = *a.group();
  const MetricTable dx = action_metric_table(a, s);
  const MetricTable dg = word_metric_table(g, s);
  for (Elem u = 0; u < g.order(); ++u) {
    for (Elem v = 0; v < g.order(); ++v) {
      if (dx.at(a.act(x, u), a.act(x, v)) < dg.at(u, v)) {
        return std::pair{u, v};
      }
    }
  }
  return std::nullopt;
}

namespace {

bool in_starred_family(const FiniteGroup& g, const Subset& t) {
  return !t.empty() && !t.is_subset_of(g.identity_set());
}

}  // namespace

Report comparison_bound_check(const GroupAction& a, const Subset& s, const Subset& t) {
  const FiniteGroup& g = *a.group();
  g.require_member(s);
  g.require_member(t);
  Report report("d_S <= nu_H(S,T) d_T on " + a.name());
  CheckItem& item = report.item("d_S^X <= nu_H(S,T) d_T^X");
  if (!in_starred_family(g, t)) {
    item.skip("T not in S(G)^*");
    return report;
  }
  const ExtNat c = nu_H(g, s, t);
  const MetricTable ds = action_metric_table(a, s);
  const MetricTable dt = action_metric_table(a, t);
  for (Elem x = 0; x < a.carrier(); ++x) {
    for (Elem y = 0; y < a.carrier(); ++y) {
      item.record(ds.at(x, y) <= c * dt.at(x, y), [&] {
        return pt(x, y) + " d_S=" + ds.at(x, y).to_string() + " nu_H=" + c.to_string() +
               " d_T=" + dt.at(x, y).to_string();
      });
    }
  }
  return report;
}

Report function_space_embedding_check(const GroupAction& a, const std::vector<Subset>& family) {
  const FiniteGroup& g = *a.group();
  if (a.carrier() < 2) {
    throw std::domain_error("the embedding needs at least two points");
  }
  Report report("phi embedding on " + a.name());
  CheckItem& le = report.item("lambda(d_T|, d_S|) <= nu_H(S,T)");
  CheckItem& eq = report.item("free point: lambda(d_T|, d_S|) = nu_H(S,T)");
  bool free = false;
  for (Elem x = 0; x < a.carrier() && !free; ++x) {
    free = a.is_free_at(x);
  }
  if (!free) {
    eq.skip("no free point");
  }
  std::vector<std::vector<ExtNat>> off;
  std::vector<bool> usable;
  for (const auto& s : family) {
    g.require_member(s);
    usable.push_back(in_starred_family(g, s));
    const MetricTable d = action_metric_table(a, s);
    std::vector<ExtNat> v;
    for (Elem x = 0; x < a.carrier(); ++x) {
      for (Elem y = 0; y < a.carrier(); ++y) {
        if (x != y) {
          v.push_back(d.at(x, y));
        }
      }
    }
    off.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (!usable[i] || !usable[j]) {
        le.skip("outside S(G)^*");
        continue;
      }
      const ExtRatio lam = lambda(off[j], off[i]);
      const ExtRatio nu = ExtRatio::from(nu_H(g, family[i], family[j]));
      const auto wit = [&] {
        return "S=" + family[i].to_string() + " T=" + family[j].to_string() + " lambda=" +
               lam.to_string() + " nu_H=" + nu.to_string();
      };
      le.record(lam <= nu, wit);
      if (free) {
        eq.record(lam == nu, wit);
      }
    }
  }
  return report;
}

bool EquivariantMap::is_invertible() const { return is_bijection(point) && is_bijection(hom); }

void validate_equivariant(const GroupAction& a, const EquivariantMap& m) {
  const FiniteGroup& g = *a.group();
  if (m.point.size() != a.carrier() || m.hom.size() != g.order()) {
    throw GroupAxiomError("equivariant map has the wrong shape");
  }
  for (Elem v : m.point) {
    if (v >= a.carrier()) {
      throw GroupAxiomError("point map leaves the carrier");
    }
  }
  for (Elem v : m.hom) {
    if (v >= g.order()) {
      throw GroupAxiomError("group map leaves the group");
    }
  }
  for (Elem u = 0; u < g.order(); ++u) {
    for (Elem v = 0; v < g.order(); ++v) {
      if (m.hom[g.mul(u, v)] != g.mul(m.hom[u], m.hom[v])) {
        throw GroupAxiomError("phi is not a homomorphism at (a,b)=" + pt(u, v));
      }
    }
  }
  for (Elem x = 0; x < a.carrier(); ++x) {
    for (Elem u = 0; u < g.order(); ++u) {
      if (m.point[a.act(x, u)] != a.act(m.point[x], m.hom[u])) {
        throw GroupAxiomError("f(xa) != f(x)phi(a) at (x,a)=" + pt(x, u));
      }
    }
  }
}

EquivariantMap identity_symmetry(const GroupAction& a) {
  EquivariantMap m;
  m.point.resize(a.carrier());
  m.hom.resize(a.group()->order());
  std::iota(m.point.begin(), m.point.end(), Elem{0});
  std::iota(m.hom.begin(), m.hom.end(), Elem{0});
  return m;
}

EquivariantMap inner_symmetry(const GroupAction& a, Elem u) {
  const FiniteGroup& g = *a.group();
  if (u >= g.order()) {
    throw std::out_of_range("element " + std::to_string(u) + " is outside the group");
  }
  EquivariantMap m;
  for (Elem x = 0; x < a.carrier(); ++x) {
    m.point.push_back(a.act(x, u));
  }
  for (Elem v = 0; v < g.order(); ++v) {
    m.hom.push_back(g.conj(v, u));
  }
  return m;
}

std::vector<EquivariantMap> symmetry_monoid(const GroupAction& a,
                                            const std::vector<EquivariantMap>& maps,
                                            std::size_t cap) {
  std::vector<EquivariantMap> out;
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> seen;
  for (const auto& m : maps) {
    validate_equivariant(a, m);
    if (seen.insert({m.point, m.hom}).second) {
      out.push_back(m);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& v : maps) {
      EquivariantMap c;
      c.point.resize(a.carrier());
      c.hom.resize(a.group()->order());
      for (std::size_t x = 0; x < c.point.size(); ++x) {
        c.point[x] = v.point[out[i].point[x]];
      }
      for (std::size_t x = 0; x < c.hom.size(); ++x) {
        c.hom[x] = v.hom[out[i].hom[x]];
      }
      if (seen.insert({c.point, c.hom}).second) {
        if (out.size() >= cap) {
          throw std::length_error("symmetry monoid exceeds " + std::to_string(cap) + " elements");
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

Report symmetry_monotonicity_check(const GroupAction& a, const std::vector<EquivariantMap>& maps,
                                   const Subset& s) {
  const FiniteGroup& g = *a.group();
  g.require_member(s);
  const auto monoid = symmetry_monoid(a, maps);
  Report report("symmetries of " + a.name() + " S=" + s.to_string());
  CheckItem& le = report.item("d_{S^u}(x^u,y^u) <= d_S(x,y)");
  CheckItem& eq = report.item("invertible u: d_{S^u}(x^u,y^u) = d_S(x,y)");
  CheckItem& inv_le = report.item("invariant S: d_S(x^u,y^u) <= d_S(x,y)");
  CheckItem& inv_eq = report.item("invariant S, invertible u: d_S(x^u,y^u) = d_S(x,y)");

  const auto image = [&](const EquivariantMap& u, const Subset& t) {
    Subset r = t - t;
    t.for_each([&](Elem v) { r.insert(u.hom[v]); });
    return r;
  };
  bool invariant = true;
  for (const auto& u : monoid) {
    invariant = invariant && image(u, s).is_subset_of(s);
  }
  if (!invariant) {
    inv_le.skip("S not invariant under the monoid");
    inv_eq.skip("S not invariant under the monoid");
  }
  const MetricTable d = action_metric_table(a, s);
  const Elem m = static_cast<Elem>(a.carrier());
  for (std::size_t k = 0; k < monoid.size(); ++k) {
    const auto& u = monoid[k];
    const bool invertible = u.is_invertible();
    if (!invertible) {
      eq.skip("u not invertible");
    }
    const MetricTable du = action_metric_table(a, image(u, s));
    for (Elem x = 0; x < m; ++x) {
      for (Elem y = 0; y < m; ++y) {
        const Elem xu = u.point[x];
        const Elem yu = u.point[y];
        const auto wit = [&] { return "u#" + std::to_string(k) + " " + pt(x, y); };
        le.record(du.at(xu, yu) <= d.at(x, y), wit);
        if (invertible) {
          eq.record(du.at(xu, yu) == d.at(x, y), wit);
        }
        if (invariant) {
          inv_le.record(d.at(xu, yu) <= d.at(x, y), wit);
          if (invertible) {
            inv_eq.record(d.at(xu, yu) == d.at(x, y), wit);
          } else {
            inv_eq.skip("u not invertible");
          }
        }
      }
    }
  }
  return report;
}

QuandleAction automorphism_action(const StarSet& x, std::size_t max_carrier) {
  if (x.size() > max_carrier) {
    throw std::length_error("quandle carrier " + std::to_string(x.size()) +
                            " exceeds the cap " + std::to_string(max_carrier));
  }
  if (const std::string why = x.quandle_violation(); !why.empty()) {
    throw StarSetError("not a quandle: " + why);
  }
  const std::size_t n = x.size();
  std::vector<std::vector<Elem>> sigma_perms(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem v = 0; v < n; ++v) {
      sigma_perms[a][v] = x.op(0, v, a);
    }
  }
  std::vector<std::vector<Elem>> perms;
  GroupPtr inn = permutation_group(n, sigma_perms, "Inn(" + x.name() + ")", &perms);
  std::map<std::vector<Elem>, Elem> index;
  for (Elem k = 0; k < perms.size(); ++k) {
    index.emplace(perms[k], k);
  }
  std::vector<Elem> sigma;
  for (const auto& p : sigma_perms) {
    sigma.push_back(index.at(p));
  }
  Subset inn_gens = inn->subset(sigma);
  Subset dis_gens = inn->empty_set();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a != b) {
        dis_gens.insert(inn->mul(sigma[a], inn->inv(sigma[b])));
      }
    }
  }
  Subset dis = generated(*inn, dis_gens, GenMode::subgroup);
  GroupAction action = GroupAction::from_permutations(inn, perms, inn->name() + " on " + x.name());
  return QuandleAction{std::move(action), std::move(perms), std::move(sigma), std::move(inn_gens),
                       std::move(dis_gens), std::move(dis)};
}

namespace {

std::string automorphism_violation(const StarSet& x, const std::vector<Elem>& h) {
  if (h.size() != x.size() || !is_bijection(h)) {
    return "h is not a permutation of the carrier";
  }
  for (Elem u = 0; u < x.size(); ++u) {
    for (Elem v = 0; v < x.size(); ++v) {
      for (std::size_t i = 0; i < x.op_count(); ++i) {
        if (h[x.op(i, u, v)] != x.op(i, h[u], h[v])) {
          return "h(x*y) != h(x)*h(y) at " + pt(u, v);
        }
      }
    }
  }
  return {};
}

}  // namespace

EquivariantMap quandle_symmetry(const StarSet& x, const QuandleAction& qa,
                                const std::vector<Elem>& h) {
  if (const std::string why = automorphism_violation(x, h); !why.empty()) {
    throw StarSetError(why);
  }
  const std::size_t n = x.size();
  std::vector<Elem> h_inv(n);
  for (Elem v = 0; v < n; ++v) {
    h_inv[h[v]] = v;
  }
  std::map<std::vector<Elem>, Elem> index;
  for (Elem k = 0; k < qa.perms.size(); ++k) {
    index.emplace(qa.perms[k], k);
  }
  EquivariantMap m;
  m.point = h;
  for (const auto& p : qa.perms) {
    std::vector<Elem> c(n);
    for (Elem v = 0; v < n; ++v) {
      c[v] = h[p[h_inv[v]]];
    }
    const auto it = index.find(c);
    if (it == index.end()) {
      throw StarSetError("h sigma h^-1 leaves Inn(X)");
    }
    m.hom.push_back(it->second);
  }
  validate_equivariant(qa.action, m);
  return m;
}

std::vector<std::vector<Elem>> quandle_automorphisms(const StarSet& x) {
  if (x.size() > 8) {
    throw std::length_error("automorphism search is limited to 8 points");
  }
  std::vector<Elem> h(x.size());
  std::iota(h.begin(), h.end(), Elem{0});
  std::vector<std::vector<Elem>> out;
  do {
    if (automorphism_violation(x, h).empty()) {
      out.push_back(h);
    }
  } while (std::next_permutation(h.begin(), h.end()));
  return out;
}

}  // namespace wordmetrics
