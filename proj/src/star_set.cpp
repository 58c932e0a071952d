#include "wordmetrics/star_set.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "wordmetrics/sampling.hpp"

namespace wordmetrics {

namespace {

// A power request beyond this is refused; S^n for large n costs O(n^2)
// set products and nothing in the library needs more.
constexpr std::uint64_t kMaxPowerIndex = 4096;

std::string pair_str(Elem a, Elem b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

StarSet::StarSet(std::size_t size, std::vector<std::vector<Elem>> ops, std::optional<Elem> unit,
                 std::string name)
    : size_(size), ops_(std::move(ops)), unit_(unit), name_(std::move(name)),
      id_(next_universe_id()) {
  if (size_ == 0) {
    throw StarSetError("star-set carrier must be nonempty");
  }
  if (ops_.empty() || ops_.size() > kMaxOps) {
    throw StarSetError("star-set needs 1 to 3 operations, got " + std::to_string(ops_.size()));
  }
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].size() != size_ * size_) {
      throw StarSetError("operation " + std::to_string(i) + " has " +
                         std::to_string(ops_[i].size()) + " entries, expected " +
                         std::to_string(size_ * size_));
    }
    for (std::size_t k = 0; k < ops_[i].size(); ++k) {
      if (ops_[i][k] >= size_) {
        throw StarSetError("operation " + std::to_string(i) + " entry " +
                           pair_str(static_cast<Elem>(k / size_), static_cast<Elem>(k % size_)) +
                           " = " + std::to_string(ops_[i][k]) + " is outside the carrier");
      }
    }
  }
  if (unit_) {
    const Elem e = *unit_;
    if (e >= size_) {
      throw StarSetError("unit " + std::to_string(e) + " is outside the carrier");
    }
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      for (Elem x = 0; x < size_; ++x) {
        if (op(i, e, x) != x || op(i, x, e) != x) {
          throw StarSetError("unit law fails for operation " + std::to_string(i) + " at x=" +
                             std::to_string(x));
        }
      }
    }
  }
  if (name_.empty()) {
    name_ = "starset(" + std::to_string(size_) + ")";
  }
}

StarSet StarSet::from_group(const FiniteGroup& g) {
  return StarSet(g.order(), {g.table()}, g.identity(), g.name());
}

StarSet StarSet::dihedral_quandle(std::size_t n) {
  if (n == 0) {
    throw StarSetError("dihedral quandle needs n >= 1");
  }
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t[x * n + y] = static_cast<Elem>((2 * y + n - x) % n);
    }
  }
  return StarSet(n, {std::move(t)}, std::nullopt, "R" + std::to_string(n));
}

StarSet StarSet::trivial_quandle(std::size_t n) {
  if (n == 0) {
    throw StarSetError("trivial quandle needs n >= 1");
  }
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t[x * n + y] = static_cast<Elem>(x);
    }
  }
  return StarSet(n, {std::move(t)}, std::nullopt, "T" + std::to_string(n));
}

void StarSet::require_member(const Subset& s) const {
  if (s.universe() != id_ || s.size() != size_) {
    throw std::invalid_argument("subset does not belong to star-set " + name_);
  }
}

std::string StarSet::quandle_violation() const {
  if (ops_.size() != 1) {
    return "a quandle has exactly one operation";
  }
  const Elem n = static_cast<Elem>(size_);
  for (Elem a = 0; a < n; ++a) {
    if (op(0, a, a) != a) {
      return "idempotence fails: " + std::to_string(a) + "*" + std::to_string(a) + " = " +
             std::to_string(op(0, a, a));
    }
  }
  for (Elem a = 0; a < n; ++a) {
    std::vector<bool> hit(size_, false);
    for (Elem x = 0; x < n; ++x) {
      const Elem y = op(0, x, a);
      if (hit[y]) {
        return "sigma_" + std::to_string(a) + " is not bijective: value " + std::to_string(y) +
               " repeats";
      }
      hit[y] = true;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (op(0, op(0, x, y), z) != op(0, op(0, x, z), op(0, y, z))) {
          return "distributivity fails at (x,y,z) = (" + std::to_string(x) + "," +
                 std::to_string(y) + "," + std::to_string(z) + ")";
        }
      }
    }
  }
  return {};
}

Subset star_product(const StarSet& x, const Subset& a, const Subset& b) {
  x.require_member(a);
  x.require_member(b);
  Subset out = x.empty_set();
  const auto be = b.elements();
  a.for_each([&](Elem u) {
    for (Elem v : be) {
      for (std::size_t i = 0; i < x.op_count(); ++i) {
        out.insert(x.op(i, u, v));
      }
    }
  });
  return out;
}

namespace {

// Closure of `seed` under every operation, without adding the unit.
Subset closure_no_unit(const StarSet& x, const Subset& seed) {
  Subset c = seed;
  std::deque<Elem> queue;
  seed.for_each([&](Elem v) { queue.push_back(v); });
  while (!queue.empty()) {
    const Elem u = queue.front();
    queue.pop_front();
    const auto members = c.elements();
    for (Elem v : members) {
      for (std::size_t i = 0; i < x.op_count(); ++i) {
        for (Elem w : {x.op(i, u, v), x.op(i, v, u)}) {
          if (!c.contains(w)) {
            c.insert(w);
            queue.push_back(w);
          }
        }
      }
    }
  }
  return c;
}

// Incrementally extended S^k table, S^0 first.
class PowerTable {
 public:
  PowerTable(const StarSet& x, const Subset& s) : x_(x) {
    Subset p0 = x.empty_set();
    if (x.unit()) {
      p0.insert(*x.unit());
    }
    p_.push_back(std::move(p0));
    p_.push_back(s);
  }

  const Subset& at(std::uint64_t n) {
    while (p_.size() <= n) {
      const std::size_t m = p_.size();  // computing S^m, m >= 2
      Subset next = x_.empty_set();
      for (std::size_t k = 1; k < m; ++k) {
        next |= star_product(x_, p_[k], p_[m - k]);
      }
      p_.push_back(std::move(next));
    }
    return p_[n];
  }

 private:
  const StarSet& x_;
  std::vector<Subset> p_;
};

}  // namespace

Subset star_closure(const StarSet& x, const Subset& s) {
  x.require_member(s);
  Subset c = closure_no_unit(x, s);
  if (x.unit()) {
    c.insert(*x.unit());
  }
  return c;
}

std::vector<Subset> star_powers(const StarSet& x, const Subset& s, std::uint64_t n) {
  x.require_member(s);
  if (n > kMaxPowerIndex) {
    throw std::length_error("power index " + std::to_string(n) + " exceeds the cap " +
                            std::to_string(kMaxPowerIndex));
  }
  PowerTable table(x, s);
  std::vector<Subset> out;
  out.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    out.push_back(table.at(k));
  }
  return out;
}

Subset star_power(const StarSet& x, const Subset& s, ExtNat n) {
  x.require_member(s);
  if (n.is_infinite()) {
    return star_closure(x, s);
  }
  if (n == ExtNat(0)) {
    if (!x.unit()) {
      throw std::domain_error("S^0 is defined only in a unital star-set");
    }
    return x.subset({*x.unit()});
  }
  return star_powers(x, s, n.value()).back();
}

Subset star_power_leq(const StarSet& x, const Subset& s, ExtNat n) {
  x.require_member(s);
  if (n.is_infinite()) {
    return star_closure(x, s);
  }
  if (n == ExtNat(0) && !x.unit()) {
    throw std::domain_error("S^{<=0} is defined only in a unital star-set");
  }
  const auto powers = star_powers(x, s, n.value());
  Subset out = x.empty_set();
  for (std::size_t k = x.unit() ? 0 : 1; k < powers.size(); ++k) {
    out |= powers[k];
  }
  return out;
}

std::vector<ExtNat> star_word_lengths(const StarSet& x, const Subset& s) {
  x.require_member(s);
  std::vector<ExtNat> len(x.size(), kInfinity);
  Subset seen = x.empty_set();
  if (x.unit()) {
    len[*x.unit()] = 0;
    seen.insert(*x.unit());
  }
  const Subset target = star_closure(x, s);
  PowerTable table(x, s);
  // Every element of <S> lies in some S^n, so this loop ends; the powers
  // themselves need not be nested, hence the per-n membership test.
  for (std::uint64_t n = 1; !(target - seen).empty(); ++n) {
    (table.at(n) - seen).for_each([&](Elem v) {
      len[v] = n;
      seen.insert(v);
    });
  }
  return len;
}

ExtNat star_word_length(const StarSet& x, const Subset& s, Elem e) {
  if (e >= x.size()) {
    throw std::out_of_range("element " + std::to_string(e) + " is outside the carrier");
  }
  return star_word_lengths(x, s)[e];
}

namespace {

ExtNat sup_over(const std::vector<ExtNat>& len, const Subset& t) {
  ExtNat r = 0;
  t.for_each([&](Elem v) { r = max(r, len[v]); });
  return r;
}

}  // namespace

ExtNat star_nu_H(const StarSet& x, const Subset& s, const Subset& t) {
  x.require_member(s);
  x.require_member(t);
  if (s.empty() || t.empty()) {
    throw std::domain_error("nu_H is defined on nonempty subsets only");
  }
  return sup_over(star_word_lengths(x, s), t);
}

std::vector<ExtNat> star_distances_from(const StarSet& x, const Subset& s, Elem x0,
                                        StarMetricVariant variant) {
  x.require_member(s);
  if (x0 >= x.size()) {
    throw std::out_of_range("element " + std::to_string(x0) + " is outside the carrier");
  }
  std::vector<ExtNat> dist(x.size(), kInfinity);
  dist[x0] = 0;

  if (variant == StarMetricVariant::left_normed) {
    std::set<Subset> visited;
    Subset level = x.subset({x0});
    for (std::uint64_t n = 1;; ++n) {
      visited.insert(level);
      level = star_product(x, level, s);
      level.for_each([&](Elem v) {
        if (dist[v].is_infinite()) {
          dist[v] = n;
        }
      });
      if (level.empty() || visited.count(level) != 0) {
        break;
      }
    }
    return dist;
  }

  // Everything reachable is x0 followed by right factors from <S> (without
  // the unit), so stop once that set has been covered.
  const Subset gen = closure_no_unit(x, s);
  Subset reachable = x.subset({x0});
  {
    std::deque<Elem> queue{x0};
    const auto ge = gen.elements();
    while (!queue.empty()) {
      const Elem u = queue.front();
      queue.pop_front();
      for (Elem c : ge) {
        for (std::size_t i = 0; i < x.op_count(); ++i) {
          const Elem w = x.op(i, u, c);
          if (!reachable.contains(w)) {
            reachable.insert(w);
            queue.push_back(w);
          }
        }
      }
    }
  }
  PowerTable powers(x, s);
  std::vector<Subset> levels{x.subset({x0})};
  Subset seen = levels[0];
  for (std::uint64_t n = 1; !(reachable - seen).empty(); ++n) {
    Subset next = x.empty_set();
    for (std::uint64_t k = 0; k < n; ++k) {
      next |= star_product(x, levels[k], powers.at(n - k));
    }
    (next - seen).for_each([&](Elem v) { dist[v] = n; });
    seen |= next;
    levels.push_back(std::move(next));
  }
  return dist;
}

ExtNat star_word_metric(const StarSet& x, const Subset& s, Elem from, Elem to,
                        StarMetricVariant variant) {
  if (to >= x.size()) {
    throw std::out_of_range("element " + std::to_string(to) + " is outside the carrier");
  }
  return star_distances_from(x, s, from, variant)[to];
}

Subset star_power_by_words(const StarSet& x, const Subset& s, std::uint64_t n) {
  x.require_member(s);
  if (n == 0) {
    if (!x.unit()) {
      throw std::domain_error("S^0 is defined only in a unital star-set");
    }
    return x.subset({*x.unit()});
  }
  const auto letters = s.elements();
  Subset out = x.empty_set();
  if (letters.empty()) {
    return out;
  }
  std::vector<std::size_t> word(n, 0);
  // vals[i][j] = values of all bracketings of word[i..j]
  std::vector<std::vector<Subset>> vals(n, std::vector<Subset>(n));
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      vals[i][i] = x.subset({letters[word[i]]});
    }
    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        const std::size_t j = i + len - 1;
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
    out |= vals[0][n - 1];
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

Report star_power_facts(const StarSet& x, const Subset& s, std::uint64_t max_kl) {
  x.require_member(s);
  Report report("star powers on " + x.name() + " S=" + s.to_string());
  const std::uint64_t top = std::max<std::uint64_t>(2 * max_kl, max_kl * max_kl);
  const auto p = star_powers(x, s, top);
  std::vector<Subset> leq(p.size(), x.empty_set());
  for (std::size_t k = 1; k < p.size(); ++k) {
    leq[k] = leq[k - 1] | p[k];
  }
  if (x.unit()) {
    for (auto& l : leq) {
      l |= p[0];
    }
  }

  CheckItem& add = report.item("S^k * S^l in S^{k+l}");
  CheckItem& add_leq = report.item("S^{<=k} * S^{<=l} in S^{<=k+l}");
  CheckItem& mul = report.item("(S^k)^l in S^{kl}");
  CheckItem& mul_leq = report.item("(S^{<=k})^{<=l} in S^{<=kl}");
  for (std::uint64_t k = 1; k <= max_kl; ++k) {
    const auto pk = star_powers(x, p[k], max_kl);
    const auto lk = star_powers(x, leq[k], max_kl);
    Subset lk_leq = x.empty_set();
    for (std::uint64_t l = 1; l <= max_kl; ++l) {
      const auto wit = [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l); };
      add.record(star_product(x, p[k], p[l]).is_subset_of(p[k + l]), wit);
      add_leq.record(star_product(x, leq[k], leq[l]).is_subset_of(leq[k + l]), wit);
      mul.record(pk[l].is_subset_of(p[k * l]), wit);
      lk_leq |= lk[l];
      mul_leq.record(lk_leq.is_subset_of(leq[k * l]), wit);
    }
  }

  const auto len = star_word_lengths(x, s);
  CheckItem& sub = report.item("nu_S(x*y) <= nu_S(x) + nu_S(y)");
  for (Elem a = 0; a < x.size(); ++a) {
    for (Elem b = 0; b < x.size(); ++b) {
      for (std::size_t i = 0; i < x.op_count(); ++i) {
        const Elem c = x.op(i, a, b);
        sub.record(len[c] <= len[a] + len[b], [&] {
          return "op " + std::to_string(i) + " " + pair_str(a, b) + " -> " + std::to_string(c);
        });
      }
    }
  }

  CheckItem& ones = report.item("nu_S^{-1}(1) = S");
  Subset level_one = x.empty_set();
  for (Elem a = 0; a < x.size(); ++a) {
    if (len[a] == ExtNat(1)) {
      level_one.insert(a);
    }
  }
  Subset expected = s;
  if (x.unit()) {
    expected.erase(*x.unit());
  }
  ones.record(level_one == expected,
              [&] { return "got " + level_one.to_string() + " expected " + expected.to_string(); });

  CheckItem& ball = report.item("nu_S(x) <= n iff x in S^{<=n}");
  for (std::uint64_t n = 1; n <= top; ++n) {
    for (Elem a = 0; a < x.size(); ++a) {
      ball.record((len[a] <= ExtNat(n)) == leq[n].contains(a),
                  [&] { return "x=" + std::to_string(a) + " n=" + std::to_string(n); });
    }
  }
  return report;
}

Report star_nu_H_facts(const StarSet& x, const std::vector<Subset>& family) {
  Report report("star nu_H on " + x.name());
  std::vector<Subset> fam;
  for (const auto& s : family) {
    x.require_member(s);
    if (s.empty()) {
      throw std::domain_error("nu_H is defined on nonempty subsets only");
    }
    if (x.unit() && s.count() == 1 && s.contains(*x.unit())) {
      report.item("family").skip("{e} in a unital star-set");
      continue;
    }
    fam.push_back(s);
  }
  std::vector<std::vector<ExtNat>> lens;
  std::vector<Subset> closures;
  for (const auto& s : fam) {
    lens.push_back(star_word_lengths(x, s));
    closures.push_back(star_closure(x, s));
  }
  const std::size_t n = fam.size();
  std::vector<ExtNat> nu(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      nu[i * n + j] = sup_over(lens[i], fam[j]);
    }
  }
  CheckItem& refl = report.item("nu_H(S,S) = 1");
  CheckItem& nondeg = report.item("nu_H(S,T) = 1 iff T in S");
  CheckItem& nondeg2 = report.item("nu_H(S,T) = nu_H(T,S) = 1 iff S = T");
  CheckItem& tri = report.item("nu_H(S,U) <= nu_H(S,T) nu_H(T,U)");
  CheckItem& fin = report.item("T in <S> implies nu_H(S,T) finite");
  const auto name = [&](std::size_t i, std::size_t j) {
    return "S=" + fam[i].to_string() + " T=" + fam[j].to_string();
  };
  for (std::size_t i = 0; i < n; ++i) {
    refl.record(nu[i * n + i] == ExtNat(1), [&] { return name(i, i); });
    Subset sup_i = fam[i];
    if (x.unit()) {
      sup_i.insert(*x.unit());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const bool one = nu[i * n + j] == ExtNat(1);
      nondeg.record(one == fam[j].is_subset_of(sup_i), [&] { return name(i, j); });
      if (!x.unit()) {
        nondeg2.record((one && nu[j * n + i] == ExtNat(1)) == (fam[i] == fam[j]),
                       [&] { return name(i, j); });
      }
      if (fam[j].is_subset_of(closures[i])) {
        fin.record(nu[i * n + j].is_finite(), [&] { return name(i, j); });
      }
      for (std::size_t k = 0; k < n; ++k) {
        tri.record(nu[i * n + k] <= nu[i * n + j] * nu[j * n + k],
                   [&] { return name(i, j) + " U=" + fam[k].to_string(); });
      }
    }
  }
  return report;
}

namespace {

std::vector<std::vector<ExtNat>> distance_table(const StarSet& x, const Subset& s,
                                                StarMetricVariant v) {
  std::vector<std::vector<ExtNat>> d;
  for (Elem a = 0; a < x.size(); ++a) {
    d.push_back(star_distances_from(x, s, a, v));
  }
  return d;
}

}  // namespace

Report star_metric_facts(const StarSet& x, const Subset& s) {
  x.require_member(s);
  Report report("star word metrics on " + x.name() + " S=" + s.to_string());
  const auto d = distance_table(x, s, StarMetricVariant::all_parenthesizations);
  const auto dp = distance_table(x, s, StarMetricVariant::left_normed);
  const Elem m = static_cast<Elem>(x.size());
  for (const auto& [label, t] : {std::pair{"d_S", &d}, std::pair{"d'_S", &dp}}) {
    CheckItem& zero = report.item(std::string(label) + "(x,y) = 0 iff x = y");
    CheckItem& tri = report.item(std::string(label) + " triangle");
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        zero.record(((*t)[a][b] == ExtNat(0)) == (a == b), [&] { return pair_str(a, b); });
        for (Elem c = 0; c < m; ++c) {
          tri.record((*t)[a][c] <= (*t)[a][b] + (*t)[b][c],
                     [&] { return pair_str(a, b) + "," + std::to_string(c); });
        }
      }
    }
  }
  CheckItem& le = report.item("d_S <= d'_S");
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      le.record(d[a][b] <= dp[a][b], [&] {
        return pair_str(a, b) + " d=" + d[a][b].to_string() + " d'=" + dp[a][b].to_string();
      });
    }
  }
  return report;
}

std::optional<std::pair<Elem, Elem>> strict_metric_pair(const StarSet& x, const Subset& s) {
  const auto d = distance_table(x, s, StarMetricVariant::all_parenthesizations);
  const auto dp = distance_table(x, s, StarMetricVariant::left_normed);
  for (Elem a = 0; a < x.size(); ++a) {
    for (Elem b = 0; b < x.size(); ++b) {
      if (d[a][b] < dp[a][b]) {
        return std::pair{a, b};
      }
    }
  }
  return std::nullopt;
}

void validate_symmetry(const StarSet& x, const StarSymmetry& r) {
  const Elem m = static_cast<Elem>(x.size());
  if (r.maps.empty()) {
    throw StarSetError("the symmetry source R is empty");
  }
  for (std::size_t a = 0; a < r.maps.size(); ++a) {
    const auto& f = r.maps[a];
    const std::string tag = "map " + std::to_string(a);
    if (f.size() != m) {
      throw StarSetError(tag + " has " + std::to_string(f.size()) + " entries, expected " +
                         std::to_string(m));
    }
    for (Elem v : f) {
      if (v >= m) {
        throw StarSetError(tag + " sends a point outside the carrier");
      }
    }
    for (std::size_t i = 0; i < x.op_count(); ++i) {
      for (Elem u = 0; u < m; ++u) {
        for (Elem v = 0; v < m; ++v) {
          if (f[x.op(i, u, v)] != x.op(i, f[u], f[v])) {
            throw StarSetError(tag + " is not an endomorphism: op " + std::to_string(i) +
                               " at " + pair_str(u, v));
          }
        }
      }
    }
    if (x.unit() && f[*x.unit()] != *x.unit()) {
      throw StarSetError(tag + " does not fix the unit");
    }
  }
  if (r.compose) {
    const auto& c = *r.compose;
    const std::size_t k = r.maps.size();
    if (c.size() != k) {
      throw StarSetError("composition table has " + std::to_string(c.size()) + " rows, expected " +
                         std::to_string(k));
    }
    for (std::size_t a = 0; a < k; ++a) {
      if (c[a].size() != k) {
        throw StarSetError("composition table row " + std::to_string(a) + " has wrong length");
      }
      for (std::size_t b = 0; b < k; ++b) {
        if (c[a][b] >= k) {
          throw StarSetError("composition table entry out of range at " +
                             pair_str(static_cast<Elem>(a), static_cast<Elem>(b)));
        }
        for (Elem v = 0; v < m; ++v) {
          if (r.maps[c[a][b]][v] != r.maps[b][r.maps[a][v]]) {
            throw StarSetError("not anti-homomorphic: x^(a*b) != (x^a)^b at a=" +
                               std::to_string(a) + " b=" + std::to_string(b) +
                               " x=" + std::to_string(v));
          }
        }
      }
    }
  }
}

std::vector<std::vector<Elem>> symmetry_closure(const StarSet& x, const StarSymmetry& r,
                                                std::size_t cap) {
  validate_symmetry(x, r);
  if (r.compose) {
    return r.maps;
  }
  std::vector<std::vector<Elem>> out;
  std::set<std::vector<Elem>> seen;
  for (const auto& f : r.maps) {
    if (seen.insert(f).second) {
      out.push_back(f);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : r.maps) {
      std::vector<Elem> h(x.size());
      for (std::size_t v = 0; v < x.size(); ++v) {
        h[v] = g[out[i][v]];
      }
      if (seen.insert(h).second) {
        if (out.size() >= cap) {
          throw std::length_error("symmetry closure exceeds " + std::to_string(cap) + " maps");
        }
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

Subset act_on_set(const std::vector<std::vector<Elem>>& r, const Subset& s) {
  Subset out(s.universe(), s.size());
  s.for_each([&](Elem v) {
    for (const auto& f : r) {
      out.insert(f[v]);
    }
  });
  return out;
}

namespace {

Subset image(const std::vector<Elem>& f, const Subset& s) { return act_on_set({f}, s); }

bool invariant(const std::vector<std::vector<Elem>>& r, const Subset& s) {
  return act_on_set(r, s).is_subset_of(s);
}

}  // namespace

Report phi_invariance_suite(const StarSet& x, const StarSymmetry& r, const Subset& s,
                            std::size_t samples, std::uint64_t seed) {
  x.require_member(s);
  const auto maps = symmetry_closure(x, r);
  Report report("phi-invariance on " + x.name() + " S=" + s.to_string());
  const auto tag = [](std::size_t a) { return "a=" + std::to_string(a); };

  CheckItem& pow = report.item("(S^n)^a = (S^a)^n");
  CheckItem& gen = report.item("<S>^a = <S^a>");
  const auto ps = star_powers(x, s, 3);
  const Subset cs = star_closure(x, s);
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const Subset sa = image(maps[a], s);
    const auto psa = star_powers(x, sa, 3);
    for (std::uint64_t n = 1; n <= 3; ++n) {
      pow.record(image(maps[a], ps[n]) == psa[n],
                 [&] { return tag(a) + " n=" + std::to_string(n); });
    }
    gen.record(image(maps[a], cs) == star_closure(x, sa), [&] { return tag(a); });
  }

  const Subset sr = act_on_set(maps, s);
  report.item("S^R is invariant").record(invariant(maps, sr), [&] { return sr.to_string(); });
  const Subset s_sr = s | sr;
  report.item("(S u S^R)^R = S^R").record(act_on_set(maps, s_sr) == sr, [&] {
    return s_sr.to_string();
  });
  report.item("S u S^R is invariant").record(invariant(maps, s_sr), [&] {
    return s_sr.to_string();
  });

  const Subset s0 = invariant(maps, s) ? s : s_sr;
  CheckItem& pow_inv = report.item("(S0^n)^a in S0^n");
  CheckItem& len_mono = report.item("nu_S0(x^a) <= nu_S0(x)");
  CheckItem& nu_union = report.item("nu_H(S0, T u T^R) = nu_H(S0, T)");
  CheckItem& nu_orbit = report.item("nu_H(S0, T^R) <= nu_H(S0, T u T^R)");
  if (s0.empty()) {
    for (CheckItem* it : {&pow_inv, &len_mono, &nu_union, &nu_orbit}) {
      it->skip("S is empty");
    }
    return report;
  }
  const auto p0 = star_powers(x, s0, 3);
  const Subset c0 = star_closure(x, s0);
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::uint64_t n = 1; n <= 3; ++n) {
      pow_inv.record(image(maps[a], p0[n]).is_subset_of(p0[n]),
                     [&] { return tag(a) + " n=" + std::to_string(n); });
    }
    pow_inv.record(image(maps[a], c0).is_subset_of(c0), [&] { return tag(a) + " n=inf"; });
  }
  const auto len = star_word_lengths(x, s0);
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (Elem v = 0; v < x.size(); ++v) {
      len_mono.record(len[maps[a][v]] <= len[v],
                      [&] { return tag(a) + " x=" + std::to_string(v); });
    }
  }
  const auto check_t = [&](const Subset& t) {
    const Subset tr = act_on_set(maps, t);
    const ExtNat base = sup_over(len, t);
    const ExtNat with = sup_over(len, t | tr);
    nu_union.record(with == base, [&] { return "T=" + t.to_string(); });
    nu_orbit.record(sup_over(len, tr) <= with, [&] { return "T=" + t.to_string(); });
  };
  if (x.size() <= 10) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << x.size()); ++mask) {
      check_t(Subset::from_mask(x.id(), x.size(), mask));
    }
  } else {
    Sampler sampler(seed);
    const Subset all = x.full_set();
    for (std::size_t k = 0; k < samples; ++k) {
      Subset t = sampler.subset_of(all);
      if (t.empty()) {
        t.insert(static_cast<Elem>(sampler.below(x.size())));
      }
      check_t(t);
    }
  }
  return report;
}

Report phi_fg_family_check(const StarSet& x, const StarSymmetry& r) {
  if (x.size() > 12) {
    throw std::length_error("phi_fg_family_check enumerates subsets; carrier " +
                            std::to_string(x.size()) + " exceeds 12");
  }
  const auto maps = symmetry_closure(x, r);
  Report report("phi-fg family on " + x.name());
  const Subset all = x.full_set();
  std::set<Subset> family;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << x.size()); ++mask) {
    const Subset f = Subset::from_mask(x.id(), x.size(), mask);
    const Subset fr = act_on_set(maps, f);
    for (const Subset& cand : {fr, f | fr}) {
      if (star_closure(x, cand) == all) {
        family.insert(cand);
      }
    }
  }
  CheckItem& inv = report.item("members are invariant");
  CheckItem& fin = report.item("nu_H(S,T) finite on the family");
  std::vector<std::vector<ExtNat>> lens;
  for (const auto& s : family) {
    inv.record(invariant(maps, s), [&] { return s.to_string(); });
    lens.push_back(star_word_lengths(x, s));
  }
  std::size_t i = 0;
  for (const auto& s : family) {
    for (const auto& t : family) {
      fin.record(sup_over(lens[i], t).is_finite(),
                 [&] { return "S=" + s.to_string() + " T=" + t.to_string(); });
    }
    ++i;
  }
  if (family.empty()) {
    fin.skip("no generating set of the form F^R or F u F^R");
  }
  return report;
}

}  // namespace wordmetrics
