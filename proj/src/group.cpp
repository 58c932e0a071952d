#include "wordmetrics/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace wordmetrics {

namespace {

std::string elem_str(Elem x) { return std::to_string(x); }

// Locates the identity and inverses of a closed table; throws on failure.
void derive_identity_and_inverses(const std::string& name, std::size_t n,
                                  const std::vector<Elem>& t, Elem& identity,
                                  std::vector<Elem>& inv) {
  std::optional<Elem> id;
  for (Elem e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = t[e * n + x] == x && t[x * n + e] == x;
    }
    if (ok) {
      id = e;
    }
  }
  if (!id) {
    throw GroupAxiomError(name + ": identity axiom fails, no two-sided identity element");
  }
  identity = *id;
  inv.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem y = 0; y < n; ++y) {
      if (t[x * n + y] == identity && t[y * n + x] == identity) {
        inv[x] = y;
        found = true;
        break;
      }
    }
    if (!found) {
      throw GroupAxiomError(name + ": inverse axiom fails, element " + elem_str(x) +
                            " has no two-sided inverse");
    }
  }
}

std::vector<Elem> compose_then(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  // apply a first, then b
  std::vector<Elem> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = b[a[i]];
  }
  return r;
}

GroupPtr group_from_permutations(std::string name, std::vector<std::vector<Elem>> perms) {
  const std::size_t n = perms.size();
  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < n; ++i) {
    index.emplace(perms[i], i);
  }
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      table[a * n + b] = index.at(compose_then(perms[a], perms[b]));
    }
  }
  return FiniteGroup::trusted(std::move(name), n, std::move(table));
}

bool is_even(const std::vector<Elem>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      inversions += p[i] > p[j] ? 1 : 0;
    }
  }
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)), id_(next_universe_id()) {}

GroupPtr FiniteGroup::trusted(std::string name, std::size_t order, std::vector<Elem> table) {
  if (order == 0 || table.size() != order * order) {
    throw GroupAxiomError(name + ": table size does not match order");
  }
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(std::move(name), order, std::move(table)));
  derive_identity_and_inverses(g->name_, order, g->table_, g->identity_, g->inv_);
  return g;
}

GroupPtr FiniteGroup::from_table(std::string name, std::size_t order, std::vector<Elem> table) {
  if (order == 0) {
    throw GroupAxiomError(name + ": empty table");
  }
  if (table.size() != order * order) {
    throw GroupAxiomError(name + ": table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(order * order));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw GroupAxiomError(name + ": closure fails, entry (" + std::to_string(i / order) + "," +
                            std::to_string(i % order) + ") = " + elem_str(table[i]) +
                            " is out of range");
    }
  }
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      const Elem ab = table[a * order + b];
      for (Elem c = 0; c < order; ++c) {
        if (table[ab * order + c] != table[a * order + table[b * order + c]]) {
          throw GroupAxiomError(name + ": associativity fails at (" + elem_str(a) + "," +
                                elem_str(b) + "," + elem_str(c) + ")");
        }
      }
    }
  }
  return trusted(std::move(name), order, std::move(table));
}

void FiniteGroup::require_member(const Subset& s) const {
  if (s.universe() != id_ || s.size() != order_) {
    throw std::invalid_argument("subset " + s.to_string() + " does not belong to group " + name_);
  }
}

std::size_t FiniteGroup::element_order(Elem x) const {
  std::size_t k = 1;
  Elem y = x;
  while (y != identity_) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) {
        return false;
      }
    }
  }
  return true;
}

Subset FiniteGroup::conjugacy_class(Elem x) const {
  Subset c = empty_set();
  for (Elem a = 0; a < order_; ++a) {
    c.insert(conj(x, a));
  }
  return c;
}

std::vector<Subset> FiniteGroup::conjugacy_classes() const {
  std::vector<Subset> out;
  Subset seen = empty_set();
  for (Elem x = 0; x < order_; ++x) {
    if (!seen.contains(x)) {
      Subset c = conjugacy_class(x);
      seen |= c;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::string check_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g.mul(a, b) >= n) {
        return "closure fails at (" + elem_str(a) + "," + elem_str(b) + ")";
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          return "associativity fails at (" + elem_str(a) + "," + elem_str(b) + "," +
                 elem_str(c) + ")";
        }
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (g.mul(g.identity(), x) != x || g.mul(x, g.identity()) != x) {
      return "identity fails at " + elem_str(x);
    }
    if (g.mul(x, g.inv(x)) != g.identity() || g.mul(g.inv(x), x) != g.identity()) {
      return "inverse fails at " + elem_str(x);
    }
  }
  return {};
}

GroupPtr cyclic(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("cyclic group needs n >= 1");
  }
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a * n + b] = static_cast<Elem>((a + b) % n);
    }
  }
  return FiniteGroup::trusted("Z" + std::to_string(n), n, std::move(t));
}

GroupPtr dihedral(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("dihedral group needs n >= 2");
  }
  const std::size_t order = 2 * n;
  std::vector<Elem> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n;
    const std::size_t j = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n;
      const std::size_t l = y / n;
      // r^i s^j r^k s^l = r^{i + (-1)^j k} s^{j+l}
      const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      const std::size_t ref = (j + l) % 2;
      t[x * order + y] = static_cast<Elem>(ref * n + rot);
    }
  }
  return FiniteGroup::trusted("D" + std::to_string(n), order, std::move(t));
}

GroupPtr dicyclic(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("dicyclic group needs n >= 2");
  }
  const std::size_t m = 2 * n;
  const std::size_t order = 2 * m;
  std::vector<Elem> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % m;
    const std::size_t j = x / m;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % m;
      const std::size_t l = y / m;
      std::size_t rot = 0;
      std::size_t ref = 0;
      if (j == 0) {
        rot = (i + k) % m;
        ref = l;
      } else if (l == 0) {
        // a^i x a^k = a^{i-k} x
        rot = (i + m - k) % m;
        ref = 1;
      } else {
        // a^i x a^k x = a^{i-k} x^2 = a^{i-k+n}
        rot = (i + m - k + n) % m;
        ref = 0;
      }
      t[x * order + y] = static_cast<Elem>(ref * m + rot);
    }
  }
  return FiniteGroup::trusted("Dic" + std::to_string(n), order, std::move(t));
}

GroupPtr symmetric(std::size_t n) {
  if (n == 0 || n > 5) {
    throw std::invalid_argument("symmetric group supported for 1 <= n <= 5");
  }
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Elem>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_permutations("S" + std::to_string(n), std::move(perms));
}

GroupPtr alternating(std::size_t n) {
  if (n == 0 || n > 5) {
    throw std::invalid_argument("alternating group supported for 1 <= n <= 5");
  }
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Elem>> perms;
  do {
    if (is_even(p)) {
      perms.push_back(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_permutations("A" + std::to_string(n), std::move(perms));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order();
  const std::size_t nb = b->order();
  const std::size_t n = na * nb;
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem i = a->mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      const Elem j = b->mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      t[x * n + y] = static_cast<Elem>(i * nb + j);
    }
  }
  return FiniteGroup::trusted(a->name() + "x" + b->name(), n, std::move(t));
}

GroupPtr semidirect_product(const GroupPtr& h, const GroupPtr& k,
                            const std::vector<std::vector<Elem>>& action) {
  const std::size_t nh = h->order();
  const std::size_t nk = k->order();
  const std::string name = h->name() + "|x" + k->name();
  if (action.size() != nh) {
    throw GroupAxiomError(name + ": action table needs one row per element of " + h->name());
  }
  for (Elem x = 0; x < nh; ++x) {
    const auto& row = action[x];
    if (row.size() != nk) {
      throw GroupAxiomError(name + ": action row " + elem_str(x) + " has wrong length");
    }
    std::vector<bool> hit(nk, false);
    for (Elem y = 0; y < nk; ++y) {
      if (row[y] >= nk || hit[row[y]]) {
        throw GroupAxiomError(name + ": automorphism axiom fails, alpha_" + elem_str(x) +
                              " is not a bijection of " + k->name());
      }
      hit[row[y]] = true;
    }
    for (Elem a = 0; a < nk; ++a) {
      for (Elem b = 0; b < nk; ++b) {
        if (row[k->mul(a, b)] != k->mul(row[a], row[b])) {
          throw GroupAxiomError(name + ": automorphism axiom fails, alpha_" + elem_str(x) +
                                " does not preserve the product of " + elem_str(a) + " and " +
                                elem_str(b));
        }
      }
    }
  }
  for (Elem x = 0; x < nh; ++x) {
    for (Elem y = 0; y < nh; ++y) {
      const auto& xy = action[h->mul(x, y)];
      for (Elem a = 0; a < nk; ++a) {
        if (xy[a] != action[x][action[y][a]]) {
          throw GroupAxiomError(name + ": homomorphism axiom fails, alpha_{" + elem_str(x) + "*" +
                                elem_str(y) + "} != alpha_" + elem_str(x) + " o alpha_" +
                                elem_str(y) + " at " + elem_str(a));
        }
      }
    }
  }
  const std::size_t n = nh * nk;
  std::vector<Elem> t(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const Elem h1 = static_cast<Elem>(u / nk);
    const Elem k1 = static_cast<Elem>(u % nk);
    for (std::size_t v = 0; v < n; ++v) {
      const Elem h2 = static_cast<Elem>(v / nk);
      const Elem k2 = static_cast<Elem>(v % nk);
      const Elem hh = h->mul(h1, h2);
      const Elem kk = k->mul(action[h->inv(h2)][k1], k2);
      t[u * n + v] = static_cast<Elem>(hh * nk + kk);
    }
  }
  return FiniteGroup::trusted(name, n, std::move(t));
}

GroupPtr permutation_group(std::size_t degree, const std::vector<std::vector<Elem>>& generators,
                           std::string name, std::vector<std::vector<Elem>>* elements_out,
                           std::size_t max_order) {
  for (const auto& g : generators) {
    if (g.size() != degree) {
      throw std::invalid_argument("generator has wrong degree");
    }
    std::vector<bool> hit(degree, false);
    for (Elem v : g) {
      if (v >= degree || hit[v]) {
        throw std::invalid_argument("generator is not a permutation");
      }
      hit[v] = true;
    }
  }
  std::vector<Elem> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<Elem>> elems{id};
  std::map<std::vector<Elem>, Elem> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      auto p = compose_then(elems[i], g);
      if (index.find(p) == index.end()) {
        if (elems.size() >= max_order) {
          throw std::length_error("permutation group exceeds the order cap of " +
                                  std::to_string(max_order) + " (raise --cap)");
        }
        index.emplace(p, static_cast<Elem>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
  }
  if (elements_out != nullptr) {
    *elements_out = elems;
  }
  return group_from_permutations(std::move(name), std::move(elems));
}

namespace {

bool extend_iso(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Elem>& gens,
                std::size_t depth, std::vector<Elem>& images, std::vector<Elem>& result) {
  if (depth == gens.size()) {
    // Extend images to a full map by BFS over words in the generators.
    const std::size_t n = a.order();
    std::vector<Elem> map(n, static_cast<Elem>(n));
    map[a.identity()] = b.identity();
    std::deque<Elem> queue{a.identity()};
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = a.mul(x, gens[i]);
        const Elem img = b.mul(map[x], images[i]);
        if (map[y] == n) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (Elem x = 0; x < n; ++x) {
      if (map[x] == n || hit[map[x]]) {
        return false;
      }
      hit[map[x]] = true;
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) {
          return false;
        }
      }
    }
    result = std::move(map);
    return true;
  }
  const std::size_t want = a.element_order(gens[depth]);
  for (Elem c = 0; c < b.order(); ++c) {
    if (b.element_order(c) != want) {
      continue;
    }
    images[depth] = c;
    if (extend_iso(a, b, gens, depth + 1, images, result)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  const std::size_t n = a.order();
  // Element order histograms must agree.
  std::vector<std::size_t> ha(n + 1, 0);
  std::vector<std::size_t> hb(n + 1, 0);
  for (Elem x = 0; x < n; ++x) {
    ++ha[a.element_order(x)];
    ++hb[b.element_order(x)];
  }
  if (ha != hb) {
    return std::nullopt;
  }
  // Greedy generating set of a: add the element that grows the generated
  // subgroup, preferring large orders.
  std::vector<Elem> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem x, Elem y) {
    return a.element_order(x) > a.element_order(y);
  });
  std::vector<Elem> gens;
  std::vector<bool> in(n, false);
  in[a.identity()] = true;
  std::size_t covered = 1;
  for (Elem c : by_order) {
    if (covered == n) {
      break;
    }
    if (in[c]) {
      continue;
    }
    gens.push_back(c);
    // Recompute closure.
    std::fill(in.begin(), in.end(), false);
    in[a.identity()] = true;
    std::deque<Elem> queue{a.identity()};
    covered = 1;
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (Elem g : gens) {
        const Elem y = a.mul(x, g);
        if (!in[y]) {
          in[y] = true;
          ++covered;
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<Elem> images(gens.size());
  std::vector<Elem> result;
  if (extend_iso(a, b, gens, 0, images, result)) {
    return result;
  }
  return std::nullopt;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const auto& g = *source_;
  const auto& h = *target_;
  if (map_.size() != g.order()) {
    throw GroupAxiomError("homomorphism table has wrong length");
  }
  for (Elem x = 0; x < g.order(); ++x) {
    if (map_[x] >= h.order()) {
      throw GroupAxiomError("homomorphism maps " + elem_str(x) + " outside the target");
    }
  }
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (map_[g.mul(x, y)] != h.mul(map_[x], map_[y])) {
        throw GroupAxiomError("homomorphism axiom fails at (" + elem_str(x) + "," + elem_str(y) +
                              ")");
      }
    }
  }
}

GroupHom GroupHom::from_generators(GroupPtr source, GroupPtr target,
                                   const std::vector<Elem>& generators,
                                   const std::vector<Elem>& images) {
  if (generators.size() != images.size()) {
    throw std::invalid_argument("generator and image lists differ in length");
  }
  const std::size_t n = source->order();
  std::vector<Elem> map(n, static_cast<Elem>(n + target->order()));
  const Elem unset = static_cast<Elem>(n + target->order());
  map[source->identity()] = target->identity();
  std::deque<Elem> queue{source->identity()};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const Elem y = source->mul(x, generators[i]);
      const Elem img = target->mul(map[x], images[i]);
      if (map[y] == unset) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        throw GroupAxiomError("generator images are inconsistent at element " + elem_str(y));
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (map[x] == unset) {
      throw GroupAxiomError("generators do not generate the source; element " + elem_str(x) +
                            " unreached");
    }
  }
  return GroupHom(std::move(source), std::move(target), std::move(map));
}

GroupHom GroupHom::identity(const GroupPtr& g) {
  std::vector<Elem> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupHom(g, g, std::move(map));
}

std::optional<Elem> GroupHom::uncovered() const {
  std::vector<bool> hit(target_->order(), false);
  for (Elem v : map_) {
    hit[v] = true;
  }
  for (Elem y = 0; y < target_->order(); ++y) {
    if (!hit[y]) {
      return y;
    }
  }
  return std::nullopt;
}

bool GroupHom::is_surjective() const { return !uncovered().has_value(); }

Subset kernel(const GroupHom& f) {
  Subset k = f.source()->empty_set();
  for (Elem x = 0; x < f.source()->order(); ++x) {
    if (f(x) == f.target()->identity()) {
      k.insert(x);
    }
  }
  return k;
}

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
  g.require_member(s);
  if (!s.contains(g.identity())) {
    return false;
  }
  bool ok = true;
  s.for_each([&](Elem a) {
    s.for_each([&](Elem b) { ok = ok && s.contains(g.mul(a, g.inv(b))); });
  });
  return ok;
}

bool is_normal_subgroup(const FiniteGroup& g, const Subset& s) {
  if (!is_subgroup(g, s)) {
    return false;
  }
  bool ok = true;
  s.for_each([&](Elem x) {
    for (Elem a = 0; a < g.order() && ok; ++a) {
      ok = s.contains(g.conj(x, a));
    }
  });
  return ok;
}

Quotient quotient_by_normal(const GroupPtr& gp, const Subset& n) {
  const FiniteGroup& g = *gp;
  g.require_member(n);
  if (!n.contains(g.identity())) {
    throw GroupAxiomError("N is not a subgroup: identity missing");
  }
  n.for_each([&](Elem a) {
    n.for_each([&](Elem b) {
      if (!n.contains(g.mul(a, g.inv(b)))) {
        throw GroupAxiomError("N is not a subgroup: witness pair (" + elem_str(a) + "," +
                              elem_str(b) + ") has a*b^-1 outside N");
      }
    });
  });
  n.for_each([&](Elem x) {
    for (Elem a = 0; a < g.order(); ++a) {
      if (!n.contains(g.conj(x, a))) {
        throw GroupAxiomError("N is not normal: witness pair (" + elem_str(x) + "," +
                              elem_str(a) + ") has a^-1*x*a outside N");
      }
    }
  });
  // Coset of x is xN; label cosets by the order of their smallest element.
  const std::size_t order = g.order();
  std::vector<Elem> coset(order, static_cast<Elem>(order));
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] != order) {
      continue;
    }
    const Elem label = static_cast<Elem>(reps.size());
    reps.push_back(x);
    n.for_each([&](Elem k) { coset[g.mul(x, k)] = label; });
  }
  const std::size_t q = reps.size();
  std::vector<Elem> t(q * q);
  for (Elem i = 0; i < q; ++i) {
    for (Elem j = 0; j < q; ++j) {
      t[i * q + j] = coset[g.mul(reps[i], reps[j])];
    }
  }
  auto h = FiniteGroup::trusted(g.name() + "/N", q, std::move(t));
  return Quotient{h, GroupHom(gp, h, std::move(coset))};
}

Section make_section(const GroupHom& f, bool symmetric) {
  if (auto y = f.uncovered()) {
    throw std::invalid_argument("homomorphism is not surjective; target element " +
                                elem_str(*y) + " is not covered");
  }
  const FiniteGroup& g = *f.source();
  const FiniteGroup& h = *f.target();
  const Elem unset = static_cast<Elem>(g.order());
  std::vector<Elem> smallest(h.order(), unset);
  for (Elem x = 0; x < g.order(); ++x) {
    if (smallest[f(x)] == unset) {
      smallest[f(x)] = x;
    }
  }
  std::vector<Elem> map(h.order(), unset);
  map[h.identity()] = g.identity();
  if (!symmetric) {
    for (Elem y = 0; y < h.order(); ++y) {
      if (y != h.identity()) {
        map[y] = smallest[y];
      }
    }
    return Section{f, std::move(map), false};
  }
  for (Elem y = 0; y < h.order(); ++y) {
    if (y == h.identity() || map[y] != unset) {
      continue;
    }
    const Elem yi = h.inv(y);
    if (yi == y) {
      for (Elem x = 0; x < g.order(); ++x) {
        if (f(x) == y && g.inv(x) == x) {
          map[y] = x;
          break;
        }
      }
      if (map[y] == unset) {
        throw std::invalid_argument("no symmetric section: involution " + elem_str(y) +
                                    " has no involutive preimage");
      }
    } else {
      map[y] = smallest[y];
      map[yi] = g.inv(smallest[y]);
    }
  }
  return Section{f, std::move(map), true};
}

}  // namespace wordmetrics
