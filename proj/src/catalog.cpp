#include "wordmetrics/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace wordmetrics {

namespace {

GroupPtr renamed(const std::string& name, const GroupPtr& g) {
  return FiniteGroup::trusted(name, g->order(), g->table());
}

GroupPtr dp(const GroupPtr& a, const GroupPtr& b) { return direct_product(a, b); }

// Z_n x| Z_2 with the generator of Z_2 acting by k -> r k mod n; index
// h * n + k.
GroupPtr cyclic_by_z2(std::size_t n, std::size_t r) {
  std::vector<std::vector<Elem>> action(2, std::vector<Elem>(n));
  for (Elem k = 0; k < n; ++k) {
    action[0][k] = k;
    action[1][k] = static_cast<Elem>((r * k) % n);
  }
  return semidirect_product(cyclic(2), cyclic(n), action);
}

// Z4 x| Z4 with the generator acting by inversion: h acts as (-1)^h.
GroupPtr z4_by_z4() {
  std::vector<std::vector<Elem>> action(4, std::vector<Elem>(4));
  for (Elem h = 0; h < 4; ++h) {
    for (Elem k = 0; k < 4; ++k) {
      action[h][k] = (h % 2 == 0) ? k : static_cast<Elem>((4 - k) % 4);
    }
  }
  return semidirect_product(cyclic(4), cyclic(4), action);
}

// (Z4 x Z2) x| Z2 with c a c^-1 = ab: (i, j) -> (i, j + i mod 2).
GroupPtr z4z2_by_z2() {
  std::vector<std::vector<Elem>> action(2, std::vector<Elem>(8));
  for (Elem i = 0; i < 4; ++i) {
    for (Elem j = 0; j < 2; ++j) {
      action[0][i * 2 + j] = i * 2 + j;
      action[1][i * 2 + j] = i * 2 + ((j + i) % 2);
    }
  }
  return semidirect_product(cyclic(2), dp(cyclic(4), cyclic(2)), action);
}

// The central product Z4 o D4 = (Z4 x D4) / <(2, r^2)>.
GroupPtr pauli() {
  GroupPtr g = dp(cyclic(4), dihedral(4));
  const Elem z = 2 * 8 + 2;  // (2, r^2) in the index i * 8 + j
  return quotient_by_normal(g, g->subset({0, z})).group;
}

struct Entry {
  const char* name;
  std::size_t order;
  std::function<GroupPtr()> make;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    for (std::size_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}) {
      // Cyclic groups first, then the rest of that order.
      t.push_back({nullptr, n, [n] { return cyclic(n); }});
      switch (n) {
        case 4:
          t.push_back({"Z2xZ2", 4, [] { return dp(cyclic(2), cyclic(2)); }});
          break;
        case 6:
          t.push_back({"S3", 6, [] { return symmetric(3); }});
          break;
        case 8:
          t.push_back({"Z4xZ2", 8, [] { return dp(cyclic(4), cyclic(2)); }});
          t.push_back({"Z2^3", 8, [] { return dp(dp(cyclic(2), cyclic(2)), cyclic(2)); }});
          t.push_back({"D4", 8, [] { return dihedral(4); }});
          t.push_back({"Q8", 8, [] { return dicyclic(2); }});
          break;
        case 9:
          t.push_back({"Z3xZ3", 9, [] { return dp(cyclic(3), cyclic(3)); }});
          break;
        case 10:
          t.push_back({"D5", 10, [] { return dihedral(5); }});
          break;
        case 12:
          t.push_back({"Z6xZ2", 12, [] { return dp(cyclic(6), cyclic(2)); }});
          t.push_back({"D6", 12, [] { return dihedral(6); }});
          t.push_back({"A4", 12, [] { return alternating(4); }});
          t.push_back({"Dic3", 12, [] { return dicyclic(3); }});
          break;
        case 14:
          t.push_back({"D7", 14, [] { return dihedral(7); }});
          break;
        case 16:
          t.push_back({"Z4xZ4", 16, [] { return dp(cyclic(4), cyclic(4)); }});
          t.push_back({"Z8xZ2", 16, [] { return dp(cyclic(8), cyclic(2)); }});
          t.push_back({"Z4xZ2xZ2", 16, [] { return dp(dp(cyclic(4), cyclic(2)), cyclic(2)); }});
          t.push_back({"Z2^4", 16, [] {
                         return dp(dp(cyclic(2), cyclic(2)), dp(cyclic(2), cyclic(2)));
                       }});
          t.push_back({"D8", 16, [] { return dihedral(8); }});
          t.push_back({"Q16", 16, [] { return dicyclic(4); }});
          t.push_back({"SD16", 16, [] { return cyclic_by_z2(8, 3); }});
          t.push_back({"M16", 16, [] { return cyclic_by_z2(8, 5); }});
          t.push_back({"D4xZ2", 16, [] { return dp(dihedral(4), cyclic(2)); }});
          t.push_back({"Q8xZ2", 16, [] { return dp(dicyclic(2), cyclic(2)); }});
          t.push_back({"Z4:Z4", 16, z4_by_z4});
          t.push_back({"(Z4xZ2):Z2", 16, z4z2_by_z2});
          t.push_back({"Pauli", 16, pauli});
          break;
        default:
          break;
      }
    }
    t.push_back({"S4", 24, [] { return symmetric(4); }});
    return t;
  }();
  return table;
}

std::string entry_name(const Entry& e) {
  return e.name != nullptr ? std::string(e.name) : "Z" + std::to_string(e.order);
}

}  // namespace

std::vector<CatalogGroup> group_catalog(std::size_t max_order, bool with_s4) {
  if (max_order > 16) {
    throw std::invalid_argument("the catalog lists orders up to 16 (plus S4)");
  }
  std::vector<CatalogGroup> out;
  for (const auto& e : entries()) {
    const std::string name = entry_name(e);
    if ((e.order <= max_order && name != "S4") || (with_s4 && name == "S4")) {
      out.push_back({name, renamed(name, e.make())});
    }
  }
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) {
    out.push_back(entry_name(e));
  }
  return out;
}

GroupPtr catalog_group(const std::string& name) {
  for (const auto& e : entries()) {
    if (entry_name(e) == name) {
      return renamed(name, e.make());
    }
  }
  std::string known;
  for (const auto& n : catalog_names()) {
    known += (known.empty() ? "" : ", ") + n;
  }
  throw std::invalid_argument("unknown catalog group '" + name + "'; known: " + known);
}

std::vector<Subset> normal_subgroups(const FiniteGroup& g) {
  auto classes = g.conjugacy_classes();
  // The class of e is always included; drop it from the enumeration.
  classes.erase(std::remove_if(classes.begin(), classes.end(),
                               [&](const Subset& c) { return c.contains(g.identity()); }),
                classes.end());
  if (classes.size() > 24) {
    throw std::length_error("normal_subgroups: too many conjugacy classes");
  }
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << classes.size()); ++mask) {
    Subset s = g.identity_set();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (((mask >> i) & 1U) != 0) {
        s |= classes[i];
      }
    }
    // A union of classes is normal as soon as it is a subgroup; order
    // divides |G| is a cheap filter first.
    if (g.order() % s.count() == 0 && is_subgroup(g, s)) {
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  return out;
}

std::vector<QuotientCase> standard_quotients() {
  std::vector<QuotientCase> out;
  const auto add = [&](const std::string& name, const GroupPtr& g, const Subset& n) {
    out.push_back({name, quotient_by_normal(g, n).projection});
  };
  {
    GroupPtr z12 = catalog_group("Z12");
    add("Z12->Z4", z12, z12->subset({0, 4, 8}));
    add("Z12->Z3", z12, z12->subset({0, 3, 6, 9}));
  }
  {
    GroupPtr s3 = catalog_group("S3");
    // The even permutations.
    Subset a3 = s3->identity_set();
    for (Elem x = 0; x < s3->order(); ++x) {
      if (s3->element_order(x) == 3) {
        a3.insert(x);
      }
    }
    add("S3->Z2", s3, a3);
  }
  {
    GroupPtr d4 = catalog_group("D4");
    add("D4->Z2xZ2", d4, d4->subset({0, 2}));  // {e, r^2}
  }
  return out;
}

std::vector<QuotientCase> all_quotients(std::size_t max_order) {
  std::vector<QuotientCase> out;
  for (const auto& cg : group_catalog(std::min<std::size_t>(max_order, 16), false)) {
    for (const auto& n : normal_subgroups(*cg.group)) {
      out.push_back({cg.name + "/" + n.to_string(), quotient_by_normal(cg.group, n).projection});
    }
  }
  return out;
}

SemidirectContext s3_semidirect() {
  return semidirect_context(cyclic(2), cyclic(3), {{0, 1, 2}, {0, 2, 1}});
}

SemidirectContext direct_context(const GroupPtr& h, const GroupPtr& k) {
  std::vector<std::vector<Elem>> action(h->order(), std::vector<Elem>(k->order()));
  for (auto& row : action) {
    std::iota(row.begin(), row.end(), Elem{0});
  }
  return semidirect_context(h, k, action);
}

std::vector<StarSet> quandle_catalog() {
  return {StarSet::dihedral_quandle(3), StarSet::dihedral_quandle(4),
          StarSet::dihedral_quandle(5), StarSet::dihedral_quandle(6),
          StarSet::trivial_quandle(3)};
}

std::vector<StarSet> star_set_catalog() {
  std::vector<StarSet> out;
  {
    // Two operations on Z4: addition and x*y = 2y - x.
    std::vector<Elem> add(16), refl(16);
    for (Elem x = 0; x < 4; ++x) {
      for (Elem y = 0; y < 4; ++y) {
        add[x * 4 + y] = (x + y) % 4;
        refl[x * 4 + y] = (2 * y + 4 - x) % 4;
      }
    }
    out.emplace_back(4, std::vector<std::vector<Elem>>{add, refl}, std::nullopt, "Z4(+,refl)");
  }
  {
    // Unital, commutative, not associative: x*y = x + y for x + y < 3,
    // otherwise 0 unless a factor is the unit 0.
    std::vector<Elem> t(9);
    for (Elem x = 0; x < 3; ++x) {
      for (Elem y = 0; y < 3; ++y) {
        t[x * 3 + y] = (x == 0) ? y : (y == 0) ? x : (x + y < 3 ? x + y : 1);
      }
    }
    out.emplace_back(3, std::vector<std::vector<Elem>>{t}, Elem{0}, "magma3");
  }
  {
    std::vector<Elem> t(25);
    for (Elem x = 0; x < 5; ++x) {
      for (Elem y = 0; y < 5; ++y) {
        t[x * 5 + y] = std::max(x, y);
      }
    }
    out.emplace_back(5, std::vector<std::vector<Elem>>{t}, Elem{0}, "max5");
  }
  {
    // Left-normed products differ from general ones: x*y = y + 1 mod 4
    // when x is even, x otherwise.
    std::vector<Elem> t(16);
    for (Elem x = 0; x < 4; ++x) {
      for (Elem y = 0; y < 4; ++y) {
        t[x * 4 + y] = (x % 2 == 0) ? (y + 1) % 4 : x;
      }
    }
    out.emplace_back(4, std::vector<std::vector<Elem>>{t}, std::nullopt, "skew4");
  }
  return out;
}

GroupAction natural_symmetric_action(std::size_t n) {
  GroupPtr g = symmetric(n);
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  std::vector<std::vector<Elem>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return GroupAction::from_permutations(g, perms, "S" + std::to_string(n) + " on " +
                                                       std::to_string(n) + " points");
}

std::vector<GroupAction> action_catalog() {
  std::vector<GroupAction> out;
  for (const char* name : {"Z6", "S3", "Z4", "D4"}) {
    out.push_back(GroupAction::right_translation(catalog_group(name)));
  }
  out.push_back(natural_symmetric_action(3));
  {
    // Z2 swapping 0 and 1 and fixing 2.
    GroupPtr z2 = cyclic(2);
    out.push_back(GroupAction::from_permutations(z2, {{0, 1, 2}, {1, 0, 2}}, "Z2 on 3 points"));
  }
  {
    GroupPtr z4 = cyclic(4);
    std::vector<std::vector<Elem>> perms(4, std::vector<Elem>(4));
    for (Elem a = 0; a < 4; ++a) {
      for (Elem x = 0; x < 4; ++x) {
        perms[a][x] = (x + a) % 4;
      }
    }
    out.push_back(GroupAction::from_permutations(z4, perms, "Z4 on 4 points"));
  }
  for (std::size_t n : {3, 4, 5}) {
    out.push_back(automorphism_action(StarSet::dihedral_quandle(n)).action);
  }
  return out;
}

}  // namespace wordmetrics
