#include "wordmetrics/subset_algebra.hpp"

#include <stdexcept>

namespace wordmetrics {

Subset product(const FiniteGroup& g, const Subset& s, const Subset& t) {
  g.require_member(s);
  g.require_member(t);
  Subset out = g.empty_set();
  s.for_each([&](Elem x) { t.for_each([&](Elem y) { out.insert(g.mul(x, y)); }); });
  return out;
}

namespace {

Subset monoid_closure(const FiniteGroup& g, const Subset& s) {
  Subset acc = g.identity_set();
  Subset frontier = acc;
  while (!frontier.empty()) {
    Subset next = product(g, frontier, s) - acc;
    acc |= next;
    frontier = std::move(next);
  }
  return acc;
}

}  // namespace

Subset power(const FiniteGroup& g, const Subset& s, ExtNat n) {
  g.require_member(s);
  if (n.is_infinite()) {
    return monoid_closure(g, s);
  }
  Subset acc = g.identity_set();
  for (std::uint64_t k = 0; k < n.value(); ++k) {
    Subset next = product(g, acc, s);
    if (next == acc) {
      break;  // S^k = S^{k+1} implies the sequence is constant from here on
    }
    acc = std::move(next);
  }
  return acc;
}

Subset power_leq(const FiniteGroup& g, const Subset& s, ExtNat n) {
  g.require_member(s);
  if (n.is_infinite()) {
    return monoid_closure(g, s);
  }
  Subset acc = g.identity_set();
  for (std::uint64_t k = 0; k < n.value(); ++k) {
    Subset next = acc | product(g, acc, s);
    if (next == acc) {
      break;
    }
    acc = std::move(next);
  }
  return acc;
}

Subset inverse_set(const FiniteGroup& g, const Subset& s) {
  g.require_member(s);
  Subset out = g.empty_set();
  s.for_each([&](Elem x) { out.insert(g.inv(x)); });
  return out;
}

Subset symmetrize(const FiniteGroup& g, const Subset& s) { return s | inverse_set(g, s); }

Subset conjugate(const FiniteGroup& g, const Subset& s, const Subset& a) {
  g.require_member(s);
  g.require_member(a);
  Subset out = g.empty_set();
  s.for_each([&](Elem x) { a.for_each([&](Elem y) { out.insert(g.conj(x, y)); }); });
  return out;
}

Subset conjugate_by(const FiniteGroup& g, const Subset& s, Elem a) {
  g.require_member(s);
  Subset out = g.empty_set();
  s.for_each([&](Elem x) { out.insert(g.conj(x, a)); });
  return out;
}

Subset conj_closure(const FiniteGroup& g, const Subset& s) {
  return conjugate(g, s, g.full_set());
}

Subset sym_conj_closure(const FiniteGroup& g, const Subset& s) {
  return conj_closure(g, symmetrize(g, s));
}

Subset generated(const FiniteGroup& g, const Subset& s, GenMode mode) {
  switch (mode) {
    case GenMode::submonoid:
      return monoid_closure(g, s);
    case GenMode::subgroup:
      return monoid_closure(g, symmetrize(g, s));
    case GenMode::normal:
      return monoid_closure(g, sym_conj_closure(g, s));
  }
  throw std::logic_error("unknown GenMode");
}

bool is_symmetric(const FiniteGroup& g, const Subset& s) { return inverse_set(g, s) == s; }

bool is_conj_invariant(const FiniteGroup& g, const Subset& s) {
  return conj_closure(g, s) == s;
}

bool is_conj_invariant(const FiniteGroup& g, const Subset& s, const Subset& ambient) {
  return conjugate(g, s, ambient) == s;
}

const std::vector<Condition>& all_conditions() {
  static const std::vector<Condition> all{Condition::f,  Condition::g,  Condition::s,
                                          Condition::c,  Condition::fc, Condition::fg,
                                          Condition::ng, Condition::nfg};
  return all;
}

std::string to_string(Condition p) {
  switch (p) {
    case Condition::f:
      return "f";
    case Condition::g:
      return "g";
    case Condition::s:
      return "s";
    case Condition::c:
      return "c";
    case Condition::fc:
      return "fc";
    case Condition::fg:
      return "fg";
    case Condition::ng:
      return "ng";
    case Condition::nfg:
      return "nfg";
  }
  return "?";
}

Condition parse_condition(const std::string& text) {
  for (Condition p : all_conditions()) {
    if (to_string(p) == text) {
      return p;
    }
  }
  throw std::invalid_argument("unknown condition '" + text + "'");
}

bool classify(const FiniteGroup& g, const Subset& s, Condition p) {
  return classify(g, s, p, g.full_set());
}

bool classify(const FiniteGroup& g, const Subset& s, Condition p, const Subset& ambient) {
  g.require_member(s);
  g.require_member(ambient);
  if (!s.is_subset_of(ambient)) {
    return false;
  }
  auto gen = [&] { return generated(g, s, GenMode::submonoid) == ambient; };
  auto sym = [&] { return is_symmetric(g, s); };
  auto conj = [&] { return is_conj_invariant(g, s, ambient); };
  switch (p) {
    case Condition::f:
      return true;
    case Condition::g:
      return gen();
    case Condition::s:
      return sym();
    case Condition::c:
    case Condition::fc:
      return conj();
    case Condition::fg:
      return gen() && sym();
    case Condition::ng:
    case Condition::nfg:
      return gen() && sym() && conj();
  }
  return false;
}

StarClass star_class(const FiniteGroup& g, const Subset& s) {
  g.require_member(s);
  StarClass c;
  c.contains_identity = s.contains(g.identity());
  c.starred = !(s.empty() || s == g.identity_set());
  c.canonical = s | g.identity_set();
  return c;
}

std::vector<Subset> starred_double_prime_family(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 24) {
    throw std::length_error("exhaustive subset family needs order <= 24");
  }
  std::vector<Subset> out;
  const std::uint64_t e_bit = std::uint64_t{1} << g.identity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask & e_bit) != 0 && mask != e_bit) {
      out.push_back(g.subset_from_mask(mask));
    }
  }
  return out;
}

std::vector<Subset> starred_prime_family(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 24) {
    throw std::length_error("exhaustive subset family needs order <= 24");
  }
  std::vector<Subset> out;
  const std::uint64_t e_bit = std::uint64_t{1} << g.identity();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask & e_bit) == 0) {
      out.push_back(g.subset_from_mask(mask));
    }
  }
  return out;
}

std::vector<Subset> starred_double_prime_family(const FiniteGroup& g, const Subset& pool) {
  g.require_member(pool);
  const auto rest = (pool - g.identity_set()).elements();
  if (rest.size() > 24) {
    throw std::length_error("exhaustive subset family needs a pool of at most 25 elements");
  }
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest.size()); ++mask) {
    Subset s = g.identity_set();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (((mask >> i) & 1U) != 0) {
        s.insert(rest[i]);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace wordmetrics
