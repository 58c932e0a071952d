#include "wordmetrics/invariants.hpp"

#include <set>
#include <stdexcept>

#include "wordmetrics/metric.hpp"
#include "wordmetrics/sampling.hpp"

namespace wordmetrics {

std::vector<Subset> symmetric_class_orbits(const FiniteGroup& g, const Subset& ambient) {
  g.require_member(ambient);
  std::vector<Subset> out;
  Subset seen = g.identity_set();
  ambient.for_each([&](Elem x) {
    if (seen.contains(x)) {
      return;
    }
    Subset orbit = conjugate(g, symmetrize(g, g.subset({x})), ambient);
    seen |= orbit;
    out.push_back(std::move(orbit));
  });
  return out;
}

namespace {

Subset union_of(const FiniteGroup& g, const std::vector<Subset>& orbits, std::uint64_t mask) {
  Subset s = g.identity_set();
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (((mask >> i) & 1U) != 0) {
      s |= orbits[i];
    }
  }
  return s;
}

bool generates(const FiniteGroup& g, const Subset& s, const Subset& ambient) {
  return generated(g, s, GenMode::submonoid) == ambient;
}

}  // namespace

std::vector<Subset> nfg_family(const FiniteGroup& g, const Subset& ambient,
                               std::size_t max_orbits) {
  const auto orbits = symmetric_class_orbits(g, ambient);
  if (orbits.size() > max_orbits || orbits.size() >= 63) {
    throw std::length_error("class lattice has " + std::to_string(orbits.size()) +
                            " orbits, above the enumeration cap");
  }
  std::vector<Subset> out;
  if (orbits.empty()) {
    // Trivial ambient: {e} generates it, and the starred family is empty.
    return out;
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
    Subset s = union_of(g, orbits, mask);
    if (generates(g, s, ambient)) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Subset> nfg_family(const FiniteGroup& g) { return nfg_family(g, g.full_set()); }

RankResult rank_n(const FiniteGroup& g, const Subset& ambient, std::size_t cap) {
  g.require_member(ambient);
  RankResult r;
  // Normal closure in the ambient of A depends only on the classes of A.
  std::vector<Elem> reps;
  {
    Subset seen = g.identity_set();
    ambient.for_each([&](Elem x) {
      if (!seen.contains(x)) {
        reps.push_back(x);
        seen |= conjugate(g, g.subset({x}), ambient);
      }
    });
  }
  auto normal_closure = [&](const std::vector<Elem>& a) {
    Subset s = g.subset(a);
    return generated(g, conjugate(g, symmetrize(g, s), ambient), GenMode::submonoid);
  };
  for (std::size_t k = 0; k <= cap && k <= reps.size(); ++k) {
    // Enumerate k-combinations of reps in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
      idx[i] = i;
    }
    while (true) {
      std::vector<Elem> a;
      for (auto i : idx) {
        a.push_back(reps[i]);
      }
      if (normal_closure(a) == ambient) {
        r.value = k;
        r.witness = a;
        return r;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == reps.size() - k + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }
  r.value = kInfinity;
  r.exceeds_cap = true;
  return r;
}

RankResult rank_n(const FiniteGroup& g, std::size_t cap) { return rank_n(g, g.full_set(), cap); }

ExtNat diam_for(const FiniteGroup& g, const Subset& s, const Subset& ambient) {
  return nu_H(g, s, ambient);
}

ExtNat diam_for(const FiniteGroup& g, const Subset& s) { return diam_for(g, s, g.full_set()); }

ExtremeResult diam_nfg(const FiniteGroup& g, const Subset& ambient) {
  ExtremeResult r;
  const auto family = nfg_family(g, ambient);
  if (family.empty()) {
    r.value = 0;
    r.witness = g.identity_set();
    r.candidates = 1;
    return r;
  }
  r.value = kInfinity;
  r.candidates = family.size();
  for (const auto& s : family) {
    const ExtNat v = nu_H(g, s, ambient);
    if (r.witness.size() == 0 || v < r.value) {
      r.value = v;
      r.witness = s;
    }
  }
  return r;
}

ExtremeResult diam_nfg(const FiniteGroup& g) { return diam_nfg(g, g.full_set()); }

ExtremeResult delta(const FiniteGroup& g, const Subset& ambient, std::size_t max_orbits,
                    std::size_t samples, std::uint64_t seed) {
  ExtremeResult r;
  const auto orbits = symmetric_class_orbits(g, ambient);
  if (orbits.empty()) {
    r.value = 0;
    r.witness = g.identity_set();
    r.candidates = 1;
    return r;
  }
  r.value = 0;
  auto consider = [&](const Subset& s) {
    if (!generates(g, s, ambient)) {
      return;
    }
    ++r.candidates;
    const ExtNat v = nu_H(g, s, ambient);
    if (r.witness.size() == 0 || v > r.value) {
      r.value = v;
      r.witness = s;
    }
  };
  if (orbits.size() <= max_orbits && orbits.size() < 63) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
      consider(union_of(g, orbits, mask));
    }
    r.exact = true;
  } else {
    Sampler sampler(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      Subset s = g.identity_set();
      for (const auto& o : orbits) {
        if (sampler.coin()) {
          s |= o;
        }
      }
      consider(s);
    }
    r.exact = false;
  }
  return r;
}

ExtremeResult delta(const FiniteGroup& g) { return delta(g, g.full_set()); }

std::vector<Subset> enumerate_family(const FiniteGroup& g, Condition p, std::size_t max_order) {
  if (p == Condition::nfg || p == Condition::ng) {
    auto fam = nfg_family(g, g.full_set());
    if (fam.empty()) {
      fam.push_back(g.identity_set());  // trivial group: {e} generates
    }
    return fam;
  }
  const std::size_t n = g.order();
  if (n > max_order || n > 24) {
    throw std::length_error("enumerate_family: order " + std::to_string(n) +
                            " exceeds the enumeration bound " + std::to_string(max_order));
  }
  std::vector<Subset> out;
  const std::uint64_t e_bit = std::uint64_t{1} << g.identity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask & e_bit) == 0) {
      continue;
    }
    Subset s = g.subset_from_mask(mask);
    if (classify(g, s, p)) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

Report verify_nfg_family(const FiniteGroup& g, const std::vector<Subset>& family) {
  Report report("nfg family on " + g.name());
  CheckItem& finite = report.item("nu_H(S,T) finite on S_nfg");
  CheckItem& tri = report.item("nu_H(T,G) <= nu_H(T,S) nu_H(S,G)");
  std::vector<std::vector<ExtNat>> lens;
  lens.reserve(family.size());
  for (const auto& s : family) {
    lens.push_back(word_lengths(g, s));
  }
  const Subset all = g.full_set();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const ExtNat s_to_g = nu_sup(lens[i], all);
    for (std::size_t j = 0; j < family.size(); ++j) {
      const ExtNat st = nu_sup(lens[i], family[j]);
      finite.record(st.is_finite(), [&] {
        return "S=" + family[i].to_string() + " T=" + family[j].to_string();
      });
      const ExtNat ts = nu_sup(lens[j], family[i]);
      const ExtNat t_to_g = nu_sup(lens[j], all);
      tri.record(t_to_g <= ts * s_to_g, [&] {
        return "T=" + family[j].to_string() + " S=" + family[i].to_string();
      });
    }
  }
  return report;
}

}  // namespace wordmetrics
