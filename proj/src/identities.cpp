#include "wordmetrics/identities.hpp"

#include <string>
#include <vector>

#include "wordmetrics/catalog.hpp"
#include "wordmetrics/sampling.hpp"
#include "wordmetrics/subset_algebra.hpp"

namespace wordmetrics {

namespace {

constexpr std::uint64_t kMaxExponent = 3;

// The sets are recomputed here from the bare multiplication table, without
// the early exits and closures used by subset_algebra, so that each law
// compares two independently built sides.
struct Calc {
  const FiniteGroup& g;

  Subset none() const { return g.empty_set(); }
  Subset unit() const { return g.identity_set(); }

  Subset mul(const Subset& s, const Subset& t) const {
    Subset out = none();
    s.for_each([&](Elem x) { t.for_each([&](Elem y) { out.insert(g.mul(x, y)); }); });
    return out;
  }
  Subset inv(const Subset& s) const {
    Subset out = none();
    s.for_each([&](Elem x) { out.insert(g.inv(x)); });
    return out;
  }
  // S^A = {a^-1 x a}
  Subset conj(const Subset& s, const Subset& a) const {
    Subset out = none();
    a.for_each([&](Elem c) { s.for_each([&](Elem x) { out.insert(g.conj(x, c)); }); });
    return out;
  }
  Subset conj(const Subset& s, Elem a) const { return conj(s, Subset(g.id(), g.order(), {a})); }
  // ^A S = {a x a^-1}
  Subset left_conj(const Subset& s, const Subset& a) const {
    Subset out = none();
    a.for_each([&](Elem c) {
      s.for_each([&](Elem x) { out.insert(g.mul(g.mul(c, x), g.inv(c))); });
    });
    return out;
  }
  Subset pow(const Subset& s, std::uint64_t n) const {
    Subset acc = unit();
    for (std::uint64_t k = 0; k < n; ++k) {
      acc = mul(acc, s);
    }
    return acc;
  }
  Subset pow_leq(const Subset& s, std::uint64_t n) const {
    Subset acc = unit();
    Subset layer = unit();
    for (std::uint64_t k = 0; k < n; ++k) {
      layer = mul(layer, s);
      acc |= layer;
    }
    return acc;
  }
  // S^inf: every element of S^inf is a product of fewer than |G| factors.
  Subset pow_inf(const Subset& s) const { return pow_leq(s, g.order()); }
  Subset pow(const Subset& s, ExtNat n) const {
    return n.is_finite() ? pow(s, n.value()) : pow_inf(s);
  }
  Subset pow_leq(const Subset& s, ExtNat n) const {
    return n.is_finite() ? pow_leq(s, n.value()) : pow_inf(s);
  }
  Subset sym(const Subset& s) const { return s | inv(s); }
  Subset closure(const Subset& s) const { return conj(s, g.full_set()); }
  bool symmetric(const Subset& s) const { return inv(s) == s; }
  bool invariant(const Subset& s) const {
    for (Elem a = 0; a < g.order(); ++a) {
      if (!(conj(s, a) == s)) {
        return false;
      }
    }
    return true;
  }
};

std::string show(const char* label, const Subset& s) { return std::string(label) + "=" + s.to_string(); }

const std::vector<ExtNat>& exponents() {
  static const std::vector<ExtNat> e{ExtNat(0), ExtNat(1), ExtNat(2), ExtNat(3), kInfinity};
  return e;
}

}  // namespace

void check_unary_identities(const FiniteGroup& g, const Subset& s,
                            const std::vector<Elem>& conjugators, Report& out) {
  const Calc c{g};
  const Subset e = c.unit();
  const auto where = [&] { return show("S", s); };
  const auto law = [&](std::string_view name, bool ok) { out.item(name).record(ok, where); };

  law("eS = S = Se", c.mul(e, s) == s && c.mul(s, e) == s);
  law("(S^-1)^-1 = S", c.inv(c.inv(s)) == s);

  std::vector<Subset> pw;
  std::vector<Subset> pw_leq;
  for (std::uint64_t k = 0; k <= kMaxExponent * kMaxExponent; ++k) {
    pw.push_back(c.pow(s, k));
    pw_leq.push_back(c.pow_leq(s, k));
  }
  const Subset inf = c.pow_inf(s);
  for (std::uint64_t k = 0; k <= kMaxExponent; ++k) {
    for (std::uint64_t l = 0; l <= kMaxExponent; ++l) {
      law("S^k S^l = S^(k+l)", c.mul(pw[k], pw[l]) == pw[k + l]);
      law("(S^k)^l = S^(kl)", c.pow(pw[k], l) == pw[k * l]);
      law("S^(<=m) S^(<=n) = S^(<=m+n)", c.mul(pw_leq[k], pw_leq[l]) == pw_leq[k + l]);
      law("(S^(<=m))^(<=n) in S^(<=mn)", c.pow_leq(pw_leq[k], l).is_subset_of(pw_leq[k * l]));
    }
  }
  law("S^inf S^inf = S^inf", c.mul(inf, inf) == inf);
  law("S^inf is the submonoid generated by S",
      e.is_subset_of(inf) && s.is_subset_of(inf) && c.mul(inf, inf).is_subset_of(inf) &&
          power(g, s, kInfinity) == inf && generated(g, s, GenMode::submonoid) == inf);

  const Subset s_inv = c.inv(s);
  const Subset s_e = s | e;
  for (ExtNat n : exponents()) {
    law("(S^n)^-1 = (S^-1)^n", c.inv(c.pow(s, n)) == c.pow(s_inv, n));
    law("(S^(<=n))^-1 = (S^-1)^(<=n)", c.inv(c.pow_leq(s, n)) == c.pow_leq(s_inv, n));
    law("(S u {e})^n = (S u {e})^(<=n) = S^(<=n)",
        c.pow(s_e, n) == c.pow_leq(s_e, n) && c.pow(s_e, n) == c.pow_leq(s, n));
    if (s.contains(g.identity())) {
      law("e in S => S^n = S^(<=n)", c.pow(s, n) == c.pow_leq(s, n));
    } else {
      out.item("e in S => S^n = S^(<=n)").skip("e not in S");
    }
    law("power agrees with the layered product", power(g, s, n) == c.pow(s, n));
    law("power_leq agrees with the layered product", power_leq(g, s, n) == c.pow_leq(s, n));
  }

  // Conjugation by single elements.
  std::vector<Subset> pw_e;
  std::vector<Subset> pw_leq_e;
  for (ExtNat n : exponents()) {
    pw_e.push_back(c.pow(s, n));
    pw_leq_e.push_back(c.pow_leq(s, n));
  }
  for (Elem a : conjugators) {
    const auto at = [&] { return show("S", s) + " a=" + std::to_string(a); };
    const auto law_a = [&](std::string_view name, bool ok) { out.item(name).record(ok, at); };
    const Subset sa = c.conj(s, a);
    for (Elem b : conjugators) {
      law_a("(S^a)^b = S^(ab)", c.conj(sa, b) == c.conj(s, g.mul(a, b)));
    }
    law_a("(S^-1)^a = (S^a)^-1", c.conj(s_inv, a) == c.inv(sa));
    for (std::size_t i = 0; i < exponents().size(); ++i) {
      law_a("(S^n)^a = (S^a)^n", c.conj(pw_e[i], a) == c.pow(sa, exponents()[i]));
      law_a("(S^(<=n))^a = (S^a)^(<=n)", c.conj(pw_leq_e[i], a) == c.pow_leq(sa, exponents()[i]));
    }
    law_a("conjugate_by agrees with the definition", conjugate_by(g, s, a) == sa);
  }

  // Symmetrization and closures.
  const Subset s_pm = c.sym(s);
  law("S^pm is symmetric", c.symmetric(s_pm));
  law("symmetrize agrees with the definition", symmetrize(g, s) == s_pm);
  const Subset cs = c.closure(s);
  const Subset cs_pm = c.closure(s_pm);
  law("C(S) is conjugation-invariant", c.invariant(cs) && is_conj_invariant(g, cs));
  law("C_S = (S^pm)^G = (S^G)^pm", cs_pm == c.sym(cs));
  law("C_S is symmetric and conjugation-invariant", c.symmetric(cs_pm) && c.invariant(cs_pm));
  law("conj_closure and sym_conj_closure agree with the definitions",
      conj_closure(g, s) == cs && sym_conj_closure(g, s) == cs_pm);
  law("C_(S u {e}) = C_S u {e}", c.closure(c.sym(s_e)) == (cs_pm | e));
  if (!s.contains(g.identity())) {
    law("S in G^x => C_S in G^x", !cs_pm.contains(g.identity()));
  } else {
    out.item("S in G^x => C_S in G^x").skip("e in S");
  }

  // Generated subgroups.
  const Subset sub = c.pow_inf(s_pm);
  law("<S> = <S^pm> = (S^pm)^inf is a subgroup",
      generated(g, s, GenMode::subgroup) == sub && generated(g, s_pm, GenMode::subgroup) == sub &&
          is_subgroup(g, sub) && s.is_subset_of(sub));
  const Subset normal = c.pow_inf(cs_pm);
  law("<<S>> = <C(S)> = (C_S)^inf is a normal subgroup",
      generated(g, s, GenMode::normal) == normal &&
          generated(g, cs, GenMode::subgroup) == normal && is_normal_subgroup(g, normal) &&
          s.is_subset_of(normal));

  // Symmetric sets: S^pm stands in for a symmetric S.
  law("S symmetric => S^-1 symmetric", c.symmetric(c.inv(s_pm)));
  // Conjugation-invariant sets: C(S) stands in.
  law("S invariant => S^-1 invariant", c.invariant(c.inv(cs)));
}

void check_triple_identities(const FiniteGroup& g, const Subset& s, const Subset& t,
                             const Subset& u, Elem a, Report& out) {
  const Calc c{g};
  const auto where = [&] {
    return show("S", s) + " " + show("T", t) + " " + show("U", u) + " a=" + std::to_string(a);
  };
  const auto law = [&](std::string_view name, bool ok) { out.item(name).record(ok, where); };

  const Subset st = c.mul(s, t);
  const Subset ts = c.mul(t, s);
  const Subset s_t = c.conj(s, t);

  // Basic laws.
  {
    const Subset s1 = s & u;
    const Subset t1 = t & u;
    law("S1 in S2, T1 in T2 => S1T1 in S2T2", c.mul(s1, t1).is_subset_of(st));
    law("S1 in S2, T1 in T2 => S1^T1 in S2^T2", c.conj(s1, t1).is_subset_of(s_t));
  }
  law("(ST)U = S(TU)", c.mul(st, u) == c.mul(s, c.mul(t, u)));
  law("(S^T)^U = S^(TU)", c.conj(s_t, u) == c.conj(s, c.mul(t, u)));
  law("(S u T)^-1 = S^-1 u T^-1", c.inv(s | t) == (c.inv(s) | c.inv(t)));
  law("(ST)^-1 = T^-1 S^-1", c.inv(st) == c.mul(c.inv(t), c.inv(s)));
  law("(S^T)^-1 = (S^-1)^T", c.inv(s_t) == c.conj(c.inv(s), t));
  law("product agrees with the definition", product(g, s, t) == st);
  law("conjugate agrees with the definition", conjugate(g, s, t) == s_t);

  // TU u TU^-1 in T => S^T U = U S^T.  With H = <T> and V = U n H the
  // hypothesis always holds.
  {
    const std::string_view name = "TU u TU^-1 in T => S^T U = U S^T";
    const auto holds = [&](const Subset& tt, const Subset& uu) {
      return (c.mul(tt, uu) | c.mul(tt, c.inv(uu))).is_subset_of(tt);
    };
    const auto conclusion = [&](const Subset& tt, const Subset& uu) {
      const Subset x = c.conj(s, tt);
      return c.mul(x, uu) == c.mul(uu, x);
    };
    if (holds(t, u)) {
      law(name, conclusion(t, u));
    } else {
      out.item(name).skip("hypothesis fails for (T, U)");
    }
    const Subset h = c.pow_inf(c.sym(t));
    const Subset v = u & h;
    law(name, holds(h, v) && conclusion(h, v));
  }

  // Words in S and T.
  for (std::uint64_t n = 1; n <= kMaxExponent; ++n) {
    Subset words = c.none();
    for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
      Subset w = c.unit();
      for (std::uint64_t k = 0; k < n; ++k) {
        w = c.mul(w, ((mask >> k) & 1U) != 0 ? t : s);
      }
      words |= w;
    }
    law("(S u T)^n = union of the words S^I T^J", c.pow(s | t, n) == words);
  }
  const auto commuting = [&](const Subset& tt, bool always) {
    const std::string_view name = "ST = TS => (S u T)^n = U S^k T^l and (ST)^n = S^n T^n";
    if (!(c.mul(s, tt) == c.mul(tt, s))) {
      if (!always) {
        out.item(name).skip("ST != TS");
        return;
      }
    }
    for (std::uint64_t n = 0; n <= kMaxExponent; ++n) {
      Subset rhs = c.none();
      for (std::uint64_t k = 0; k <= n; ++k) {
        rhs |= c.mul(c.pow(s, k), c.pow(tt, n - k));
      }
      law(name, c.pow(s | tt, n) == rhs && c.pow(c.mul(s, tt), n) == c.mul(c.pow(s, n), c.pow(tt, n)));
    }
  };
  commuting(t, false);
  commuting(c.closure(t), true);  // a conjugation-invariant T commutes with S

  // Unions and intersections.
  law("(S u U)T = ST u UT", c.mul(s | u, t) == (st | c.mul(u, t)));
  law("S(T u U) = ST u SU", c.mul(s, t | u) == (st | c.mul(s, u)));
  law("(S u U)^T = S^T u U^T", c.conj(s | u, t) == (s_t | c.conj(u, t)));
  law("S^(T u U) = S^T u S^U", c.conj(s, t | u) == (s_t | c.conj(s, u)));
  law("(S n U)^-1 = S^-1 n U^-1", c.inv(s & u) == (c.inv(s) & c.inv(u)));
  law("(S n U)^T in S^T n U^T", c.conj(s & u, t).is_subset_of(s_t & c.conj(u, t)));

  // Conjugation by a.
  law("(S u T)^a = S^a u T^a", c.conj(s | t, a) == (c.conj(s, a) | c.conj(t, a)));
  law("(S n T)^a = S^a n T^a", c.conj(s & t, a) == (c.conj(s, a) & c.conj(t, a)));
  law("(ST)^a = S^a T^a", c.conj(st, a) == c.mul(c.conj(s, a), c.conj(t, a)));
  for (ExtNat n : exponents()) {
    law("(S^(<=n))^T in (S^T)^(<=n)", c.conj(c.pow_leq(s, n), t).is_subset_of(c.pow_leq(s_t, n)));
  }

  // Symmetrization.
  const Subset s_pm = c.sym(s);
  const Subset t_pm = c.sym(t);
  law("(S u T)^pm = S^pm u T^pm", c.sym(s | t) == (s_pm | t_pm));
  law("S, T symmetric => S u T, S n T symmetric",
      c.symmetric(s_pm | t_pm) && c.symmetric(s_pm & t_pm));
  law("S, T symmetric => (ST)^-1 = TS", c.inv(c.mul(s_pm, t_pm)) == c.mul(t_pm, s_pm));

  // Conjugation in the other direction.
  law("^T S = S^(T^-1)", c.left_conj(s, t) == c.conj(s, c.inv(t)));
  law("ST in T S^T", st.is_subset_of(c.mul(t, s_t)));
  law("TS in ^T S T", ts.is_subset_of(c.mul(c.left_conj(s, t), t)));

  // Conjugation-invariant sets.
  const Subset cs = c.closure(s);
  const Subset ct = c.closure(t);
  if (!t.empty()) {
    law("S invariant => ^T S = S^T = S", c.left_conj(cs, t) == cs && c.conj(cs, t) == cs);
  } else {
    out.item("S invariant => ^T S = S^T = S").skip("T empty");
  }
  law("S invariant => ST = TS", c.mul(cs, t) == c.mul(t, cs));
  law("S, T invariant => S u T, S n T, ST invariant",
      c.invariant(cs | ct) && c.invariant(cs & ct) && c.invariant(c.mul(cs, ct)));
  const Subset cs_pm = c.closure(s_pm);
  const Subset ct_pm = c.closure(t_pm);
  const Subset prod = c.mul(cs_pm, ct_pm);
  law("S, T symmetric invariant => S^-1, S u T, ST symmetric invariant",
      c.symmetric(c.inv(cs_pm)) && c.invariant(c.inv(cs_pm)) && c.symmetric(cs_pm | ct_pm) &&
          c.invariant(cs_pm | ct_pm) && c.symmetric(prod) && c.invariant(prod));
  law("C_(S u T) = C_S u C_T", c.closure(c.sym(s | t)) == (cs_pm | ct_pm));
}

void check_group_identities(const FiniteGroup& g, Report& out) {
  const Calc c{g};
  const std::size_t n = g.order();
  CheckItem& conj_conj = out.item("(x^a)^b = x^(ab)");
  CheckItem& conj_mul = out.item("(xy)^a = x^a y^a");
  CheckItem& conj_inv = out.item("(x^-1)^a = (x^a)^-1");
  for (Elem x = 0; x < n; ++x) {
    for (Elem a = 0; a < n; ++a) {
      const Elem xa = g.conj(x, a);
      const auto w = [&] { return "x=" + std::to_string(x) + " a=" + std::to_string(a); };
      conj_inv.record(g.conj(g.inv(x), a) == g.inv(xa), w);
      for (Elem b = 0; b < n; ++b) {
        conj_conj.record(g.conj(xa, b) == g.conj(x, g.mul(a, b)), w);
        conj_mul.record(g.conj(g.mul(x, b), a) == g.mul(xa, g.conj(b, a)), w);
      }
    }
  }

  const Subset empty = g.empty_set();
  const Subset e = g.identity_set();
  out.item("empty^0 = empty^inf = <empty> = <<empty>> = {e}")
      .record(power(g, empty, 0) == e && power(g, empty, kInfinity) == e &&
                  generated(g, empty, GenMode::subgroup) == e &&
                  generated(g, empty, GenMode::normal) == e && c.pow_inf(empty) == e,
              {});

  // (S u N)^n = S^n u S^(<=n-1) N for a normal subgroup N, over all S
  // when |G| <= 8 and over the classes' unions with a fixed S otherwise.
  CheckItem& normal_law = out.item("N normal => (S u N)^n = S^n u S^(<=n-1) N");
  const auto normals = normal_subgroups(g);
  const auto check_with = [&](const Subset& s, const Subset& nn) {
    for (std::uint64_t k = 0; k <= kMaxExponent; ++k) {
      Subset rhs = c.pow(s, k);
      if (k > 0) {
        rhs |= c.mul(c.pow_leq(s, k - 1), nn);
      }
      normal_law.record(c.pow(s | nn, k) == rhs,
                        [&] { return show("S", s) + " " + show("N", nn) + " n=" + std::to_string(k); });
    }
  };
  if (n <= 8) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const Subset s = g.subset_from_mask(mask);
      for (const auto& nn : normals) {
        check_with(s, nn);
      }
    }
  } else {
    Sampler sampler(n);
    for (int i = 0; i < 64; ++i) {
      const Subset s = sampler.subset_of(g.full_set());
      for (const auto& nn : normals) {
        check_with(s, nn);
      }
    }
  }
}

Report subset_identity_suite(const FiniteGroup& g, std::size_t exhaustive_limit,
                             std::size_t samples, std::uint64_t seed) {
  Report report("subset identities on " + g.name());
  const std::size_t n = g.order();
  check_group_identities(g, report);
  Sampler sampler(seed);
  const auto draw = [&] { return static_cast<Elem>(sampler.below(n)); };
  if (n <= exhaustive_limit && n <= 20) {
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Subset> all;
    all.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      all.push_back(g.subset_from_mask(mask));
    }
    std::vector<Elem> elements(n);
    for (Elem x = 0; x < n; ++x) {
      elements[x] = x;
    }
    for (const auto& s : all) {
      check_unary_identities(g, s, elements, report);
      for (const auto& t : all) {
        if (n <= 4) {
          for (const auto& u : all) {
            check_triple_identities(g, s, t, u, draw(), report);
          }
        } else {
          check_triple_identities(g, s, t, all[sampler.below(count)], draw(), report);
        }
      }
    }
  } else {
    const Subset full = g.full_set();
    for (std::size_t i = 0; i < samples; ++i) {
      const Subset s = sampler.subset_of(full);
      const Subset t = sampler.subset_of(full);
      const Subset u = sampler.subset_of(full);
      const Elem a = draw();
      const Elem b = draw();
      check_unary_identities(g, s, {a, b}, report);
      check_triple_identities(g, s, t, u, a, report);
    }
  }
  return report;
}

}  // namespace wordmetrics
