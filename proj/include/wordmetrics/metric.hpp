#ifndef WORDMETRICS_METRIC_HPP_
#define WORDMETRICS_METRIC_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wordmetrics/ext_nat.hpp"
#include "wordmetrics/group.hpp"
#include "wordmetrics/report.hpp"

namespace wordmetrics {

// ---------------------------------------------------------------------------
// Word lengths and word metrics on a group.

/// nu_S(x) for every x: breadth-first search from e along x -> xs.
std::vector<ExtNat> word_lengths(const FiniteGroup& g, const Subset& s);
ExtNat word_length(const FiniteGroup& g, const Subset& s, Elem x);
/// d_S(x, y) = min{n | y in x S^n} = nu_S(x^{-1} y)
ExtNat word_metric(const FiniteGroup& g, const Subset& s, Elem x, Elem y);

// ---------------------------------------------------------------------------
// Metric tables and the axiom checker.

enum class Flavor { additive, multiplicative };

/// A square table of extended naturals indexed by a finite carrier.
struct MetricTable {
  std::size_t size = 0;
  std::vector<ExtNat> values;
  Flavor flavor = Flavor::additive;

  MetricTable() = default;
  MetricTable(std::size_t n, Flavor f) : size(n), values(n * n), flavor(f) {}

  ExtNat& at(std::size_t i, std::size_t j) { return values[i * size + j]; }
  ExtNat at(std::size_t i, std::size_t j) const { return values[i * size + j]; }
};

/// The table (d_S(x, y))_{x,y in G}.
MetricTable word_metric_table(const FiniteGroup& g, const Subset& s);

struct AxiomReport {
  bool reflexive = true;       // (i)   d(x,x) = 0, or rho(x,x) = 1
  bool nondegenerate = true;   // (i)'  d(x,y) = d(y,x) = 0 <=> x = y
  bool symmetric = true;       // (ii)
  bool triangle = true;        // (iii) additive or multiplicative
  std::optional<std::array<std::size_t, 3>> reflexive_witness;
  std::optional<std::array<std::size_t, 3>> nondegenerate_witness;
  std::optional<std::array<std::size_t, 3>> symmetric_witness;
  std::optional<std::array<std::size_t, 3>> triangle_witness;

  /// "metric", "pseudo-metric", "nondegenerate asymmetric metric",
  /// "asymmetric metric" or "not a metric" (prefixed with "multiplicative "
  /// for that flavor).
  std::string classification(Flavor flavor) const;
  bool is_asymmetric_metric() const { return reflexive && triangle; }
  bool is_metric() const { return nondegenerate && symmetric && triangle; }
};

/// Scans all pairs and triples; witnesses are the first (x, y, z) found.
AxiomReport check_metric_axioms(const MetricTable& t);

/// Entrywise max(d(x,y), d(y,x)).
MetricTable symmetrize_metric(const MetricTable& t);

// ---------------------------------------------------------------------------
// Balls and Hausdorff extensions.

/// B(A, r) = A S^{<=r} for the word metric of S.
Subset ball(const FiniteGroup& g, const Subset& s, const Subset& a, ExtNat r);

/// (d_S)_H(A, B) = min{n | B subset A S^{<=n}}, grown one layer at a time.
/// B empty gives 0; A empty and B nonempty gives inf.
ExtNat hausdorff_metric(const FiniteGroup& g, const Subset& s, const Subset& a,
                        const Subset& b);

/// The Hausdorff extension of an arbitrary additive table:
/// sup_{b in B} inf_{a in A} d(a, b), with sup of nothing = 0 and inf of
/// nothing = inf.
ExtNat hausdorff_from_table(const MetricTable& d, const Subset& a, const Subset& b);

/// B_H(A, r) = {x | d_H(A, {x}) <= r}, from the table's Hausdorff extension.
Subset hausdorff_ball(const MetricTable& d, const Subset& a, ExtNat r);

// ---------------------------------------------------------------------------
// The power-set metrics.

/// (nu_S)_H(A) = sup nu_S(A), with sup of the empty set = 0.
ExtNat nu_sup(const FiniteGroup& g, const Subset& s, const Subset& a);
/// Same, from precomputed word lengths of S.
ExtNat nu_sup(const std::vector<ExtNat>& lengths, const Subset& a);

/// nu_H(S, T) = (nu_S)_H(T)
ExtNat nu_H(const FiniteGroup& g, const Subset& s, const Subset& t);
/// max(nu_H(S,T), nu_H(T,S))
ExtNat nu_H_hat(const FiniteGroup& g, const Subset& s, const Subset& t);
/// rho = log nu_H and rho_hat = log nu_H_hat, for presentation only.
double rho(const FiniteGroup& g, const Subset& s, const Subset& t);
double rho_hat(const FiniteGroup& g, const Subset& s, const Subset& t);

// ---------------------------------------------------------------------------
// Function-space metrics.

/// lambda(g, g') = inf{s >= 1 | g' <= s g} over the common domain, with
/// inf/inf = 1, c/inf = 0 (c finite), inf/c = inf.  Values must be >= 1.
ExtRatio lambda(const std::vector<ExtNat>& g, const std::vector<ExtNat>& g_prime);

/// mu(f, f') = inf{r >= 0 | f' <= f + r}; infinite entries follow the same
/// conventions as lambda (inf - inf contributes 0).
double mu(const std::vector<double>& f, const std::vector<double>& f_prime);

/// The restriction of nu_S to G - {e}.
std::vector<ExtNat> lengths_off_identity(const FiniteGroup& g, const Subset& s);

/// For S, T in S'(G)^*: nu_H(S,T) = lambda(nu_T, nu_S) on G - {e}, and the
/// symmetrized version.  Exhaustive when `exhaustive_limit` >= |G|,
/// otherwise `samples` random pairs drawn with `seed`.
Report zeta_check(const FiniteGroup& g, std::size_t exhaustive_limit = 8,
                  std::size_t samples = 500, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Property suites.

/// nu_H on S''(G)^*: nu_H(S,S) = 1, the multiplicative triangle
/// nu_H(S,U) <= nu_H(S,T) nu_H(T,U), nondegeneracy (nu_H(S,T) = nu_H(T,S) = 1
/// only for S = T), and the two characterizations of the value 1.  The
/// whole family when |G| <= exhaustive_limit, otherwise `samples` random
/// pairs and as many random triples.
Report nu_H_axiom_check(const FiniteGroup& g, std::size_t exhaustive_limit = 8,
                        std::size_t samples = 1000, std::uint64_t seed = 0);

/// B_H(A, r) = B(A, r) for the word metric of S, every A and r = 0..|G|.
/// S runs over all subsets when there are at most `max_generating_sets`
/// of them, otherwise over that many (the empty set, {e}, G and random
/// sets).  A runs over all subsets when |G| <= exhaustive_limit, otherwise
/// over `max_generating_sets` random sets.
Report discrete_ball_check(const FiniteGroup& g, std::size_t exhaustive_limit = 8,
                           std::size_t max_generating_sets = 64, std::uint64_t seed = 0);

/// nu_S by brute force: the set of all products of exactly n factors from
/// S, for n = 0..max_len, straight from the multiplication table.
/// Elements not reached are reported as inf.
std::vector<ExtNat> naive_word_lengths(const FiniteGroup& g, const Subset& s,
                                       std::uint64_t max_len);

/// word_lengths, power and power_leq against the brute-force products, for
/// every S when |G| <= exhaustive_limit and `samples` random S otherwise.
/// Lengths beyond max_len must come out as more than max_len or inf.
Report word_length_oracle_check(const FiniteGroup& g, std::uint64_t max_len = 8,
                                std::size_t exhaustive_limit = 8, std::size_t samples = 64,
                                std::uint64_t seed = 0);

}  // namespace wordmetrics

#endif  // WORDMETRICS_METRIC_HPP_
