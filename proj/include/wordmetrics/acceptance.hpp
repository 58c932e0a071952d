#ifndef WORDMETRICS_ACCEPTANCE_HPP_
#define WORDMETRICS_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wordmetrics/group.hpp"
#include "wordmetrics/report.hpp"

namespace wordmetrics {

struct AcceptanceOptions {
  /// Catalog groups up to this order (at most 16), plus S4.
  std::size_t max_order = 16;
  std::uint64_t seed = 0;
  /// Also run the subset identities on the extra groups of order 17..24.
  bool extended_identities = true;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  Report report;
  double seconds = 0;
  bool passed() const { return report.ok(); }
};

constexpr int kCriterionCount = 12;

/// Runs criterion `number` (1..12).  Throws std::out_of_range otherwise.
CriterionResult run_criterion(int number, const AcceptanceOptions& options);

/// Runs every criterion in order; `progress`, when set, is called after
/// each one.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& progress = {});

/// "criterion 3 PASS subset-algebra identities (checked=..., violations=0, 1.2 s)".
/// Without `with_time` the line is the same for every run with a given seed.
std::string criterion_line(const CriterionResult& r, bool with_time = true);

// Independent brute-force oracles used by criterion 9.  Each works on raw
// bitmasks over the multiplication table (|G| <= 24).

/// min |A| with the normal closure of A equal to G, searching every subset
/// A of G by size up to `cap`; -1 when none is found.
int naive_rank_n(const FiniteGroup& g, std::size_t cap = 4);

struct NaiveDiameters {
  std::uint64_t min = 0;  // diam_nfg
  std::uint64_t max = 0;  // Delta
  std::size_t family_size = 0;
};
/// min and max of sup nu_S(G) over every subset S containing e that is
/// symmetric, conjugation-invariant and generates G, by scanning all
/// 2^(|G|-1) such candidates (|G| <= 24).
NaiveDiameters naive_nfg_diameters(const FiniteGroup& g);

}  // namespace wordmetrics

#endif  // WORDMETRICS_ACCEPTANCE_HPP_
