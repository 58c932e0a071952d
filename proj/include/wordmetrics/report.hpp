#ifndef WORDMETRICS_REPORT_HPP_
#define WORDMETRICS_REPORT_HPP_

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace wordmetrics {

/// Pass/fail tally for one named check.  Only the first few counterexample
/// descriptions are kept, and they are only built when a check fails.
struct CheckItem {
  static constexpr std::size_t kMaxWitnesses = 5;

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> witnesses;
  std::map<std::string, std::uint64_t> skip_reasons;

  /// Records one check; `witness` is evaluated only on failure.
  bool record(bool ok, const std::function<std::string()>& witness);
  void skip(const std::string& reason);
  bool ok() const noexcept { return violations == 0; }
};

class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  /// The item with this name, created on first use.  Items keep insertion
  /// order and returned references stay valid as items are added.
  CheckItem& item(std::string_view name);
  const std::deque<CheckItem>& items() const noexcept { return items_; }
  const std::string& title() const noexcept { return title_; }

  bool ok() const noexcept;
  std::uint64_t total_checked() const noexcept;
  std::uint64_t total_violations() const noexcept;

  /// Adds every item of `other`, prefixing names when `prefix` is non-empty.
  void merge(const Report& other, const std::string& prefix = {});

  nlohmann::ordered_json to_json() const;
  /// One line per item: "name: checked=N violations=M skipped=K".
  std::string summary() const;

 private:
  std::string title_;
  std::deque<CheckItem> items_;  // deque: references from item() stay valid
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace wordmetrics

#endif  // WORDMETRICS_REPORT_HPP_
