#include "wordmetrics/report.hpp"

#include <sstream>

namespace wordmetrics {

bool CheckItem::record(bool ok, const std::function<std::string()>& witness) {
  ++checked;
  if (!ok) {
    ++violations;
    if (witnesses.size() < kMaxWitnesses) {
      witnesses.push_back(witness ? witness() : std::string("(no witness)"));
    }
  }
  return ok;
}

void CheckItem::skip(const std::string& reason) {
  ++skipped;
  ++skip_reasons[reason];
}

CheckItem& Report::item(std::string_view name) {
  if (auto it = index_.find(name); it != index_.end()) {
    return items_[it->second];
  }
  index_.emplace(std::string(name), items_.size());
  items_.emplace_back().name = std::string(name);
  return items_.back();
}

bool Report::ok() const noexcept {
  for (const auto& it : items_) {
    if (!it.ok()) {
      return false;
    }
  }
  return true;
}

std::uint64_t Report::total_checked() const noexcept {
  std::uint64_t n = 0;
  for (const auto& it : items_) {
    n += it.checked;
  }
  return n;
}

std::uint64_t Report::total_violations() const noexcept {
  std::uint64_t n = 0;
  for (const auto& it : items_) {
    n += it.violations;
  }
  return n;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& src : other.items_) {
    CheckItem& dst = item(prefix.empty() ? src.name : prefix + "/" + src.name);
    dst.checked += src.checked;
    dst.violations += src.violations;
    dst.skipped += src.skipped;
    for (const auto& w : src.witnesses) {
      if (dst.witnesses.size() < CheckItem::kMaxWitnesses) {
        dst.witnesses.push_back(w);
      }
    }
    for (const auto& [reason, count] : src.skip_reasons) {
      dst.skip_reasons[reason] += count;
    }
  }
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title_;
  j["ok"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& it : items_) {
    nlohmann::ordered_json e;
    e["name"] = it.name;
    e["checked"] = it.checked;
    e["violations"] = it.violations;
    e["skipped"] = it.skipped;
    e["pass"] = it.ok();
    e["witnesses"] = it.witnesses;
    if (!it.skip_reasons.empty()) {
      e["skip_reasons"] = it.skip_reasons;
    }
    arr.push_back(std::move(e));
  }
  j["items"] = std::move(arr);
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& it : items_) {
    os << it.name << ": checked=" << it.checked << " violations=" << it.violations
       << " skipped=" << it.skipped << '\n';
    for (const auto& w : it.witnesses) {
      os << "    counterexample: " << w << '\n';
    }
  }
  return os.str();
}

}  // namespace wordmetrics
