#include "wordmetrics/ext_nat.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace wordmetrics {

ExtNat parse_ext_nat(const std::string& text) {
  if (text == "inf" || text == "Infinity" || text == "infinity") {
    return kInfinity;
  }
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(text, &pos);
  if (pos != text.size()) {
    throw std::invalid_argument("not an extended natural: " + text);
  }
  return ExtNat(v);
}

double log_of(ExtNat v) {
  if (v.is_infinite()) {
    return std::numeric_limits<double>::infinity();
  }
  return std::log(static_cast<double>(v.value()));
}

ExtRatio::ExtRatio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) {
    throw std::domain_error("ExtRatio with zero denominator");
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

bool operator==(const ExtRatio& a, const ExtRatio& b) noexcept {
  if (a.infinite_ || b.infinite_) {
    return a.infinite_ == b.infinite_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const ExtRatio& a, const ExtRatio& b) noexcept {
  if (a.infinite_ || b.infinite_) {
    return a.infinite_ <=> b.infinite_;
  }
  __extension__ using Wide = unsigned __int128;
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

double ExtRatio::to_double() const noexcept {
  if (infinite_) {
    return std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExtRatio::to_string() const {
  if (infinite_) {
    return "inf";
  }
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace wordmetrics
