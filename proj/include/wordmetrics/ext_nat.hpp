#ifndef WORDMETRICS_EXT_NAT_HPP_
#define WORDMETRICS_EXT_NAT_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wordmetrics {

/// A value in Z_{>=0} extended by a single point at infinity.
///
/// Word lengths, word metrics and the multiplicative power-set metric all
/// take values here. Arithmetic saturates at infinity; there is no overflow
/// path that silently wraps.
class ExtNat {
 public:
  constexpr ExtNat() noexcept = default;
  constexpr ExtNat(std::uint64_t v) noexcept : value_(v) {}  // NOLINT(implicit)

  static constexpr ExtNat infinity() noexcept {
    ExtNat r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  std::uint64_t value() const {
    if (infinite_) {
      throw std::domain_error("ExtNat::value called on infinity");
    }
    return value_;
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) noexcept {
    if (a.infinite_ || b.infinite_) {
      return a.infinite_ <=> b.infinite_;
    }
    return a.value_ <=> b.value_;
  }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) noexcept {
    if (a.infinite_ || b.infinite_) {
      return infinity();
    }
    return ExtNat(a.value_ + b.value_);
  }

  // inf * 0 = 0, inf * n = inf for n >= 1.
  friend constexpr ExtNat operator*(ExtNat a, ExtNat b) noexcept {
    if ((a.is_finite() && a.value_ == 0) || (b.is_finite() && b.value_ == 0)) {
      return ExtNat(0);
    }
    if (a.infinite_ || b.infinite_) {
      return infinity();
    }
    return ExtNat(a.value_ * b.value_);
  }

  ExtNat& operator+=(ExtNat other) noexcept { return *this = *this + other; }

  std::string to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtNat v) {
    return os << v.to_string();
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline constexpr ExtNat kInfinity = ExtNat::infinity();

constexpr ExtNat max(ExtNat a, ExtNat b) noexcept { return a < b ? b : a; }
constexpr ExtNat min(ExtNat a, ExtNat b) noexcept { return a < b ? a : b; }

/// Parses "inf" or a decimal integer.
ExtNat parse_ext_nat(const std::string& text);

/// Natural log with log(inf) = +inf; used only for presentation.
double log_of(ExtNat v);

/// An extended nonnegative rational p/q (q >= 1) or infinity. Used for the
/// exact value of the ratio metric between integer-valued functions.
class ExtRatio {
 public:
  constexpr ExtRatio() noexcept = default;
  ExtRatio(std::uint64_t num, std::uint64_t den);
  static constexpr ExtRatio infinity() noexcept {
    ExtRatio r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  friend bool operator==(const ExtRatio& a, const ExtRatio& b) noexcept;
  friend std::strong_ordering operator<=>(const ExtRatio& a, const ExtRatio& b) noexcept;

  friend bool operator==(const ExtRatio& a, ExtNat b) noexcept {
    return a == from(b);
  }

  static ExtRatio from(ExtNat v) {
    return v.is_infinite() ? infinity() : ExtRatio(v.value(), 1);
  }

  double to_double() const noexcept;
  std::string to_string() const;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
  bool infinite_ = false;
};

}  // namespace wordmetrics

#endif  // WORDMETRICS_EXT_NAT_HPP_
