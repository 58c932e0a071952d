#ifndef WORDMETRICS_SUBSET_HPP_
#define WORDMETRICS_SUBSET_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace wordmetrics {

using Elem = std::uint32_t;

/// A subset of a finite carrier {0, ..., size-1}, stored as a bit-vector.
///
/// Each subset remembers the id of the carrier it belongs to (a group, a
/// group action's point set, a star-set).  Binary set operations on subsets
/// of different carriers throw std::invalid_argument.
class Subset {
 public:
  Subset() = default;
  Subset(std::uint64_t universe, std::size_t size);
  Subset(std::uint64_t universe, std::size_t size, std::initializer_list<Elem> elems);
  Subset(std::uint64_t universe, std::size_t size, const std::vector<Elem>& elems);

  static Subset full(std::uint64_t universe, std::size_t size);
  /// Subset whose members are the set bits of `mask`; requires size <= 64.
  static Subset from_mask(std::uint64_t universe, std::size_t size, std::uint64_t mask);

  std::uint64_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return size_; }

  bool contains(Elem x) const noexcept {
    return x < size_ && ((word_data()[x >> 6] >> (x & 63)) & 1U) != 0;
  }
  void insert(Elem x) {
    if (x >= size_) {
      throw_outside(x);
    }
    word_data()[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  void erase(Elem x);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  std::vector<Elem> elements() const;
  /// Smallest member; undefined on the empty set.
  Elem first() const;

  template <typename F>
  void for_each(F&& f) const {
    const std::uint64_t* words = word_data();
    for (std::size_t w = 0; w < nwords_; ++w) {
      std::uint64_t bits = words[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// Low 64 bits of the bit-vector; exact when size <= 64.
  std::uint64_t mask() const noexcept { return nwords_ == 0 ? 0 : word_data()[0]; }
  std::span<const std::uint64_t> words() const noexcept { return {word_data(), nwords_}; }

  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  Subset complement() const;

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    // unused inline words stay zero, so the storage compares directly
    return a.universe_ == b.universe_ && a.size_ == b.size_ && a.inline_ == b.inline_ &&
           a.heap_ == b.heap_;
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept;

  /// Sorted element list, e.g. "[0,1,5]".
  std::string to_string() const;

  std::size_t hash() const noexcept;

 private:
  // Carriers up to 64 * kInlineWords elements are stored without allocating.
  static constexpr std::size_t kInlineWords = 4;

  void check_same(const Subset& other) const;
  [[noreturn]] void throw_outside(Elem x) const;
  std::uint64_t* word_data() noexcept { return heap_.empty() ? inline_.data() : heap_.data(); }
  const std::uint64_t* word_data() const noexcept {
    return heap_.empty() ? inline_.data() : heap_.data();
  }

  std::uint64_t universe_ = 0;
  std::size_t size_ = 0;
  std::size_t nwords_ = 0;
  std::array<std::uint64_t, kInlineWords> inline_{};
  std::vector<std::uint64_t> heap_;
};

/// Parses the literal format "[0,1,5]" (whitespace tolerated, order free).
Subset parse_subset(const std::string& text, std::uint64_t universe, std::size_t size);

/// Returns a fresh carrier id; every group, action and star-set takes one.
std::uint64_t next_universe_id();

}  // namespace wordmetrics

template <>
struct std::hash<wordmetrics::Subset> {
  std::size_t operator()(const wordmetrics::Subset& s) const noexcept { return s.hash(); }
};

#endif  // WORDMETRICS_SUBSET_HPP_
