#include "wordmetrics/subset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wordmetrics {

namespace {

std::size_t word_count(std::size_t size) { return (size + 63) / 64; }

}  // namespace

std::uint64_t next_universe_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

Subset::Subset(std::uint64_t universe, std::size_t size)
    : universe_(universe), size_(size), nwords_(word_count(size)) {
  if (nwords_ > kInlineWords) {
    heap_.assign(nwords_, 0);
  }
}

Subset::Subset(std::uint64_t universe, std::size_t size, std::initializer_list<Elem> elems)
    : Subset(universe, size) {
  for (Elem x : elems) {
    insert(x);
  }
}

Subset::Subset(std::uint64_t universe, std::size_t size, const std::vector<Elem>& elems)
    : Subset(universe, size) {
  for (Elem x : elems) {
    insert(x);
  }
}

Subset Subset::full(std::uint64_t universe, std::size_t size) {
  Subset s(universe, size);
  for (std::size_t w = 0; w < s.nwords_; ++w) {
    s.word_data()[w] = ~std::uint64_t{0};
  }
  if (size % 64 != 0) {
    s.word_data()[s.nwords_ - 1] = (std::uint64_t{1} << (size % 64)) - 1;
  }
  return s;
}

Subset Subset::from_mask(std::uint64_t universe, std::size_t size, std::uint64_t mask) {
  if (size > 64) {
    throw std::invalid_argument("Subset::from_mask needs a carrier of at most 64 elements");
  }
  Subset s(universe, size);
  if (size == 0) {
    return s;
  }
  const std::uint64_t limit = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  if ((mask & ~limit) != 0) {
    throw std::invalid_argument("Subset::from_mask: mask has bits beyond the carrier");
  }
  s.word_data()[0] = mask;
  return s;
}

void Subset::throw_outside(Elem x) const {
  throw std::out_of_range("element " + std::to_string(x) + " outside carrier of size " +
                          std::to_string(size_));
}

void Subset::erase(Elem x) {
  if (x < size_) {
    word_data()[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words()) {
    c += static_cast<std::size_t>(std::popcount(w));
  }
  return c;
}

bool Subset::empty() const noexcept {
  return std::all_of(words().begin(), words().end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

Elem Subset::first() const {
  for (std::size_t w = 0; w < nwords_; ++w) {
    if (word_data()[w] != 0) {
      return static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(word_data()[w])));
    }
  }
  throw std::logic_error("Subset::first on empty set");
}

void Subset::check_same(const Subset& other) const {
  if (universe_ != other.universe_ || size_ != other.size_) {
    throw std::invalid_argument("subsets belong to different carriers");
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same(other);
  for (std::size_t w = 0; w < nwords_; ++w) {
    if ((word_data()[w] & ~other.word_data()[w]) != 0) {
      return false;
    }
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  check_same(other);
  for (std::size_t w = 0; w < nwords_; ++w) {
    if ((word_data()[w] & other.word_data()[w]) != 0) {
      return true;
    }
  }
  return false;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < nwords_; ++w) {
    word_data()[w] |= other.word_data()[w];
  }
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < nwords_; ++w) {
    word_data()[w] &= other.word_data()[w];
  }
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < nwords_; ++w) {
    word_data()[w] &= ~other.word_data()[w];
  }
  return *this;
}

Subset Subset::complement() const { return full(universe_, size_) - *this; }

std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) {
    return c;
  }
  if (auto c = a.size_ <=> b.size_; c != 0) {
    return c;
  }
  // Compare as big integers, most significant word first.
  for (std::size_t w = a.nwords_; w-- > 0;) {
    if (auto c = a.word_data()[w] <=> b.word_data()[w]; c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first_item = true;
  for_each([&](Elem x) {
    if (!first_item) {
      os << ',';
    }
    os << x;
    first_item = false;
  });
  os << ']';
  return os.str();
}

std::size_t Subset::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (auto w : words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Subset parse_subset(const std::string& text, std::uint64_t universe, std::size_t size) {
  Subset s(universe, size);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) {
      ++i;
    }
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("subset literal \"" + text + "\" at offset " + std::to_string(i) +
                                ": " + what);
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') {
    fail("expected '['");
  }
  ++i;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
        ++i;
      }
      if (start == i) {
        fail("expected an element index");
      }
      const unsigned long long v = std::stoull(text.substr(start, i - start));
      if (v >= size) {
        fail("element " + std::to_string(v) + " outside carrier of size " + std::to_string(size));
      }
      s.insert(static_cast<Elem>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (i != text.size()) {
    fail("trailing characters");
  }
  return s;
}

}  // namespace wordmetrics
