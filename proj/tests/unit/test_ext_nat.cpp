#include <doctest.h>

#include <vector>

#include "wordmetrics/ext_nat.hpp"

using namespace wordmetrics;

TEST_CASE("addition and multiplication saturate at infinity") {
  CHECK(ExtNat(2) + ExtNat(3) == ExtNat(5));
  CHECK(ExtNat(2) + kInfinity == kInfinity);
  CHECK(kInfinity * ExtNat(0) == ExtNat(0));
  CHECK(ExtNat(0) * kInfinity == ExtNat(0));
  CHECK(kInfinity * ExtNat(3) == kInfinity);
  CHECK(ExtNat(4) * ExtNat(3) == ExtNat(12));
}

TEST_CASE("order puts infinity above every finite value") {
  CHECK(ExtNat(1000000) < kInfinity);
  CHECK(!(kInfinity < kInfinity));
  CHECK(max(ExtNat(3), kInfinity) == kInfinity);
  CHECK(min(ExtNat(3), kInfinity) == ExtNat(3));
  CHECK_THROWS_AS(kInfinity.value(), std::domain_error);
}

TEST_CASE("addition is commutative, associative and monotone") {
  std::vector<ExtNat> vals{0, 1, 2, 7, kInfinity};
  for (ExtNat a : vals) {
    for (ExtNat b : vals) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a <= a + b);
      for (ExtNat c : vals) {
        CHECK((a + b) + c == a + (b + c));
        if (a <= b) {
          CHECK(a + c <= b + c);
          CHECK(a * c <= b * c);
        }
      }
    }
  }
}

TEST_CASE("parse and print") {
  CHECK(parse_ext_nat("inf") == kInfinity);
  CHECK(parse_ext_nat("17") == ExtNat(17));
  CHECK_THROWS(parse_ext_nat("17x"));
  CHECK(ExtNat(5).to_string() == "5");
  CHECK(kInfinity.to_string() == "inf");
}

TEST_CASE("ratios are kept in lowest terms and compared exactly") {
  CHECK(ExtRatio(2, 4) == ExtRatio(1, 2));
  CHECK(ExtRatio(6, 2) == ExtNat(3));
  CHECK(ExtRatio(2, 4).to_string() == "1/2");
  CHECK(ExtRatio(1, 3) < ExtRatio(1, 2));
  // 1/3 and 333333333/1000000000 differ only past double precision's comfort
  CHECK(ExtRatio(333333333, 1000000000) < ExtRatio(1, 3));
  CHECK(ExtRatio(1000000, 1) < ExtRatio::infinity());
  CHECK(ExtRatio::from(kInfinity) == ExtRatio::infinity());
  CHECK_THROWS_AS(ExtRatio(1, 0), std::domain_error);
}
