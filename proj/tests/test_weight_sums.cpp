#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "uwca/weight_sums.hpp"

using namespace uwca;
using uwca::testing::random_index;
using uwca::testing::TermByTermScanner;

TEST_CASE("decimal round trip") {
  CHECK(parse_index("0") == 0);
  CHECK(parse_index("007") == 7);
  CHECK(to_decimal(parse_index("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_index(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_index("-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index("12 34"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index("3e5"), std::invalid_argument);

  std::mt19937_64 rng(1234);
  for (int i = 0; i < 50; ++i) {
    const Index n = random_index(rng, 200);
    CHECK(parse_index(to_decimal(n)) == n);
  }
}

TEST_CASE("hamming weight basics") {
  CHECK(hamming_weight(0) == 0);
  CHECK(hamming_weight(7) == 3);
  for (unsigned k : {0u, 1u, 13u, 64u, 257u}) {
    CHECK(hamming_weight(Index(1) << k) == 1);
  }
  CHECK_THROWS_AS(hamming_weight(Index(-3)), std::domain_error);
}

TEST_CASE("hamming weight halving recursion") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Index a = random_index(rng, 96);
    CHECK(hamming_weight(2 * a) == hamming_weight(a));
    CHECK(hamming_weight(2 * a + 1) == hamming_weight(a) + 1);
  }
}

TEST_CASE("naive sum: pinned values and budget") {
  CHECK(weight_sum_naive(0) == 0);
  CHECK(weight_sum_naive(3) == 7);  // 3^0 + 3^1 + 3^1
  for (unsigned k = 0; k <= 12; ++k) {
    CHECK(weight_sum_naive(Index(1) << k) == Index(1) << (2 * k));  // 4^k
  }
  CHECK_THROWS_AS(weight_sum_naive(Index(1) << 25), BudgetExceeded);
  CHECK_THROWS_AS(weight_sum_naive(101, 100), BudgetExceeded);
  CHECK(weight_sum_naive(100, 100) == weight_sum_naive(100));  // inclusive
  CHECK_THROWS_AS(weight_sum_naive(Index(-1)), std::domain_error);
}

TEST_CASE("fast sum: pinned values") {
  CHECK(weight_sum_fast(0) == 0);
  CHECK(weight_sum_fast(14) == 148);  // 64 + 48 + 36
  CHECK(weight_sum_fast(12) == 112);  // 64 + 48
  CHECK(weight_sum_fast(11) == 85);   // 64 + 12 + 9
  for (unsigned k = 0; k <= 100; ++k) {
    CHECK(weight_sum_fast(Index(1) << k) == Index(1) << (2 * k));
  }
}

TEST_CASE("fast equals naive on an exhaustive small range") {
  for (std::uint64_t n = 0; n <= (1u << 12); ++n) {
    REQUIRE(weight_sum_fast(Index(n)) == weight_sum_naive(Index(n)));
  }
}

TEST_CASE("fast equals the term-by-term oracle past the naive budget") {
  TermByTermScanner scanner;
  for (std::uint64_t n = 0; n <= (1u << 14); ++n) {
    REQUIRE(weight_sum_fast(Index(n)) == scanner.advance_to(n));
  }
}

TEST_CASE("S(n) is 1 mod 3 for n >= 1") {
  for (std::uint64_t n = 1; n <= (1u << 16); ++n) {
    REQUIRE(weight_sum_fast(Index(n)) % 3 == 1);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    CHECK(weight_sum_fast(random_index(rng, 128)) % 3 == 1);
  }
}

TEST_CASE("S grows by exactly 3^wt(n)") {
  CellCount previous = 0;
  for (std::uint64_t n = 0; n < (1u << 10); ++n) {
    const CellCount next = weight_sum_fast(Index(n + 1));
    const CellCount delta = next - previous;
    CHECK(delta == boost::multiprecision::pow(
                       CellCount(3),
                       hamming_weight(Index(n)).convert_to<unsigned>()));
    CHECK(delta > 0);
    previous = next;
  }
}

TEST_CASE("factorization S(m*2^k) == a_m * 4^k at desk scale") {
  for (std::uint32_t m = 1; m <= 16; ++m) {
    const CellCount a_m = series_a130665(Index(m));
    CHECK(a_m == weight_sum_naive(Index(m)));
    for (std::uint32_t k = 0; k <= 8; ++k) {
      CHECK(weight_sum_fast(Index(m) << k) == a_m << (2 * k));
      CHECK(weight_sum_naive(Index(m) << k) == a_m << (2 * k));
    }
  }
}

TEST_CASE("a130665 series") {
  CHECK(series_a130665(1) == 1);
  CHECK(series_a130665(3) == 7);
  CHECK(series_a130665(7) == 37);
  // leading terms, by hand: 1, 4, 7, 16, 19, 28, 37, 64
  const CellCount expected[] = {1, 4, 7, 16, 19, 28, 37, 64};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(series_a130665(Index(i + 1)) == expected[i]);
  }
  CHECK_THROWS_AS(series_a130665(0), std::domain_error);
}
