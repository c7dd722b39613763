#include "uwca/weight_sums.hpp"

#include <bit>
#include <vector>

namespace uwca {

namespace {

void require_nonnegative(const Index& n, const char* op) {
  if (n < 0) {
    throw std::domain_error(std::string(op) + ": argument must be >= 0, got " +
                            n.str());
  }
}

// 3^0 .. 3^max_weight as a local table; the naive loop indexes it by
// popcount without any shared state.
std::vector<CellCount> pow3_table(unsigned max_weight) {
  std::vector<CellCount> table;
  table.reserve(max_weight + 1);
  table.emplace_back(1);
  for (unsigned w = 1; w <= max_weight; ++w) {
    table.push_back(table.back() * 3);
  }
  return table;
}

}  // namespace

Index hamming_weight(const Index& n) {
  require_nonnegative(n, "hamming_weight");
  if (n == 0) {
    return Index(0);
  }
  unsigned count = 0;
  const unsigned top = boost::multiprecision::msb(n);
  for (unsigned j = 0; j <= top; ++j) {
    if (boost::multiprecision::bit_test(n, j)) {
      ++count;
    }
  }
  return Index(count);
}

CellCount weight_sum_naive(const Index& n, std::uint64_t budget) {
  require_nonnegative(n, "weight_sum_naive");
  if (n > budget) {
    throw BudgetExceeded("weight_sum_naive: n = " + n.str() +
                         " exceeds the loop budget " + std::to_string(budget) +
                         "; use weight_sum_fast");
  }
  const auto limit = n.convert_to<std::uint64_t>();
  const unsigned max_weight =
      limit == 0 ? 0 : static_cast<unsigned>(std::bit_width(limit - 1));
  const std::vector<CellCount> pow3 = pow3_table(max_weight);

  CellCount sum = 0;
  for (std::uint64_t i = 0; i < limit; ++i) {
    sum += pow3[static_cast<unsigned>(std::popcount(i))];
  }
  return sum;
}

CellCount weight_sum_fast(const Index& n) {
  require_nonnegative(n, "weight_sum_fast");
  if (n == 0) {
    return CellCount(0);
  }
  CellCount total = 0;
  CellCount high_weight_factor = 1;  // 3^(set bits consumed so far)
  for (int j = static_cast<int>(boost::multiprecision::msb(n)); j >= 0; --j) {
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(j))) {
      total += high_weight_factor << (2 * j);  // 3^above * 4^j
      high_weight_factor *= 3;
    }
  }
  return total;
}

CellCount series_a130665(const Index& m) {
  require_nonnegative(m, "series_a130665");
  if (m == 0) {
    throw std::domain_error("series_a130665: the series is indexed from m = 1");
  }
  // a_m is S(m); one code path, one set of bugs.
  return weight_sum_fast(m);
}

}  // namespace uwca
