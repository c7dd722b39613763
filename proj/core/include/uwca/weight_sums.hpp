#pragma once

#include <cstdint>

#include "uwca/bigint.hpp"

namespace uwca {

// Hamming weight: number of 1 bits in the binary expansion of n.
// wt(0) = 0 (empty expansion). Throws std::domain_error for n < 0.
Index hamming_weight(const Index& n);

// Loop budget for the term-by-term sum below. It exists because the naive
// path is an oracle, not a production path.
inline constexpr std::uint64_t kDefaultNaiveBudget = std::uint64_t{1} << 24;

// S(n) = sum_{i=0}^{n-1} 3^wt(i), summed literally term by term.
// S(0) = 0 (empty sum). Throws BudgetExceeded when n > budget.
CellCount weight_sum_naive(const Index& n,
                           std::uint64_t budget = kDefaultNaiveBudget);

// The same sum in O(bit-length(n)) big-integer operations. Scanning the set
// bits of n from most significant to least,
//
//   S(n) = sum_{j in setbits(n)} 3^(number of set bits above j) * 4^j,
//
// because the i < n sharing n's bits above position j, with bit j clear,
// contribute 3^(high weight) * sum_suffix 3^wt(suffix) = 3^(high weight) * 4^j.
CellCount weight_sum_fast(const Index& n);

// a_m = S(m): partial sums of 3^wt, the series catalogued as A130665.
// Indexed from m = 1; throws std::domain_error for m = 0.
CellCount series_a130665(const Index& m);

}  // namespace uwca
