#include "uwca/enumeration.hpp"

#include <limits>

#include "uwca/weight_sums.hpp"

namespace uwca {

namespace {

void require_nonnegative(const Index& n, const char* op) {
  if (n < 0) {
    throw std::domain_error(std::string(op) + ": argument must be >= 0, got " +
                            n.str());
  }
}

void require_positive(const Index& n, const char* op) {
  if (n < 1) {
    throw std::domain_error(std::string(op) + ": argument must be >= 1, got " +
                            n.str());
  }
}

unsigned to_exponent(const Index& k, const char* op) {
  if (k < 0 || k > std::numeric_limits<unsigned>::max()) {
    throw std::domain_error(std::string(op) + ": exponent out of range: " +
                            k.str());
  }
  return k.convert_to<unsigned>();
}

// Exact quotient of v by 3. A remainder here means the congruence backing
// the closed form has been violated somewhere upstream.
CellCount exact_third(const CellCount& v, const char* op) {
  CellCount quotient, remainder;
  boost::multiprecision::divide_qr(v, CellCount(3), quotient, remainder);
  if (remainder != 0) {
    throw InternalError(std::string(op) + ": " + v.str() +
                        " is not divisible by 3; arithmetic bug");
  }
  return quotient;
}

}  // namespace

CellCount cells_born(const Index& n) {
  require_nonnegative(n, "cells_born");
  if (n == 0) {
    return CellCount(0);
  }
  if (n == 1) {
    return CellCount(1);
  }
  // (4/3) * 3^wt(n-1) = 4 * 3^(wt(n-1) - 1); wt(n-1) >= 1 since n >= 2.
  const unsigned weight = to_exponent(hamming_weight(n - 1), "cells_born");
  return 4 * boost::multiprecision::pow(CellCount(3), weight - 1);
}

CellCount total_cells(const Index& n) {
  require_nonnegative(n, "total_cells");
  if (n == 0) {
    // The closed form would give -1/3 here because the empty sum drops the
    // i = 0 term; the defining sum gives 0 and that is what we follow.
    return CellCount(0);
  }
  return exact_third(4 * weight_sum_fast(n) - 1, "total_cells");
}

CellCount sharp_upper_bound(const Index& n) {
  require_positive(n, "sharp_upper_bound");
  if (n % 3 == 0) {
    throw std::domain_error(
        "sharp_upper_bound: (4n^2-1)/3 is not an integer when 3 | n (n = " +
        n.str() + "); use sharp_upper_bound_exact");
  }
  return exact_third(4 * n * n - 1, "sharp_upper_bound");
}

Ratio sharp_upper_bound_exact(const Index& n) {
  require_positive(n, "sharp_upper_bound_exact");
  return Ratio(4 * n * n - 1, Index(3));
}

DyadicForm decompose_dyadic(const Index& n) {
  require_positive(n, "decompose_dyadic");
  const unsigned k = boost::multiprecision::lsb(n);
  return DyadicForm{n >> k, Index(k)};
}

CellCount total_cells_quadratic(const DyadicForm& form) {
  require_positive(form.m, "total_cells_quadratic");
  const unsigned k = to_exponent(form.k, "total_cells_quadratic");
  const CellCount a_m = series_a130665(form.m);
  return exact_third((a_m << (2 * k + 2)) - 1, "total_cells_quadratic");
}

Ratio ratio(const Index& n) {
  require_positive(n, "ratio");
  return Ratio(total_cells(n), n * n);
}

const Ratio& RatioScanReport::liminf_reference() {
  static const Ratio value(CellCount("9026116569"), CellCount("10000000000"));
  return value;
}

const Ratio& RatioScanReport::limsup_reference() {
  static const Ratio value(4, 3);
  return value;
}

RatioScanReport ratio_scan(std::uint32_t k_max, std::uint32_t budget) {
  if (k_max > budget) {
    throw BudgetExceeded("ratio_scan: k_max = " + std::to_string(k_max) +
                         " exceeds the block budget " + std::to_string(budget) +
                         " (block k has 2^k members)");
  }
  if (k_max >= 62) {
    throw BudgetExceeded("ratio_scan: block 2^" + std::to_string(k_max) +
                         " is beyond any feasible scan");
  }

  RatioScanReport report;
  report.blocks.reserve(k_max + 1);
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    const std::uint64_t lo = std::uint64_t{1} << k;
    const std::uint64_t hi = lo << 1;

    // Track extremes as raw U(n), n^2 pairs and compare by cross
    // multiplication; reduce to lowest terms only once at the end.
    CellCount min_num, min_den, max_num, max_den;
    std::uint64_t argmin = 0;
    std::uint64_t argmax = 0;
    for (std::uint64_t n = lo; n < hi; ++n) {
      CellCount total = exact_third(4 * weight_sum_fast(Index(n)) - 1,
                                    "ratio_scan");
      CellCount square = CellCount(n) * n;
      if (argmin == 0 || total * min_den < min_num * square) {
        min_num = total;
        min_den = square;
        argmin = n;
      }
      if (argmax == 0 || total * max_den > max_num * square) {
        max_num = std::move(total);
        max_den = std::move(square);
        argmax = n;
      }
    }

    RatioBlock block;
    block.k = k;
    block.min = Ratio(min_num, min_den);
    block.argmin = argmin;
    block.max = Ratio(max_num, max_den);
    block.argmax = argmax;
    report.blocks.push_back(std::move(block));
  }
  return report;
}

}  // namespace uwca
