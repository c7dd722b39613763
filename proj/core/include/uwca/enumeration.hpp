#pragma once

#include <cstdint>
#include <vector>

#include "uwca/bigint.hpp"

namespace uwca {

// n = m * 2^k with m odd: the dyadic decomposition indexing the quadratic
// family U_m. decompose_dyadic always produces odd m;
// total_cells_quadratic accepts any m >= 1 (the factorization behind it
// holds for even m too).
struct DyadicForm {
  Index m;
  Index k;
};

// u(n): cells born at stage n. u(0) = 0, u(1) = 1, and for n >= 2
// u(n) = (4/3) * 3^wt(n-1) = 4 * 3^(wt(n-1) - 1), an exact integer since
// wt(n-1) >= 1.
CellCount cells_born(const Index& n);

// U(n): total ON cells through stage n. U(0) = 0; for n >= 1
// U(n) = (4 * S(n) - 1) / 3 with the division exact (S(n) == 1 mod 3).
CellCount total_cells(const Index& n);

// The sharp upper bound (4n^2 - 1)/3, attained exactly when n is a power of
// two. Integer-valued only when 3 does not divide n; the integer overload
// throws std::domain_error for 3 | n, the _exact overload always returns the
// rational value. Comparisons against U(n) should be done in integers as
// 3*U(n) vs 4n^2 - 1. Both require n >= 1.
CellCount sharp_upper_bound(const Index& n);
Ratio sharp_upper_bound_exact(const Index& n);

// Unique (m odd, k) with n = m * 2^k. Throws std::domain_error for n = 0.
DyadicForm decompose_dyadic(const Index& n);

// U via the quadratic family: (4 * a_m * 4^k - 1) / 3. Equals
// total_cells(m * 2^k) for every m >= 1, k >= 0 -- that equality is a
// standing invariant of this library, not an assumption.
CellCount total_cells_quadratic(const DyadicForm& form);

// U(n) / n^2 in lowest terms. Lies in (0, 4/3] for all n >= 1; the maximum
// 4/3 - 1/(3*4^k) is attained at n = 2^k. Throws std::domain_error for n = 0.
Ratio ratio(const Index& n);

// Exact extremes of U(n)/n^2 over one dyadic block [2^k, 2^(k+1)).
struct RatioBlock {
  std::uint32_t k = 0;
  Ratio min;
  Index argmin;
  Ratio max;
  Index argmax;
};

struct RatioScanReport {
  std::vector<RatioBlock> blocks;  // k = 0 .. k_max

  // Reference constants the scan trends toward: liminf U(n)/n^2 =
  // 0.9026116569... and limsup U(n)/n^2 = 4/3.
  static const Ratio& liminf_reference();
  static const Ratio& limsup_reference();
};

// Block k has 2^k members, so the budget caps the exponent, not the count.
inline constexpr std::uint32_t kDefaultScanBudget = 24;

// Scan blocks k = 0..k_max, recording exact min/max of ratio(n) with their
// arguments. Ties break toward the smallest n; output is deterministic.
// Throws BudgetExceeded when k_max > budget.
RatioScanReport ratio_scan(std::uint32_t k_max,
                           std::uint32_t budget = kDefaultScanBudget);

}  // namespace uwca
