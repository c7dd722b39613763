#pragma once

#include <cstdint>
#include <iosfwd>

#include "uwca/automaton.hpp"
#include "uwca/enumeration.hpp"
#include "uwca/weight_sums.hpp"

namespace uwca::cli {

// Work limits, overridable through the environment (UWCA_SIM_BUDGET,
// UWCA_SCAN_BUDGET). The defaults match the library's.
struct Budgets {
  std::uint64_t simulation = kDefaultSimulationBudget;
  std::uint32_t scan = kDefaultScanBudget;
};

Budgets budgets_from_env();

// Exit codes: 0 success, 1 verification or self-check failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Parse argv and run one subcommand, writing results to `out` and
// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace uwca::cli
