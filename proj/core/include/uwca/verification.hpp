#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "uwca/automaton.hpp"
#include "uwca/bigint.hpp"

namespace uwca {

// One row of the reference table: for each odd multiplier m in {1,3,5,7},
// the generation n_m = m * 2^k and the total U_m(n_m).
struct Table1Entry {
  Index n;
  CellCount total;
};

struct Table1Row {
  std::uint32_t k = 0;
  std::array<Table1Entry, 4> entries;  // m = 1, 3, 5, 7
};

// The 36 published reference totals for k = 0..8. Embedded verbatim as
// constants -- never recomputed -- so a regression in the math cannot
// silently regenerate its own expectations.
const std::vector<Table1Row>& table1_reference();

struct Mismatch {
  std::string input;
  std::string expected;
  std::string actual;
};

inline constexpr std::size_t kMaxRecordedMismatches = 100;

// Outcome of one check. Mismatches accumulate instead of aborting, capped at
// kMaxRecordedMismatches recorded entries; failure_count counts all of them.
struct VerificationReport {
  std::string check;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failure_count == 0; }
};

// Recompute rows k = 0..k_max through the quadratic family and compare the
// k <= 8 portion against the embedded reference values.
std::pair<std::vector<Table1Row>, VerificationReport> reproduce_table1(
    std::uint32_t k_max);

// Run the simulator once to n_max; at every generation compare the
// cumulative count against total_cells and the births against cells_born.
// One case per generation, 0..n_max.
VerificationReport verify_sim_vs_formula(
    const Index& n_max, std::uint64_t budget = kDefaultSimulationBudget);

// S(m * 2^k) == a_m * 4^k for 1 <= m <= m_max (every m, odd or not) and
// 0 <= k <= k_max.
VerificationReport verify_factorization(std::uint32_t m_max,
                                        std::uint32_t k_max);

// 3*U(n) <= 4n^2 - 1 for n in [1, n_max], with equality exactly at the
// powers of two in range.
VerificationReport verify_upper_bound(const Index& n_max);

// b-file interchange format: one "index value" pair per line, '#' starts a
// comment, blank lines ignored, indices strictly increasing.
struct BFileEntry {
  Index index;
  CellCount value;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint64_t line, const std::string& what);
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

// Throws ParseError (with the 1-based line number) on malformed input.
std::vector<BFileEntry> parse_bfile(std::istream& in);

enum class BFileSeries { a130665, total_cells };

// Compare every entry of a local b-file against the selected locally
// computed series, mapping b-file index i to argument i + offset (OEIS index
// origins vary per sequence; the tool must not guess). Throws ParseError on
// malformed files and std::runtime_error when the file cannot be opened.
VerificationReport crosscheck_bfile(const std::filesystem::path& path,
                                    BFileSeries series,
                                    const Index& offset = Index(0));

}  // namespace uwca
