#include "uwca/verification.hpp"

#include <fstream>
#include <sstream>

#include "uwca/enumeration.hpp"
#include "uwca/weight_sums.hpp"

namespace uwca {

namespace {

constexpr std::uint32_t kOddMultipliers[4] = {1, 3, 5, 7};

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string check) : start_(Clock::now()) {
    report_.check = std::move(check);
  }

  void record_case() { ++report_.cases; }

  void record_failure(std::string input, std::string expected,
                      std::string actual) {
    ++report_.failure_count;
    if (report_.mismatches.size() < kMaxRecordedMismatches) {
      report_.mismatches.push_back(
          {std::move(input), std::move(expected), std::move(actual)});
    }
  }

  // Convenience: one case that passes iff expected == actual.
  template <typename T>
  void expect_equal(const std::string& input, const T& expected,
                    const T& actual) {
    record_case();
    if (!(expected == actual)) {
      std::ostringstream e, a;
      e << expected;
      a << actual;
      record_failure(input, e.str(), a.str());
    }
  }

  VerificationReport finish() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        Clock::now() - start_);
    return std::move(report_);
  }

 private:
  using Clock = std::chrono::steady_clock;
  VerificationReport report_;
  Clock::time_point start_;
};

}  // namespace

std::pair<std::vector<Table1Row>, VerificationReport> reproduce_table1(
    std::uint32_t k_max) {
  ReportBuilder builder("table1");

  std::vector<Table1Row> rows;
  rows.reserve(k_max + 1);
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    Table1Row row;
    row.k = k;
    for (std::size_t i = 0; i < 4; ++i) {
      const Index m(kOddMultipliers[i]);
      row.entries[i].n = m << k;
      row.entries[i].total = total_cells_quadratic(DyadicForm{m, Index(k)});
    }
    rows.push_back(std::move(row));
  }

  // One case per reference (n, U) pair; 36 of them when k_max >= 8.
  const std::vector<Table1Row>& reference = table1_reference();
  for (const Table1Row& ref_row : reference) {
    if (ref_row.k > k_max) {
      break;
    }
    const Table1Row& got = rows[ref_row.k];
    for (std::size_t i = 0; i < 4; ++i) {
      builder.record_case();
      const Table1Entry& expected = ref_row.entries[i];
      const Table1Entry& actual = got.entries[i];
      if (expected.n != actual.n || expected.total != actual.total) {
        builder.record_failure(
            "k=" + std::to_string(ref_row.k) +
                " m=" + std::to_string(kOddMultipliers[i]),
            "(" + expected.n.str() + ", " + expected.total.str() + ")",
            "(" + actual.n.str() + ", " + actual.total.str() + ")");
      }
    }
  }
  return {std::move(rows), builder.finish()};
}

VerificationReport verify_sim_vs_formula(const Index& n_max,
                                         std::uint64_t budget) {
  if (n_max < 0) {
    throw std::domain_error("verify_sim_vs_formula: n_max must be >= 0");
  }
  if (n_max > budget) {
    throw BudgetExceeded("verify_sim_vs_formula: n_max = " + n_max.str() +
                         " exceeds the simulation budget " +
                         std::to_string(budget));
  }
  const auto limit = n_max.convert_to<std::uint64_t>();

  ReportBuilder builder("sim-vs-formula");
  AutomatonState state = new_automaton();
  for (std::uint64_t g = 0; g <= limit; ++g) {
    if (g > 0) {
      step(state);
    }
    builder.record_case();
    const CellCount simulated(state.on_set.size());
    const CellCount closed = total_cells(Index(g));
    if (simulated != closed) {
      builder.record_failure("n=" + std::to_string(g) + " total",
                             closed.str(), simulated.str());
    }
    if (g > 0) {
      const CellCount born(state.born_history[g - 1]);
      const CellCount expected = cells_born(Index(g));
      if (born != expected) {
        builder.record_failure("n=" + std::to_string(g) + " born",
                               expected.str(), born.str());
      }
    }
  }
  return builder.finish();
}

VerificationReport verify_factorization(std::uint32_t m_max,
                                        std::uint32_t k_max) {
  ReportBuilder builder("factorization");
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    const CellCount a_m = series_a130665(Index(m));
    for (std::uint32_t k = 0; k <= k_max; ++k) {
      const CellCount lhs = weight_sum_fast(Index(m) << k);
      const CellCount rhs = a_m << (2 * k);  // a_m * 4^k
      builder.expect_equal(
          "m=" + std::to_string(m) + " k=" + std::to_string(k), rhs, lhs);
    }
  }
  return builder.finish();
}

VerificationReport verify_upper_bound(const Index& n_max) {
  if (n_max < 1) {
    throw std::domain_error("verify_upper_bound: n_max must be >= 1");
  }
  if (n_max > (Index(1) << 32)) {
    throw BudgetExceeded("verify_upper_bound: sweep to " + n_max.str() +
                         " is not feasible; cap is 2^32");
  }
  const auto limit = n_max.convert_to<std::uint64_t>();

  ReportBuilder builder("upper-bound");
  for (std::uint64_t n = 1; n <= limit; ++n) {
    builder.record_case();
    const Index idx(n);
    const CellCount lhs = 3 * total_cells(idx);
    const CellCount rhs = 4 * idx * idx - 1;
    const bool is_power_of_two = (n & (n - 1)) == 0;
    if (lhs > rhs) {
      builder.record_failure("n=" + std::to_string(n),
                             "3*U(n) <= 4n^2-1", "3*U(n) = " + lhs.str() +
                                 " > " + rhs.str());
    } else if (is_power_of_two && lhs != rhs) {
      builder.record_failure("n=" + std::to_string(n),
                             "equality at powers of two",
                             lhs.str() + " < " + rhs.str());
    } else if (!is_power_of_two && lhs == rhs) {
      builder.record_failure("n=" + std::to_string(n),
                             "strict inequality off powers of two",
                             "equality at " + lhs.str());
    }
  }
  return builder.finish();
}

ParseError::ParseError(std::uint64_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  std::uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    if (!(fields >> index_text)) {
      continue;  // blank or comment-only line
    }
    if (!(fields >> value_text)) {
      throw ParseError(line_number, "expected \"index value\", got only '" +
                                        index_text + "'");
    }
    if (fields >> extra) {
      throw ParseError(line_number, "trailing token '" + extra + "'");
    }
    BFileEntry entry;
    try {
      entry.index = parse_index(index_text);
      entry.value = parse_index(value_text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_number, e.what());
    }
    if (!entries.empty() && entry.index <= entries.back().index) {
      throw ParseError(line_number, "index " + entry.index.str() +
                                        " does not increase (previous " +
                                        entries.back().index.str() + ")");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

VerificationReport crosscheck_bfile(const std::filesystem::path& path,
                                    BFileSeries series, const Index& offset) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open b-file: " + path.string());
  }
  const std::vector<BFileEntry> entries = parse_bfile(in);

  ReportBuilder builder("bfile");
  for (const BFileEntry& entry : entries) {
    builder.record_case();
    const Index argument = entry.index + offset;
    CellCount computed;
    try {
      computed = series == BFileSeries::a130665 ? series_a130665(argument)
                                                : total_cells(argument);
    } catch (const std::domain_error& e) {
      builder.record_failure("index " + entry.index.str(), e.what(),
                             entry.value.str());
      continue;
    }
    if (computed != entry.value) {
      builder.record_failure("index " + entry.index.str() + " (argument " +
                                 argument.str() + ")",
                             computed.str(), entry.value.str());
    }
  }
  return builder.finish();
}

}  // namespace uwca
