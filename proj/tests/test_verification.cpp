#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "uwca/enumeration.hpp"
#include "uwca/verification.hpp"
#include "uwca/weight_sums.hpp"

using namespace uwca;

namespace {

// RAII fixture file under the system temp dir.
class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("uwca_test_" + std::to_string(getpid()) + "_" +
             std::to_string(counter++) + ".txt");
    std::ofstream out(path_);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("embedded reference table shape") {
  const auto& rows = table1_reference();
  REQUIRE(rows.size() == 9);
  std::size_t pairs = 0;
  for (const Table1Row& row : rows) {
    for (const Table1Entry& entry : row.entries) {
      ++pairs;
      // n_m == m * 2^k structurally
      (void)entry;
    }
    CHECK(row.entries[0].n == Index(1) << row.k);
    CHECK(row.entries[1].n == Index(3) << row.k);
    CHECK(row.entries[2].n == Index(5) << row.k);
    CHECK(row.entries[3].n == Index(7) << row.k);
  }
  CHECK(pairs == 36);
}

TEST_CASE("reproduce_table1") {
  const auto [rows, report] = reproduce_table1(8);
  CHECK(report.check == "table1");
  CHECK(report.passed());
  CHECK(report.cases == 36);
  REQUIRE(rows.size() == 9);

  // Row k=5 should read (32,1365) (96,9557) (160,25941) (224,50517).
  CHECK(rows[5].entries[0].n == 32);
  CHECK(rows[5].entries[0].total == 1365);
  CHECK(rows[5].entries[1].n == 96);
  CHECK(rows[5].entries[1].total == 9557);
  CHECK(rows[5].entries[2].n == 160);
  CHECK(rows[5].entries[2].total == 25941);
  CHECK(rows[5].entries[3].n == 224);
  CHECK(rows[5].entries[3].total == 50517);

  // At k=0, U_m(m) == (4*a_m - 1)/3.
  for (std::size_t i = 0; i < 4; ++i) {
    const Index m = rows[0].entries[i].n;
    CHECK(rows[0].entries[i].total == (4 * series_a130665(m) - 1) / 3);
  }

  // Truncated compare, extended rows.
  const auto [rows4, report4] = reproduce_table1(4);
  CHECK(report4.cases == 20);
  CHECK(report4.passed());
  const auto [rows10, report10] = reproduce_table1(10);
  CHECK(rows10.size() == 11);
  CHECK(report10.cases == 36);  // reference stops at k=8
  CHECK(report10.passed());
}

TEST_CASE("verify_sim_vs_formula") {
  const VerificationReport empty = verify_sim_vs_formula(0);
  CHECK(empty.passed());
  CHECK(empty.cases == 1);

  const VerificationReport small = verify_sim_vs_formula(14);
  CHECK(small.passed());
  CHECK(small.cases == 15);

  CHECK_THROWS_AS(verify_sim_vs_formula(100, 50), BudgetExceeded);
}

TEST_CASE("verify_factorization") {
  const VerificationReport report = verify_factorization(8, 8);
  CHECK(report.check == "factorization");
  CHECK(report.passed());
  CHECK(report.cases == 8 * 9);

  // Both sides by literal summation for a couple of documented cases.
  CHECK(weight_sum_naive(12) == 112);
  CHECK(series_a130665(3) * 16 == 112);   // m=3, k=2
  CHECK(series_a130665(6) * 4 == 112);    // m=6, k=1: even m holds too
}

TEST_CASE("verify_factorization is idempotent") {
  const VerificationReport a = verify_factorization(6, 6);
  const VerificationReport b = verify_factorization(6, 6);
  CHECK(a.check == b.check);
  CHECK(a.cases == b.cases);
  CHECK(a.failure_count == b.failure_count);
  CHECK(a.mismatches.size() == b.mismatches.size());
}

TEST_CASE("verify_upper_bound") {
  const VerificationReport report = verify_upper_bound(256);
  CHECK(report.passed());
  CHECK(report.cases == 256);
  CHECK_THROWS_AS(verify_upper_bound(0), std::domain_error);

  // n=8 attains the bound, n=7 stays strictly below.
  CHECK(3 * total_cells(8) == 4 * 64 - 1);
  CHECK(3 * total_cells(7) == 147);
  CHECK(147 < 4 * 49 - 1);
}

TEST_CASE("b-file parsing") {
  {
    std::istringstream in("# header comment\n1 1\n2 4\n\n3 7  # trailing\n10 76\n");
    const auto entries = parse_bfile(in);
    REQUIRE(entries.size() == 4);
    CHECK(entries[0].index == 1);
    CHECK(entries[0].value == 1);
    CHECK(entries[3].index == 10);
    CHECK(entries[3].value == 76);
  }
  {
    std::istringstream in("3 seven\n");
    CHECK_THROWS_WITH_AS(parse_bfile(in),
                         "line 1: not a non-negative decimal integer: 'seven'",
                         ParseError);
  }
  {
    std::istringstream in("1 1\n2\n");
    try {
      parse_bfile(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  {
    std::istringstream in("1 1\n2 4\n2 4\n");  // stalled index
    CHECK_THROWS_AS(parse_bfile(in), ParseError);
  }
  {
    std::istringstream in("1 1 1\n");  // trailing token
    CHECK_THROWS_AS(parse_bfile(in), ParseError);
  }
}

TEST_CASE("crosscheck_bfile") {
  // Our argument convention directly (index == m).
  {
    const TempFile file("1 1\n2 4\n3 7\n7 37\n");
    const VerificationReport report =
        crosscheck_bfile(file.path(), BFileSeries::a130665);
    CHECK(report.passed());
    CHECK(report.cases == 4);
  }
  // OEIS-style zero-based b-file needs offset +1.
  {
    const TempFile file("0 1\n1 4\n2 7\n3 16\n4 19\n");
    CHECK(crosscheck_bfile(file.path(), BFileSeries::a130665, 1).passed());
    // Without the offset, index 0 is out of the series' domain.
    const VerificationReport raw =
        crosscheck_bfile(file.path(), BFileSeries::a130665);
    CHECK(!raw.passed());
  }
  // total_cells selector.
  {
    const TempFile file("1 1\n2 5\n14 197\n256 87381\n");
    CHECK(crosscheck_bfile(file.path(), BFileSeries::total_cells).passed());
  }
  // A wrong value is a recorded mismatch, not an exception.
  {
    const TempFile file("1 1\n2 4\n3 8\n");
    const VerificationReport report =
        crosscheck_bfile(file.path(), BFileSeries::a130665);
    CHECK(report.failure_count == 1);
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].expected == "7");
    CHECK(report.mismatches[0].actual == "8");
  }
  CHECK_THROWS_AS(
      crosscheck_bfile("/nonexistent/uwca.txt", BFileSeries::a130665),
      std::runtime_error);
}

TEST_CASE("mismatches cap at 100 recorded, failure_count keeps counting") {
  std::ostringstream contents;
  for (int m = 1; m <= 150; ++m) {
    contents << m << " 0\n";  // every value wrong (a_m >= 1)
  }
  const TempFile file(contents.str());
  const VerificationReport report =
      crosscheck_bfile(file.path(), BFileSeries::a130665);
  CHECK(report.cases == 150);
  CHECK(report.failure_count == 150);
  CHECK(report.mismatches.size() == kMaxRecordedMismatches);
}
