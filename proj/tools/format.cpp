#include "format.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "uwca/enumeration.hpp"

namespace uwca::cli {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using ordered_json = nlohmann::ordered_json;

const Index& pow10_9() {
  static const Index v("1000000000");
  return v;
}

const Index& pow10_10() {
  static const Index v("10000000000");
  return v;
}

Index pow10(unsigned e) {
  Index v = 1;
  for (unsigned i = 0; i < e; ++i) {
    v *= 10;
  }
  return v;
}

}  // namespace

std::string format_fraction(const Ratio& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string decimal10(const Ratio& value) {
  if (value == 0) {
    return "0";
  }
  if (value < 0) {
    return "-" + decimal10(-value);
  }
  const Index p = numerator(value);
  const Index q = denominator(value);

  // Find the exponent e with mantissa floor(p * 10^(9-e) / q) in
  // [10^9, 10^10): start from the digit-count estimate and correct.
  int e = static_cast<int>(p.str().size()) - static_cast<int>(q.str().size());
  Index mantissa, scaled_den;
  for (;;) {
    Index scaled_num;
    if (e <= 9) {
      scaled_num = p * pow10(static_cast<unsigned>(9 - e));
      scaled_den = q;
    } else {
      scaled_num = p;
      scaled_den = q * pow10(static_cast<unsigned>(e - 9));
    }
    mantissa = scaled_num / scaled_den;
    if (mantissa < pow10_9()) {
      --e;
    } else if (mantissa >= pow10_10()) {
      ++e;
    } else {
      // Round half to even on the discarded tail.
      const Index remainder = scaled_num - mantissa * scaled_den;
      const Index twice = 2 * remainder;
      if (twice > scaled_den ||
          (twice == scaled_den && boost::multiprecision::bit_test(mantissa, 0))) {
        ++mantissa;
        if (mantissa == pow10_10()) {
          mantissa = pow10_9();
          ++e;
        }
      }
      break;
    }
  }

  const std::string digits = mantissa.str();  // exactly 10 of them
  if (e >= 9) {
    return digits + std::string(static_cast<std::size_t>(e - 9), '0');
  }
  if (e >= 0) {
    const auto point = static_cast<std::size_t>(e + 1);
    return digits.substr(0, point) + "." + digits.substr(point);
  }
  return "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
}

std::string format_table(const std::vector<Index>& multipliers,
                         std::uint32_t k_max, TableFormat format) {
  // One row per k; cells hold (n_m, U_m) as decimal strings.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  header.push_back("k");
  for (const Index& m : multipliers) {
    header.push_back("n_" + m.str());
    header.push_back("U_" + m.str());
  }
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    std::vector<std::string> row;
    row.push_back(std::to_string(k));
    for (const Index& m : multipliers) {
      row.push_back(Index(m << k).str());
      row.push_back(total_cells_quadratic(DyadicForm{m, Index(k)}).str());
    }
    rows.push_back(std::move(row));
  }

  if (format == TableFormat::json) {
    ordered_json out = ordered_json::array();
    for (std::uint32_t k = 0; k <= k_max; ++k) {
      ordered_json row;
      row["k"] = k;
      ordered_json entries = ordered_json::array();
      for (std::size_t i = 0; i < multipliers.size(); ++i) {
        ordered_json cell;
        cell["m"] = multipliers[i].str();
        cell["n"] = rows[k][1 + 2 * i];
        cell["U"] = rows[k][2 + 2 * i];
        entries.push_back(std::move(cell));
      }
      row["entries"] = std::move(entries);
      out.push_back(std::move(row));
    }
    return out.dump() + "\n";
  }

  if (format == TableFormat::pretty) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      widths[c] = header[c].size();
      for (const auto& row : rows) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) {
          out << "  ";
        }
        out << std::string(widths[c] - row[c].size(), ' ') << row[c];
      }
      out << "\n";
    };
    emit(header);
    for (const auto& row : rows) {
      emit(row);
    }
    return out.str();
  }

  const char sep = format == TableFormat::csv ? ',' : '\t';
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out << sep;
      }
      out << row[c];
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : rows) {
    emit(row);
  }
  return out.str();
}

std::string format_scan_text(const RatioScanReport& report) {
  std::ostringstream out;
  for (const RatioBlock& block : report.blocks) {
    out << block.k << " " << format_fraction(block.min) << " "
        << decimal10(block.min) << " " << block.argmin.str() << " "
        << format_fraction(block.max) << " " << decimal10(block.max) << " "
        << block.argmax.str() << "\n";
  }
  if (!report.blocks.empty()) {
    const RatioBlock& last = report.blocks.back();
    const Ratio min_gap = last.min - RatioScanReport::liminf_reference();
    const Ratio max_gap = RatioScanReport::limsup_reference() - last.max;
    out << "# final block k=" << last.k << ": min " << decimal10(last.min)
        << ", liminf ref " << decimal10(RatioScanReport::liminf_reference())
        << ", min - ref = " << decimal10(min_gap) << "\n";
    out << "# final block k=" << last.k << ": max " << decimal10(last.max)
        << ", limsup ref 4/3, 4/3 - max = " << format_fraction(max_gap)
        << "\n";
  }
  return out.str();
}

std::string format_scan_json(const RatioScanReport& report) {
  ordered_json out;
  ordered_json blocks = ordered_json::array();
  for (const RatioBlock& block : report.blocks) {
    ordered_json b;
    b["k"] = block.k;
    b["min"] = format_fraction(block.min);
    b["min_decimal"] = decimal10(block.min);
    b["argmin"] = block.argmin.str();
    b["max"] = format_fraction(block.max);
    b["max_decimal"] = decimal10(block.max);
    b["argmax"] = block.argmax.str();
    blocks.push_back(std::move(b));
  }
  out["blocks"] = std::move(blocks);
  out["liminf_ref"] = decimal10(RatioScanReport::liminf_reference());
  out["limsup_ref"] = format_fraction(RatioScanReport::limsup_reference());
  if (!report.blocks.empty()) {
    const RatioBlock& last = report.blocks.back();
    out["final_min_minus_liminf"] =
        decimal10(last.min - RatioScanReport::liminf_reference());
    out["limsup_minus_final_max"] =
        format_fraction(RatioScanReport::limsup_reference() - last.max);
  }
  return out.dump() + "\n";
}

std::string format_reports_text(
    const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const VerificationReport& report : reports) {
    out << report.check << ": " << report.cases << " cases, "
        << report.failure_count << " failures (" << report.elapsed.count()
        << " ms)\n";
    if (!report.passed()) {
      ++failed;
      const std::size_t show = std::min<std::size_t>(report.mismatches.size(), 5);
      for (std::size_t i = 0; i < show; ++i) {
        const Mismatch& m = report.mismatches[i];
        out << "  " << m.input << ": expected " << m.expected << ", got "
            << m.actual << "\n";
      }
      if (report.failure_count > show) {
        out << "  ... " << (report.failure_count - show) << " more\n";
      }
    }
  }
  if (failed == 0) {
    out << "all checks passed\n";
  } else {
    out << failed << " check(s) failed\n";
  }
  return out.str();
}

std::string format_reports_json(
    const std::vector<VerificationReport>& reports) {
  ordered_json out;
  ordered_json checks = ordered_json::array();
  bool all_passed = true;
  for (const VerificationReport& report : reports) {
    all_passed = all_passed && report.passed();
    ordered_json c;
    c["name"] = report.check;
    c["cases"] = report.cases;
    c["failures"] = report.failure_count;
    c["passed"] = report.passed();
    ordered_json mismatches = ordered_json::array();
    for (const Mismatch& m : report.mismatches) {
      ordered_json entry;
      entry["input"] = m.input;
      entry["expected"] = m.expected;
      entry["actual"] = m.actual;
      mismatches.push_back(std::move(entry));
    }
    c["mismatches"] = std::move(mismatches);
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["passed"] = all_passed;
  return out.dump() + "\n";
}

}  // namespace uwca::cli
