#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uwca/bigint.hpp"
#include "uwca/enumeration.hpp"
#include "uwca/verification.hpp"

namespace uwca::cli {

enum class TableFormat { pretty, csv, tsv, json };

// "numerator/denominator", lowest terms, denominator printed even when 1.
std::string format_fraction(const Ratio& value);

// Decimal rendering to 10 significant digits, round-half-even. This is the
// one place in the project where a rational becomes a decimal; everything
// below the CLI stays exact.
std::string decimal10(const Ratio& value);

// The quadratic-family table for the given multipliers, k = 0..k_max.
// csv/tsv carry a header row ("k,n_1,U_1,..."); json is a compact array of
// row objects with string-valued numbers. All byte-deterministic.
std::string format_table(const std::vector<Index>& multipliers,
                         std::uint32_t k_max, TableFormat format);

// One line per block: k, min fraction, min decimal, argmin, max fraction,
// max decimal, argmax; then '#'-prefixed footer lines comparing the final
// block against the liminf/limsup references.
std::string format_scan_text(const RatioScanReport& report);
std::string format_scan_json(const RatioScanReport& report);

// "<check>: <cases> cases, <failures> failures (<n> ms)" per report plus a
// summary line; failing checks list their first few mismatches.
std::string format_reports_text(const std::vector<VerificationReport>& reports);
// Deterministic machine form: no timings.
std::string format_reports_json(const std::vector<VerificationReport>& reports);

}  // namespace uwca::cli
