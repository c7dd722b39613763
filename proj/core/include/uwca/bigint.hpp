#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace uwca {

// Everything counted here is exact. Generation numbers, multipliers and
// exponents travel as Index; cell totals as CellCount. Both are
// arbitrary-precision: 3^wt(n) no longer fits 64 bits once wt(n) >= 41,
// and the closed forms are meant to be evaluated far beyond that.
using Index = boost::multiprecision::cpp_int;
using CellCount = boost::multiprecision::cpp_int;

// Exact rational, kept in lowest terms by the backend.
using Ratio = boost::multiprecision::cpp_rational;

// An operation with an explicit work budget was asked to exceed it.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal exactness guard tripped (e.g. a division the math proves exact
// left a remainder). Always a bug in this library, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Strict decimal parser for non-negative integers of any length.
// Accepts digits only; throws std::invalid_argument otherwise.
Index parse_index(std::string_view text);

// Canonical decimal encoding; parse_index(to_decimal(n)) == n.
std::string to_decimal(const Index& n);

}  // namespace uwca
