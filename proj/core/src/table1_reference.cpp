#include "uwca/verification.hpp"

namespace uwca {

// Published reference totals for the odd quadratic families U_1..U_7 at
// generations n_m = m * 2^k, k = 0..8 (the U_1 column is A147562 sampled at
// powers of two). Hardcoded verbatim: these are expectations, and they must
// never be regenerated from the code they check.
const std::vector<Table1Row>& table1_reference() {
  static const std::vector<Table1Row> rows = {
      {0, {{{1, 1}, {3, 9}, {5, 25}, {7, 49}}}},
      {1, {{{2, 5}, {6, 37}, {10, 101}, {14, 197}}}},
      {2, {{{4, 21}, {12, 149}, {20, 405}, {28, 789}}}},
      {3, {{{8, 85}, {24, 597}, {40, 1621}, {56, 3157}}}},
      {4, {{{16, 341}, {48, 2389}, {80, 6485}, {112, 12629}}}},
      {5, {{{32, 1365}, {96, 9557}, {160, 25941}, {224, 50517}}}},
      {6, {{{64, 5461}, {192, 38229}, {320, 103765}, {448, 202069}}}},
      {7, {{{128, 21845}, {384, 152917}, {640, 415061}, {896, 808277}}}},
      {8, {{{256, 87381}, {768, 611669}, {1280, 1660245}, {1792, 3233109}}}},
  };
  return rows;
}

}  // namespace uwca
