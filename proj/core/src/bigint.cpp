#include "uwca/bigint.hpp"

#include <cctype>

namespace uwca {

Index parse_index(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty string is not a non-negative integer");
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a non-negative decimal integer: '" +
                                  std::string(text) + "'");
    }
  }
  return Index(std::string(text));
}

std::string to_decimal(const Index& n) { return n.str(); }

}  // namespace uwca
