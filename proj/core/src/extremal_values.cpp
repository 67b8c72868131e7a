#include "triplesys/extremal_values.hpp"

#include <stdexcept>
#include <string>

namespace triplesys {

bool has_theorem_value(PatternId family) {
  return family == PatternId::C5Minus || family == PatternId::C5 || family == PatternId::K4Minus;
}

int theorem_value(int n, PatternId family) {
  if (n < 6) throw std::invalid_argument("closed form needs n >= 6, got " + std::to_string(n));
  switch (family) {
    case PatternId::C5Minus:
    case PatternId::K4Minus:
      return n / 3;
    case PatternId::C5: {
      const int k = n / 4;
      return n % 4 == 3 ? 2 * k + 1 : 2 * k;
    }
    default:
      throw std::invalid_argument("no closed form for pattern " + std::string(pattern_name(family)));
  }
}

}  // namespace triplesys
