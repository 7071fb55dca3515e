#include "approxseq/scalar.hpp"

#include <json.hpp>

namespace approxseq {

std::string Scalar::text() const {
  if (is_exact()) {
    const Rational& r = rational();
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
      s += '/';
      s += denominator(r).str();
    }
    return s;
  }
  // Shortest round-trip decimal, same renderer the JSON output uses.
  return nlohmann::json(value()).dump();
}

} // namespace approxseq
