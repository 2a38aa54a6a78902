#pragma once

#include <string>

#include "cliff/rational.hpp"

namespace cliff::detail {

// Appends `c*body` to a `+`/`-` joined sum. A unit coefficient is dropped
// when there is a body to carry the term; an empty body prints the number.
inline void append_term(std::string& out, const Rational& c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  const Rational mag = abs(c);
  if (body.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += body;
  } else {
    out += to_string(mag);
    out += '*';
    out += body;
  }
}

}  // namespace cliff::detail
