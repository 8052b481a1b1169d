#pragma once

// Structured (JSON) record of a decomposition and its verification. All
// numbers are strings: exact values as numerator/denominator pairs,
// approximate values as re/im decimal strings carrying full precision.

#include <string>
#include <string_view>

#include "waring/decompose.hpp"
#include "waring/verify.hpp"

namespace waring {

struct Record {
  Form form{1, 0};
  Decomposition decomposition;
  long precision = kDefaultPrecision;
};

// Keys: form, degree, num_vars, precision_bits, terms[{coeff_num, coeff_den |
// re, im, coords[]}], exact, residual_log2, algorithm_trace, bound, verified.
std::string render_record(const Form& f, const Decomposition& dec, const VerifyReport& report, long precision);

// Reads what render_record writes. Throws ParseError on malformed text and
// InvalidInput on inconsistent fields.
Record parse_record(std::string_view text);

}  // namespace waring
