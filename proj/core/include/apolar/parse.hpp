#pragma once

#include <string>

#include "apolar/graded_form.hpp"

namespace apolar {

// Variable vocabulary for form text.
//   Binary   x, y                    (one block)
//   Ternary  x, y, z  or  a, b, c    (one block of three; no mixing)
//   Bigraded x, y | z, w             (P1 x P1)
//   PnP1     x0..xn | z, w           (n = largest index used)
//   Auto     x<digits> -> PnP1; else a/b/c -> Ternary; else z or w present
//            -> Bigraded; else -> Binary
enum class FormMode { Auto, Binary, Ternary, Bigraded, PnP1 };

FormMode form_mode_from_string(const std::string& s);  // parse_error on junk

// Grammar: sums of terms, '*' for products (no implicit multiplication),
// '^' with nonnegative integer exponents, parentheses, integer or p/q
// rational literals, leading sign.  The result must be multihomogeneous;
// parse_error (with byte offset) on syntax errors, degree_error otherwise.
GradedForm parse_form(const std::string& text, FormMode mode = FormMode::Auto);

// "p", "-p", or "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& text);

}  // namespace apolar
