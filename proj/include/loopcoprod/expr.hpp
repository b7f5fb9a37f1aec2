#pragma once

#include <string>

#include "loopcoprod/algebra.hpp"

namespace loopcoprod {

// Canonical text form. Terms appear in (k, g) order; coefficients +-1 are
// printed bare; serialize(parse(serialize(c))) == serialize(c) byte for byte.
std::string to_string(const Monomial& m);
std::string to_string(const LoopClass& c);
std::string to_string(const TensorClass& t);
std::string laurent_monomial_string(long long k);
std::string to_string(const LaurentClass& c);
std::string to_string(const LaurentTensor& t);

// Grammar: sum of terms "[coeff*] [g<i>] [*x[^k]]" with integer coeff,
// e.g. "3*g2*x^4 - g0 + x". Bare x means x^1; x^0 may be omitted.
// Exponents must be >= 0 over a group; the Laurent form allows "x^-2"
// but no group factors. Errors carry the byte offset of the problem.
LoopClass parse_loop_class(const SpaceSpec& space, const std::string& text);
LaurentClass parse_laurent_class(const std::string& text);

}  // namespace loopcoprod
