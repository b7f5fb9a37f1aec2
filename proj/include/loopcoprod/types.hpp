#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace loopcoprod {

// All coefficients and matrix entries are exact arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

inline std::string int_str(const Int& v) { return v.str(); }

}  // namespace loopcoprod
