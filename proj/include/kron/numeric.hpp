#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kron {

// All dimension and length arithmetic is exact: orbit entries grow like
// ((n + sqrt(n^2-4))/2)^(2i), so fixed-width integers overflow almost
// immediately.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace kron
