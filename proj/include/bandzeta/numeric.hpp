#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bandzeta {

// All counting and series arithmetic is exact.  Floating point appears
// only in the spectral-radius estimates, which carry explicit error
// certificates.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace bandzeta
