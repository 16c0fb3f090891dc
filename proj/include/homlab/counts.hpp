#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace homlab {

// All counting is exact. Counts of homomorphisms into CFI targets outgrow
// 64 bits quickly, so overflow has to be impossible rather than detected.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace homlab
