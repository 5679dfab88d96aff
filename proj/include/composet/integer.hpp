#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace composet {

/// Exact integer type used for every count, coefficient and Mobius value.
/// Nothing in this library ever rounds or truncates arithmetic.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

}  // namespace composet
