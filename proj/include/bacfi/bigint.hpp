#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bacfi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const BigInt& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

}  // namespace bacfi
