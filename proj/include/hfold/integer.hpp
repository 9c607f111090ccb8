#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hfold {

// Arbitrary-precision integer. Coordinates stay tiny, but blueprint
// polynomial coefficients are unbounded in principle, so one exact type
// serves everywhere.
using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return boost::multiprecision::abs(a); }

inline int sign(const Integer& a) { return a.sign(); }

inline std::string to_string(const Integer& a) { return a.str(); }

} // namespace hfold
