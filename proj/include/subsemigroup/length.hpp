#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace subsemigroup {

/// Exact word length. Image lengths grow geometrically with composition depth
/// and leave 64-bit range long before prefixes stop changing.
using Length = boost::multiprecision::cpp_int;

inline std::string to_string(const Length& n) { return n.str(); }

/// True iff n >= k, for a small machine-sized k.
inline bool reaches(const Length& n, std::size_t k) { return n >= Length(k); }

/// base^exp, exact.
inline Length power(const Length& base, std::size_t exp)
{
    Length result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        result *= base;
    }
    return result;
}

} // namespace subsemigroup
