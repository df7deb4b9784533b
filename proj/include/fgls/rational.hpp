#pragma once

/// @file rational.hpp
/// @brief Exact arbitrary-precision rational arithmetic used everywhere in fgls.
///
/// All computation in this library is exact: coefficients are rational numbers
/// with arbitrary-precision integer numerator/denominator, so no rounding ever
/// occurs.  We use boost::multiprecision's header-only cpp_rational backend.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fgls {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base error type for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an exact division has a nonzero remainder.
class DivisionError : public Error {
 public:
  explicit DivisionError(const std::string& msg) : Error(msg) {}
};

namespace detail {
[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}
}  // namespace detail

/// True iff r is an integer (denominator 1 after normalization).
inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// Render "p" for integers, "p/q" otherwise.  Parse with rational_from_string.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Inverse of rational_to_string; accepts optional leading '-' and "p/q".
inline Rational rational_from_string(const std::string& s) {
  detail::require(!s.empty(), "rational_from_string: empty string");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    detail::fail("rational_from_string: cannot parse '" + s + "'");
  }
}

}  // namespace fgls
