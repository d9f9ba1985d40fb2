#pragma once

// Exact rational scalars.
//
// Every numeric quantity in the library is an arbitrary-precision rational
// kept in canonical form (gcd(num, den) = 1, den >= 1).  boost::multiprecision
// maintains that invariant internally; this header pins the alias and adds the
// small amount of parsing/printing glue the text formats need.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tqft {

// Expression templates are disabled so arithmetic yields plain values (the
// algebra stores scalars in containers and calls members on temporaries).
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Scalar =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Raised for malformed user-facing input (files, CLI arguments, text forms).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal mathematical precondition fails (rank deficiency
// where nondegeneracy is guaranteed, mismatched labels, ...).
struct math_error : std::runtime_error {
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int numerator(const Scalar& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Scalar& x) { return boost::multiprecision::denominator(x); }

inline int sign(const Scalar& x) { return x.sign(); }

// Renders "p" for integers and "p/q" otherwise, e.g. "-3/2".
inline std::string to_string(const Scalar& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace detail {
// cpp_int's string constructor throws std::runtime_error on garbage; rewrap.
inline Int parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw input_error("malformed rational literal: " + whole);
  try {
    return Int(s);
  } catch (const std::runtime_error&) {
    throw input_error("malformed rational literal: " + whole);
  }
}
}  // namespace detail

// Parses "p" or "p/q" with optional leading sign; q must be nonzero.
inline Scalar parse_scalar(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Scalar(detail::parse_int(s, s));
  Int num = detail::parse_int(s.substr(0, slash), s);
  Int den = detail::parse_int(s.substr(slash + 1), s);
  if (den == 0) throw input_error("zero denominator in rational literal: " + s);
  if (den < 0) {  // the backend requires a positive denominator
    num = -num;
    den = -den;
  }
  return Scalar(num, den);
}

}  // namespace tqft
