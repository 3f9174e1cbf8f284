#ifndef LPIS_RATIONAL_HPP
#define LPIS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace lpis {

/// Arbitrary-precision rational number. Always kept canonical (mpq_class
/// arithmetic canonicalizes after every operation).
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" with optional leading sign; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

} // namespace lpis

#endif
