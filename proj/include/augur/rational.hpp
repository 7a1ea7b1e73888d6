#pragma once

#include <gmpxx.h>

#include <string>

namespace augur {

using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a/b" or a terminating decimal such as "1.8917".
Rational parse_rational(const std::string& text);

}  // namespace augur
