#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gja {

/// Exact rational scalar; always stored reduced with positive denominator.
using Scalar = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (q > 0 after reduction). Throws ParseError.
Scalar parse_rational(const std::string& text);

std::string to_string(const Scalar& s);

}  // namespace gja
