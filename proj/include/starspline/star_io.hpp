#ifndef STARSPLINE_STAR_IO_HPP
#define STARSPLINE_STAR_IO_HPP

#include <string>

#include "starspline/starmesh.hpp"

namespace starspline {

/// Parse a star description:
///
///   kind closed|open
///   v x y z        (integers or p/q)
///   f i j k ...    (0-based link vertex indices)
///
/// Blank lines and text after '#' are ignored. Throws Error(ParseError) on
/// malformed text and the build_star errors on invalid geometry.
VertexStar parse_star(const std::string& text);

VertexStar read_star_file(const std::string& path);

/// Canonical text form of a star; parse_star(format_star(s)) rebuilds s.
std::string format_star(const VertexStar& star);

/// Parse an integer or p/q rational.
Rational parse_rational(const std::string& token);

std::string format_rational(const Rational& q);

}  // namespace starspline

#endif  // STARSPLINE_STAR_IO_HPP
