#pragma once

#include <string>

#include "arcrope/arcpres.hpp"

namespace arcrope {

/// Presentation file format:
///   arcpres alpha=<n>
///   <x> <y> <theta>      (one line per arc)
/// theta is either a decimal angle in radians or a fraction p/q of a full
/// turn (theta = 2*pi*p/q). Blank lines and lines starting with '#' are
/// ignored. The parsed data is validated; fractions round-trip exactly.
ArcPresentation parse_presentation(const std::string& text);

std::string emit_presentation(const ArcPresentation& a);

ArcPresentation load_presentation(const std::string& path);
void save_presentation(const ArcPresentation& a, const std::string& path);

}  // namespace arcrope
