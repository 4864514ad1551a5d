#pragma once

#include "resol/ideal.hpp"

#include <string>

namespace resol {

/// Hypersurface problem read from text of the form
///   ring: x,y,z
///   ideal: x^5+y^2+z^2
/// Blank lines and lines starting with '#' are ignored.
Ideal parse_problem(const std::string& text);

/// Whole file as a string; InputError if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace resol
