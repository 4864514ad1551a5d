#pragma once

#include "resol/io.hpp"
#include "resol/resolve.hpp"

#include <string>

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(RESOL_FIXTURES) + "/" + name; }

inline resol::Ideal problem(const std::string& name) {
  return resol::parse_problem(resol::read_text_file(path(name)));
}

inline resol::CenterStrategy script(const std::string& name) {
  return resol::CenterStrategy::load_script(path(name));
}

}  // namespace fixtures
