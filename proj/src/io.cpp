#include "resol/io.hpp"

#include "resol/errors.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace resol {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

Ideal parse_problem(const std::string& text) {
  std::optional<Ring> ring;
  std::optional<std::string> ideal_text;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'ring:' or 'ideal:' line, got: " + line);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "ring") {
      std::vector<std::string> vars;
      std::stringstream vs(value);
      std::string v;
      while (std::getline(vs, v, ',')) {
        v = normalize_var_name(trim(v));
        if (v.empty()) throw ParseError("empty variable name in ring line");
        vars.push_back(v);
      }
      ring = Ring(vars);
    } else if (key == "ideal") {
      ideal_text = value;
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
  }
  if (!ring) throw ParseError("missing 'ring:' line");
  if (!ideal_text) throw ParseError("missing 'ideal:' line");
  return Ideal(*ring, parse_poly_list(*ideal_text, *ring));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace resol
