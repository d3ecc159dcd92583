#pragma once

#include "lagrangelab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(LAGRANGELAB_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline lagrangelab::PolytopePresentation data_polytope(const std::string& name) {
  return std::get<lagrangelab::PolytopePresentation>(lagrangelab::parse_input(read_data(name)));
}
