#ifndef CRN_TESTS_FIXTURE_UTIL_HPP
#define CRN_TESTS_FIXTURE_UTIL_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "crn/network.hpp"

inline std::string read_fixture_text(const std::string& name) {
  const std::string path = std::string(FIXTURE_DIR) + "/" + name;
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buffer;
  buffer << is.rdbuf();
  return buffer.str();
}

inline crn::Network load_fixture(const std::string& name) {
  return crn::parse_network(read_fixture_text(name));
}

#endif
