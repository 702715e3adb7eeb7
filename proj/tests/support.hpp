#ifndef HYPERSUM_TEST_SUPPORT_HPP
#define HYPERSUM_TEST_SUPPORT_HPP

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include "hypersum/prec_real.hpp"

namespace test_support {

// Reference values keyed by name, 50 significant digits.
inline const std::map<std::string, std::string>& constants() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> out;
    std::ifstream in(std::string(HYPERSUM_TEST_DATA) + "/published_constants.txt");
    if (!in) throw std::runtime_error("missing published_constants.txt");
    std::string name, value;
    while (in >> name) {
      if (name.starts_with("#")) {
        std::getline(in, value);
        continue;
      }
      in >> value;
      out[name] = value;
    }
    return out;
  }();
  return table;
}

inline hypersum::PrecReal reference(const std::string& name, hypersum::Precision bits = 256) {
  return hypersum::PrecReal::from_string(constants().at(name), bits);
}

inline hypersum::PrecReal distance(const hypersum::PrecReal& a, const hypersum::PrecReal& b) {
  return hypersum::abs(a - b);
}

inline hypersum::PrecReal tenth_power(long exponent) { return hypersum::pow10(exponent, 128); }

}  // namespace test_support

#endif  // HYPERSUM_TEST_SUPPORT_HPP
