// Copyright 2026 The wft-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wft/constants.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace wft {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

double parse_positive(const std::string& key, const std::string& text, int line_no) {
  const std::string value = trim(text);
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto result = std::from_chars(first, last, out);
  if (result.ec != std::errc{} || result.ptr != last) {
    throw std::invalid_argument("constants: line " + std::to_string(line_no) +
                                ": cannot parse value for '" + key + "': '" + value + "'");
  }
  if (!(out > 0.0)) {
    throw std::invalid_argument("constants: line " + std::to_string(line_no) + ": '" + key +
                                "' must be strictly positive");
  }
  return out;
}

}  // namespace

const Constants& default_constants() {
  static const Constants defaults{};
  return defaults;
}

Constants parse_constants(std::istream& in) {
  Constants k;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("constants: line " + std::to_string(line_no) +
                                  ": expected 'name = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = stripped.substr(eq + 1);
    if (key == "h") {
      k.h = parse_positive(key, value, line_no);
    } else if (key == "c") {
      k.c = parse_positive(key, value, line_no);
    } else if (key == "G") {
      k.G = parse_positive(key, value, line_no);
    } else if (key == "L") {
      k.L = parse_positive(key, value, line_no);
    } else if (key == "N_coeff") {
      k.N_coeff = parse_positive(key, value, line_no);
    } else if (key == "alpha_inv") {
      k.alpha_inv = parse_positive(key, value, line_no);
    } else {
      throw std::invalid_argument("constants: line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    }
  }
  return k;
}

Constants load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("constants: cannot open '" + path + "'");
  return parse_constants(in);
}

}  // namespace wft
