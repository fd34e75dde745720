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

#pragma once

// Minimal ordered JSON emitter. The output contract requires every numeric
// to be serialized with 17 significant digits (round-trip-exact for 64-bit
// floats) and fields to keep insertion order, which general-purpose JSON
// libraries do not guarantee; hence this small writer.

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace wftcli {

class JsonObject {
 public:
  JsonObject& number(const std::string& key, double v) {
    if (std::isnan(v)) return put(key, "null");
    if (std::isinf(v)) return put(key, "\"unbounded\"");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return put(key, buf);
  }
  JsonObject& integer(const std::string& key, long long v) {
    return put(key, std::to_string(v));
  }
  JsonObject& boolean(const std::string& key, bool v) {
    return put(key, v ? "true" : "false");
  }
  JsonObject& text(const std::string& key, const std::string& v) {
    return put(key, quote(v));
  }
  JsonObject& object(const std::string& key, JsonObject child) {
    fields_.emplace_back(key, Value{std::make_shared<JsonObject>(std::move(child))});
    return *this;
  }
  JsonObject& array(const std::string& key, std::vector<JsonObject> items) {
    fields_.emplace_back(key, Value{std::move(items)});
    return *this;
  }

  std::string str(int indent = 0) const {
    const std::string pad(2 * indent, ' ');
    const std::string inner(2 * (indent + 1), ' ');
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out += inner + quote(fields_[i].first) + ": " + render(fields_[i].second, indent + 1);
      if (i + 1 < fields_.size()) out += ",";
      out += "\n";
    }
    out += pad + "}";
    return out;
  }

 private:
  using Value = std::variant<std::string, std::shared_ptr<JsonObject>, std::vector<JsonObject>>;

  JsonObject& put(const std::string& key, std::string rendered) {
    fields_.emplace_back(key, Value{std::move(rendered)});
    return *this;
  }

  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += "\"";
    return out;
  }

  static std::string render(const Value& v, int indent) {
    if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
    if (std::holds_alternative<std::shared_ptr<JsonObject>>(v)) {
      return std::get<std::shared_ptr<JsonObject>>(v)->str(indent);
    }
    const auto& items = std::get<std::vector<JsonObject>>(v);
    if (items.empty()) return "[]";
    const std::string pad(2 * indent, ' ');
    const std::string inner(2 * (indent + 1), ' ');
    std::string out = "[\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out += inner + items[i].str(indent + 1);
      if (i + 1 < items.size()) out += ",";
      out += "\n";
    }
    out += pad + "]";
    return out;
  }

  std::vector<std::pair<std::string, Value>> fields_;
};

}  // namespace wftcli
