// Copyright 2026 The ordbelief Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ordbelief/document.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "json.hpp"
#include "ordbelief/error.hpp"

namespace ordbelief {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field " + path + ": " + what);
}

// Line and column (1-based) of a byte offset.
std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

MassFunction parse_mass_document(std::string_view text, DocumentOptions options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte points one past the offending character.
    throw Error(ErrorCode::ParseError,
                location(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
  }
  if (!doc.is_object()) field_error("<root>", "expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "frame" && key != "masses" && key != "meta") field_error(key, "unknown field");

  if (!doc.contains("frame") || !doc["frame"].is_array())
    field_error("frame", "expected a list of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["frame"].size(); ++i) {
    const auto& l = doc["frame"][i];
    if (!l.is_string()) field_error("frame[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(l.get<std::string>());
  }
  OrderedFrame frame(std::move(labels));

  if (!doc.contains("masses") || !doc["masses"].is_array())
    field_error("masses", "expected a list of {focal, mass} records");
  std::vector<FocalMass> entries;
  const auto& masses = doc["masses"];
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string path = "masses[" + std::to_string(i) + "]";
    const auto& rec = masses[i];
    if (!rec.is_object()) field_error(path, "expected an object");
    if (!rec.contains("focal") || !rec["focal"].is_string())
      field_error(path + ".focal", "expected an element string");
    if (!rec.contains("mass") || !rec["mass"].is_number())
      field_error(path + ".mass", "expected a number");
    for (const auto& [key, _] : rec.items())
      if (key != "focal" && key != "mass") field_error(path + "." + key, "unknown field");
    const auto name = rec["focal"].get<std::string>();
    OrderedElement element;
    try {
      element = parse_element(name, frame.size());
    } catch (const Error& e) {
      throw Error(e.code(), path + ".focal: " + e.what());
    }
    entries.push_back({element, rec["mass"].get<double>()});
  }
  return options.renormalize ? MassFunction::renormalized(std::move(frame), entries)
                             : MassFunction::make(std::move(frame), entries);
}

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(v));
  return buf;
}

std::string emit_mass_document(const MassFunction& m, bool conformant) {
  json doc = json::object();
  doc["frame"] = m.frame().labels();
  json masses = json::array();
  for (const auto& [x, v] : m.focals())
    masses.push_back(json{{"focal", to_string(x)}, {"mass", round12(v)}});
  doc["masses"] = std::move(masses);
  if (!conformant) doc["meta"] = json{{"conformant", false}};
  return doc.dump(2) + "\n";
}

}  // namespace ordbelief
