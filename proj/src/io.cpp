// Copyright (c) 2026 The orlicz Authors. All Rights Reserved.
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

#include "orlicz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/numeric_format.hpp"

namespace orlicz {

namespace {

using RawJson = nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& msg) {
  fail(Errc::parse, where + ": " + msg);
}

void only_keys(const RawJson& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) schema_error(where, "unknown key \"" + key + "\"");
  }
}

const RawJson& required(const RawJson& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, "missing key \"" + key + "\"");
  return *it;
}

double number(const RawJson& v, const std::string& where) {
  if (!v.is_number()) schema_error(where, "expected a number");
  return v.get<double>();
}

void check_version(const RawJson& doc) {
  const RawJson& v = required(doc, "v", "document");
  if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion) {
    schema_error("document", "unsupported schema version (expected \"v\": 1)");
  }
}

TracialAlgebra parse_algebra(const RawJson& j) {
  only_keys(j, {"blocks"}, "algebra");
  const RawJson& blocks = required(j, "blocks", "algebra");
  if (!blocks.is_array()) schema_error("algebra.blocks", "expected an array");
  std::vector<BlockSpec> specs;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string where = "algebra.blocks[" + std::to_string(i) + "]";
    only_keys(blocks[i], {"dim", "weight"}, where);
    const RawJson& dim = required(blocks[i], "dim", where);
    if (!dim.is_number_integer()) schema_error(where + ".dim", "expected an integer");
    specs.push_back({dim.get<int>(), number(required(blocks[i], "weight", where), where + ".weight")});
  }
  return TracialAlgebra(std::move(specs));
}

Complex parse_entry(const RawJson& e, const std::string& where) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  schema_error(where, "expected a number or an [re, im] pair");
}

MatrixElement parse_element(const TracialAlgebra& algebra, const RawJson& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of blocks");
  std::vector<RawBlock> raw;
  for (std::size_t b = 0; b < j.size(); ++b) {
    const std::string bw = where + "[" + std::to_string(b) + "]";
    if (!j[b].is_array()) schema_error(bw, "expected an array of rows");
    RawBlock block;
    for (std::size_t r = 0; r < j[b].size(); ++r) {
      const std::string rw = bw + "[" + std::to_string(r) + "]";
      if (!j[b][r].is_array()) schema_error(rw, "expected a row array");
      std::vector<Complex> row;
      for (std::size_t c = 0; c < j[b][r].size(); ++c) {
        row.push_back(parse_entry(j[b][r][c], rw + "[" + std::to_string(c) + "]"));
      }
      block.push_back(std::move(row));
    }
    raw.push_back(std::move(block));
  }
  return load_element(algebra, raw);
}

SpectralProfile parse_steps(const RawJson& steps, const std::string& where) {
  if (!steps.is_array()) schema_error(where, "expected an array of steps");
  std::vector<Step> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string sw = where + "[" + std::to_string(i) + "]";
    only_keys(steps[i], {"value", "width"}, sw);
    out.push_back({number(required(steps[i], "value", sw), sw + ".value"),
                   number(required(steps[i], "width", sw), sw + ".width")});
  }
  return SpectralProfile(std::move(out));
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

OperatorDocument parse_operator_document(std::string_view text) {
  RawJson doc;
  try {
    doc = RawJson::parse(text.begin(), text.end());
  } catch (const RawJson::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
    const auto colon = what.find(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    fail(Errc::parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
  if (!doc.is_object()) schema_error("document", "expected a JSON object");
  check_version(doc);

  OperatorDocument out;
  if (doc.contains("steps")) {
    only_keys(doc, {"v", "steps"}, "document");
    out.profiles.emplace("profile", parse_steps(doc["steps"], "steps"));
    return out;
  }
  only_keys(doc, {"v", "algebra", "elements", "profiles"}, "document");
  if (doc.contains("algebra")) out.algebra = parse_algebra(doc["algebra"]);
  if (doc.contains("elements")) {
    const RawJson& els = doc["elements"];
    if (!els.is_object()) schema_error("elements", "expected an object");
    if (!els.empty() && !out.algebra) schema_error("elements", "elements need an \"algebra\"");
    for (const auto& [name, value] : els.items()) {
      out.elements.emplace(name, parse_element(*out.algebra, value, "elements." + name));
    }
  }
  if (doc.contains("profiles")) {
    const RawJson& ps = doc["profiles"];
    if (!ps.is_object()) schema_error("profiles", "expected an object");
    for (const auto& [name, value] : ps.items()) {
      if (out.elements.count(name)) schema_error("profiles." + name, "name already used by an element");
      only_keys(value, {"steps"}, "profiles." + name);
      out.profiles.emplace(name, parse_steps(required(value, "steps", "profiles." + name), "profiles." + name + ".steps"));
    }
  }
  return out;
}

OperatorDocument load_operator_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse, "cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_operator_document(ss.str());
}

Json element_document(const std::string& name, const MatrixElement& x) {
  Json blocks = Json::array();
  for (const auto& b : x.algebra().blocks()) blocks.push_back({{"dim", b.dim}, {"weight", b.weight}});
  Json mats = Json::array();
  for (const auto& m : x.blocks()) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  doc["algebra"] = {{"blocks", blocks}};
  doc["elements"] = Json::object();
  doc["elements"][name] = mats;
  return doc;
}

Json profile_document(const SpectralProfile& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps()) steps.push_back({{"value", s.value}, {"width", s.width}});
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  doc["steps"] = steps;
  return doc;
}

Json to_json(const NormResult& r) {
  return {{"value", r.value}, {"method", to_string(r.method)}, {"iterations", r.iterations}, {"residual", r.residual}};
}

Json to_json(const Delta2Verdict& v) {
  Json j = Json::object();
  j["holds"] = v.holds_on_range;
  j["u_min"] = v.u_min;
  j["u_max"] = v.u_max;
  j["k"] = v.holds_on_range ? Json(v.constant_k) : Json(nullptr);
  j["exact"] = v.exact;
  if (v.failure_witness) {
    const auto& w = *v.failure_witness;
    j["witness"] = {{"u", w.u}, {"ratio", w.ratio}, {"threshold", w.threshold}, {"reason", to_string(w.reason)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "pretty") return Format::pretty;
  fail(Errc::parse, "unknown format \"" + std::string(name) + "\" (expected json, csv or pretty)");
}

namespace {

std::string scalar_text(const Json& v, bool pretty) {
  if (v.is_null()) return pretty ? "null" : "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return pretty ? pretty_real(v.get<double>()) : shortest_real(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, const Json*>>& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, &v);
  }
}

bool is_flat(const Json& v) {
  if (!v.is_object()) return false;
  for (const auto& [_, child] : v.items()) {
    if (child.is_structured()) return false;
  }
  return true;
}

std::string render_profile(const Json& doc, Format format) {
  std::string out = format == Format::csv ? "value,width\n" : "";
  for (const auto& s : doc.at("steps")) {
    const bool pretty = format == Format::pretty;
    out += scalar_text(s.at("value"), pretty) + (pretty ? " " : ",") + scalar_text(s.at("width"), pretty) + "\n";
  }
  return out;
}

}  // namespace

std::string render_report(std::string_view kind, const Json& report, Format format) {
  if (format == Format::json) return report.dump() + "\n";
  if (kind == "profile" && report.contains("steps")) return render_profile(report, format);
  if (format == Format::pretty) {
    if (kind == "delta2") {
      const std::string range = "[" + pretty_real(report.at("u_min").get<double>()) + "," +
                                pretty_real(report.at("u_max").get<double>()) + "]";
      if (report.at("holds").get<bool>()) {
        return "Δ₂ holds on " + range + ", k=" + pretty_real(report.at("k").get<double>()) + "\n";
      }
      const Json& w = report.at("witness");
      return "Δ₂ fails on " + range + ": ratio " + scalar_text(w.at("ratio"), true) + " at u=" +
             scalar_text(w.at("u"), true) + "\n";
    }
    if (kind == "norm") return pretty_real(report.at("value").get<double>()) + "\n";
    std::vector<std::pair<std::string, const Json*>> rows;
    flatten(report, "", rows);
    std::string out;
    for (const auto& [path, v] : rows) out += (path.empty() ? "value" : path) + ": " + scalar_text(*v, true) + "\n";
    return out;
  }
  if (is_flat(report)) {
    std::string header;
    std::string row;
    bool first = true;
    for (const auto& [k, v] : report.items()) {
      if (!first) {
        header += ',';
        row += ',';
      }
      first = false;
      header += csv_cell(k);
      row += csv_cell(scalar_text(v, false));
    }
    return header + "\n" + row + "\n";
  }
  std::vector<std::pair<std::string, const Json*>> rows;
  flatten(report, "", rows);
  std::string out = "field,value\n";
  for (const auto& [path, v] : rows) out += csv_cell(path) + "," + csv_cell(scalar_text(*v, false)) + "\n";
  return out;
}

}  // namespace orlicz
