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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operator_model.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/svf.hpp"

namespace orlicz {

using Json = nlohmann::ordered_json;

/// Current version of every document and report schema.
inline constexpr int kSchemaVersion = 1;

/// Operator file contents:
///
///   {"v": 1,
///    "algebra": {"blocks": [{"dim": 2, "weight": 1.0}, ...]},
///    "elements": {"x": [block, ...], ...},
///    "profiles": {"p": {"steps": [{"value": 3.0, "width": 1.0}, ...]}, ...}}
///
/// A block is an array of rows; an entry is a number or an [re, im] pair.
/// A bare profile document {"v": 1, "steps": [...]} loads as profile
/// "profile". Unknown keys are rejected.
struct OperatorDocument {
  std::optional<TracialAlgebra> algebra;
  std::map<std::string, MatrixElement> elements;
  std::map<std::string, SpectralProfile> profiles;
};

/// Fails with Errc::parse ("line L, column C: ...") on malformed JSON and on
/// schema violations; element validation errors keep their own codes.
OperatorDocument parse_operator_document(std::string_view text);
OperatorDocument load_operator_file(const std::string& path);

/// Reloads to an equal element: numbers are written in shortest round-trip form.
Json element_document(const std::string& name, const MatrixElement& x);
Json profile_document(const SpectralProfile& p);

Json to_json(const NormResult& r);
Json to_json(const Delta2Verdict& v);

enum class Format { json, csv, pretty };

/// Fails with Errc::parse on anything but "json", "csv", "pretty".
Format parse_format(std::string_view name);

/// Serializes a report. `kind` selects special layouts: "delta2" and "norm"
/// have one-line pretty forms, "profile" renders as value,width rows in csv
/// and pretty. Every other kind uses the generic layouts: compact json, csv
/// as a header plus one row for flat objects or field,value lines, pretty as
/// path: value lines with 6 significant digits.
std::string render_report(std::string_view kind, const Json& report, Format format);

}  // namespace orlicz
