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

#include <string>

namespace orlicz {

/// Shortest decimal string that parses back to exactly `x`.
std::string shortest_real(double x);

/// `x` with 17 significant digits (diagnostics).
std::string format_real(double x);

/// `x` with at most 6 significant digits and a compact exponent ("1e-6",
/// "1e6", "4", "0.872406").
std::string pretty_real(double x);

}  // namespace orlicz
