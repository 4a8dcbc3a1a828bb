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

#include <stdexcept>
#include <string>

namespace orlicz {

/// Error categories. The C API maps each one onto a status code.
enum class Errc {
  domain,        // argument outside the mathematical domain (u < 0, tol <= 0, ...)
  construction,  // invalid Orlicz function spec string
  shape,         // block count / block shape mismatch, algebra mismatch
  non_finite,    // NaN or Inf in input data
  validation,    // structural invariant violated (profile ordering, chain monotonicity, ...)
  refused,       // operation precondition not met (e.g. Delta2 verdict)
  parse,         // malformed spec string or JSON document
  numeric,       // numerical failure (SVD, bracketing, overflow guard)
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace orlicz
