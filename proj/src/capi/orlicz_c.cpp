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

#include "orlicz/orlicz.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "orlicz/error.hpp"
#include "orlicz/io.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/suites.hpp"
#include "orlicz/topology_lab.hpp"

struct orlicz_function_t {
  orlicz::OrliczFunction f;
};

struct orlicz_workspace_t {
  orlicz::OperatorDocument doc;
};

struct orlicz_element_t {
  std::variant<orlicz::MatrixElement, orlicz::SpectralProfile> value;
};

namespace {

thread_local std::string last_error;

struct StatusError {
  orlicz_status status;
  std::string message;
};

orlicz_status to_status(orlicz::Errc c) {
  switch (c) {
    case orlicz::Errc::domain:
      return ORLICZ_ERR_DOMAIN;
    case orlicz::Errc::construction:
      return ORLICZ_ERR_CONSTRUCTION;
    case orlicz::Errc::shape:
      return ORLICZ_ERR_SHAPE;
    case orlicz::Errc::non_finite:
      return ORLICZ_ERR_NON_FINITE;
    case orlicz::Errc::validation:
      return ORLICZ_ERR_VALIDATION;
    case orlicz::Errc::refused:
      return ORLICZ_ERR_REFUSED;
    case orlicz::Errc::parse:
      return ORLICZ_ERR_PARSE;
    case orlicz::Errc::numeric:
      return ORLICZ_ERR_NUMERIC;
  }
  return ORLICZ_ERR_INTERNAL;
}

template <typename F>
orlicz_status try_(F&& body) {
  try {
    body();
    last_error.clear();
    return ORLICZ_OK;
  } catch (const StatusError& e) {
    last_error = e.message;
    return e.status;
  } catch (const orlicz::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return ORLICZ_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ORLICZ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ORLICZ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return ORLICZ_ERR_INTERNAL;
  }
}

template <typename... Ptrs>
void require(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw StatusError{ORLICZ_ERR_NULL_ARGUMENT, "null argument"};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

orlicz::SpectralProfile profile(const orlicz_element_t* e) {
  if (const auto* m = std::get_if<orlicz::MatrixElement>(&e->value)) return orlicz::profile_of(*m);
  return std::get<orlicz::SpectralProfile>(e->value);
}

const orlicz::MatrixElement& matrix(const orlicz_element_t* e, const char* op) {
  const auto* m = std::get_if<orlicz::MatrixElement>(&e->value);
  if (m == nullptr) orlicz::fail(orlicz::Errc::domain, std::string(op) + ": needs a matrix element, got a profile");
  return *m;
}

orlicz_norm_result to_c(const orlicz::NormResult& r) {
  return {r.value, static_cast<orlicz_norm_method>(r.method), r.iterations, r.residual};
}

}  // namespace

extern "C" {

const char* orlicz_version(void) { return "1.0.0"; }

const char* orlicz_status_string(orlicz_status status) {
  switch (status) {
    case ORLICZ_OK:
      return "ok";
    case ORLICZ_ERR_DOMAIN:
      return "domain error";
    case ORLICZ_ERR_CONSTRUCTION:
      return "construction error";
    case ORLICZ_ERR_SHAPE:
      return "shape mismatch";
    case ORLICZ_ERR_NON_FINITE:
      return "non-finite value";
    case ORLICZ_ERR_VALIDATION:
      return "validation error";
    case ORLICZ_ERR_REFUSED:
      return "refused";
    case ORLICZ_ERR_PARSE:
      return "parse error";
    case ORLICZ_ERR_NUMERIC:
      return "numeric failure";
    case ORLICZ_ERR_NULL_ARGUMENT:
      return "null argument";
    case ORLICZ_ERR_NOT_FOUND:
      return "not found";
    case ORLICZ_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* orlicz_last_error(void) { return last_error.c_str(); }

void orlicz_string_free(char* s) { std::free(s); }

orlicz_status orlicz_function_parse(const char* spec, orlicz_function* out) {
  return try_([&] {
    require(spec, out);
    *out = new orlicz_function_t{orlicz::OrliczFunction::parse(spec)};
  });
}

void orlicz_function_free(orlicz_function f) { delete f; }

orlicz_status orlicz_function_spec(orlicz_function f, char** out) {
  return try_([&] {
    require(f, out);
    *out = dup(f->f.spec());
  });
}

orlicz_status orlicz_phi_eval(orlicz_function f, double u, double* out) {
  return try_([&] {
    require(f, out);
    *out = orlicz::eval_phi(f->f, u);
  });
}

orlicz_status orlicz_density_eval(orlicz_function f, double t, double* out) {
  return try_([&] {
    require(f, out);
    *out = orlicz::eval_density(f->f, t);
  });
}

orlicz_status orlicz_conjugate(orlicz_function f, orlicz_function* out, int* closed_form) {
  return try_([&] {
    require(f, out);
    orlicz::ComplementaryPair pair = orlicz::complementary(f->f);
    const bool closed = pair.provenance == orlicz::ComplementaryPair::Provenance::closed_form;
    *out = new orlicz_function_t{std::move(pair.psi)};
    if (closed_form != nullptr) *closed_form = closed ? 1 : 0;
  });
}

orlicz_status orlicz_young_gap(orlicz_function f, double u, double v, double* out) {
  return try_([&] {
    require(f, out);
    *out = orlicz::young_gap(orlicz::complementary(f->f), u, v);
  });
}

void orlicz_delta2_default_options(orlicz_delta2_options* options) {
  if (options == nullptr) return;
  const orlicz::Delta2Options d;
  *options = {d.u_min, d.u_max, d.grid_size, d.unbounded_threshold};
}

orlicz_status orlicz_delta2(orlicz_function f, const orlicz_delta2_options* options, char** json_out, int* holds) {
  return try_([&] {
    require(f, json_out);
    orlicz::Delta2Options d;
    if (options != nullptr) {
      d.u_min = options->u_min;
      d.u_max = options->u_max;
      d.grid_size = options->grid_size;
      d.unbounded_threshold = options->unbounded_threshold;
    }
    const orlicz::Delta2Verdict v = orlicz::delta2_report(f->f, d);
    orlicz::Json j = {{"phi", f->f.spec()}};
    j.update(orlicz::to_json(v));
    *json_out = dup(j.dump());
    if (holds != nullptr) *holds = v.holds_on_range ? 1 : 0;
  });
}

orlicz_status orlicz_workspace_load(const char* json_text, orlicz_workspace* out) {
  return try_([&] {
    require(json_text, out);
    *out = new orlicz_workspace_t{orlicz::parse_operator_document(json_text)};
  });
}

orlicz_status orlicz_workspace_load_file(const char* path, orlicz_workspace* out) {
  return try_([&] {
    require(path, out);
    *out = new orlicz_workspace_t{orlicz::load_operator_file(path)};
  });
}

void orlicz_workspace_free(orlicz_workspace ws) { delete ws; }

orlicz_status orlicz_workspace_element(orlicz_workspace ws, const char* name, orlicz_element* out) {
  return try_([&] {
    require(ws, name, out);
    if (auto it = ws->doc.elements.find(name); it != ws->doc.elements.end()) {
      *out = new orlicz_element_t{it->second};
      return;
    }
    if (auto it = ws->doc.profiles.find(name); it != ws->doc.profiles.end()) {
      *out = new orlicz_element_t{it->second};
      return;
    }
    throw StatusError{ORLICZ_ERR_NOT_FOUND, std::string("no element or profile named \"") + name + "\""};
  });
}

void orlicz_element_free(orlicz_element e) { delete e; }

int orlicz_element_is_profile(orlicz_element e) {
  return e != nullptr && std::holds_alternative<orlicz::SpectralProfile>(e->value) ? 1 : 0;
}

orlicz_status orlicz_element_to_json(orlicz_element e, const char* name, char** out) {
  return try_([&] {
    require(e, out);
    if (const auto* m = std::get_if<orlicz::MatrixElement>(&e->value)) {
      *out = dup(orlicz::element_document(name != nullptr ? name : "x", *m).dump());
    } else {
      *out = dup(orlicz::profile_document(std::get<orlicz::SpectralProfile>(e->value)).dump());
    }
  });
}

orlicz_status orlicz_trace(orlicz_element e, double* re, double* im) {
  return try_([&] {
    require(e, re, im);
    const orlicz::Complex t = orlicz::trace(matrix(e, "trace"));
    *re = t.real();
    *im = t.imag();
  });
}

orlicz_status orlicz_profile_json(orlicz_element e, char** out) {
  return try_([&] {
    require(e, out);
    *out = dup(orlicz::profile_document(profile(e)).dump());
  });
}

orlicz_status orlicz_mu(orlicz_element e, double t, double* out) {
  return try_([&] {
    require(e, out);
    *out = orlicz::mu_at(profile(e), t);
  });
}

orlicz_status orlicz_lambda(orlicz_element e, double s, double* out) {
  return try_([&] {
    require(e, out);
    *out = orlicz::distribution_at(profile(e), s);
  });
}

orlicz_status orlicz_modular(orlicz_function f, orlicz_element e, double* out) {
  return try_([&] {
    require(f, e, out);
    *out = orlicz::modular(f->f, profile(e));
  });
}

orlicz_status orlicz_luxemburg_norm(orlicz_function f, orlicz_element e, double tol, orlicz_norm_result* out) {
  return try_([&] {
    require(f, e, out);
    *out = to_c(orlicz::luxemburg_norm(f->f, profile(e), tol));
  });
}

orlicz_status orlicz_orlicz_norm(orlicz_function f, orlicz_element e, double tol, orlicz_norm_result* out) {
  return try_([&] {
    require(f, e, out);
    *out = to_c(orlicz::orlicz_norm(f->f, profile(e), tol));
  });
}

orlicz_status orlicz_norm_result_json(const orlicz_norm_result* r, char** out) {
  return try_([&] {
    require(r, out);
    if (r->method < ORLICZ_NORM_CLOSED_FORM || r->method > ORLICZ_NORM_DUAL_BRUTEFORCE) {
      throw StatusError{ORLICZ_ERR_DOMAIN, "unknown norm method"};
    }
    const orlicz::NormResult n{r->value, static_cast<orlicz::NormMethod>(r->method), r->iterations, r->residual};
    *out = dup(orlicz::to_json(n).dump());
  });
}

orlicz_status orlicz_truncate(orlicz_element e, double n, orlicz_element* out) {
  return try_([&] {
    require(e, out);
    if (const auto* m = std::get_if<orlicz::MatrixElement>(&e->value)) {
      *out = new orlicz_element_t{orlicz::truncate(*m, n)};
    } else {
      if (std::isnan(n) || n < 0.0) orlicz::fail(orlicz::Errc::domain, "truncate: level n must be >= 0");
      *out = new orlicz_element_t{std::get<orlicz::SpectralProfile>(e->value).head(n)};
    }
  });
}

orlicz_status orlicz_project(orlicz_element e, double s, orlicz_element* out) {
  return try_([&] {
    require(e, out);
    const orlicz::MatrixElement& m = matrix(e, "project");
    *out = new orlicz_element_t{orlicz::spectral_projection(orlicz::polar(m).positive_part, s)};
  });
}

orlicz_status orlicz_verify(const char* suite, const char* params_json, char** report_json, int* passed) {
  return try_([&] {
    require(suite, report_json);
    orlicz::SuiteParams p;
    if (params_json != nullptr) p = orlicz::parse_suite_params(orlicz::Json::parse(params_json));
    const auto& names = orlicz::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      throw StatusError{ORLICZ_ERR_NOT_FOUND, std::string("unknown suite \"") + suite + "\""};
    }
    const orlicz::ExperimentReport r = orlicz::run_suite(suite, p);
    *report_json = dup(r.to_json().dump());
    if (passed != nullptr) *passed = r.passed() ? 1 : 0;
  });
}

orlicz_status orlicz_counterexample_build(orlicz_function f, double epsilon, int atoms, int tail_index,
                                          char** report_json, int* passed) {
  return try_([&] {
    require(f, report_json);
    const orlicz::CounterexampleResult r = orlicz::build_non_delta2_counterexample(f->f, epsilon, atoms, tail_index);
    *report_json = dup(r.report.to_json().dump());
    if (passed != nullptr) *passed = r.report.passed() ? 1 : 0;
  });
}

orlicz_status orlicz_format_report(const char* kind, const char* json, const char* format, char** out) {
  return try_([&] {
    require(kind, json, format, out);
    const orlicz::Format fmt = orlicz::parse_format(format);
    *out = dup(orlicz::render_report(kind, orlicz::Json::parse(json), fmt));
  });
}

}  // extern "C"
