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

// orlicz <group> <verb> [options]; see README.md for the command table.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "orlicz/orlicz.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string phi;
  std::string in;
  std::string element;
  std::optional<double> eps;
  std::optional<double> delta;
  std::optional<double> t;
  std::optional<double> s;
  std::optional<double> n;
  double tol = 1e-8;
  double check_tol = 1e-9;
  std::uint64_t seed = 0;
  std::optional<int> samples;
  std::string format = "json";
  std::string out;
  int atoms = 20;
  int tail = 3;
};

// Carries a nonzero exit code out of a handler.
struct Exit {
  int code;
};

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "orlicz: error: " << msg << "\n";
  throw Exit{kExitUsage};
}

void check(orlicz_status st) {
  if (st == ORLICZ_OK) return;
  std::cerr << "orlicz: error: " << orlicz_status_string(st) << ": " << orlicz_last_error() << "\n";
  throw Exit{st == ORLICZ_ERR_NUMERIC || st == ORLICZ_ERR_INTERNAL ? kExitNumeric : kExitUsage};
}

struct CString {
  char* p = nullptr;
  ~CString() { orlicz_string_free(p); }
  std::string str() const { return p != nullptr ? p : ""; }
};

using FunctionPtr = std::unique_ptr<orlicz_function_t, decltype(&orlicz_function_free)>;
using WorkspacePtr = std::unique_ptr<orlicz_workspace_t, decltype(&orlicz_workspace_free)>;
using ElementPtr = std::unique_ptr<orlicz_element_t, decltype(&orlicz_element_free)>;

FunctionPtr load_function(const RunConfig& c) {
  if (c.phi.empty()) usage_error("--phi is required");
  orlicz_function f = nullptr;
  check(orlicz_function_parse(c.phi.c_str(), &f));
  return {f, orlicz_function_free};
}

ElementPtr load_element(const RunConfig& c) {
  if (c.in.empty()) usage_error("--in is required");
  if (c.element.empty()) usage_error("--element is required");
  orlicz_workspace ws = nullptr;
  check(orlicz_workspace_load_file(c.in.c_str(), &ws));
  WorkspacePtr holder(ws, orlicz_workspace_free);
  orlicz_element e = nullptr;
  check(orlicz_workspace_element(ws, c.element.c_str(), &e));
  return {e, orlicz_element_free};
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) usage_error(std::string(flag) + " is required");
  return *v;
}

void emit(const RunConfig& c, const char* kind, const std::string& json) {
  CString text;
  check(orlicz_format_report(kind, json.c_str(), c.format.c_str(), &text.p));
  if (c.out.empty()) {
    std::cout << text.str();
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f || !(f << text.str()) || !f.flush()) usage_error("cannot write \"" + c.out + "\"");
}

void emit(const RunConfig& c, const char* kind, const Json& j) { emit(c, kind, j.dump()); }

void phi_eval(const RunConfig& c) {
  const FunctionPtr f = load_function(c);
  const double u = need(c.t, "--t");
  double value = 0.0;
  double density = 0.0;
  check(orlicz_phi_eval(f.get(), u, &value));
  check(orlicz_density_eval(f.get(), u, &density));
  CString spec;
  check(orlicz_function_spec(f.get(), &spec.p));
  emit(c, "value", Json{{"phi", spec.str()}, {"u", u}, {"value", value}, {"density", density}});
}

void phi_conjugate(const RunConfig& c) {
  const FunctionPtr f = load_function(c);
  orlicz_function g = nullptr;
  int closed = 0;
  check(orlicz_conjugate(f.get(), &g, &closed));
  const FunctionPtr psi(g, orlicz_function_free);
  CString spec;
  CString psi_spec;
  check(orlicz_function_spec(f.get(), &spec.p));
  check(orlicz_function_spec(psi.get(), &psi_spec.p));
  Json j{{"phi", spec.str()}, {"conjugate", psi_spec.str()}, {"closed_form", closed != 0}};
  if (c.t) {
    double v = 0.0;
    check(orlicz_phi_eval(psi.get(), *c.t, &v));
    j["v"] = *c.t;
    j["value"] = v;
  }
  emit(c, "value", j);
}

void phi_delta2(const RunConfig& c) {
  const FunctionPtr f = load_function(c);
  orlicz_delta2_options opt;
  orlicz_delta2_default_options(&opt);
  if (c.s) opt.u_min = *c.s;
  if (c.t) opt.u_max = *c.t;
  if (c.samples) opt.grid_size = *c.samples;
  CString json;
  check(orlicz_delta2(f.get(), &opt, &json.p, nullptr));
  emit(c, "delta2", json.str());
}

void op_trace(const RunConfig& c) {
  const ElementPtr e = load_element(c);
  double re = 0.0;
  double im = 0.0;
  check(orlicz_trace(e.get(), &re, &im));
  emit(c, "value", Json{{"element", c.element}, {"re", re}, {"im", im}});
}

void op_mu(const RunConfig& c) {
  const ElementPtr e = load_element(c);
  if (!c.t) {
    CString json;
    check(orlicz_profile_json(e.get(), &json.p));
    emit(c, "profile", json.str());
    return;
  }
  double v = 0.0;
  check(orlicz_mu(e.get(), *c.t, &v));
  emit(c, "value", Json{{"element", c.element}, {"t", *c.t}, {"mu", v}});
}

void op_lambda(const RunConfig& c) {
  const ElementPtr e = load_element(c);
  const double s = need(c.s, "--s");
  double v = 0.0;
  check(orlicz_lambda(e.get(), s, &v));
  emit(c, "value", Json{{"element", c.element}, {"s", s}, {"lambda", v}});
}

void op_modular(const RunConfig& c) {
  const FunctionPtr f = load_function(c);
  const ElementPtr e = load_element(c);
  double v = 0.0;
  check(orlicz_modular(f.get(), e.get(), &v));
  emit(c, "value", Json{{"element", c.element}, {"modular", v}});
}

void op_norm(const RunConfig& c, bool orlicz) {
  const FunctionPtr f = load_function(c);
  const ElementPtr e = load_element(c);
  orlicz_norm_result r{};
  check(orlicz ? orlicz_orlicz_norm(f.get(), e.get(), c.tol, &r) : orlicz_luxemburg_norm(f.get(), e.get(), c.tol, &r));
  CString json;
  check(orlicz_norm_result_json(&r, &json.p));
  emit(c, "norm", json.str());
}

void emit_element(const RunConfig& c, orlicz_element e) {
  CString json;
  check(orlicz_element_to_json(e, c.element.c_str(), &json.p));
  emit(c, orlicz_element_is_profile(e) ? "profile" : "element", json.str());
}

void op_truncate(const RunConfig& c) {
  const ElementPtr e = load_element(c);
  orlicz_element out = nullptr;
  check(orlicz_truncate(e.get(), need(c.n, "--n"), &out));
  const ElementPtr holder(out, orlicz_element_free);
  emit_element(c, out);
}

void op_project(const RunConfig& c) {
  const ElementPtr e = load_element(c);
  orlicz_element out = nullptr;
  check(orlicz_project(e.get(), need(c.s, "--s"), &out));
  const ElementPtr holder(out, orlicz_element_free);
  emit_element(c, out);
}

int verify(const RunConfig& c, const std::string& suite) {
  Json params = Json::object();
  if (!c.phi.empty()) params["phi"] = c.phi;
  params["seed"] = c.seed;
  if (c.samples) params["samples"] = *c.samples;
  if (c.eps) params["eps"] = *c.eps;
  if (c.n) params["L"] = *c.n;
  params["tol"] = c.tol;
  params["check_tol"] = c.check_tol;
  CString report;
  int passed = 0;
  check(orlicz_verify(suite.c_str(), params.dump().c_str(), &report.p, &passed));
  emit(c, "experiment", report.str());
  const Json parsed = Json::parse(report.str());
  return parsed.at("verdict") == "violation" ? kExitViolation : kExitOk;
}

int counterexample_build(const RunConfig& c) {
  const FunctionPtr f = load_function(c);
  CString report;
  int passed = 0;
  check(orlicz_counterexample_build(f.get(), c.eps.value_or(1.0), c.atoms, c.tail, &report.p, &passed));
  emit(c, "experiment", report.str());
  return passed != 0 ? kExitOk : kExitViolation;
}

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--phi", c.phi, "Orlicz function spec");
  cmd->add_option("--in", c.in, "operator or profile JSON file");
  cmd->add_option("--element", c.element, "element or profile name in --in");
  cmd->add_option("--eps", c.eps, "epsilon");
  cmd->add_option("--delta", c.delta, "delta");
  cmd->add_option("--t", c.t, "t (u for phi eval, u_max for delta2)");
  cmd->add_option("--s", c.s, "s (u_min for delta2)");
  cmd->add_option("--n", c.n, "level n (L for verify continuity)");
  cmd->add_option("--tol", c.tol, "norm tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--check-tol", c.check_tol, "check tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "master seed");
  cmd->add_option("--samples", c.samples, "sample count (grid size for delta2)");
  cmd->add_option("--format", c.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_option("--out", c.out, "output path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Orlicz space toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int()> action;

  const auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help, std::function<int()> fn) {
    CLI::App* cmd = group->add_subcommand(name, help);
    add_common(cmd, cfg);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  const auto simple = [](std::function<void()> fn) {
    return [fn] {
      fn();
      return kExitOk;
    };
  };

  CLI::App* phi = app.add_subcommand("phi", "Orlicz function evaluation");
  phi->require_subcommand(1);
  leaf(phi, "eval", "phi(u) and p(u) at u = --t", simple([&] { phi_eval(cfg); }));
  leaf(phi, "conjugate", "complementary function", simple([&] { phi_conjugate(cfg); }));
  leaf(phi, "delta2", "Delta2 verdict on [--s, --t]", simple([&] { phi_delta2(cfg); }));

  CLI::App* op = app.add_subcommand("op", "operations on one element");
  op->require_subcommand(1);
  leaf(op, "trace", "tau(x)", simple([&] { op_trace(cfg); }));
  leaf(op, "mu", "mu_t(x), or the whole profile without --t", simple([&] { op_mu(cfg); }));
  leaf(op, "lambda", "lambda_s(x)", simple([&] { op_lambda(cfg); }));
  leaf(op, "modular", "tau(phi(|x|))", simple([&] { op_modular(cfg); }));
  leaf(op, "norm", "Luxemburg norm", simple([&] { op_norm(cfg, false); }));
  leaf(op, "onorm", "Orlicz norm", simple([&] { op_norm(cfg, true); }));
  leaf(op, "truncate", "spectral truncation at --n", simple([&] { op_truncate(cfg); }));
  leaf(op, "project", "spectral projection of |x| onto (s, inf)", simple([&] { op_project(cfg); }));

  CLI::App* ver = app.add_subcommand("verify", "seeded property suites");
  ver->require_subcommand(1);
  for (const char* suite : {"young", "sandwich", "fatou", "truncation", "continuity", "monotonicity", "norm-measure",
                            "superadditivity", "submajorization", "axioms", "delta2-lemmas"}) {
    const std::string name = suite;
    leaf(ver, name, "run the " + name + " suite", [&cfg, name] { return verify(cfg, name); });
  }

  CLI::App* cx = app.add_subcommand("counterexample", "non-Delta2 counterexample family");
  cx->require_subcommand(1);
  CLI::App* build = leaf(cx, "build", "build and certify the family", [&] { return counterexample_build(cfg); });
  build->add_option("--atoms", cfg.atoms, "materialized atoms K")->check(CLI::PositiveNumber);
  build->add_option("--tail", cfg.tail, "tail index n")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!action) return kExitUsage;
  try {
    return action();
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "orlicz: error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
