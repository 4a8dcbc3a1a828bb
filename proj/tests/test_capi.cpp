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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "orlicz/orlicz.h"

namespace {

struct Function {
  orlicz_function f = nullptr;
  explicit Function(const char* spec) { EXPECT_EQ(orlicz_function_parse(spec, &f), ORLICZ_OK) << orlicz_last_error(); }
  ~Function() { orlicz_function_free(f); }
};

struct Workspace {
  orlicz_workspace ws = nullptr;
  Workspace() {
    const std::string path = std::string(ORLICZ_TEST_DATA) + "/ops.json";
    EXPECT_EQ(orlicz_workspace_load_file(path.c_str(), &ws), ORLICZ_OK) << orlicz_last_error();
  }
  ~Workspace() { orlicz_workspace_free(ws); }
  orlicz_element get(const char* name) {
    orlicz_element e = nullptr;
    EXPECT_EQ(orlicz_workspace_element(ws, name, &e), ORLICZ_OK) << orlicz_last_error();
    return e;
  }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  orlicz_string_free(s);
  return out;
}

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(orlicz_version(), "1.0.0");
  EXPECT_STREQ(orlicz_status_string(ORLICZ_OK), "ok");
  EXPECT_STREQ(orlicz_status_string(ORLICZ_ERR_REFUSED), "refused");
}

TEST(CApi, FunctionEvaluation) {
  Function sq("power:p=2");
  double v = 0.0;
  ASSERT_EQ(orlicz_phi_eval(sq.f, 3.0, &v), ORLICZ_OK);
  EXPECT_EQ(v, 9.0);
  ASSERT_EQ(orlicz_density_eval(sq.f, 3.0, &v), ORLICZ_OK);
  EXPECT_EQ(v, 6.0);
  EXPECT_EQ(orlicz_phi_eval(sq.f, -1.0, &v), ORLICZ_ERR_DOMAIN);
  EXPECT_NE(std::string(orlicz_last_error()).size(), 0u);
  char* spec = nullptr;
  ASSERT_EQ(orlicz_function_spec(sq.f, &spec), ORLICZ_OK);
  EXPECT_EQ(take(spec), "power:p=2");
}

TEST(CApi, ParseErrors) {
  orlicz_function f = nullptr;
  EXPECT_EQ(orlicz_function_parse("power:p=2,q=1", &f), ORLICZ_ERR_PARSE);
  EXPECT_EQ(f, nullptr);
  EXPECT_EQ(orlicz_function_parse("power:p=0.5", &f), ORLICZ_ERR_CONSTRUCTION);
  EXPECT_EQ(orlicz_function_parse(nullptr, &f), ORLICZ_ERR_NULL_ARGUMENT);
  EXPECT_EQ(orlicz_function_parse("exp", nullptr), ORLICZ_ERR_NULL_ARGUMENT);
}

TEST(CApi, ConjugateAndYoung) {
  Function e("exp");
  orlicz_function psi = nullptr;
  int closed = -1;
  ASSERT_EQ(orlicz_conjugate(e.f, &psi, &closed), ORLICZ_OK);
  EXPECT_EQ(closed, 0);
  double v = 0.0;
  ASSERT_EQ(orlicz_phi_eval(psi, 2.0, &v), ORLICZ_OK);
  EXPECT_NEAR(v, 3.0 * std::log(3.0) - 2.0, 1e-12);
  orlicz_function_free(psi);
  ASSERT_EQ(orlicz_young_gap(e.f, 1.0, std::exp(1.0) - 1.0, &v), ORLICZ_OK);
  EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(CApi, Delta2) {
  Function sq("power:p=2");
  Function e("exp");
  char* json = nullptr;
  int holds = -1;
  ASSERT_EQ(orlicz_delta2(sq.f, nullptr, &json, &holds), ORLICZ_OK);
  EXPECT_EQ(holds, 1);
  EXPECT_EQ(take(json),
            "{\"phi\":\"power:p=2\",\"holds\":true,\"u_min\":1e-06,\"u_max\":1000000.0,\"k\":4.0,\"exact\":true,"
            "\"witness\":null}");
  orlicz_delta2_options o;
  orlicz_delta2_default_options(&o);
  o.u_max = 10.0;
  ASSERT_EQ(orlicz_delta2(e.f, &o, &json, &holds), ORLICZ_OK);
  EXPECT_EQ(holds, 0);
  EXPECT_NE(take(json).find("\"witness\":{\"u\":"), std::string::npos);
}

TEST(CApi, WorkspaceOperations) {
  Workspace ws;
  Function sq("power:p=2");
  orlicz_element x = ws.get("x");
  double re = 0.0, im = 0.0, v = 0.0;
  ASSERT_EQ(orlicz_trace(x, &re, &im), ORLICZ_OK);
  EXPECT_EQ(re, 7.0);
  EXPECT_EQ(im, 0.0);
  ASSERT_EQ(orlicz_mu(x, 1.0, &v), ORLICZ_OK);
  EXPECT_EQ(v, 3.0);
  ASSERT_EQ(orlicz_lambda(x, 3.0, &v), ORLICZ_OK);
  EXPECT_EQ(v, 1.0);
  ASSERT_EQ(orlicz_modular(sq.f, x, &v), ORLICZ_OK);
  EXPECT_EQ(v, 25.0);
  orlicz_norm_result r;
  ASSERT_EQ(orlicz_luxemburg_norm(sq.f, x, 1e-10, &r), ORLICZ_OK);
  EXPECT_NEAR(r.value, 5.0, 1e-10);
  EXPECT_EQ(r.method, ORLICZ_NORM_CLOSED_FORM);
  char* json = nullptr;
  ASSERT_EQ(orlicz_norm_result_json(&r, &json), ORLICZ_OK);
  EXPECT_EQ(take(json), "{\"value\":5.0,\"method\":\"closed_form\",\"iterations\":0,\"residual\":0.0}");
  ASSERT_EQ(orlicz_orlicz_norm(sq.f, x, 1e-10, &r), ORLICZ_OK);
  EXPECT_NEAR(r.value, 10.0, 1e-7);
  EXPECT_EQ(r.method, ORLICZ_NORM_AMEMIYA);
  EXPECT_EQ(orlicz_luxemburg_norm(sq.f, x, 0.0, &r), ORLICZ_ERR_DOMAIN);
  ASSERT_EQ(orlicz_profile_json(x, &json), ORLICZ_OK);
  EXPECT_EQ(take(json), "{\"v\":1,\"steps\":[{\"value\":4.0,\"width\":1.0},{\"value\":3.0,\"width\":1.0}]}");
  orlicz_element_free(x);
}

TEST(CApi, TruncateProjectAndReload) {
  Workspace ws;
  orlicz_element x = ws.get("x");
  orlicz_element t = nullptr;
  ASSERT_EQ(orlicz_truncate(x, 3.5, &t), ORLICZ_OK);
  double re = 0.0, im = 0.0;
  ASSERT_EQ(orlicz_trace(t, &re, &im), ORLICZ_OK);
  EXPECT_NEAR(re, 3.0, 1e-14);
  char* json = nullptr;
  ASSERT_EQ(orlicz_element_to_json(t, "t", &json), ORLICZ_OK);
  orlicz_workspace again = nullptr;
  ASSERT_EQ(orlicz_workspace_load(json, &again), ORLICZ_OK) << orlicz_last_error();
  orlicz_string_free(json);
  orlicz_element t2 = nullptr;
  ASSERT_EQ(orlicz_workspace_element(again, "t", &t2), ORLICZ_OK);
  ASSERT_EQ(orlicz_trace(t2, &re, &im), ORLICZ_OK);
  EXPECT_NEAR(re, 3.0, 1e-14);
  orlicz_element p = nullptr;
  ASSERT_EQ(orlicz_project(x, 3.5, &p), ORLICZ_OK);
  ASSERT_EQ(orlicz_trace(p, &re, &im), ORLICZ_OK);
  EXPECT_NEAR(re, 1.0, 1e-14);
  for (auto* e : {x, t, t2, p}) orlicz_element_free(e);
  orlicz_workspace_free(again);
}

TEST(CApi, ProfilesInWorkspace) {
  Workspace ws;
  orlicz_element p = ws.get("p");
  EXPECT_EQ(orlicz_element_is_profile(p), 1);
  double re = 0.0, im = 0.0;
  EXPECT_EQ(orlicz_trace(p, &re, &im), ORLICZ_ERR_DOMAIN);
  orlicz_element proj = nullptr;
  EXPECT_EQ(orlicz_project(p, 1.0, &proj), ORLICZ_ERR_DOMAIN);
  orlicz_element head = nullptr;
  ASSERT_EQ(orlicz_truncate(p, 5.0, &head), ORLICZ_OK);
  char* json = nullptr;
  ASSERT_EQ(orlicz_profile_json(head, &json), ORLICZ_OK);
  EXPECT_EQ(take(json), "{\"v\":1,\"steps\":[{\"value\":1.0,\"width\":1.0}]}");
  orlicz_element_free(head);
  orlicz_element_free(p);
  orlicz_element missing = nullptr;
  EXPECT_EQ(orlicz_workspace_element(ws.ws, "nope", &missing), ORLICZ_ERR_NOT_FOUND);
}

TEST(CApi, WorkspaceErrors) {
  orlicz_workspace ws = nullptr;
  EXPECT_EQ(orlicz_workspace_load("{\"v\":1,", &ws), ORLICZ_ERR_PARSE);
  EXPECT_EQ(std::string(orlicz_last_error()).rfind("line 1, column ", 0), 0u);
  EXPECT_EQ(orlicz_workspace_load("{\"v\":1,\"steps\":[{\"value\":1,\"width\":0}]}", &ws), ORLICZ_ERR_VALIDATION);
  EXPECT_EQ(orlicz_workspace_load_file("/nonexistent.json", &ws), ORLICZ_ERR_PARSE);
}

TEST(CApi, VerifyAndCounterexample) {
  char* json = nullptr;
  int passed = -1;
  ASSERT_EQ(orlicz_verify("young", "{\"phi\":\"power:p=3\",\"seed\":1,\"samples\":5}", &json, &passed), ORLICZ_OK)
      << orlicz_last_error();
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(take(json).rfind("{\"name\":\"young\"", 0), 0u);
  EXPECT_EQ(orlicz_verify("continuity", "{\"phi\":\"exp\"}", &json, &passed), ORLICZ_ERR_REFUSED);
  EXPECT_EQ(orlicz_verify("bogus", "{}", &json, &passed), ORLICZ_ERR_NOT_FOUND);
  EXPECT_EQ(orlicz_verify("young", "{\"x\":1}", &json, &passed), ORLICZ_ERR_PARSE);

  Function e("exp");
  ASSERT_EQ(orlicz_counterexample_build(e.f, 1.0, 20, 3, &json, &passed), ORLICZ_OK) << orlicz_last_error();
  EXPECT_EQ(passed, 1);
  EXPECT_NE(take(json).find("\"verdict\":\"pass\""), std::string::npos);
  Function sq("power:p=2");
  EXPECT_EQ(orlicz_counterexample_build(sq.f, 1.0, 20, 3, &json, &passed), ORLICZ_ERR_REFUSED);
  EXPECT_NE(std::string(orlicz_last_error()).find("k=4"), std::string::npos);
}

TEST(CApi, FormatReport) {
  char* out = nullptr;
  ASSERT_EQ(orlicz_format_report("norm", "{\"value\":5.0,\"method\":\"closed_form\",\"iterations\":0,\"residual\":0.0}",
                                 "pretty", &out),
            ORLICZ_OK);
  EXPECT_EQ(take(out), "5\n");
  EXPECT_EQ(orlicz_format_report("norm", "{}", "xml", &out), ORLICZ_ERR_PARSE);
}

TEST(CApi, NullHandles) {
  double v = 0.0;
  EXPECT_EQ(orlicz_phi_eval(nullptr, 1.0, &v), ORLICZ_ERR_NULL_ARGUMENT);
  EXPECT_EQ(orlicz_mu(nullptr, 1.0, &v), ORLICZ_ERR_NULL_ARGUMENT);
  orlicz_function_free(nullptr);
  orlicz_element_free(nullptr);
  orlicz_workspace_free(nullptr);
  orlicz_string_free(nullptr);
}

}  // namespace
