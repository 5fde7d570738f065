// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/sigmahg.h"

#include <gtest/gtest.h>

#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct Owned {
  char* p = nullptr;
  ~Owned() { sh_string_free(p); }
  json parsed() const { return json::parse(p); }
};

sh_instance* h2n3() {
  const int sigma[] = {1, 2};
  sh_instance* inst = nullptr;
  EXPECT_EQ(sh_instance_create(5, 3, 2, sigma, 2, &inst), SH_OK);
  return inst;
}

TEST(CApi, InstanceLifecycle) {
  sh_instance* inst = h2n3();
  ASSERT_NE(inst, nullptr);
  EXPECT_EQ(sh_instance_n(inst), 5);
  EXPECT_EQ(sh_instance_r(inst), 3);
  EXPECT_EQ(sh_instance_q(inst), 2);
  EXPECT_EQ(sh_instance_degenerate(inst), 0);
  Owned out;
  ASSERT_EQ(sh_instance_to_json(inst, &out.p), SH_OK);
  EXPECT_EQ(out.parsed()["sigma"], json::array({2, 1}));
  sh_instance_destroy(inst);
  sh_instance_destroy(nullptr);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  const int bad[] = {3};
  sh_instance* inst = nullptr;
  EXPECT_EQ(sh_instance_create(5, 3, 2, bad, 1, &inst), SH_ERR_VALIDATION);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(sh_last_error()).find("s(sigma) >= 2"), std::string::npos);
  EXPECT_EQ(sh_instance_from_json("{", &inst), SH_ERR_PARSE);
  EXPECT_EQ(sh_instance_from_json(nullptr, &inst), SH_ERR_ARGUMENT);
  EXPECT_STREQ(sh_status_name(SH_ERR_PARSE), "parse");

  sh_instance* ok = h2n3();
  EXPECT_STREQ(sh_last_error(), "");
  Owned out;
  EXPECT_EQ(sh_construct(ok, "nope", 0, SH_FORMAT_JSON, &out.p), SH_ERR_ARGUMENT);
  EXPECT_EQ(sh_construct(ok, "zone", 3, SH_FORMAT_JSON, &out.p), SH_ERR_PRECONDITION);
  EXPECT_EQ(sh_spectrum(ok, 2, 4, 0, 0, SH_FORMAT_JSON, &out.p), SH_ERR_VALIDATION);
  sh_instance_destroy(ok);
}

TEST(CApi, CheckWithCrossCheck) {
  sh_instance* inst = h2n3();
  sh_colouring* col = nullptr;
  ASSERT_EQ(sh_colouring_from_json(R"({"classes":[[1,1],[1,1],[1,1],[1,1],[1,1]]})", &col), SH_OK);
  EXPECT_EQ(sh_colouring_k(col), 1);
  Owned out;
  int valid = -1;
  ASSERT_EQ(sh_check(inst, col, 2, 2, 1, SH_FORMAT_JSON, &out.p, &valid), SH_OK);
  EXPECT_EQ(valid, 0);
  const auto j = out.parsed();
  EXPECT_EQ(j["status"], "MONOCHROMATIC_EDGE");
  EXPECT_EQ(j["agree"], true);

  Owned text;
  ASSERT_EQ(sh_check(inst, col, 2, 2, 0, SH_FORMAT_TEXT, &text.p, nullptr), SH_OK);
  EXPECT_EQ(std::string(text.p).rfind("MONOCHROMATIC_EDGE", 0), 0u);
  sh_colouring_destroy(col);

  const int raw[] = {1, 2, 1, 2, 1, 2, 1, 2, 1, 2};
  ASSERT_EQ(sh_colouring_create(5, 2, raw, &col), SH_OK);
  Owned again;
  ASSERT_EQ(sh_check(inst, col, 2, 2, 1, SH_FORMAT_JSON, &again.p, &valid), SH_OK);
  EXPECT_EQ(valid, 1);
  sh_colouring_destroy(col);
  sh_instance_destroy(inst);
}

TEST(CApi, RandomCheckIsSeeded) {
  sh_instance* inst = h2n3();
  Owned a, b;
  int mism = -1;
  ASSERT_EQ(sh_random_check(inst, 2, 2, 200, 42, 4, &a.p, &mism), SH_OK);
  EXPECT_EQ(mism, 0);
  ASSERT_EQ(sh_random_check(inst, 2, 2, 200, 42, 4, &b.p, nullptr), SH_OK);
  EXPECT_STREQ(a.p, b.p);
  sh_instance_destroy(inst);
}

TEST(CApi, SpectrumVerifyConstructWalk) {
  sh_instance* inst = h2n3();
  Owned spec;
  ASSERT_EQ(sh_spectrum(inst, 2, 2, 0, 0, SH_FORMAT_JSON, &spec.p), SH_OK);
  EXPECT_EQ(spec.parsed()["gaps"], json::parse("[[3,4]]"));

  Owned ver;
  int refuted = -1;
  ASSERT_EQ(sh_verify(inst, 2, 2, 0, 0, SH_FORMAT_JSON, &ver.p, &refuted), SH_OK);
  EXPECT_EQ(refuted, 0);

  Owned con;
  ASSERT_EQ(sh_construct(inst, "zone", 5, SH_FORMAT_JSON, &con.p), SH_OK);
  EXPECT_EQ(con.parsed()["self_check"]["status"], "VALID");

  Owned list;
  ASSERT_EQ(sh_list_constructions(inst, &list.p), SH_OK);
  EXPECT_NE(std::string(list.p).find("BLOCK"), std::string::npos);

  sh_colouring* col = nullptr;
  ASSERT_EQ(sh_colouring_from_json(R"({"classes":[[1,2],[1,2],[1,2],[1,2],[1,2]]})", &col), SH_OK);
  Owned walk;
  EXPECT_EQ(sh_walk(inst, col, SH_WALK_DOWN, 2, 10, &walk.p), SH_ERR_PRECONDITION);
  sh_colouring_destroy(col);
  sh_instance_destroy(inst);

  const int sigma[] = {3, 3};
  ASSERT_EQ(sh_instance_create(3, 6, 3, sigma, 2, &inst), SH_OK);
  ASSERT_EQ(sh_colouring_from_json(R"({"classes":[[1,2,3],[4,4,4],[5,5,5]]})", &col), SH_OK);
  ASSERT_EQ(sh_walk(inst, col, SH_WALK_DOWN, 4, 10, &walk.p), SH_OK);
  EXPECT_NE(std::string(walk.p).find("TARGET_REACHED"), std::string::npos);
  sh_colouring_destroy(col);
  sh_instance_destroy(inst);
}

TEST(CApi, Sweep) {
  Owned out;
  int refuted = -1;
  ASSERT_EQ(sh_sweep(4, 4, 2, 0, 0, 0, SH_FORMAT_JSON, &out.p, &refuted), SH_OK);
  EXPECT_EQ(refuted, 0);
  const auto j = out.parsed();
  EXPECT_EQ(j["reports"].size(), 4u);  // (3,1), (2,2), (2,1,1), (1,1,1,1)
  EXPECT_EQ(sh_sweep(4, 2, 2, 0, 0, 0, SH_FORMAT_JSON, &out.p, &refuted), SH_ERR_VALIDATION);
}

TEST(CApi, Version) { EXPECT_STREQ(sh_version(), "0.1.0"); }

}  // namespace
