#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <vector>

#include "fmca/fmca.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  fmca_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, GridLifecycle) {
  fmca_grid* g = nullptr;
  ASSERT_EQ(fmca_grid_new(4, -1, &g), FMCA_OK);
  ASSERT_EQ(fmca_grid_set(g, 1, 2, 1), FMCA_OK);
  int state = 0, n = 0;
  ASSERT_EQ(fmca_grid_get(g, 1, 2, &state), FMCA_OK);
  EXPECT_EQ(state, 1);
  ASSERT_EQ(fmca_grid_size(g, &n), FMCA_OK);
  EXPECT_EQ(n, 4);
  char* text = nullptr;
  ASSERT_EQ(fmca_grid_format(g, &text), FMCA_OK);
  const std::string s = take(text);
  EXPECT_EQ(s, "4\n----\n-+--\n----\n----\n");
  fmca_grid* back = nullptr;
  ASSERT_EQ(fmca_grid_parse(s.c_str(), &back), FMCA_OK);
  int equal = 0;
  ASSERT_EQ(fmca_grid_equal(g, back, &equal), FMCA_OK);
  EXPECT_EQ(equal, 1);
  fmca_grid_free(back);
  fmca_grid_free(g);
}

TEST(CApi, ErrorsAreReported) {
  fmca_grid* g = nullptr;
  EXPECT_EQ(fmca_grid_parse("2\n+x\n--\n", &g), FMCA_E_PARSE);
  EXPECT_NE(std::strstr(fmca_last_error(), "line 2"), nullptr);
  EXPECT_EQ(fmca_grid_new(0, -1, &g), FMCA_E_INVALID_ARGUMENT);
  EXPECT_EQ(fmca_grid_read("/nonexistent/x", &g), FMCA_E_IO);
  ASSERT_EQ(fmca_grid_new(3, -1, &g), FMCA_OK);
  int state = 0;
  EXPECT_EQ(fmca_grid_get(g, 3, 0, &state), FMCA_E_CELL_OUT_OF_RANGE);
  fmca_neighborhood* wide = nullptr;
  ASSERT_EQ(fmca_neighborhood_parse("1,2", "1", &wide), FMCA_OK);
  int changed = 0;
  EXPECT_EQ(fmca_predict(g, wide, 0, 0, 1, FMCA_METHOD_GRAPH, &changed), FMCA_E_WRONG_NEIGHBORHOOD_ARITY);
  EXPECT_EQ(fmca_predict(g, wide, 0, 0, 1, FMCA_METHOD_AUTO, &changed), FMCA_OK);
  fmca_neighborhood* bad = nullptr;
  EXPECT_EQ(fmca_neighborhood_parse("1,x", "1", &bad), FMCA_E_INVALID_ARGUMENT);
  fmca_neighborhood* col = nullptr;
  ASSERT_EQ(fmca_neighborhood_parse("1,4", "1", &col), FMCA_OK);
  fmca_grid* out = nullptr;
  EXPECT_EQ(fmca_step(g, col, 1, &out), FMCA_E_OFFSET_COLLISION);
  EXPECT_STREQ(fmca_status_name(FMCA_E_OFFSET_COLLISION), "OffsetCollision");
  fmca_neighborhood_free(col);
  fmca_neighborhood_free(wide);
  fmca_grid_free(g);
}

TEST(CApi, PredictMethodsAgree) {
  fmca_neighborhood* nb = nullptr;
  ASSERT_EQ(fmca_neighborhood_parse("1", "2", &nb), FMCA_OK);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    fmca_grid* g = nullptr;
    ASSERT_EQ(fmca_grid_random(10, seed, 0.35, &g), FMCA_OK);
    for (uint64_t t : {1u, 4u, 100u})
      for (int k = 0; k < 100; ++k) {
        int a = 0, b = 0, c = 0;
        ASSERT_EQ(fmca_predict(g, nb, k % 10, k / 10, t, FMCA_METHOD_SIM, &a), FMCA_OK);
        ASSERT_EQ(fmca_predict(g, nb, k % 10, k / 10, t, FMCA_METHOD_GRAPH, &b), FMCA_OK);
        ASSERT_EQ(fmca_predict(g, nb, k % 10, k / 10, t, FMCA_METHOD_MATRIX, &c), FMCA_OK);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a, c);
      }
    std::vector<int64_t> s1(100), s2(100);
    ASSERT_EQ(fmca_flip_schedule(g, nb, FMCA_METHOD_SIM, 1, s1.data(), s1.size()), FMCA_OK);
    ASSERT_EQ(fmca_flip_schedule(g, nb, FMCA_METHOD_GRAPH, 1, s2.data(), s2.size()), FMCA_OK);
    EXPECT_EQ(s1, s2);
    EXPECT_EQ(fmca_flip_schedule(g, nb, FMCA_METHOD_SIM, 1, s1.data(), 99), FMCA_E_INVALID_ARGUMENT);
    fmca_grid_free(g);
  }
  fmca_neighborhood_free(nb);
}

TEST(CApi, FixedPoint) {
  fmca_grid* g = nullptr;
  fmca_neighborhood* nb = nullptr;
  ASSERT_EQ(fmca_grid_random(16, 3, 0.5, &g), FMCA_OK);
  ASSERT_EQ(fmca_neighborhood_parse("1", "1", &nb), FMCA_OK);
  fmca_grid* fp = nullptr;
  uint64_t steps = 0;
  ASSERT_EQ(fmca_run_to_fixed_point(g, nb, 2, &fp, &steps), FMCA_OK);
  EXPECT_LE(steps, 256u);
  fmca_grid* again = nullptr;
  ASSERT_EQ(fmca_step(fp, nb, 1, &again), FMCA_OK);
  int equal = 0;
  ASSERT_EQ(fmca_grid_equal(fp, again, &equal), FMCA_OK);
  EXPECT_EQ(equal, 1);
  fmca_grid_free(again);
  fmca_grid_free(fp);
  fmca_grid_free(g);
  fmca_neighborhood_free(nb);
}

TEST(CApi, CompileAndRun) {
  fmca_circuit* c = nullptr;
  ASSERT_EQ(fmca_circuit_parse("input a 1\ninput b 1\nand g a b\noutput g\n", &c), FMCA_OK);
  fmca_instance* inst = nullptr;
  ASSERT_EQ(fmca_compile(c, "contiguous:2,2", 0, &inst), FMCA_OK);
  int out = 0, expected = 0;
  ASSERT_EQ(fmca_instance_run(inst, 1, &out), FMCA_OK);
  ASSERT_EQ(fmca_circuit_evaluate(c, &expected), FMCA_OK);
  EXPECT_EQ(out, 1);
  EXPECT_EQ(expected, 1);
  char* text = nullptr;
  ASSERT_EQ(fmca_instance_format(inst, &text), FMCA_OK);
  fmca_instance* back = nullptr;
  ASSERT_EQ(fmca_instance_parse(take(text).c_str(), &back), FMCA_OK);
  int i = 0, j = 0, bi = 0, bj = 0;
  fmca_instance_output_cell(inst, &i, &j);
  fmca_instance_output_cell(back, &bi, &bj);
  EXPECT_EQ(i, bi);
  EXPECT_EQ(j, bj);
  fmca_instance_free(back);
  fmca_instance_free(inst);
  EXPECT_EQ(fmca_compile(c, "contiguous:1,2", 0, &inst), FMCA_E_FAMILY_OUT_OF_RANGE);
  EXPECT_EQ(fmca_compile(c, "contiguous:2,2", 20, &inst), FMCA_E_LAYOUT_OVERFLOW);
  fmca_circuit_free(c);
  EXPECT_EQ(fmca_circuit_parse("input a 1\noutput b\n", &c), FMCA_E_PARSE);
}

TEST(CApi, GadgetSets) {
  fmca_gadget_set* gs = nullptr;
  ASSERT_EQ(fmca_gadget_set_load("sparse2:1,3,1,3", &gs), FMCA_OK);
  int passed = 0;
  char* report = nullptr;
  ASSERT_EQ(fmca_gadget_set_verify(gs, &passed, &report), FMCA_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(take(report).find("cross"), std::string::npos);
  fmca_gadget_set_free(gs);
  EXPECT_EQ(fmca_gadget_set_build("contiguous:6,5", &gs), FMCA_E_GADGET_CONSTRUCTION_FAILED);
}
