#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <fpreg/fpreg.h>

namespace {

std::string take(char* s) {
  std::string out(s);
  fpreg_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(fpreg_version(), "1.0.0");
  EXPECT_STREQ(fpreg_status_name(FPREG_OK), "Ok");
  EXPECT_STREQ(fpreg_status_name(FPREG_COMPOSITE_MODULUS), "CompositeModulus");
  EXPECT_STREQ(fpreg_status_name(FPREG_INTERNAL), "Internal");
}

TEST(CApi, FieldErrorsSetLastError) {
  fpreg_field* f = nullptr;
  EXPECT_EQ(fpreg_field_create(91, &f), FPREG_COMPOSITE_MODULUS);
  EXPECT_EQ(f, nullptr);
  EXPECT_NE(std::strlen(fpreg_last_error()), 0u);
  EXPECT_EQ(fpreg_field_create(2, &f), FPREG_MODULUS_TOO_SMALL);
  EXPECT_EQ(fpreg_field_create(101, nullptr), FPREG_INVALID_ARGUMENT);
  ASSERT_EQ(fpreg_field_create(101, &f), FPREG_OK);
  EXPECT_EQ(fpreg_field_p(f), 101u);
  EXPECT_EQ(fpreg_field_generator(f), 2u);
  fpreg_field_destroy(f);
  fpreg_field_destroy(nullptr);
}

TEST(CApi, TransformsAndCounting) {
  fpreg_field* f = nullptr;
  ASSERT_EQ(fpreg_field_create(13, &f), FPREG_OK);
  std::vector<fpreg_complex> ones(13, {1.0, 0.0}), spec_out(13), back(13);
  ASSERT_EQ(fpreg_dft(f, ones.data(), spec_out.data()), FPREG_OK);
  EXPECT_NEAR(spec_out[0].re, 1.0, 1e-15);
  EXPECT_NEAR(std::hypot(spec_out[5].re, spec_out[5].im), 0.0, 1e-15);
  ASSERT_EQ(fpreg_idft(f, spec_out.data(), back.data()), FPREG_OK);
  EXPECT_NEAR(back[7].re, 1.0, 1e-14);

  fpreg_spec spec{};
  ASSERT_EQ(fpreg_spec_parse("1,1,2", &spec), FPREG_OK);
  EXPECT_EQ(spec.gamma, 2u);
  EXPECT_EQ(fpreg_spec_parse("1,1", &spec), FPREG_INVALID_ARGUMENT);

  fpreg_complex t{}, tb{};
  ASSERT_EQ(fpreg_t_value(f, {1, 1, 2}, ones.data(), ones.data(), ones.data(), &t), FPREG_OK);
  ASSERT_EQ(fpreg_t_value_brute(f, {1, 1, 2}, ones.data(), ones.data(), ones.data(), &tb), FPREG_OK);
  EXPECT_NEAR(t.re, 1.0, 1e-13);
  EXPECT_NEAR(tb.re, 1.0, 1e-13);
  std::uint64_t sols = 0;
  double value = 0;
  ASSERT_EQ(fpreg_normalization(f, {1, 1, 2}, &sols, &value), FPREG_OK);
  EXPECT_EQ(sols, 169u);

  fpreg_norm n{};
  ASSERT_EQ(fpreg_u3_norm(f, ones.data(), 0, 0, 0, 0, &n), FPREG_OK);
  EXPECT_NEAR(n.value, 1.0, 1e-14);
  EXPECT_EQ(n.witness_len, 2u);
  EXPECT_EQ(n.sampled, 0);
  const std::uint64_t coeffs[] = {0, 0, 1};
  fpreg_complex g{};
  ASSERT_EQ(fpreg_weyl_sum(f, coeffs, 3, &g), FPREG_OK);
  EXPECT_NEAR(std::hypot(g.re, g.im), 1 / std::sqrt(13.0), 1e-14);
  fpreg_field_destroy(f);
}

TEST(CApi, ColouringsAndReports) {
  fpreg_field* f = nullptr;
  ASSERT_EQ(fpreg_field_create(13, &f), FPREG_OK);
  fpreg_colouring* c = nullptr;
  ASSERT_EQ(fpreg_colouring_power_cosets(f, 2, &c), FPREG_OK);
  EXPECT_EQ(fpreg_colouring_size(c), 13u);
  EXPECT_EQ(fpreg_colouring_colours(c), 2u);
  EXPECT_EQ(fpreg_colouring_assignment(c)[1], 1u);
  char* text = nullptr;
  ASSERT_EQ(fpreg_census_json(f, c, {1, 1, 2}, 0, &text), FPREG_OK);
  EXPECT_NE(take(text).find("\"total_solutions\":169"), std::string::npos);
  fpreg_colouring_destroy(c);

  const std::uint32_t partial[] = {1, 0, 1};
  EXPECT_EQ(fpreg_colouring_from_array(3, 1, partial, &c), FPREG_OK);
  EXPECT_EQ(fpreg_census_json(f, c, {1, 1, 2}, 0, &text), FPREG_CONTEXT_MISMATCH);
  fpreg_colouring_destroy(c);
  EXPECT_EQ(fpreg_colouring_power_cosets(f, 5, &c), FPREG_BAD_GENERATOR_SPEC);
  EXPECT_EQ(fpreg_colouring_load("/nonexistent/c.txt", &c), FPREG_IO);

  ASSERT_EQ(fpreg_counterexample_json(f, 1, &text), FPREG_OK);
  EXPECT_NE(take(text).find("\"members\":[3]"), std::string::npos);
  fpreg_field_destroy(f);
}

TEST(CApi, SystemsAndDecomposition) {
  fpreg_field* f = nullptr;
  ASSERT_EQ(fpreg_field_create(101, &f), FPREG_OK);
  const std::uint64_t exps[] = {2, 1}, coeffs[] = {1};
  fpreg_system* sys = nullptr;
  ASSERT_EQ(fpreg_system_create(f, exps, 2, coeffs, 1, &sys), FPREG_OK);
  EXPECT_EQ(fpreg_system_dim(sys), 1u);
  EXPECT_EQ(fpreg_system_create(f, exps, 2, coeffs, 0, &sys), FPREG_EMPTY_COEFFICIENTS);
  fpreg_trigpoly* poly = nullptr;
  ASSERT_EQ(fpreg_trigpoly_from_json("[[[1,1],[1,0]]]", &poly), FPREG_OK);
  char* text = nullptr;
  ASSERT_EQ(fpreg_equidistribution_json(sys, poly, &text), FPREG_OK);
  EXPECT_NE(take(text).find("\"main_term\":[0.0,0.0]"), std::string::npos);
  fpreg_trigpoly_destroy(poly);
  EXPECT_EQ(fpreg_trigpoly_from_json("not json", &poly), FPREG_FILE_FORMAT);
  fpreg_system_destroy(sys);

  fpreg_colouring* c = nullptr;
  ASSERT_EQ(fpreg_colouring_random(101, 2, 4, &c), FPREG_OK);
  fpreg_decomposition* d = nullptr;
  EXPECT_EQ(fpreg_decompose(f, c, 0.3, 10, 0, 1, &d), FPREG_RESOLUTION_TOO_SMALL);
  ASSERT_EQ(fpreg_decompose(f, c, 0.3, 0, 0, 1, &d), FPREG_OK);
  EXPECT_EQ(fpreg_decomposition_converged(d), 1);
  ASSERT_EQ(fpreg_decomposition_json(d, &text), FPREG_OK);
  EXPECT_NE(take(text).find("\"converged\":true"), std::string::npos);
  fpreg_decomposition_destroy(d);
  fpreg_colouring_destroy(c);
  fpreg_field_destroy(f);
}

TEST(CApi, Ramsey) {
  char* text = nullptr;
  ASSERT_EQ(fpreg_ramsey_constants_json(1, &text), FPREG_OK);
  EXPECT_NE(take(text).find("\"eps\":\"1/128\""), std::string::npos);
  std::vector<std::uint8_t> A(64, 1), T(8, 1), noT(8, 0);
  double v = 0;
  ASSERT_EQ(fpreg_lambda_T(8, A.data(), T.data(), &v), FPREG_OK);
  EXPECT_EQ(v, 1.0);
  EXPECT_EQ(fpreg_delta_T(8, A.data(), noT.data(), &v), FPREG_EMPTY_BASE);
  std::vector<double> half(2 * 64, 0.4);
  EXPECT_EQ(fpreg_ramsey_search_json(8, 2, half.data(), &text), FPREG_COVERAGE_VIOLATED);
  ASSERT_EQ(fpreg_random_cover(8, 2, 2, 1, half.data()), FPREG_OK);
  ASSERT_EQ(fpreg_ramsey_search_json(8, 2, half.data(), &text), FPREG_OK);
  EXPECT_NE(take(text).find("\"meets_rho\":true"), std::string::npos);
  const std::uint8_t none[] = {0, 0, 0, 0};
  EXPECT_EQ(fpreg_dense_fiber_json(2, 2, none, 0.5, &text), FPREG_INVALID_ARGUMENT);
}

TEST(CApi, Selftest) {
  char* text = nullptr;
  ASSERT_EQ(fpreg_selftest_json(5, &text), FPREG_OK);
  EXPECT_NE(take(text).find("\"passed\":true"), std::string::npos);
}
