#include <gtest/gtest.h>

#include "error.hpp"
#include "helpers.hpp"
#include "modular.hpp"
#include "solution_count.hpp"

using namespace fpreg;
using fpreg::test::normalized;
using fpreg::test::random_fn;

namespace {

// (1/p^2) sum over x^a + y^b = z^c by a plain triple loop.
cplx triple_loop(const GridFn& f1, const GridFn& f2, const GridFn& f3, const EquationSpec& s) {
  const std::uint64_t p = f1.p();
  cplx acc = 0;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      for (std::uint64_t z = 0; z < p; ++z) {
        if (add_mod(pow_mod(x, s.alpha, p), pow_mod(y, s.beta, p), p) == pow_mod(z, s.gamma, p)) {
          acc += f1[x] * f2[y] * f3[z];
        }
      }
  return acc / static_cast<double>(p * p);
}

}  // namespace

TEST(EquationSpec, ParseAndValidate) {
  EXPECT_EQ(EquationSpec::parse("1,1,2"), (EquationSpec{1, 1, 2}));
  EXPECT_EQ(EquationSpec::parse("2,3,5").to_string(), "2,3,5");
  for (const char* bad : {"", "1,2", "1,2,3,4", "a,1,2", "1,,2", "0,1,2", "-1,1,2"}) {
    try {
      EquationSpec::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidArgument) << bad;
    }
  }
}

TEST(TValue, NormalisationIdentity) {
  for (std::uint64_t p : {13, 101, 1009, 10007}) {
    const Field ctx = make_field(p);
    const GridFn one = GridFn::constant(ctx, 1.0);
    EXPECT_NEAR(std::abs(t_value(one, one, one, {1, 1, 2}).value - 1.0), 0.0, 1e-12) << p;
  }
}

TEST(TValue, ConstantEqualsNormalizationConstant) {
  const Field ctx = make_field(31);
  const GridFn one = GridFn::constant(ctx, 1.0);
  for (const EquationSpec s : {EquationSpec{2, 2, 2}, EquationSpec{1, 2, 3}, EquationSpec{3, 3, 5}}) {
    const NormalizationConstant c = normalization_constant(*ctx, s);
    EXPECT_NEAR(std::abs(triple_loop(one, one, one, s) - c.value), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t_value(one, one, one, s).value - c.value), 0.0, 1e-12);
  }
  EXPECT_EQ(normalization_constant(*ctx, {1, 1, 2}).solutions, 31u * 31u);
}

TEST(TValue, SpectralMatchesTripleLoop) {
  std::mt19937_64 rng(10);
  for (std::uint64_t p : {7, 13, 31}) {
    const Field ctx = make_field(p);
    for (const EquationSpec s : {EquationSpec{1, 1, 2}, EquationSpec{2, 2, 2}, EquationSpec{1, 2, 3},
                                 EquationSpec{1, 1, 1}}) {
      const GridFn f1 = random_fn(ctx, rng), f2 = random_fn(ctx, rng), f3 = random_fn(ctx, rng);
      const cplx expected = triple_loop(f1, f2, f3, s);
      EXPECT_NEAR(std::abs(t_value(f1, f2, f3, s).value - expected), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(t_value_brute(f1, f2, f3, s).value - expected), 0.0, 1e-12);
    }
  }
}

TEST(TValue, BruteCapAndMismatch) {
  const GridFn f = GridFn::constant(make_field(5003), 1.0);
  try {
    t_value_brute(f, f, f, {1, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  const GridFn g = GridFn::constant(make_field(7), 1.0);
  EXPECT_THROW(t_value(f, f, g, {1, 1, 2}), Error);
}

TEST(TValue, PushForwardPreservesMass) {
  std::mt19937_64 rng(11);
  const GridFn f = random_fn(make_field(101), rng);
  for (std::uint64_t k : {1, 2, 3, 5}) {
    const GridFn g = push_forward(f, k);
    cplx a = 0, b = 0;
    for (auto v : f.values) a += v;
    for (auto v : g.values) b += v;
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-12);
  }
}

TEST(TBounds, NormAndL2BoundsHold) {
  std::mt19937_64 rng(12);
  const Field ctx = make_field(31);
  for (int t = 0; t < 20; ++t) {
    const GridFn f1 = normalized(random_fn(ctx, rng)), f2 = normalized(random_fn(ctx, rng)),
                 f3 = normalized(random_fn(ctx, rng));
    const TBoundsReport r = check_t_bounds(f1, f2, f3, {1, 1, 2});
    EXPECT_TRUE(r.norm_bound_holds) << r.abs_t << " vs " << r.norm_bound;
    EXPECT_TRUE(r.l2_bound_holds) << r.abs_t << " vs " << r.l2_bound;
  }
}

TEST(TBounds, ExtremalInputsAreTightForL2) {
  const Field ctx = make_field(13);
  const GridFn one = GridFn::constant(ctx, 1.0);
  const TBoundsReport r = check_t_bounds(one, one, one, {1, 1, 2});
  EXPECT_NEAR(r.abs_t, 1.0, 1e-12);
  EXPECT_NEAR(r.l2_bound, 1.0, 1e-12);
  EXPECT_TRUE(r.norm_bound_holds);
}
