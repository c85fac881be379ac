#include <gtest/gtest.h>

#include "error.hpp"
#include "helpers.hpp"
#include "spectral.hpp"

using namespace fpreg;
using fpreg::test::random_fn;

namespace {

double max_err(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

}  // namespace

TEST(Spectral, MatchesNaiveTransform) {
  std::mt19937_64 rng(1);
  for (std::uint64_t p : {3, 5, 13, 61, 127, 131, 257, 499, 1009}) {
    const Field ctx = make_field(p);
    const GridFn f = random_fn(ctx, rng);
    const auto expected = fpreg::test::naive_dft(f);
    EXPECT_LE(max_err(dft(f).coeffs, expected), 1e-12) << p;
    EXPECT_LE(max_err(dft(f, DftMethod::Rader).coeffs, expected), 1e-12) << p;
    EXPECT_LE(max_err(dft(f, DftMethod::Direct).coeffs, expected), 1e-12) << p;
  }
}

TEST(Spectral, RoundTrip) {
  std::mt19937_64 rng(2);
  for (std::uint64_t p : {7, 101, 2003, 10007}) {
    const Field ctx = make_field(p);
    const GridFn f = random_fn(ctx, rng);
    EXPECT_LE(max_err(idft(dft(f)).values, f.values), 1e-11) << p;
    EXPECT_LE(max_err(idft(dft(f, DftMethod::Rader), DftMethod::Rader).values, f.values), 1e-11) << p;
  }
}

TEST(Spectral, DeltaAndConstant) {
  const Field ctx = make_field(101);
  std::vector<std::uint8_t> mask(101, 0);
  mask[0] = 1;
  const Spectrum d = dft(GridFn::indicator(ctx, mask));
  for (const auto& c : d.coeffs) EXPECT_NEAR(std::abs(c - cplx(1.0 / 101)), 0.0, 1e-15);
  const Spectrum one = dft(GridFn::constant(ctx, 1.0));
  EXPECT_NEAR(std::abs(one[0] - 1.0), 0.0, 1e-13);
  for (std::size_t xi = 1; xi < 101; ++xi) EXPECT_NEAR(std::abs(one[xi]), 0.0, 1e-13);
}

TEST(Spectral, Parseval) {
  std::mt19937_64 rng(3);
  const Field ctx = make_field(499);
  const GridFn f = random_fn(ctx, rng);
  double spectral = 0;
  for (const auto& c : dft(f).coeffs) spectral += std::norm(c);
  EXPECT_NEAR(spectral, l2_norm_sq(f), 1e-12);
}

TEST(Spectral, ConvolutionMatchesDirectSum) {
  std::mt19937_64 rng(4);
  const Field ctx = make_field(61);
  const GridFn f = random_fn(ctx, rng), g = random_fn(ctx, rng);
  const GridFn h = convolve(f, g);
  for (std::uint64_t x = 0; x < 61; ++x) {
    cplx acc = 0;
    for (std::uint64_t y = 0; y < 61; ++y) acc += f[y] * g[(x + 61 - y) % 61];
    EXPECT_NEAR(std::abs(h[x] - acc / 61.0), 0.0, 1e-13);
  }
}

TEST(Spectral, RejectsMixedFields) {
  const GridFn f = GridFn::constant(make_field(7), 1.0);
  const GridFn g = GridFn::constant(make_field(11), 1.0);
  try {
    convolve(f, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContextMismatch);
  }
  EXPECT_THROW(GridFn(make_field(7), std::vector<cplx>(6)), Error);
}
