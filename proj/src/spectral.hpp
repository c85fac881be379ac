#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "field.hpp"
#include "numeric.hpp"

namespace fpreg {

// A complex function on F_p, values indexed by x = 0..p-1.
struct GridFn {
  Field ctx;
  std::vector<cplx> values;

  GridFn() = default;
  GridFn(Field field, std::vector<cplx> vals);
  static GridFn constant(Field field, cplx c);
  // Indicator of a subset given as a membership mask.
  static GridFn indicator(Field field, std::span<const std::uint8_t> mask);

  std::uint64_t p() const noexcept { return ctx->p(); }
  const cplx& operator[](std::size_t x) const { return values[x]; }
  cplx& operator[](std::size_t x) { return values[x]; }
};

// Fourier coefficients under the 1/p-normalised forward transform.
struct Spectrum {
  Field ctx;
  std::vector<cplx> coeffs;

  std::uint64_t p() const noexcept { return ctx->p(); }
  const cplx& operator[](std::size_t xi) const { return coeffs[xi]; }
};

enum class DftMethod { Auto, Direct, Rader };

// p above this uses the Rader path under DftMethod::Auto.
inline constexpr std::uint64_t kDirectDftMaxP = 128;

// out[xi] = (1/p) sum_x in[x] e_p(-x xi).
void dft_into(const FieldCtx& ctx, std::span<const cplx> in, std::span<cplx> out,
              DftMethod method = DftMethod::Auto);
// out[x] = sum_xi in[xi] e_p(x xi).
void idft_into(const FieldCtx& ctx, std::span<const cplx> in, std::span<cplx> out,
               DftMethod method = DftMethod::Auto);

Spectrum dft(const GridFn& f, DftMethod method = DftMethod::Auto);
GridFn idft(const Spectrum& s, DftMethod method = DftMethod::Auto);

// (f*g)(x) = E_y f(x-y) g(y), evaluated through the transform.
GridFn convolve(const GridFn& f, const GridFn& g);

// E_x |f(x)|^2
double l2_norm_sq(const GridFn& f);
double l2_norm(const GridFn& f);

// Throws ContextMismatch unless every field has the same modulus.
void require_same_field(const Field& a, const Field& b);

}  // namespace fpreg
