#include "spectral.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "error.hpp"
#include "modular.hpp"

namespace fpreg {
namespace {

// Iterative radix-2 transform of length n = 2^k with exp(-2 pi i jk/n) kernel.
class Pow2Fft {
 public:
  explicit Pow2Fft(std::size_t n) : n_(n), twiddle_(n / 2), rev_(n) {
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (std::size_t k = 0; k < n / 2; ++k) {
      const long double a = -two_pi * static_cast<long double>(k) / static_cast<long double>(n);
      twiddle_[k] = {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
    }
    const int bits = std::countr_zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
      rev_[i] = r;
    }
  }

  std::size_t size() const noexcept { return n_; }

  void forward(std::vector<cplx>& a) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (i < rev_[i]) std::swap(a[i], a[rev_[i]]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const std::size_t half = len / 2, stride = n_ / len;
      for (std::size_t i = 0; i < n_; i += len) {
        for (std::size_t j = 0; j < half; ++j) {
          const cplx u = a[i + j];
          const cplx v = a[i + j + half] * twiddle_[j * stride];
          a[i + j] = u + v;
          a[i + j + half] = u - v;
        }
      }
    }
  }

  // Unnormalised inverse (kernel exp(+2 pi i jk/n)).
  void backward(std::vector<cplx>& a) const {
    for (auto& z : a) z = std::conj(z);
    forward(a);
    for (auto& z : a) z = std::conj(z);
  }

 private:
  std::size_t n_;
  std::vector<cplx> twiddle_;
  std::vector<std::size_t> rev_;
};

// Rader's reduction of the length-p transform to a cyclic convolution of
// length p-1, evaluated with a zero-padded power-of-two transform.
struct RaderPlan {
  std::size_t n;                    // p - 1
  std::vector<std::uint64_t> in_perm;   // g^q
  std::vector<std::uint64_t> out_perm;  // g^-m
  Pow2Fft fft;
  std::vector<cplx> kernel_hat;     // transform of the padded kernel

  RaderPlan(const FieldCtx& ctx)
      : n(ctx.p() - 1), in_perm(n), out_perm(n), fft(std::bit_ceil(2 * (ctx.p() - 1) - 1)) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t g = ctx.generator();
    const std::uint64_t g_inv = pow_mod(g, p - 2, p);
    std::uint64_t up = 1, down = 1;
    for (std::size_t q = 0; q < n; ++q) {
      in_perm[q] = up;
      out_perm[q] = down;
      up = mul_mod(up, g, p);
      down = mul_mod(down, g_inv, p);
    }
    const std::size_t m = fft.size();
    kernel_hat.assign(m, cplx{});
    // b[k] = e_p(-g^-k); wrap the negative lags to the end of the buffer.
    for (std::size_t k = 0; k < n; ++k) kernel_hat[k] = std::conj(ctx.e(out_perm[k]));
    for (std::size_t j = 1; j < n; ++j) kernel_hat[m - j] = kernel_hat[n - j];
    fft.forward(kernel_hat);
  }

  // Unnormalised sum_x in[x] e_p(-x xi).
  void apply(std::span<const cplx> in, std::span<cplx> out) const {
    const std::size_t m = fft.size();
    std::vector<cplx> buf(m, cplx{});
    for (std::size_t q = 0; q < n; ++q) buf[q] = in[in_perm[q]];
    fft.forward(buf);
    for (std::size_t k = 0; k < m; ++k) buf[k] *= kernel_hat[k];
    fft.backward(buf);
    const double scale = 1.0 / static_cast<double>(m);
    out[0] = pairwise_sum(in);
    for (std::size_t q = 0; q < n; ++q) out[out_perm[q]] = in[0] + buf[q] * scale;
  }
};

std::shared_ptr<const RaderPlan> rader_plan(const FieldCtx& ctx) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const RaderPlan>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[ctx.p()];
  if (!slot) slot = std::make_shared<const RaderPlan>(ctx);
  return slot;
}

void direct_unnormalised(const FieldCtx& ctx, std::span<const cplx> in, std::span<cplx> out) {
  const std::uint64_t p = ctx.p();
  std::vector<cplx> terms(p);
  for (std::uint64_t xi = 0; xi < p; ++xi) {
    // index walks -x*xi mod p
    std::uint64_t idx = 0;
    const std::uint64_t step = (p - xi) % p;
    for (std::uint64_t x = 0; x < p; ++x) {
      terms[x] = in[x] * ctx.e(idx);
      idx = add_mod(idx, step, p);
    }
    out[xi] = pairwise_sum(terms);
  }
}

void unnormalised(const FieldCtx& ctx, std::span<const cplx> in, std::span<cplx> out,
                  DftMethod method) {
  if (method == DftMethod::Auto) {
    method = ctx.p() <= kDirectDftMaxP ? DftMethod::Direct : DftMethod::Rader;
  }
  if (method == DftMethod::Direct) {
    direct_unnormalised(ctx, in, out);
  } else {
    rader_plan(ctx)->apply(in, out);
  }
}

void check_len(const FieldCtx& ctx, std::size_t a, std::size_t b) {
  if (a != ctx.p() || b != ctx.p()) {
    throw Error(ErrorCode::DimensionMismatch, "transform buffers must have length p");
  }
}

}  // namespace

GridFn::GridFn(Field field, std::vector<cplx> vals) : ctx(std::move(field)), values(std::move(vals)) {
  if (values.size() != ctx->p()) {
    throw Error(ErrorCode::DimensionMismatch, "GridFn needs exactly p values");
  }
}

GridFn GridFn::constant(Field field, cplx c) {
  const auto p = field->p();
  return GridFn(std::move(field), std::vector<cplx>(p, c));
}

GridFn GridFn::indicator(Field field, std::span<const std::uint8_t> mask) {
  std::vector<cplx> v(field->p());
  if (mask.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "indicator mask must have length p");
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = mask[x] ? 1.0 : 0.0;
  return GridFn(std::move(field), std::move(v));
}

void dft_into(const FieldCtx& ctx, std::span<const cplx> in, std::span<cplx> out, DftMethod method) {
  check_len(ctx, in.size(), out.size());
  unnormalised(ctx, in, out, method);
  const double inv_p = 1.0 / static_cast<double>(ctx.p());
  for (auto& z : out) z *= inv_p;
}

void idft_into(const FieldCtx& ctx, std::span<const cplx> in, std::span<cplx> out, DftMethod method) {
  check_len(ctx, in.size(), out.size());
  std::vector<cplx> conj_in(in.begin(), in.end());
  for (auto& z : conj_in) z = std::conj(z);
  unnormalised(ctx, conj_in, out, method);
  for (auto& z : out) z = std::conj(z);
}

Spectrum dft(const GridFn& f, DftMethod method) {
  Spectrum s{f.ctx, std::vector<cplx>(f.p())};
  dft_into(*f.ctx, f.values, s.coeffs, method);
  return s;
}

GridFn idft(const Spectrum& s, DftMethod method) {
  std::vector<cplx> v(s.p());
  idft_into(*s.ctx, s.coeffs, v, method);
  return GridFn(s.ctx, std::move(v));
}

GridFn convolve(const GridFn& f, const GridFn& g) {
  require_same_field(f.ctx, g.ctx);
  Spectrum fs = dft(f);
  const Spectrum gs = dft(g);
  for (std::size_t xi = 0; xi < fs.coeffs.size(); ++xi) fs.coeffs[xi] *= gs.coeffs[xi];
  return idft(fs);
}

double l2_norm_sq(const GridFn& f) {
  std::vector<double> sq(f.values.size());
  for (std::size_t x = 0; x < sq.size(); ++x) sq[x] = std::norm(f.values[x]);
  return pairwise_sum(sq) / static_cast<double>(f.p());
}

double l2_norm(const GridFn& f) { return std::sqrt(l2_norm_sq(f)); }

void require_same_field(const Field& a, const Field& b) {
  if (!a || !b || a->p() != b->p()) {
    throw Error(ErrorCode::ContextMismatch, "functions live on different fields");
  }
}

}  // namespace fpreg
