#pragma once

#include <random>
#include <vector>

#include "spectral.hpp"

namespace fpreg::test {

inline double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline GridFn random_fn(const Field& ctx, std::mt19937_64& rng) {
  std::vector<cplx> v(ctx->p());
  for (auto& z : v) z = {2 * uniform(rng) - 1, 2 * uniform(rng) - 1};
  return GridFn(ctx, std::move(v));
}

inline GridFn normalized(GridFn f) {
  const double n = l2_norm(f);
  for (auto& z : f.values) z /= n;
  return f;
}

inline std::vector<std::uint8_t> random_mask(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  std::vector<std::uint8_t> m(n);
  for (auto& b : m) b = uniform(rng) < density;
  return m;
}

// Direct O(p^2) transform with the 1/p forward normalisation.
inline std::vector<cplx> naive_dft(const GridFn& f) {
  const std::uint64_t p = f.p();
  std::vector<cplx> out(p);
  for (std::uint64_t xi = 0; xi < p; ++xi) {
    cplx acc = 0;
    for (std::uint64_t x = 0; x < p; ++x) acc += f.values[x] * f.ctx->e(p - (xi * x) % p);
    out[xi] = acc / static_cast<double>(p);
  }
  return out;
}

}  // namespace fpreg::test
