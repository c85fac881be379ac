#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spectral.hpp"

namespace fpreg {

enum class NormModeKind { Exact, Sampled };

struct NormMode {
  NormModeKind kind = NormModeKind::Exact;
  std::uint64_t budget = 0;  // sampled: number of random phase tuples
  std::uint64_t seed = 0;

  static NormMode exact() { return {}; }
  static NormMode sampled(std::uint64_t budget, std::uint64_t seed) {
    return {NormModeKind::Sampled, budget, seed};
  }
};

// value is attained at witness (a, b[, c]); sampled reports are lower bounds.
struct NormReport {
  double value = 0.0;
  std::vector<std::uint64_t> witness;
  NormModeKind mode = NormModeKind::Exact;
};

inline constexpr std::uint64_t kExactU3MaxP = 1000;
inline constexpr std::uint64_t kExactPolyThreeExponentMaxP = 200;

// Ties between maximisers closer than this are broken lexicographically.
inline constexpr double kWitnessTieTolerance = 1e-12;

NormReport u2_norm(const GridFn& f);

// sup_{a,b} |E_x f(x) e_p(a x^2 + b x)|
NormReport u3_norm(const GridFn& f, NormMode mode = NormMode::exact(),
                   std::uint64_t exact_cap = kExactU3MaxP);

// sup_{a,b,c} |E_x f(x) e_p(a x^alpha + b x^beta + c x^gamma)|
NormReport poly_norm(const GridFn& f, std::uint64_t alpha, std::uint64_t beta, std::uint64_t gamma,
                     NormMode mode = NormMode::exact());

// E_x f(x) e_p(sum_k coeffs[k] x^exponents[k]) by direct summation.
cplx phase_correlation(const GridFn& f, std::span<const std::uint64_t> exponents,
                       std::span<const std::uint64_t> coeffs);

// E_x e_p(c_K x^K + ... + c_1 x + c_0), coeffs given low degree first.
cplx weyl_sum(const FieldCtx& ctx, std::span<const std::uint64_t> coeffs);

}  // namespace fpreg
