#include "norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "error.hpp"
#include "modular.hpp"
#include "parallel.hpp"

namespace fpreg {
namespace {

// One group of coincident exponents and the original slots it covers.
struct ExponentGroup {
  std::uint64_t exponent;
  std::vector<std::size_t> slots;
};

// Exhaustive scan of sup |E_x f(x) e_p(sum_g s_g x^{e_g})| over merged
// coefficients s in F_p^k. The last group is handled by one transform of the
// push-forward of the modulated function, so each slice costs one DFT.
NormReport exact_scan(const GridFn& f, const std::vector<ExponentGroup>& groups, std::size_t slot_count) {
  const FieldCtx& ctx = *f.ctx;
  const std::uint64_t p = ctx.p();
  const std::size_t k = groups.size();
  std::size_t slices = 1;
  for (std::size_t g = 0; g + 1 < k; ++g) slices *= p;

  std::vector<std::vector<std::uint64_t>> outer_powers;
  for (std::size_t g = 0; g + 1 < k; ++g) outer_powers.push_back(power_table(ctx, groups[g].exponent));
  const auto inner_power = power_table(ctx, groups.back().exponent);

  auto slice_coeffs = [&](std::size_t s) {
    std::vector<std::uint64_t> c(k - 1);
    for (std::size_t g = k - 1; g-- > 0;) {
      c[g] = s % p;
      s /= p;
    }
    return c;
  };

  // |E_x f(x) e_p(outer phase + c x^e_last)| for every c.
  auto evaluate_slice = [&](std::size_t s) {
    const auto c = slice_coeffs(s);
    std::vector<cplx> pushed(p, cplx{});
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t phase = 0;
      for (std::size_t g = 0; g + 1 < k; ++g) phase = add_mod(phase, mul_mod(c[g], outer_powers[g][x], p), p);
      pushed[inner_power[x]] += f.values[x] * ctx.e(phase);
    }
    std::vector<cplx> hat(p);
    dft_into(ctx, pushed, hat);
    std::vector<double> mags(p);
    // E_x h(x) e_p(c x^e) = hat(-c)
    for (std::uint64_t cc = 0; cc < p; ++cc) mags[cc] = std::abs(hat[(p - cc) % p]);
    return mags;
  };

  std::vector<double> slice_max(slices, 0.0);
  parallel_for(slices, [&](std::size_t s) {
    const auto mags = evaluate_slice(s);
    slice_max[s] = *std::max_element(mags.begin(), mags.end());
  });
  const double best = *std::max_element(slice_max.begin(), slice_max.end());
  const double cutoff = best - kWitnessTieTolerance;

  auto to_witness = [&](const std::vector<std::uint64_t>& merged) {
    std::vector<std::uint64_t> w(slot_count, 0);
    // Merged value sits on the last slot of its group, giving the
    // lexicographically smallest original tuple.
    for (std::size_t g = 0; g < k; ++g) w[groups[g].slots.back()] = merged[g];
    return w;
  };

  NormReport report;
  bool found = false;
  for (std::size_t s = 0; s < slices; ++s) {
    if (slice_max[s] < cutoff) continue;
    const auto mags = evaluate_slice(s);
    auto merged = slice_coeffs(s);
    merged.push_back(0);
    for (std::uint64_t cc = 0; cc < p; ++cc) {
      if (mags[cc] < cutoff) continue;
      merged.back() = cc;
      auto w = to_witness(merged);
      if (!found || w < report.witness) {
        report.witness = std::move(w);
        report.value = mags[cc];
        found = true;
      }
    }
  }
  report.mode = NormModeKind::Exact;
  return report;
}

NormReport sampled_scan(const GridFn& f, std::span<const std::uint64_t> exponents, const NormMode& mode) {
  const std::uint64_t p = f.p();
  std::mt19937_64 rng(mode.seed);
  std::vector<std::vector<std::uint64_t>> samples(mode.budget, std::vector<std::uint64_t>(exponents.size()));
  for (auto& s : samples) {
    for (auto& c : s) c = rng() % p;
  }
  std::vector<double> values(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    values[i] = std::abs(phase_correlation(f, exponents, samples[i]));
  });
  NormReport report;
  report.mode = NormModeKind::Sampled;
  if (samples.empty()) {
    report.witness.assign(exponents.size(), 0);
    report.value = std::abs(phase_correlation(f, exponents, report.witness));
    return report;
  }
  const double best = *std::max_element(values.begin(), values.end());
  bool found = false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (values[i] < best - kWitnessTieTolerance) continue;
    if (!found || samples[i] < report.witness) {
      report.witness = samples[i];
      report.value = values[i];
      found = true;
    }
  }
  return report;
}

}  // namespace

NormReport u2_norm(const GridFn& f) {
  const Spectrum s = dft(f);
  std::vector<double> mags(s.coeffs.size());
  for (std::size_t xi = 0; xi < mags.size(); ++xi) mags[xi] = std::abs(s.coeffs[xi]);
  const double best = *std::max_element(mags.begin(), mags.end());
  NormReport report;
  for (std::size_t xi = 0; xi < mags.size(); ++xi) {
    if (mags[xi] >= best - kWitnessTieTolerance) {
      report.value = mags[xi];
      report.witness = {xi};
      break;
    }
  }
  return report;
}

NormReport u3_norm(const GridFn& f, NormMode mode, std::uint64_t exact_cap) {
  const std::uint64_t exps[] = {2, 1};
  if (mode.kind == NormModeKind::Sampled) return sampled_scan(f, exps, mode);
  if (f.p() > exact_cap) {
    throw Error(ErrorCode::ExactCapExceeded,
                "exact u3 norm capped at p <= " + std::to_string(exact_cap) + ", got " + std::to_string(f.p()));
  }
  return exact_scan(f, {{2, {0}}, {1, {1}}}, 2);
}

NormReport poly_norm(const GridFn& f, std::uint64_t alpha, std::uint64_t beta, std::uint64_t gamma,
                     NormMode mode) {
  if (alpha == 0 || beta == 0 || gamma == 0) {
    throw Error(ErrorCode::InvalidArgument, "exponents must be >= 1");
  }
  const std::uint64_t exps[] = {alpha, beta, gamma};
  if (mode.kind == NormModeKind::Sampled) return sampled_scan(f, exps, mode);

  // x^e depends only on e mod (p-1) for e >= 1, so such exponents coincide.
  const std::uint64_t p = f.p();
  std::vector<ExponentGroup> groups;
  for (std::size_t slot = 0; slot < 3; ++slot) {
    const std::uint64_t reduced = (exps[slot] - 1) % (p - 1) + 1;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const ExponentGroup& g) { return g.exponent == reduced; });
    if (it == groups.end()) {
      groups.push_back({reduced, {slot}});
    } else {
      it->slots.push_back(slot);
    }
  }
  const std::uint64_t cap = groups.size() == 3 ? kExactPolyThreeExponentMaxP : kExactU3MaxP;
  if (p > cap) {
    throw Error(ErrorCode::ExactCapExceeded,
                "exact poly norm with " + std::to_string(groups.size()) + " distinct exponents capped at p <= " +
                    std::to_string(cap));
  }
  return exact_scan(f, groups, 3);
}

cplx phase_correlation(const GridFn& f, std::span<const std::uint64_t> exponents,
                       std::span<const std::uint64_t> coeffs) {
  if (exponents.size() != coeffs.size()) throw Error(ErrorCode::DimensionMismatch, "one coefficient per exponent");
  const FieldCtx& ctx = *f.ctx;
  const std::uint64_t p = ctx.p();
  std::vector<cplx> terms(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t phase = 0;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      phase = add_mod(phase, mul_mod(coeffs[k] % p, pow_mod(x, exponents[k], p), p), p);
    }
    terms[x] = f.values[x] * ctx.e(phase);
  }
  return pairwise_sum(terms) / static_cast<double>(p);
}

cplx weyl_sum(const FieldCtx& ctx, std::span<const std::uint64_t> coeffs) {
  const std::uint64_t p = ctx.p();
  if (coeffs.empty()) return 1.0;
  std::vector<cplx> terms(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = add_mod(mul_mod(v, x, p), coeffs[k] % p, p);
    terms[x] = ctx.e(v);
  }
  return pairwise_sum(terms) / static_cast<double>(p);
}

}  // namespace fpreg
