#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "colouring.hpp"
#include "modular.hpp"
#include "norms.hpp"
#include "quadsys.hpp"
#include "ramsey.hpp"
#include "solution_count.hpp"
#include "spectral.hpp"

namespace fpreg {
namespace {

using nlohmann::json;

class Suite {
 public:
  void add(const std::string& name, double error, double tolerance, std::uint64_t cases) {
    const bool ok = std::isfinite(error) && error <= tolerance;
    checks_.push_back({{"name", name}, {"max_error", error}, {"tolerance", tolerance}, {"cases", cases},
                       {"passed", ok}});
    passed_ = passed_ && ok;
  }
  void flag(const std::string& name, bool ok, std::uint64_t cases) { add(name, ok ? 0.0 : 1.0, 0.0, cases); }

  json result(std::uint64_t seed) const {
    return {{"seed", seed}, {"passed", passed_}, {"checks", checks_}};
  }

 private:
  json checks_ = json::array();
  bool passed_ = true;
};

GridFn random_fn(const Field& ctx, std::mt19937_64& rng) {
  std::vector<cplx> v(ctx->p());
  for (auto& z : v) {
    const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    z = {re, im};
  }
  return GridFn(ctx, std::move(v));
}

std::vector<std::uint8_t> random_mask(std::size_t n, std::mt19937_64& rng, unsigned percent = 50) {
  std::vector<std::uint8_t> m(n);
  for (auto& b : m) b = rng() % 100 < percent;
  return m;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return err;
}

void spectral_checks(Suite& s, std::mt19937_64& rng) {
  double err = 0.0, rader = 0.0;
  for (std::uint64_t p : {13, 101, 257}) {
    const Field ctx = make_field(p);
    const GridFn f = random_fn(ctx, rng);
    err = std::max(err, max_diff(idft(dft(f)).values, f.values));
    rader = std::max(rader, max_diff(dft(f, DftMethod::Rader).coeffs, dft(f, DftMethod::Direct).coeffs));
  }
  s.add("dft_roundtrip", err, 1e-12, 3);
  s.add("dft_rader_vs_direct", rader, 1e-12, 3);
}

void t_checks(Suite& s, std::mt19937_64& rng) {
  double norm_err = 0.0, brute_err = 0.0;
  std::uint64_t cases = 0;
  for (std::uint64_t p : {13, 61, 101}) {
    const Field ctx = make_field(p);
    const GridFn one = GridFn::constant(ctx, 1.0);
    norm_err = std::max(norm_err, std::abs(t_value(one, one, one, {1, 1, 2}).value - cplx(1.0)));
    for (const EquationSpec spec : {EquationSpec{1, 1, 2}, EquationSpec{2, 2, 2}, EquationSpec{1, 2, 3}}) {
      const GridFn f1 = random_fn(ctx, rng), f2 = random_fn(ctx, rng), f3 = random_fn(ctx, rng);
      brute_err = std::max(brute_err,
                           std::abs(t_value(f1, f2, f3, spec).value - t_value_brute(f1, f2, f3, spec).value));
      ++cases;
    }
  }
  s.add("t_normalization", norm_err, 1e-12, 3);
  s.add("t_spectral_vs_brute", brute_err, 1e-9, cases);
}

void gauss_check(Suite& s) {
  const Field ctx = make_field(101);
  const double target = 1.0 / std::sqrt(101.0);
  double err = 0.0;
  for (std::uint64_t a = 1; a < 101; ++a) {
    for (std::uint64_t b = 0; b < 101; ++b) {
      const std::uint64_t coeffs[] = {0, b, a};
      err = std::max(err, std::abs(std::abs(weyl_sum(*ctx, coeffs)) - target));
    }
  }
  s.add("gauss_law", err, 1e-10, 100 * 101);
}

void u3_check(Suite& s, std::mt19937_64& rng) {
  const Field ctx = make_field(31);
  const GridFn f = random_fn(ctx, rng);
  double scan = 0.0;
  for (std::uint64_t a = 0; a < 31; ++a) {
    for (std::uint64_t b = 0; b < 31; ++b) {
      const std::uint64_t exps[] = {2, 1};
      const std::uint64_t coeffs[] = {a, b};
      scan = std::max(scan, std::abs(phase_correlation(f, exps, coeffs)));
    }
  }
  s.add("u3_exact_vs_scan", std::abs(u3_norm(f).value - scan), 1e-12, 1);
}

void census_check(Suite& s, std::uint64_t seed) {
  const Field ctx = make_field(101);
  double err = 0.0;
  bool exact = true;
  for (const EquationSpec spec : {EquationSpec{1, 1, 2}, EquationSpec{1, 1, 1}, EquationSpec{2, 2, 2}}) {
    const Colouring c = random_colouring(101, 3, seed);
    const CensusReport rep = census(ctx, c, spec);
    exact = exact && rep.oracle_checked && rep.tensor == census_tensor_brute(*ctx, c, spec);
    err = std::max(err, rep.max_rounding_error);
  }
  s.add("census_rounding", err, kCensusRoundingTolerance, 3);
  s.flag("census_spectral_vs_integer", exact, 3);
}

void counterexample_check(Suite& s) {
  const CounterexampleReport rep = counterexample_set(*make_field(1009));
  s.flag("counterexample_no_solutions", rep.solutions == 0, 1);
}

void ramsey_checks(Suite& s, std::mt19937_64& rng, std::uint64_t seed) {
  double delta_err = 0.0, lambda_err = 0.0;
  for (std::uint64_t N : {4, 8}) {
    const auto A = random_mask(N * N, rng);
    auto T = random_mask(N, rng, 70);
    T[0] = 1;
    delta_err = std::max(delta_err, std::abs(delta_T(N, A, T) - delta_T_brute(N, A, T)));
    lambda_err = std::max(lambda_err, std::abs(lambda_T(N, A, T) - lambda_T_brute(N, A, T)));
  }
  s.add("delta_T_fast_vs_brute", delta_err, 1e-12, 2);
  s.add("lambda_T_fast_vs_brute", lambda_err, 1e-12, 2);

  const auto cover = random_cover(12, 2, 2, seed);
  const auto search = ramsey_search(cover);
  double search_err = 0.0;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    GroupFn clamped = cover[i];
    for (auto& v : clamped.values) v = std::min(v, 1.0);
    search_err = std::max(search_err, std::abs(search.values[i] - ramsey_integral_brute(clamped)));
  }
  s.add("ramsey_search_vs_brute", search_err, 1e-10, cover.size());
  s.flag("ramsey_search_meets_rho", search.meets_rho, 1);

  const auto cover3 = random_cover(5, 2, 3, seed + 1);
  const auto case3 = lambda_case3(cover3);
  double case3_err = 0.0;
  for (std::size_t i = 0; i < cover3.size(); ++i) {
    case3_err = std::max(case3_err, std::abs(case3.values[i] - case3_integral_brute(cover3[i])));
  }
  s.add("case3_marginal_vs_brute", case3_err, 1e-10, cover3.size());

  const Colouring c = random_colouring(31, 3, seed);
  const SchurReport rep = schur_census(c);
  s.flag("schur_convolution_vs_brute", rep.tensor == schur_tensor_brute(c) && rep.total == 31 * 31, 1);
}

void quadsys_checks(Suite& s) {
  const Field ctx = make_field(101);
  double worst = 0.0;
  for (std::size_t k = 0; k < kReferenceFamilySize; ++k) {
    const auto [sys, f] = reference_family(ctx, k);
    worst = std::max(worst, equidistribution_gap(sys, f).scaled_gap);
  }
  s.add("equidistribution_scaled_gap", worst, 10.0, kReferenceFamilySize);

  const std::uint32_t cell[] = {1, 3};
  const Majorant m = build_majorant(4, cell, 0.5, 0.05);
  s.flag("majorant_verified", m.poly.size() > 0, 1);
}

}  // namespace

nlohmann::json run_selftest(std::uint64_t seed) {
  Suite s;
  std::mt19937_64 rng(seed);
  spectral_checks(s, rng);
  t_checks(s, rng);
  gauss_check(s);
  u3_check(s, rng);
  census_check(s, seed);
  counterexample_check(s);
  ramsey_checks(s, rng, seed);
  quadsys_checks(s);
  return s.result(seed);
}

}  // namespace fpreg
