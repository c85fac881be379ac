// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "colouring.hpp"
#include "error.hpp"
#include "field.hpp"
#include "modular.hpp"
#include "norms.hpp"
#include "quadsys.hpp"
#include "ramsey.hpp"
#include "selftest.hpp"
#include "solution_count.hpp"
#include "spectral.hpp"

using namespace fpreg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

GridFn random_complex(const Field& ctx, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(ctx->p());
  for (auto& x : v) x = {g(rng), g(rng)};
  return GridFn(ctx, std::move(v));
}

GridFn unit_normalised(GridFn f) {
  double s = 0;
  for (auto v : f.values) s += std::norm(v);
  const double scale = 1.0 / std::sqrt(s / static_cast<double>(f.p()));
  for (auto& v : f.values) v *= scale;
  return f;
}

double l2(const GridFn& f) {
  double s = 0;
  for (auto v : f.values) s += std::norm(v);
  return std::sqrt(s / static_cast<double>(f.p()));
}

Outcome c1_normalisation() {
  Outcome o;
  double worst = 0;
  const EquationSpec spec{1, 1, 2};
  for (std::uint64_t p : {13, 101, 1009, 10007}) {
    const Field ctx = make_field(p);
    const GridFn one = GridFn::constant(ctx, 1.0);
    worst = std::max(worst, std::abs(t_value(one, one, one, spec).value - 1.0));
    worst = std::max(worst, std::abs(normalization_constant(*ctx, spec).value - 1.0));
  }
  o.pass = worst <= 1e-12;
  o.detail = "max |T(1,1,1) - 1| = " + fmt("%.3g", worst);
  return o;
}

Outcome c2_spectral_vs_brute() {
  Outcome o;
  std::mt19937_64 rng(2);
  double worst = 0;
  int cases = 0;
  for (std::uint64_t p : {61, 101, 211, 499}) {
    const Field ctx = make_field(p);
    for (const EquationSpec& spec : {EquationSpec{1, 1, 2}, EquationSpec{2, 2, 2}, EquationSpec{1, 2, 3}}) {
      for (int t = 0; t < 20; ++t) {
        const GridFn f1 = random_complex(ctx, rng), f2 = random_complex(ctx, rng), f3 = random_complex(ctx, rng);
        // direct double loop, independent of both library paths
        std::vector<cplx> by_rhs(p, 0.0);
        for (std::uint64_t x = 0; x < p; ++x) {
          const std::uint64_t xa = pow_mod(x, spec.alpha, p);
          for (std::uint64_t y = 0; y < p; ++y) by_rhs[add_mod(xa, pow_mod(y, spec.beta, p), p)] += f1[x] * f2[y];
        }
        cplx direct = 0;
        for (std::uint64_t z = 0; z < p; ++z) direct += by_rhs[pow_mod(z, spec.gamma, p)] * f3[z];
        direct /= static_cast<double>(p * p);
        const cplx fast = t_value(f1, f2, f3, spec).value;
        const cplx brute = t_value_brute(f1, f2, f3, spec).value;
        worst = std::max({worst, std::abs(fast - brute), std::abs(fast - direct)});
        ++cases;
      }
    }
  }
  o.pass = worst <= 1e-9;
  o.detail = std::to_string(cases) + " triples, max deviation " + fmt("%.3g", worst);
  return o;
}

Outcome c3_gauss() {
  Outcome o;
  double worst = 0;
  for (std::uint64_t p : {101, 499}) {
    const Field ctx = make_field(p);
    const double target = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::uint64_t a = 1; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        const std::uint64_t c[] = {0, b, a};
        worst = std::max(worst, std::abs(std::abs(weyl_sum(*ctx, c)) - target));
      }
  }
  o.pass = worst <= 1e-10;
  o.detail = "max ||S| - p^-1/2| = " + fmt("%.3g", worst);
  return o;
}

Outcome c4_t_bounds() {
  Outcome o;
  const std::uint64_t p = 61;
  const Field ctx = make_field(p);
  const EquationSpec spec{1, 1, 2};
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  int norm_violations = 0, l2_violations = 0;
  double tightest = 0;
  for (int t = 0; t < 500; ++t) {
    GridFn f[3];
    for (auto& fi : f) {
      fi = random_complex(ctx, rng);
      // every other triple carries a planted quadratic phase so the bound is not slack
      if (t % 2 == 0) {
        const std::uint64_t a = coef(rng), b = coef(rng);
        for (std::uint64_t x = 0; x < p; ++x)
          fi[x] = 0.3 * fi[x] + 3.0 * ctx->e(add_mod(mul_mod(a, mul_mod(x, x, p), p), mul_mod(b, x, p), p));
      }
      fi = unit_normalised(fi);
    }
    const double abs_t = std::abs(t_value(f[0], f[1], f[2], spec).value);
    double min_u3 = INFINITY;
    for (const auto& fi : f) min_u3 = std::min(min_u3, u3_norm(fi).value);
    const double norm_bound = std::sqrt(2.0) * min_u3;
    const double l2_bound = l2(f[0]) * l2(f[1]) * l2(f[2]);
    if (abs_t > norm_bound + 1e-9) ++norm_violations;
    if (abs_t > l2_bound + 1e-9) ++l2_violations;
    tightest = std::max(tightest, abs_t / norm_bound);
    const TBoundsReport rep = check_t_bounds(f[0], f[1], f[2], spec);
    if (!rep.norm_bound_holds || !rep.l2_bound_holds) ++norm_violations;
  }
  o.pass = norm_violations == 0 && l2_violations == 0;
  o.detail = "500 triples, violations " + std::to_string(norm_violations) + " (norm) " +
             std::to_string(l2_violations) + " (L2), max |T|/bound " + fmt("%.3f", tightest);
  return o;
}

Outcome c5_counterexample() {
  Outcome o;
  o.pass = true;
  for (std::uint64_t p : {1009, 10007}) {
    const Field ctx = make_field(p);
    const CounterexampleReport rep = counterexample_set(*ctx);
    // independent recount: membership by the defining inequalities, then all x + y = z^2
    std::vector<std::uint8_t> in(p, 0);
    std::uint64_t size = 0;
    for (std::uint64_t x = 0; 3 * x < p; ++x) {
      if (3 * ((x * x) % p) >= 2 * p) in[x] = 1, ++size;
    }
    std::vector<std::uint64_t> square_hits(p, 0);
    for (std::uint64_t z = 0; z < p; ++z)
      if (in[z]) ++square_hits[(z * z) % p];
    std::uint64_t sols = 0;
    for (std::uint64_t x = 0; x < p; ++x)
      if (in[x])
        for (std::uint64_t y = 0; y < p; ++y)
          if (in[y]) sols += square_hits[(x + y) % p];
    const double ratio = static_cast<double>(size) / static_cast<double>(p);
    o.pass = o.pass && rep.solutions == 0 && sols == 0 && rep.size == size;
    if (p == 10007) o.pass = o.pass && std::abs(ratio - 1.0 / 9.0) <= 0.05;
    o.detail += "p=" + std::to_string(p) + " |A|=" + std::to_string(size) + " solutions=" +
                std::to_string(sols) + " ratio=" + fmt("%.4f", ratio) + "; ";
  }
  return o;
}

Outcome c6_decomposition() {
  Outcome o;
  int runs = 0, bad = 0;
  std::uint64_t max_iter = 0;
  double worst_sum = 0;
  for (std::uint64_t p : {499, 1009}) {
    const Field ctx = make_field(p);
    for (std::uint32_t r : {2u, 3u})
      for (double delta : {0.25, 0.3})
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
          DecomposeOptions opts;
          opts.exact_cap = 1009;
          const Colouring c = random_colouring(p, r, seed);
          const RegularityDecomposition d = decompose(ctx, c, delta, opts);
          ++runs;
          bool ok = d.converged;
          ok = ok && static_cast<double>(d.system.dim()) <= 8.0 * r / (delta * delta) + 1;
          ok = ok && static_cast<double>(d.iterations()) <= 4.0 * r / (delta * delta);
          for (std::size_t j = 1; j < d.energy.size(); ++j)
            ok = ok && d.energy[j] - d.energy[j - 1] >= delta * delta / 4 - 1e-10;
          // residuals recomputed from the returned projections
          for (std::uint32_t i = 0; i < r; ++i) {
            const auto mask = c.class_mask(i + 1);
            GridFn res = d.g[i];
            for (std::uint64_t x = 0; x < p; ++x) res[x] = static_cast<double>(mask[x]) - res[x];
            ok = ok && u3_norm(res, NormMode::exact(), 1009).value <= delta;
          }
          for (std::uint64_t x = 0; x < p; ++x) {
            cplx s = 0;
            for (const auto& g : d.g) s += g[x];
            worst_sum = std::max(worst_sum, std::abs(s - 1.0));
          }
          max_iter = std::max<std::uint64_t>(max_iter, d.iterations());
          if (!ok) ++bad;
        }
  }
  o.pass = bad == 0 && worst_sum <= 1e-10;
  o.detail = std::to_string(runs) + " runs, failures " + std::to_string(bad) + ", max iterations " +
             std::to_string(max_iter) + ", max |sum g - 1| " + fmt("%.3g", worst_sum);
  return o;
}

TrigPoly single(std::size_t dim, TrigPoly::Freq freq, cplx c = 1.0) {
  TrigPoly f(dim);
  f.add_term(freq, c);
  return f;
}

Outcome c7_equidistribution() {
  Outcome o;
  double worst_eq = 0, worst_count = 0;
  for (std::uint64_t p : {101, 499, 1009}) {
    const Field ctx = make_field(p);
    for (std::size_t k = 0; k < kReferenceFamilySize; ++k) {
      const auto [sys, f] = reference_family(ctx, k);
      worst_eq = std::max(worst_eq, equidistribution_gap(sys, f).scaled_gap);
      worst_count = std::max(worst_count, counting_main_term(sys, f).scaled_gap);
    }
  }
  // hand-computed main terms
  const Field f101 = make_field(101), f7 = make_field(7);
  const PolySystem s101 = PolySystem::quadratic(f101, {1});
  const PolySystem s7 = PolySystem::quadratic(f7, {1, 2});
  const GapReport g1 = equidistribution_gap(s101, single(2, {1, 1}));
  const GapReport g2 = equidistribution_gap(s7, single(4, {5, 1, 0, 0}));
  TrigPoly two(4);
  two.add_term({5, 1, 0, 0}, 0.5);
  two.add_term({1, 0, 1, 0}, 0.25);
  const GapReport g3 = counting_main_term(s7, two);
  const GridFn composed = compose(s7, two);
  const cplx brute = t_value_brute(composed, composed, composed, {1, 1, 2}).value;
  const bool hand = std::abs(g1.main_term) == 0.0 && std::abs(std::abs(g1.empirical) - 1 / std::sqrt(101.0)) <= 1e-12 &&
                    std::abs(g2.main_term - 1.0) <= 1e-12 && g2.gap <= 1e-10 &&
                    std::abs(g3.main_term - 0.125) <= 1e-12 && std::abs(g3.empirical - brute) <= 1e-12;
  o.pass = worst_eq <= 10 && worst_count <= 10 && hand;
  o.detail = "max scaled gaps " + fmt("%.3f", worst_eq) + " (equidistribution) " + fmt("%.3f", worst_count) +
             " (counting), hand values " + (hand ? "match" : "differ");
  return o;
}

Outcome c8_image_density() {
  Outcome o;
  const std::uint64_t p = 10007;
  const Field ctx = make_field(p);
  const double eps = 0.25;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint64_t> pick(1, p - 1);
  std::uint64_t min_count[3] = {0, p, p};
  bool ok = true;
  for (std::size_t d : {1u, 2u}) {
    std::vector<std::uint64_t> coeffs(d);
    for (auto& a : coeffs) a = pick(rng);
    const PolySystem sys = PolySystem::quadratic(ctx, coeffs);
    const double need = std::pow(eps / 2, 2.0 * d) * static_cast<double>(p) / 8;
    for (int t = 0; t < 20; ++t) {
      const auto h = sys.point(pick(rng));
      const std::uint64_t count = image_density(sys, h, eps);
      std::uint64_t recount = 0;
      for (std::uint64_t x = 0; x < p; ++x) {
        const auto pt = sys.point(x);
        bool near = true;
        for (std::size_t j = 0; j < pt.size(); ++j) {
          const double diff = std::abs(pt[j] - h[j]);
          near = near && std::min(diff, 1 - diff) <= eps;
        }
        recount += near;
      }
      ok = ok && count == recount && static_cast<double>(count) >= need;
      min_count[d] = std::min(min_count[d], count);
    }
  }
  o.pass = ok;
  o.detail = "min counts " + std::to_string(min_count[1]) + " (d=1, need 19.5) " + std::to_string(min_count[2]) +
             " (d=2, need 0.31)";
  return o;
}

std::vector<std::uint8_t> coin_mask(std::size_t n, double q, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(q);
  std::vector<std::uint8_t> m(n);
  for (auto& v : m) v = coin(rng);
  return m;
}

double lambda_loops(std::uint64_t N, const std::vector<std::uint8_t>& A, const std::vector<std::uint8_t>& T) {
  std::vector<std::uint64_t> t;
  for (std::uint64_t i = 0; i < N; ++i)
    if (T[i]) t.push_back(i);
  auto in = [&](std::uint64_t s, std::uint64_t u) -> std::uint64_t { return A[(s % N) * N + u]; };
  std::uint64_t hits = 0;
  for (auto t1 : t)
    for (auto t2 : t)
      for (auto t6 : t) {
        if (!in(t1 + t6, t2)) continue;
        for (auto t3 : t)
          for (auto t4 : t)
            for (auto t7 : t) {
              if (!in(t3 + t7, t4)) continue;
              for (auto t5 : t) hits += in(t2 + t4, t5);
            }
      }
  return static_cast<double>(hits) / std::pow(static_cast<double>(t.size()), 7);
}

double delta_loops(std::uint64_t N, const std::vector<std::uint8_t>& A, const std::vector<std::uint8_t>& T) {
  std::uint64_t hits = 0, n = 0;
  for (std::uint64_t i = 0; i < N; ++i) n += T[i];
  for (std::uint64_t a = 0; a < N; ++a)
    for (std::uint64_t b = 0; b < N; ++b)
      for (std::uint64_t c = 0; c < N; ++c)
        if (T[a] && T[b] && T[c]) hits += A[((a + b) % N) * N + c];
  return static_cast<double>(hits) / std::pow(static_cast<double>(n), 3);
}

Outcome c9_ramsey() {
  Outcome o;
  std::mt19937_64 rng(9);
  double worst = 0;
  for (std::uint64_t N : {8, 16}) {
    for (int t = 0; t < 3; ++t) {
      const auto A = coin_mask(N * N, 0.5, rng);
      auto T = coin_mask(N, 0.7, rng);
      T[1] = 1;
      worst = std::max(worst, std::abs(delta_T(N, A, T) - delta_loops(N, A, T)));
      worst = std::max(worst, std::abs(lambda_T(N, A, T) - lambda_loops(N, A, T)));
    }
  }
  const bool functionals = worst <= 1e-12;

  int below_rho = 0;
  std::uniform_real_distribution<double> unit;
  for (int inst = 0; inst < 100; ++inst) {
    const std::uint64_t N = 64;
    std::vector<GroupFn> F;
    if (inst % 2 == 0) {
      std::vector<double> v(N * N);
      for (auto& x : v) x = 1.0 + unit(rng);
      F.emplace_back(N, 2, std::move(v));
    } else {
      F = random_cover(N, 2, 2, 900 + inst);
    }
    const RamseySearchResult res = ramsey_search(F);
    if (!res.meets_rho || !value_at_least(res.value, ramsey_constants(static_cast<std::uint32_t>(F.size())).rho))
      ++below_rho;
  }

  // partial 2-colourings of (T+T) x T in Z_32; the uncoloured set E has no weight
  const std::uint64_t N = 32;
  const Rational eps2 = ramsey_constants(2).eps;
  const Rational floor = eps2 * eps2 * eps2;
  int shadow_fail = 0;
  Rational min_best = 1;
  for (int inst = 0; inst < 100; ++inst) {
    auto T = coin_mask(N, 0.2 + 0.6 * unit(rng), rng);
    T[inst % N] = 1;
    std::vector<std::uint8_t> sums(N, 0);
    for (std::uint64_t a = 0; a < N; ++a)
      for (std::uint64_t b = 0; b < N; ++b)
        if (T[a] && T[b]) sums[(a + b) % N] = 1;
    const double q = unit(rng);
    std::vector<std::uint8_t> c1(N * N, 0), c2(N * N, 0), E(N * N, 0);
    for (std::uint64_t s = 0; s < N; ++s)
      for (std::uint64_t u = 0; u < N; ++u) {
        const std::size_t k = s * N + u;
        if (sums[s] && T[u]) {
          (unit(rng) < q ? c1 : c2)[k] = 1;
        } else {
          E[k] = 1;
        }
      }
    if (delta_T_exact(N, E, T) > eps2) {
      ++shadow_fail;
      continue;
    }
    const Rational best = std::max(lambda_T_exact(N, c1, T), lambda_T_exact(N, c2, T));
    min_best = std::min(min_best, best);
    if (best < floor) ++shadow_fail;
  }
  o.pass = functionals && below_rho == 0 && shadow_fail == 0;
  o.detail = "functional deviation " + fmt("%.3g", worst) + ", search below rho " + std::to_string(below_rho) +
             "/100, shadow failures " + std::to_string(shadow_fail) + "/100 (min max Lambda " +
             fmt("%.4f", min_best.convert_to<double>()) + ")";
  return o;
}

Outcome c10_schur() {
  Outcome o;
  const std::uint64_t N = 101;
  std::uint64_t min_mono = N * N;
  bool ok = true;
  for (std::uint32_t r : {2u, 3u})
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const SchurReport rep = schur_census(random_colouring(N, r, 1000 * r + seed));
      std::uint64_t sum = 0;
      for (auto v : rep.tensor) sum += v;
      ok = ok && rep.mono_total >= 1 && sum == N * N && rep.total == N * N;
      min_mono = std::min(min_mono, rep.mono_total);
    }
  o.pass = ok;
  o.detail = "100 colourings, min monochromatic total " + std::to_string(min_mono);
  return o;
}

Outcome c11_scan() {
  Outcome o;
  const Field ctx = make_field(1009);
  bool ok = true;
  for (std::uint32_t r : {2u, 3u}) {
    const ScanSummary s = min_census_scan(ctx, {1, 1, 2}, r, 100, 11);
    ok = ok && s.min_count >= 1 && s.colourings_tested >= 100;
    o.detail += "r=" + std::to_string(r) + ": " + std::to_string(s.colourings_tested) + " colourings, min " +
                std::to_string(s.min_count) + " (density " + fmt("%.4f", s.min_density) + ", " + s.argmin + "); ";
  }
  o.pass = ok;
  return o;
}

Outcome c12_determinism() {
  Outcome o;
  const auto a = run_selftest();
  const auto b = run_selftest();
  o.pass = a.dump() == b.dump() && a.at("passed").get<bool>();
  o.detail = std::string("selftest ") + (a.at("passed").get<bool>() ? "passed" : "failed") + ", reports " +
             (a.dump() == b.dump() ? "identical" : "differ");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "T normalisation", 2, c1_normalisation},
      {2, "spectral vs brute T", 30, c2_spectral_vs_brute},
      {3, "Gauss sums", 60, c3_gauss},
      {4, "T bounds", 120, c4_t_bounds},
      {5, "counterexample set", 10, c5_counterexample},
      {6, "regularity decomposition", 600, c6_decomposition},
      {7, "equidistribution and counting", 120, c7_equidistribution},
      {8, "image density", 10, c8_image_density},
      {9, "Ramsey functionals", 300, c9_ramsey},
      {10, "Schur census", 10, c10_schur},
      {11, "census floor", 300, c11_scan},
      {12, "selftest determinism", 600, c12_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool pass = out.pass && secs < c.limit_s;
    if (!pass) ++failures;
    std::printf("%s %2d %s: %s [%.2f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                secs, c.limit_s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
