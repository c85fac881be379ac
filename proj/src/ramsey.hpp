#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "colouring.hpp"

namespace fpreg {

using Rational = boost::multiprecision::cpp_rational;

// Real-valued function on Z_N^arity, uniform measure. Index of (g_1, .., g_k)
// is ((g_1 N) + g_2) N + ... + g_k.
struct GroupFn {
  std::uint64_t N = 0;
  unsigned arity = 1;
  std::vector<double> values;

  GroupFn() = default;
  GroupFn(std::uint64_t n, unsigned k, std::vector<double> v);
  static GroupFn constant(std::uint64_t n, unsigned k, double c);

  std::size_t index(std::span<const std::uint64_t> g) const;
  double at(std::uint64_t a, std::uint64_t b) const { return values[a * N + b]; }
  double at(std::uint64_t a, std::uint64_t b, std::uint64_t c) const { return values[(a * N + b) * N + c]; }
};

struct RamseyConstants {
  std::uint32_t r = 1;
  Rational eps;  // 2^{-7r} (r!)^{-3}
  Rational rho;  // r^{-3} eps^3
};

RamseyConstants ramsey_constants(std::uint32_t r);

// log2 of a positive rational, usable where the value underflows a double.
double log2_rational(const Rational& q);
std::string rational_string(const Rational& q);

// A is a mask over Z_N x Z_N (index s*N + u), T a mask over Z_N.
// delta_T(A) = E_{t1,t2,t in T} 1_A(t1+t2, t)
// Lambda_T(A) = E_{t1..t7 in T} 1_A(t1+t6, t2) 1_A(t3+t7, t4) 1_A(t2+t4, t5)
Rational delta_T_exact(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T);
Rational lambda_T_exact(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T);
double delta_T(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T);
double lambda_T(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T);

inline constexpr std::uint64_t kBruteDeltaMaxN = 32;
inline constexpr std::uint64_t kBruteLambdaMaxN = 8;
double delta_T_brute(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T);
double lambda_T_brute(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T);

inline constexpr double kCoverageTolerance = 1e-9;

struct RamseySearchResult {
  std::uint32_t best_colour = 0;  // 1-based
  double value = 0.0;
  std::vector<double> values;                   // per colour
  std::vector<std::vector<std::uint8_t>> sets;  // greedy A_i
  std::vector<double> set_lambda;               // Lambda_G(A_i)
  RamseyConstants constants;
  bool meets_rho = false;
};

// Value per colour: E F_i(t,u) F_i(t',u') F_i(u+u',u'') with F_i clamped to 1.
RamseySearchResult ramsey_search(std::span<const GroupFn> F);
double ramsey_integral_brute(const GroupFn& f);

// Outward-rounded comparison of a double functional value against a rational.
bool value_at_least(double value, const Rational& bound);

struct DenseFiber {
  std::uint64_t witness = 0;
  std::vector<std::uint8_t> y_prime;  // N_Y(witness)
  std::vector<std::uint8_t> exceptional;  // E
  double alpha = 0.0;
  double nu_y_prime = 0.0;
  double nu_e_in_y_prime = 0.0;
};

// A is a |X| x |Y| relation (index x*|Y| + y). Weights default to uniform.
DenseFiber find_dense_fiber(std::size_t x_size, std::size_t y_size, std::span<const std::uint8_t> A, double eta,
                            std::span<const double> nu_x = {}, std::span<const double> nu_y = {});

struct SchurReport {
  std::uint64_t N = 0;
  std::uint32_t r = 0;
  std::vector<std::uint64_t> tensor;  // r^3, colours of (x, y, x+y)
  std::vector<std::uint64_t> mono_counts;
  std::uint64_t mono_total = 0;
  std::uint64_t total = 0;
  std::uint32_t min_colour = 1;
  std::uint64_t min_count = 0;
};

SchurReport schur_census(const Colouring& c);
std::vector<std::uint64_t> schur_tensor_brute(const Colouring& c);

struct Case3Result {
  std::uint32_t best_colour = 0;
  double value = 0.0;
  std::vector<double> values;
};

// E F_i(t1,u1,v1) F_i(t2,u2,v2) F_i(t3,u3,t1+u2) over Z_N^8.
Case3Result lambda_case3(std::span<const GroupFn> F);
double case3_integral_brute(const GroupFn& f);

// r seeded random functions on Z_N^arity with pointwise sum 1.
std::vector<GroupFn> random_cover(std::uint64_t N, std::uint32_t r, unsigned arity, std::uint64_t seed);

}  // namespace fpreg
