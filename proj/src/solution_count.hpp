#pragma once

#include <cstdint>
#include <string>

#include "spectral.hpp"

namespace fpreg {

// Exponents of x^alpha + y^beta = z^gamma.
struct EquationSpec {
  std::uint64_t alpha = 1;
  std::uint64_t beta = 1;
  std::uint64_t gamma = 2;

  void validate() const;
  std::string to_string() const;
  // Parses "a,b,c".
  static EquationSpec parse(const std::string& text);
  friend bool operator==(const EquationSpec&, const EquationSpec&) = default;
};

enum class TMethod { Spectral, Brute };

struct TValue {
  cplx value;
  TMethod method = TMethod::Spectral;
  std::uint64_t p = 0;
  EquationSpec spec;
};

inline constexpr std::uint64_t kBruteTMaxP = 5000;

// g(w) = sum_{x^k = w} f(x).
GridFn push_forward(const GridFn& f, std::uint64_t k);

// T = p^-2 sum_{x^alpha + y^beta = z^gamma} f1(x) f2(y) f3(z), computed as
// sum_xi g1^(-xi) g2^(-xi) g3^(xi) over the push-forwards g_i.
TValue t_value(const GridFn& f1, const GridFn& f2, const GridFn& f3, const EquationSpec& spec);

// Same quantity by an O(p^2) loop over (x, y).
TValue t_value_brute(const GridFn& f1, const GridFn& f2, const GridFn& f3, const EquationSpec& spec,
                     std::uint64_t cap = kBruteTMaxP);

struct NormalizationConstant {
  std::uint64_t solutions = 0;  // #{(x,y,z)}
  double value = 0.0;           // solutions / p^2
};

NormalizationConstant normalization_constant(const FieldCtx& ctx, const EquationSpec& spec);

struct TBoundsReport {
  double abs_t = 0.0;
  double scales[3] = {1.0, 1.0, 1.0};  // factor applied to each input (<= 1)
  double norm_values[3] = {0.0, 0.0, 0.0};
  double norm_bound = 0.0;  // sqrt(alpha beta gamma) * min_i ||f_i||_{alpha,beta,gamma}
  double l2_bound = 0.0;    // sqrt(min exponent) * prod_i ||f_i||_2
  bool norm_bound_holds = false;
  bool l2_bound_holds = false;
};

inline constexpr double kBoundSlack = 1e-9;

// Inputs with ||f_i||_2 > 1 are rescaled to unit norm first; norms are exact.
TBoundsReport check_t_bounds(const GridFn& f1, const GridFn& f2, const GridFn& f3, const EquationSpec& spec);

}  // namespace fpreg
