#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colouring.hpp"
#include "norms.hpp"
#include "spectral.hpp"

namespace fpreg {

// Psi(x) = (a_i x^e / p) for every exponent e and coefficient a_i. The torus
// coordinate for exponent slot k and coefficient i has index k*d + i, so a
// quadratic system (exponents {2, 1}) lays out (theta_1..theta_d, phi_1..phi_d).
class PolySystem {
 public:
  PolySystem(Field ctx, std::vector<std::uint64_t> exponents, std::vector<std::uint64_t> coeffs);

  static PolySystem quadratic(Field ctx, std::vector<std::uint64_t> coeffs) {
    return PolySystem(std::move(ctx), {2, 1}, std::move(coeffs));
  }

  const Field& field() const noexcept { return ctx_; }
  std::uint64_t p() const noexcept { return ctx_->p(); }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::size_t coord_count() const noexcept { return coeffs_.size() * exponents_.size(); }
  const std::vector<std::uint64_t>& exponents() const noexcept { return exponents_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_quadratic() const noexcept;

  // Integer numerators a_i x^e mod p of every coordinate.
  std::vector<std::uint64_t> numerators(std::uint64_t x) const;
  std::vector<double> point(std::uint64_t x) const;

  PolySystem extended(std::span<const std::uint64_t> extra) const;

 private:
  Field ctx_;
  std::vector<std::uint64_t> exponents_;
  std::vector<std::uint64_t> coeffs_;
};

PolySystem make_system(Field ctx, std::vector<std::uint64_t> exponents, std::vector<std::uint64_t> coeffs);

// xi in Lambda_Psi iff sum_i xi_i a_i = 0 mod p.
bool lattice_member(const PolySystem& sys, std::span<const std::int64_t> xi);
// xi . a mod p
std::uint64_t lattice_residue(const PolySystem& sys, std::span<const std::int64_t> xi);

// Sparse trigonometric polynomial on a torus of `dim` coordinates.
class TrigPoly {
 public:
  using Freq = std::vector<std::int64_t>;

  TrigPoly() = default;
  explicit TrigPoly(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const std::map<Freq, cplx>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Freq& freq, cplx coeff);
  cplx eval(std::span<const double> theta) const;

  // max(largest l1 norm of a frequency block of size block, sum |coeff|)
  double trig_norm(std::size_t block) const;

  // JSON array of [frequency, [re, im]] pairs.
  std::string to_json() const;
  static TrigPoly from_json(const std::string& text);
  static TrigPoly load(const std::string& path);

 private:
  std::size_t dim_ = 0;
  std::map<Freq, cplx> terms_;
};

// (F o Psi)(x), exact phases through the character table.
GridFn compose(const PolySystem& sys, const TrigPoly& f);

struct CellPartition {
  std::uint64_t R = 1;
  std::vector<std::uint32_t> cell_of;  // per x
  std::vector<std::uint64_t> cell_sizes;

  std::size_t cell_count() const noexcept { return cell_sizes.size(); }
};

// Cell index of a numerator k/p in R-resolution: floor(R k/p + 1/2) mod R.
std::uint64_t interval_index(std::uint64_t k, std::uint64_t p, std::uint64_t R);

CellPartition cell_partition(const PolySystem& sys, std::uint64_t R);

// Average of f over the cell containing x.
GridFn project(const PolySystem& sys, std::uint64_t R, const GridFn& f);
GridFn project(const CellPartition& cells, const GridFn& f);

struct DecompositionStep {
  std::uint32_t colour = 0;  // 1-based colour whose residual was largest
  double residual_u3 = 0.0;
  std::uint64_t witness_a = 0;
  std::uint64_t witness_b = 0;
};

struct RegularityDecomposition {
  explicit RegularityDecomposition(PolySystem s) : system(std::move(s)) {}

  PolySystem system;
  std::uint64_t R = 0;
  double delta = 0.0;
  std::vector<GridFn> g;              // projections of the colour indicators
  std::vector<double> residual_u3;    // final ||1_{A_i} - g_i||_{u3}
  std::vector<double> energy;         // E_j, one entry per stage
  std::vector<DecompositionStep> steps;
  std::uint64_t iteration_cap = 0;
  bool converged = false;

  std::size_t iterations() const noexcept { return steps.size(); }
};

struct DecomposeOptions {
  std::optional<std::uint64_t> R;
  std::uint64_t exact_cap = kExactU3MaxP;
  // Off only for exercising the iteration with coarse cells; the termination
  // guarantee then no longer applies.
  bool enforce_resolution = true;
};

std::uint64_t default_resolution(double delta);
std::uint64_t decomposition_iteration_cap(std::uint32_t r, double delta);

RegularityDecomposition decompose(const Field& ctx, const Colouring& c, double delta,
                                  const DecomposeOptions& options = {});

struct GapReport {
  cplx empirical;
  cplx main_term;
  double gap = 0.0;
  double trig_norm = 0.0;
  double scaled_gap = 0.0;  // gap * sqrt(p) / M (or / M^3 for counting)
};

GapReport equidistribution_gap(const PolySystem& sys, const TrigPoly& f);
GapReport counting_main_term(const PolySystem& sys, const TrigPoly& f);

// #{x : |Psi(x) - h| <= eps} in the max-of-torus-distances metric.
std::uint64_t image_density(const PolySystem& sys, std::span<const double> h, double eps);

double torus_distance(double a, double b);

struct Majorant {
  TrigPoly poly;
  std::uint64_t fejer_order = 0;
  double factor_slack = 0.0;  // per-coordinate bound delta_1
  double trig_norm = 0.0;
  std::size_t grid_points_checked = 0;
};

inline constexpr std::size_t kMaxMajorantTerms = 4'000'000;

// Product of Fejer-smoothed interval indicators: >= 1 on the cell, <= delta'
// off the eta-enlarged cell, within [0, 1 + delta'] everywhere. Verified on a
// grid of step <= eta/4 before returning.
Majorant build_majorant(std::uint64_t R, std::span<const std::uint32_t> cell, double delta_prime, double eta);

// Fixed deterministic family of (system, trig poly) pairs.
inline constexpr std::size_t kReferenceFamilySize = 20;
std::pair<PolySystem, TrigPoly> reference_family(const Field& ctx, std::size_t index);

}  // namespace fpreg
