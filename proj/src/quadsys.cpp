#include "quadsys.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "modular.hpp"
#include "norms.hpp"

namespace fpreg {
namespace {

constexpr double kBoundarySlack = 1e-12;

}  // namespace

PolySystem::PolySystem(Field ctx, std::vector<std::uint64_t> exponents, std::vector<std::uint64_t> coeffs)
    : ctx_(std::move(ctx)), exponents_(std::move(exponents)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::EmptyCoefficients, "a system needs at least one coefficient");
  if (exponents_.empty()) throw Error(ErrorCode::InvalidArgument, "a system needs at least one exponent");
  for (auto e : exponents_) {
    if (e == 0) throw Error(ErrorCode::InvalidArgument, "system exponents must be >= 1");
  }
  for (auto& a : coeffs_) a %= ctx_->p();
}

bool PolySystem::is_quadratic() const noexcept {
  return exponents_.size() == 2 && exponents_[0] == 2 && exponents_[1] == 1;
}

std::vector<std::uint64_t> PolySystem::numerators(std::uint64_t x) const {
  const std::uint64_t p = ctx_->p();
  std::vector<std::uint64_t> out;
  out.reserve(coord_count());
  for (auto e : exponents_) {
    const std::uint64_t xe = pow_mod(x, e, p);
    for (auto a : coeffs_) out.push_back(mul_mod(a, xe, p));
  }
  return out;
}

std::vector<double> PolySystem::point(std::uint64_t x) const {
  const auto nums = numerators(x);
  std::vector<double> out(nums.size());
  for (std::size_t i = 0; i < nums.size(); ++i) out[i] = static_cast<double>(nums[i]) / static_cast<double>(p());
  return out;
}

PolySystem PolySystem::extended(std::span<const std::uint64_t> extra) const {
  auto c = coeffs_;
  c.insert(c.end(), extra.begin(), extra.end());
  return PolySystem(ctx_, exponents_, std::move(c));
}

PolySystem make_system(Field ctx, std::vector<std::uint64_t> exponents, std::vector<std::uint64_t> coeffs) {
  return PolySystem(std::move(ctx), std::move(exponents), std::move(coeffs));
}

std::uint64_t lattice_residue(const PolySystem& sys, std::span<const std::int64_t> xi) {
  if (xi.size() != sys.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "frequency has length " + std::to_string(xi.size()) + ", system has d = " + std::to_string(sys.dim()));
  }
  const std::uint64_t p = sys.p();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < xi.size(); ++i) acc = add_mod(acc, mul_mod(reduce_signed(xi[i], p), sys.coeffs()[i], p), p);
  return acc;
}

bool lattice_member(const PolySystem& sys, std::span<const std::int64_t> xi) { return lattice_residue(sys, xi) == 0; }

// ---- TrigPoly ----

void TrigPoly::add_term(const Freq& freq, cplx coeff) {
  if (freq.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "frequency length differs from trig poly dimension");
  }
  terms_[freq] += coeff;
}

cplx TrigPoly::eval(std::span<const double> theta) const {
  if (theta.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong dimension");
  const double two_pi = 2.0 * std::numbers::pi;
  cplx acc{};
  for (const auto& [freq, c] : terms_) {
    double phase = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) phase += static_cast<double>(freq[i]) * theta[i];
    phase -= std::floor(phase);
    acc += c * std::polar(1.0, two_pi * phase);
  }
  return acc;
}

double TrigPoly::trig_norm(std::size_t block) const {
  double coeff_sum = 0.0, max_l1 = 0.0;
  for (const auto& [freq, c] : terms_) {
    coeff_sum += std::abs(c);
    for (std::size_t start = 0; start < dim_; start += block) {
      double l1 = 0.0;
      for (std::size_t i = start; i < std::min(dim_, start + block); ++i) l1 += std::abs(static_cast<double>(freq[i]));
      max_l1 = std::max(max_l1, l1);
    }
  }
  return std::max(max_l1, coeff_sum);
}

std::string TrigPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [freq, c] : terms_) out.push_back({freq, {c.real(), c.imag()}});
  return out.dump();
}

TrigPoly TrigPoly::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::FileFormat, std::string("trig poly JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::FileFormat, "trig poly JSON must be an array of [freq, [re, im]]");
  TrigPoly poly;
  bool first = true;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || !entry[1].is_array() ||
        entry[1].size() != 2) {
      throw Error(ErrorCode::FileFormat, "trig poly entry must be [freq, [re, im]]");
    }
    Freq freq;
    for (const auto& v : entry[0]) {
      if (!v.is_number_integer()) throw Error(ErrorCode::FileFormat, "frequencies must be integers");
      freq.push_back(v.get<std::int64_t>());
    }
    if (!entry[1][0].is_number() || !entry[1][1].is_number()) {
      throw Error(ErrorCode::FileFormat, "coefficients must be numbers");
    }
    if (first) {
      poly.dim_ = freq.size();
      first = false;
    } else if (freq.size() != poly.dim_) {
      throw Error(ErrorCode::FileFormat, "all frequencies must have the same length");
    }
    poly.terms_[freq] += cplx(entry[1][0].get<double>(), entry[1][1].get<double>());
  }
  return poly;
}

TrigPoly TrigPoly::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open trig poly file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

namespace {

void require_poly_fits(const PolySystem& sys, const TrigPoly& f) {
  if (f.size() != 0 && f.dim() != sys.coord_count()) {
    throw Error(ErrorCode::DimensionMismatch, "trig poly has " + std::to_string(f.dim()) +
                                                  " coordinates, system has " + std::to_string(sys.coord_count()));
  }
}

// Per exponent slot, xi_block . a mod p.
std::vector<std::uint64_t> block_residues(const PolySystem& sys, const TrigPoly::Freq& freq) {
  const std::size_t d = sys.dim();
  std::vector<std::uint64_t> out(sys.exponents().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = lattice_residue(sys, std::span<const std::int64_t>(freq).subspan(k * d, d));
  }
  return out;
}

}  // namespace

GridFn compose(const PolySystem& sys, const TrigPoly& f) {
  require_poly_fits(sys, f);
  const FieldCtx& ctx = *sys.field();
  const std::uint64_t p = ctx.p();
  std::vector<std::vector<std::uint64_t>> powers;
  for (auto e : sys.exponents()) powers.push_back(power_table(ctx, e));
  std::vector<cplx> values(p, cplx{});
  for (const auto& [freq, c] : f.terms()) {
    const auto res = block_residues(sys, freq);
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t phase = 0;
      for (std::size_t k = 0; k < res.size(); ++k) phase = add_mod(phase, mul_mod(res[k], powers[k][x], p), p);
      values[x] += c * ctx.e(phase);
    }
  }
  return GridFn(sys.field(), std::move(values));
}

// ---- cells and projection ----

std::uint64_t interval_index(std::uint64_t k, std::uint64_t p, std::uint64_t R) {
  const unsigned __int128 num = static_cast<unsigned __int128>(2) * k * R + p;
  return static_cast<std::uint64_t>(num / (static_cast<unsigned __int128>(2) * p)) % R;
}

CellPartition cell_partition(const PolySystem& sys, std::uint64_t R) {
  if (R < 1) throw Error(ErrorCode::InvalidArgument, "resolution R must be >= 1");
  const std::uint64_t p = sys.p();
  CellPartition cells;
  cells.R = R;
  std::vector<std::uint32_t> id(p, 0);
  std::uint32_t count = 1;
  std::vector<std::vector<std::uint64_t>> powers;
  for (auto e : sys.exponents()) powers.push_back(power_table(*sys.field(), e));
  // Refine one coordinate at a time; ids follow first appearance in x order.
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint32_t> relabel;
  for (std::size_t k = 0; k < powers.size(); ++k) {
    for (auto a : sys.coeffs()) {
      if (count == p) break;
      relabel.clear();
      for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t t = interval_index(mul_mod(a, powers[k][x], p), p, R);
        auto [it, inserted] = relabel.try_emplace({id[x], t}, static_cast<std::uint32_t>(relabel.size()));
        id[x] = it->second;
      }
      count = static_cast<std::uint32_t>(relabel.size());
    }
  }
  // canonical ids by first appearance
  std::vector<std::int64_t> canon(p, -1);
  std::uint32_t next = 0;
  cells.cell_of.resize(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    if (canon[id[x]] < 0) canon[id[x]] = next++;
    cells.cell_of[x] = static_cast<std::uint32_t>(canon[id[x]]);
  }
  cells.cell_sizes.assign(next, 0);
  for (auto c : cells.cell_of) ++cells.cell_sizes[c];
  return cells;
}

GridFn project(const CellPartition& cells, const GridFn& f) {
  if (cells.cell_of.size() != f.p()) throw Error(ErrorCode::DimensionMismatch, "partition and function sizes differ");
  std::vector<cplx> sums(cells.cell_count(), cplx{});
  for (std::size_t x = 0; x < f.values.size(); ++x) sums[cells.cell_of[x]] += f.values[x];
  for (std::size_t c = 0; c < sums.size(); ++c) sums[c] /= static_cast<double>(cells.cell_sizes[c]);
  std::vector<cplx> out(f.p());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = sums[cells.cell_of[x]];
  return GridFn(f.ctx, std::move(out));
}

GridFn project(const PolySystem& sys, std::uint64_t R, const GridFn& f) {
  require_same_field(sys.field(), f.ctx);
  return project(cell_partition(sys, R), f);
}

// ---- energy increment ----

std::uint64_t default_resolution(double delta) {
  return static_cast<std::uint64_t>(std::ceil(16.0 * std::numbers::pi / delta)) + 1;
}

std::uint64_t decomposition_iteration_cap(std::uint32_t r, double delta) {
  return static_cast<std::uint64_t>(std::floor(4.0 * r / (delta * delta))) + 1;
}

RegularityDecomposition decompose(const Field& ctx, const Colouring& c, double delta, const DecomposeOptions& options) {
  if (!(delta > 0.0 && delta <= 1.0)) throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1]");
  if (c.size != ctx->p()) throw Error(ErrorCode::ContextMismatch, "colouring size differs from p");
  if (!c.is_total()) throw Error(ErrorCode::PartialColouring, "decompose needs a total colouring");
  if (ctx->p() > options.exact_cap) {
    throw Error(ErrorCode::ExactCapExceeded, "decompose needs exact u3 norms; p exceeds cap " +
                                                 std::to_string(options.exact_cap));
  }
  const std::uint64_t R = options.R.value_or(default_resolution(delta));
  if (options.enforce_resolution && !(static_cast<double>(R) > 16.0 * std::numbers::pi / delta)) {
    throw Error(ErrorCode::ResolutionTooSmall, "R = " + std::to_string(R) + " must exceed 16 pi / delta");
  }

  std::vector<GridFn> indicators;
  for (std::uint32_t colour = 1; colour <= c.r; ++colour) {
    indicators.push_back(GridFn::indicator(ctx, c.class_mask(colour)));
  }

  RegularityDecomposition out(PolySystem::quadratic(ctx, {1}));
  out.R = R;
  out.delta = delta;
  out.iteration_cap = decomposition_iteration_cap(c.r, delta);

  while (true) {
    const CellPartition cells = cell_partition(out.system, R);
    out.g.clear();
    out.residual_u3.clear();
    double energy = 0.0;
    std::vector<NormReport> residual_norms;
    for (const auto& f : indicators) {
      GridFn g = project(cells, f);
      energy += l2_norm_sq(g);
      GridFn residual = f;
      for (std::size_t x = 0; x < residual.values.size(); ++x) residual.values[x] -= g.values[x];
      residual_norms.push_back(u3_norm(residual, NormMode::exact(), options.exact_cap));
      out.residual_u3.push_back(residual_norms.back().value);
      out.g.push_back(std::move(g));
    }
    out.energy.push_back(energy);

    std::size_t worst = 0;
    for (std::size_t i = 1; i < residual_norms.size(); ++i) {
      if (residual_norms[i].value > residual_norms[worst].value) worst = i;
    }
    if (residual_norms[worst].value <= delta) {
      out.converged = true;
      break;
    }
    if (out.steps.size() >= out.iteration_cap) break;

    const auto& w = residual_norms[worst].witness;
    out.steps.push_back({static_cast<std::uint32_t>(worst + 1), residual_norms[worst].value, w[0], w[1]});
    const std::uint64_t extra[] = {w[0], w[1]};
    out.system = out.system.extended(extra);
  }
  return out;
}

// ---- counting ----

GapReport equidistribution_gap(const PolySystem& sys, const TrigPoly& f) {
  require_poly_fits(sys, f);
  const GridFn composed = compose(sys, f);
  GapReport rep;
  rep.empirical = pairwise_sum(composed.values) / static_cast<double>(sys.p());
  for (const auto& [freq, c] : f.terms()) {
    const auto res = block_residues(sys, freq);
    if (std::all_of(res.begin(), res.end(), [](std::uint64_t v) { return v == 0; })) rep.main_term += c;
  }
  rep.gap = std::abs(rep.empirical - rep.main_term);
  rep.trig_norm = f.trig_norm(sys.dim());
  rep.scaled_gap = rep.trig_norm > 0 ? rep.gap * std::sqrt(static_cast<double>(sys.p())) / rep.trig_norm : 0.0;
  return rep;
}

GapReport counting_main_term(const PolySystem& sys, const TrigPoly& f) {
  if (!sys.is_quadratic()) {
    throw Error(ErrorCode::UnsupportedExponents, "counting main term is implemented for quadratic systems only");
  }
  require_poly_fits(sys, f);
  const std::uint64_t p = sys.p();
  struct Term {
    std::uint64_t quad, lin;
    cplx c;
  };
  std::vector<Term> terms;
  for (const auto& [freq, c] : f.terms()) {
    const auto res = block_residues(sys, freq);
    terms.push_back({res[0], res[1], c});
  }
  GapReport rep;
  // (xi1, xi2), (xi3, xi4), (xi5, xi6): xi1, xi3, xi6 in Lambda and
  // xi2 + xi5, xi4 + xi5 in Lambda.
  for (const auto& t1 : terms) {
    if (t1.quad != 0) continue;
    for (const auto& t2 : terms) {
      if (t2.quad != 0) continue;
      for (const auto& t3 : terms) {
        if (t3.lin != 0) continue;
        if (add_mod(t1.lin, t3.quad, p) != 0 || add_mod(t2.lin, t3.quad, p) != 0) continue;
        rep.main_term += t1.c * t2.c * t3.c;
      }
    }
  }
  const GridFn composed = compose(sys, f);
  rep.empirical = t_value(composed, composed, composed, EquationSpec{1, 1, 2}).value;
  rep.gap = std::abs(rep.empirical - rep.main_term);
  rep.trig_norm = f.trig_norm(sys.dim());
  const double m3 = rep.trig_norm * rep.trig_norm * rep.trig_norm;
  rep.scaled_gap = m3 > 0 ? rep.gap * std::sqrt(static_cast<double>(p)) / m3 : 0.0;
  return rep;
}

double torus_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 1.0);
  return std::min(d, 1.0 - d);
}

std::uint64_t image_density(const PolySystem& sys, std::span<const double> h, double eps) {
  if (h.size() != sys.coord_count()) throw Error(ErrorCode::DimensionMismatch, "target point has wrong dimension");
  if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 1]");
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < sys.p(); ++x) {
    const auto pt = sys.point(x);
    bool close = true;
    for (std::size_t i = 0; i < pt.size() && close; ++i) close = torus_distance(pt[i], h[i]) <= eps + kBoundarySlack;
    if (close) ++count;
  }
  return count;
}

// ---- majorants ----

namespace {

// Fourier coefficients (k = -n..n) of the Fejer-smoothed indicator of an arc
// of half-width w centred at 0.
std::vector<double> smoothed_arc(std::uint64_t n, double w) {
  std::vector<double> c(2 * n + 1);
  const double pi = std::numbers::pi;
  for (std::int64_t k = -static_cast<std::int64_t>(n); k <= static_cast<std::int64_t>(n); ++k) {
    const double fejer = 1.0 - std::abs(static_cast<double>(k)) / static_cast<double>(n + 1);
    const double arc = k == 0 ? 2.0 * w : std::sin(2.0 * pi * k * w) / (pi * k);
    c[k + n] = fejer * arc;
  }
  return c;
}

// Fejer kernel mass outside [-s, s].
double fejer_tail(std::uint64_t n, double s) {
  const double pi = std::numbers::pi;
  double inside = 2.0 * s;
  for (std::uint64_t k = 1; k <= n; ++k) {
    inside += 2.0 * (1.0 - static_cast<double>(k) / static_cast<double>(n + 1)) * std::sin(2.0 * pi * k * s) / (pi * k);
  }
  return 1.0 - inside;
}

double eval_centered(const std::vector<double>& c, std::uint64_t n, double theta) {
  // coefficients are real and even, so the sum is a cosine series
  double acc = c[n];
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::uint64_t k = 1; k <= n; ++k) acc += 2.0 * c[n + k] * std::cos(two_pi * k * theta);
  return acc;
}

}  // namespace

Majorant build_majorant(std::uint64_t R, std::span<const std::uint32_t> cell, double delta_prime, double eta) {
  if (R < 1) throw Error(ErrorCode::InvalidArgument, "R must be >= 1");
  if (cell.empty()) throw Error(ErrorCode::DimensionMismatch, "cell must have at least one coordinate");
  if (!(delta_prime > 0.0 && delta_prime < 1.0)) throw Error(ErrorCode::InvalidArgument, "delta' must lie in (0, 1)");
  if (!(eta > 0.0 && eta < 1.0 / (2.0 * static_cast<double>(R)))) {
    throw Error(ErrorCode::InvalidArgument, "eta must lie in (0, 1/(2R))");
  }
  for (auto t : cell) {
    if (t >= R) throw Error(ErrorCode::InvalidArgument, "cell indices must lie in {0..R-1}");
  }
  const std::size_t dims = cell.size();
  Majorant out;
  out.poly = TrigPoly(dims);
  if (R == 1) {
    out.poly.add_term(TrigPoly::Freq(dims, 0), 1.0);
    out.trig_norm = 1.0;
    return out;
  }

  const double Rd = static_cast<double>(R);
  const double half_cell = 1.0 / (2.0 * Rd);
  const double w = half_cell + eta / 2.0;
  const double s = eta / 2.0;
  // (1 + d1)^dims = 1 + delta' bounds the product everywhere, and
  // d1 (1 + d1)^(dims-1) <= delta' bounds it off the enlarged cell.
  const double d1 = std::pow(1.0 + delta_prime, 1.0 / static_cast<double>(dims)) - 1.0;
  out.factor_slack = d1;
  auto acceptable = [&](std::uint64_t n) {
    const double tau = fejer_tail(n, s);
    return tau < 1.0 && tau / (1.0 - tau) <= d1;
  };
  std::uint64_t hi = 1;
  while (!acceptable(hi)) {
    hi *= 2;
    if (hi > (1u << 20)) throw Error(ErrorCode::ConstructionFailed, "Fejer order search did not converge");
  }
  std::uint64_t lo = hi / 2;
  while (lo + 1 < hi) {
    const std::uint64_t mid = (lo + hi) / 2;
    (acceptable(mid) ? hi : lo) = mid;
  }

  const double step = eta / 4.0;
  const std::size_t grid = static_cast<std::size_t>(std::ceil(1.0 / step));
  for (std::uint64_t n = hi; n <= (1u << 20); n *= 2) {
    const double tau = fejer_tail(n, s);
    const double scale = 1.0 / (1.0 - tau);
    auto base = smoothed_arc(n, w);
    for (auto& v : base) v *= scale;

    // 1-D checks on the centred factor; the others are translates by t/R.
    // Grid plus the exact arc endpoints.
    std::vector<double> samples;
    for (std::size_t i = 0; i <= grid; ++i) samples.push_back(-0.5 + static_cast<double>(i) / static_cast<double>(grid));
    for (double edge : {half_cell, half_cell + eta}) {
      samples.push_back(edge);
      samples.push_back(-edge);
    }
    bool ok = true;
    for (double theta : samples) {
      const double v = eval_centered(base, n, theta);
      const double dist = std::abs(theta);
      if (v < -kBoundarySlack || v > 1.0 + d1 + kBoundarySlack) ok = false;
      if (dist <= half_cell && v < 1.0 - kBoundarySlack) ok = false;
      if (dist >= half_cell + eta && v > d1 + kBoundarySlack) ok = false;
      if (!ok) break;
    }
    if (!ok) continue;

    const std::size_t width = 2 * n + 1;
    double terms = 1.0;
    for (std::size_t i = 0; i < dims; ++i) terms *= static_cast<double>(width);
    if (terms > static_cast<double>(kMaxMajorantTerms)) {
      throw Error(ErrorCode::ConstructionFailed,
                  "majorant would need " + std::to_string(static_cast<long double>(terms)) + " terms");
    }

    // Materialise the product, shifting coordinate i to centre cell[i]/R.
    TrigPoly poly(dims);
    TrigPoly::Freq freq(dims, -static_cast<std::int64_t>(n));
    const double two_pi = 2.0 * std::numbers::pi;
    while (true) {
      cplx c = 1.0;
      for (std::size_t i = 0; i < dims; ++i) {
        const double phase = -two_pi * static_cast<double>(freq[i]) * static_cast<double>(cell[i]) / Rd;
        c *= base[static_cast<std::size_t>(freq[i] + static_cast<std::int64_t>(n))] * std::polar(1.0, phase);
      }
      poly.add_term(freq, c);
      std::size_t i = dims;
      while (i-- > 0) {
        if (++freq[i] <= static_cast<std::int64_t>(n)) break;
        freq[i] = -static_cast<std::int64_t>(n);
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }

    // Product-grid verification of the materialised polynomial at sampled
    // points against the three inequalities.
    std::mt19937_64 rng(0x6d616a6f72616e74ull);
    std::size_t checked = 0;
    const std::size_t probes = 96;
    std::vector<double> theta(dims);
    for (std::size_t probe = 0; probe < probes && ok; ++probe) {
      double max_dist = 0.0;
      bool inside = true;
      for (std::size_t i = 0; i < dims; ++i) {
        // bias half of the probes into the cell
        const double centre = static_cast<double>(cell[i]) / Rd;
        const double offset = probe % 2 == 0 ? (static_cast<double>(rng() % grid) / grid - 0.5)
                                             : (static_cast<double>(rng() % grid) / grid - 0.5) * 2.0 * half_cell;
        theta[i] = centre + offset;
        theta[i] -= std::floor(theta[i]);
        const double dist = torus_distance(theta[i], centre);
        max_dist = std::max(max_dist, dist);
        inside = inside && dist <= half_cell;
      }
      const cplx v = poly.eval(theta);
      ++checked;
      if (std::abs(v.imag()) > 1e-9 || v.real() < -1e-9 || v.real() > 1.0 + delta_prime + 1e-9) ok = false;
      if (inside && v.real() < 1.0 - 1e-9) ok = false;
      if (max_dist >= half_cell + eta && v.real() > delta_prime + 1e-9) ok = false;
    }
    if (!ok) continue;
    out.poly = std::move(poly);
    out.fejer_order = n;
    out.trig_norm = out.poly.trig_norm(dims);
    out.grid_points_checked = samples.size() + checked;
    return out;
  }
  throw Error(ErrorCode::ConstructionFailed, "majorant failed grid verification up to the degree cap");
}

// ---- reference family ----

std::pair<PolySystem, TrigPoly> reference_family(const Field& ctx, std::size_t index) {
  if (index >= kReferenceFamilySize) throw Error(ErrorCode::InvalidArgument, "reference family index out of range");
  const std::uint64_t p = ctx->p();
  std::mt19937_64 rng(0x5eed0000ull + index);
  const std::size_t d = 1 + index % 3;
  std::vector<std::uint64_t> a(d);
  for (auto& v : a) v = 1 + rng() % (p - 1);
  // Plant a linear relation a_d = 2 a_1 in part of the family so that
  // nontrivial lattice frequencies occur.
  if (d >= 2 && index % 2 == 0) a[d - 1] = mul_mod(2, a[0], p);
  PolySystem sys = PolySystem::quadratic(ctx, a);

  TrigPoly f(2 * d);
  const std::size_t terms = 3 + index % 4;
  auto small = [&] { return static_cast<std::int64_t>(rng() % 5) - 2; };
  auto coeff = [&] {
    const double re = static_cast<double>(rng() % 2001) / 1000.0 - 1.0;
    const double im = static_cast<double>(rng() % 2001) / 1000.0 - 1.0;
    return cplx(re, im) / 4.0;
  };
  f.add_term(TrigPoly::Freq(2 * d, 0), coeff());
  for (std::size_t t = 0; t < terms; ++t) {
    TrigPoly::Freq freq(2 * d);
    for (auto& v : freq) v = small();
    f.add_term(freq, coeff());
  }
  if (d >= 2 && index % 2 == 0) {
    // 2 e_1 - e_d lies in the lattice for both blocks
    TrigPoly::Freq freq(2 * d, 0);
    freq[0] = 2;
    freq[d - 1] = -1;
    f.add_term(freq, coeff());
  }
  return {sys, f};
}

}  // namespace fpreg
