#include "solution_count.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "error.hpp"
#include "modular.hpp"
#include "norms.hpp"

namespace fpreg {

void EquationSpec::validate() const {
  if (alpha == 0 || beta == 0 || gamma == 0) {
    throw Error(ErrorCode::InvalidArgument, "equation exponents must be >= 1");
  }
}

std::string EquationSpec::to_string() const {
  return std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(gamma);
}

EquationSpec EquationSpec::parse(const std::string& text) {
  std::vector<std::uint64_t> parts;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "equation spec must look like a,b,c: '" + text + "'");
    }
    parts.push_back(std::stoull(item));
  }
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "equation spec needs three exponents: '" + text + "'");
  EquationSpec spec{parts[0], parts[1], parts[2]};
  spec.validate();
  return spec;
}

GridFn push_forward(const GridFn& f, std::uint64_t k) {
  const FieldCtx& ctx = *f.ctx;
  std::vector<cplx> g(ctx.p(), cplx{});
  for (std::uint64_t x = 0; x < ctx.p(); ++x) g[ctx.pow(x, k)] += f.values[x];
  return GridFn(f.ctx, std::move(g));
}

TValue t_value(const GridFn& f1, const GridFn& f2, const GridFn& f3, const EquationSpec& spec) {
  require_same_field(f1.ctx, f2.ctx);
  require_same_field(f1.ctx, f3.ctx);
  spec.validate();
  const std::uint64_t p = f1.p();
  const Spectrum g1 = dft(push_forward(f1, spec.alpha));
  const Spectrum g2 = dft(push_forward(f2, spec.beta));
  const Spectrum g3 = dft(push_forward(f3, spec.gamma));
  std::vector<cplx> terms(p);
  for (std::uint64_t xi = 0; xi < p; ++xi) {
    const std::uint64_t neg = (p - xi) % p;
    terms[xi] = g1[neg] * g2[neg] * g3[xi];
  }
  return {pairwise_sum(terms), TMethod::Spectral, p, spec};
}

TValue t_value_brute(const GridFn& f1, const GridFn& f2, const GridFn& f3, const EquationSpec& spec,
                     std::uint64_t cap) {
  require_same_field(f1.ctx, f2.ctx);
  require_same_field(f1.ctx, f3.ctx);
  spec.validate();
  const FieldCtx& ctx = *f1.ctx;
  const std::uint64_t p = ctx.p();
  if (p > cap) {
    throw Error(ErrorCode::CapExceeded, "brute-force T capped at p <= " + std::to_string(cap));
  }
  const auto xa = power_table(ctx, spec.alpha);
  const auto yb = power_table(ctx, spec.beta);
  // bucket[w] = sum of f3 over the gamma-th roots of w
  const GridFn bucket = push_forward(f3, spec.gamma);
  std::vector<cplx> rows(p), row(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < p; ++y) row[y] = f2.values[y] * bucket.values[add_mod(xa[x], yb[y], p)];
    rows[x] = f1.values[x] * pairwise_sum(row);
  }
  const double pp = static_cast<double>(p) * static_cast<double>(p);
  return {pairwise_sum(rows) / pp, TMethod::Brute, p, spec};
}

NormalizationConstant normalization_constant(const FieldCtx& ctx, const EquationSpec& spec) {
  spec.validate();
  const std::uint64_t p = ctx.p();
  const auto na = root_counts(ctx, spec.alpha).counts;
  const auto nb = root_counts(ctx, spec.beta).counts;
  const auto nc = root_counts(ctx, spec.gamma).counts;
  std::vector<std::uint64_t> support_b;
  for (std::uint64_t v = 0; v < p; ++v) {
    if (nb[v] != 0) support_b.push_back(v);
  }
  unsigned __int128 total = 0;
  for (std::uint64_t u = 0; u < p; ++u) {
    if (na[u] == 0) continue;
    std::uint64_t row = 0;
    for (auto v : support_b) row += nb[v] * nc[add_mod(u, v, p)];
    total += static_cast<unsigned __int128>(na[u]) * row;
  }
  NormalizationConstant out;
  out.solutions = static_cast<std::uint64_t>(total);
  out.value = static_cast<double>(out.solutions) / (static_cast<double>(p) * static_cast<double>(p));
  return out;
}

TBoundsReport check_t_bounds(const GridFn& f1, const GridFn& f2, const GridFn& f3, const EquationSpec& spec) {
  require_same_field(f1.ctx, f2.ctx);
  require_same_field(f1.ctx, f3.ctx);
  spec.validate();
  TBoundsReport report;
  GridFn fs[3] = {f1, f2, f3};
  double l2_product = 1.0;
  for (int i = 0; i < 3; ++i) {
    const double n = l2_norm(fs[i]);
    if (n > 1.0) {
      report.scales[i] = 1.0 / n;
      for (auto& v : fs[i].values) v *= report.scales[i];
    }
    l2_product *= std::min(n, 1.0);
  }
  report.abs_t = std::abs(t_value(fs[0], fs[1], fs[2], spec).value);
  double min_norm = 0.0;
  for (int i = 0; i < 3; ++i) {
    report.norm_values[i] = poly_norm(fs[i], spec.alpha, spec.beta, spec.gamma).value;
    min_norm = i == 0 ? report.norm_values[i] : std::min(min_norm, report.norm_values[i]);
  }
  const double abc = static_cast<double>(spec.alpha) * static_cast<double>(spec.beta) * static_cast<double>(spec.gamma);
  const double k = static_cast<double>(std::min({spec.alpha, spec.beta, spec.gamma}));
  report.norm_bound = std::sqrt(abc) * min_norm;
  report.l2_bound = std::sqrt(k) * l2_product;
  report.norm_bound_holds = report.abs_t <= report.norm_bound + kBoundSlack;
  report.l2_bound_holds = report.abs_t <= report.l2_bound + kBoundSlack;
  return report;
}

}  // namespace fpreg
