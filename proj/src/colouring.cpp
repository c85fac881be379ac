#include "colouring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "error.hpp"
#include "modular.hpp"
#include "parallel.hpp"
#include "spectral.hpp"

namespace fpreg {

Colouring::Colouring(std::uint64_t n, std::uint32_t colours, std::vector<std::uint32_t> assign, std::string desc)
    : size(n), r(colours), assignment(std::move(assign)), descriptor(std::move(desc)) {
  if (r < 1) throw Error(ErrorCode::BadGeneratorSpec, "a colouring needs r >= 1");
  if (assignment.size() != size) throw Error(ErrorCode::BadGeneratorSpec, "assignment length differs from size");
  for (auto c : assignment) {
    if (c > r) throw Error(ErrorCode::BadGeneratorSpec, "colour index " + std::to_string(c) + " exceeds r");
  }
}

bool Colouring::is_total() const {
  return std::none_of(assignment.begin(), assignment.end(), [](std::uint32_t c) { return c == kExcluded; });
}

double Colouring::excluded_fraction() const {
  const auto excluded = std::count(assignment.begin(), assignment.end(), kExcluded);
  return size == 0 ? 0.0 : static_cast<double>(excluded) / static_cast<double>(size);
}

std::vector<std::uint64_t> Colouring::class_sizes() const {
  std::vector<std::uint64_t> sizes(r, 0);
  for (auto c : assignment) {
    if (c != kExcluded) ++sizes[c - 1];
  }
  return sizes;
}

std::vector<std::uint8_t> Colouring::class_mask(std::uint32_t colour) const {
  std::vector<std::uint8_t> mask(size);
  for (std::uint64_t x = 0; x < size; ++x) mask[x] = assignment[x] == colour;
  return mask;
}

Colouring random_colouring(std::uint64_t size, std::uint32_t r, std::uint64_t seed) {
  if (r < 1) throw Error(ErrorCode::BadGeneratorSpec, "random colouring needs r >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> a(size);
  for (auto& c : a) c = static_cast<std::uint32_t>(rng() % r) + 1;
  return Colouring(size, r, std::move(a), "random(r=" + std::to_string(r) + ",seed=" + std::to_string(seed) + ")");
}

Colouring interval_colouring(std::uint64_t size, std::span<const std::uint64_t> boundaries) {
  if (boundaries.empty() || boundaries.front() != 0) {
    throw Error(ErrorCode::BadGeneratorSpec, "interval boundaries must start at 0");
  }
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (boundaries[i] <= boundaries[i - 1] || boundaries[i] >= size) {
      throw Error(ErrorCode::BadGeneratorSpec, "interval boundaries must be strictly increasing and < size");
    }
  }
  std::vector<std::uint32_t> a(size);
  std::uint32_t colour = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    while (colour < boundaries.size() && boundaries[colour] <= x) ++colour;
    a[x] = colour;
  }
  std::string desc = "intervals(";
  for (std::size_t i = 0; i < boundaries.size(); ++i) desc += (i ? "," : "") + std::to_string(boundaries[i]);
  return Colouring(size, static_cast<std::uint32_t>(boundaries.size()), std::move(a), desc + ")");
}

Colouring equal_interval_colouring(std::uint64_t size, std::uint32_t r) {
  if (r < 1 || r > size) throw Error(ErrorCode::BadGeneratorSpec, "equal intervals need 1 <= r <= size");
  std::vector<std::uint64_t> b(r);
  for (std::uint32_t i = 0; i < r; ++i) b[i] = (static_cast<std::uint64_t>(i) * size + r - 1) / r;
  return interval_colouring(size, b);
}

Colouring residue_colouring(std::uint64_t size, std::uint32_t r) {
  if (r < 1) throw Error(ErrorCode::BadGeneratorSpec, "residue colouring needs r >= 1");
  std::vector<std::uint32_t> a(size);
  for (std::uint64_t x = 0; x < size; ++x) a[x] = static_cast<std::uint32_t>(x % r) + 1;
  return Colouring(size, r, std::move(a), "residues(r=" + std::to_string(r) + ")");
}

Colouring power_coset_colouring(const FieldCtx& ctx, std::uint32_t r) {
  const std::uint64_t p = ctx.p();
  if (r < 1 || (p - 1) % r != 0) {
    throw Error(ErrorCode::BadGeneratorSpec, "power cosets need r | p-1");
  }
  std::vector<std::uint32_t> a(p, 1);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < p - 1; ++k) {
    a[x] = static_cast<std::uint32_t>(k % r) + 1;
    x = mul_mod(x, ctx.generator(), p);
  }
  return Colouring(p, r, std::move(a), "power_cosets(r=" + std::to_string(r) + ")");
}

Colouring parse_colouring(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](const std::string& why) { return Error(ErrorCode::FileFormat, "colouring file: " + why); };
  if (!std::getline(in, line)) throw fail("missing header");
  std::istringstream header(line);
  std::uint64_t size = 0;
  std::int64_t r = 0;
  std::string extra;
  if (!(header >> size >> r) || (header >> extra) || r < 1) throw fail("header must be 'p r' with r >= 1");
  std::vector<std::uint32_t> a;
  a.reserve(size);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::int64_t c = -1;
    if (!(row >> c) || (row >> extra) || c < 0 || c > r) throw fail("bad colour entry '" + line + "'");
    a.push_back(static_cast<std::uint32_t>(c));
  }
  if (a.size() != size) {
    throw fail("expected " + std::to_string(size) + " entries, found " + std::to_string(a.size()));
  }
  return Colouring(size, static_cast<std::uint32_t>(r), std::move(a), "file");
}

Colouring load_colouring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open colouring file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Colouring c = parse_colouring(buf.str());
  c.descriptor = "file(" + path + ")";
  return c;
}

std::string format_colouring(const Colouring& c) {
  std::string out = std::to_string(c.size) + " " + std::to_string(c.r) + "\n";
  for (auto v : c.assignment) out += std::to_string(v) + "\n";
  return out;
}

void save_colouring(const Colouring& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write colouring file " + path);
  out << format_colouring(c);
}

std::uint64_t trivial_solution_count(const FieldCtx& ctx, const EquationSpec& spec) {
  std::uint64_t count = 0;
  const std::uint64_t p = ctx.p();
  for (std::uint64_t x = 0; x < p; ++x) {
    if (add_mod(ctx.pow(x, spec.alpha), ctx.pow(x, spec.beta), p) == ctx.pow(x, spec.gamma)) ++count;
  }
  return count;
}

std::vector<std::uint64_t> census_tensor_brute(const FieldCtx& ctx, const Colouring& c, const EquationSpec& spec) {
  const std::uint64_t p = ctx.p();
  const std::uint32_t r = c.r;
  const auto xa = power_table(ctx, spec.alpha);
  const auto yb = power_table(ctx, spec.beta);
  // roots[w] lists every z with z^gamma = w, grouped by w
  std::vector<std::uint64_t> offset(p + 1, 0), roots(p);
  const auto zg = power_table(ctx, spec.gamma);
  for (auto w : zg) ++offset[w + 1];
  for (std::uint64_t w = 0; w < p; ++w) offset[w + 1] += offset[w];
  {
    auto fill = offset;
    for (std::uint64_t z = 0; z < p; ++z) roots[fill[zg[z]]++] = z;
  }
  std::vector<std::uint64_t> tensor(static_cast<std::size_t>(r) * r * r, 0);
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::size_t ci = c.assignment[x] - 1;
    for (std::uint64_t y = 0; y < p; ++y) {
      const std::size_t cj = c.assignment[y] - 1;
      const std::uint64_t w = add_mod(xa[x], yb[y], p);
      for (std::uint64_t k = offset[w]; k < offset[w + 1]; ++k) {
        ++tensor[(ci * r + cj) * r + (c.assignment[roots[k]] - 1)];
      }
    }
  }
  return tensor;
}

CensusReport census(const Field& ctx, const Colouring& c, const EquationSpec& spec, std::uint64_t oracle_cap) {
  spec.validate();
  const std::uint64_t p = ctx->p();
  if (c.size != p) throw Error(ErrorCode::ContextMismatch, "colouring size differs from p");
  if (!c.is_total()) throw Error(ErrorCode::PartialColouring, "census needs a total colouring");
  const std::uint32_t r = c.r;

  std::vector<Spectrum> s1, s2, s3;
  for (std::uint32_t colour = 1; colour <= r; ++colour) {
    const GridFn ind = GridFn::indicator(ctx, c.class_mask(colour));
    s1.push_back(dft(push_forward(ind, spec.alpha)));
    s2.push_back(dft(push_forward(ind, spec.beta)));
    s3.push_back(dft(push_forward(ind, spec.gamma)));
  }

  CensusReport rep;
  rep.p = p;
  rep.spec = spec;
  rep.r = r;
  rep.class_sizes = c.class_sizes();
  rep.tensor.assign(static_cast<std::size_t>(r) * r * r, 0);
  const double pp = static_cast<double>(p) * static_cast<double>(p);
  std::vector<cplx> terms(p);
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = 0; j < r; ++j) {
      for (std::uint32_t k = 0; k < r; ++k) {
        for (std::uint64_t xi = 0; xi < p; ++xi) {
          const std::uint64_t neg = (p - xi) % p;
          terms[xi] = s1[i][neg] * s2[j][neg] * s3[k][xi];
        }
        const double raw = pp * pairwise_sum(terms).real();
        const double rounded = std::round(raw);
        const double err = std::abs(raw - rounded);
        rep.max_rounding_error = std::max(rep.max_rounding_error, err);
        if (err > kCensusRoundingTolerance || rounded < 0) {
          throw Error(ErrorCode::NumericalHealth,
                      "spectral census count " + std::to_string(raw) + " is not within tolerance of an integer");
        }
        rep.tensor[(static_cast<std::size_t>(i) * r + j) * r + k] = static_cast<std::uint64_t>(rounded);
      }
    }
  }

  if (p <= oracle_cap) {
    if (census_tensor_brute(*ctx, c, spec) != rep.tensor) {
      throw Error(ErrorCode::NumericalHealth, "spectral census disagrees with integer enumeration");
    }
    rep.oracle_checked = true;
  }

  rep.mono_counts.resize(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    rep.mono_counts[i] = rep.tensor[(static_cast<std::size_t>(i) * r + i) * r + i];
    rep.mono_total += rep.mono_counts[i];
  }
  for (auto v : rep.tensor) rep.total_solutions += v;
  const auto it = std::min_element(rep.mono_counts.begin(), rep.mono_counts.end());
  rep.min_colour = static_cast<std::uint32_t>(it - rep.mono_counts.begin()) + 1;
  rep.min_count = *it;
  rep.density = static_cast<double>(rep.mono_total) / pp;
  rep.trivial_solutions = trivial_solution_count(*ctx, spec);
  return rep;
}

CounterexampleReport counterexample_set(const FieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  CounterexampleReport rep;
  std::vector<std::uint8_t> in_a(p, 0);
  for (std::uint64_t x = 0; 3 * x < p; ++x) {
    const std::uint64_t sq = mul_mod(x, x, p);
    if (3 * sq >= 2 * p) {
      in_a[x] = 1;
      rep.members.push_back(x);
    }
  }
  rep.size = rep.members.size();
  rep.ratio = static_cast<double>(rep.size) / static_cast<double>(p);
  for (auto z : rep.members) {
    const std::uint64_t w = mul_mod(z, z, p);
    for (auto x : rep.members) {
      if (in_a[sub_mod(w, x, p)]) ++rep.solutions;
    }
  }
  return rep;
}

ScanSummary min_census_scan(const Field& ctx, const EquationSpec& spec, std::uint32_t r, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t oracle_cap) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "scan needs at least one trial");
  const std::uint64_t p = ctx->p();
  std::vector<Colouring> colourings;
  for (std::uint64_t t = 0; t < trials; ++t) colourings.push_back(random_colouring(p, r, seed + t));
  if (r <= p) colourings.push_back(equal_interval_colouring(p, r));
  colourings.push_back(residue_colouring(p, r));
  if ((p - 1) % r == 0) colourings.push_back(power_coset_colouring(*ctx, r));

  std::vector<std::uint64_t> totals(colourings.size());
  parallel_for(colourings.size(), [&](std::size_t i) {
    totals[i] = census(ctx, colourings[i], spec, oracle_cap).mono_total;
  });

  ScanSummary summary;
  summary.colourings_tested = colourings.size();
  std::size_t best = 0;
  for (std::size_t i = 0; i < colourings.size(); ++i) {
    summary.records.push_back({colourings[i].descriptor, totals[i]});
    if (totals[i] < totals[best]) best = i;
  }
  summary.min_count = totals[best];
  summary.min_density = static_cast<double>(totals[best]) / (static_cast<double>(p) * static_cast<double>(p));
  summary.argmin = colourings[best].descriptor;
  return summary;
}

}  // namespace fpreg
