#include "report.hpp"

namespace fpreg {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const NormReport& r) {
  return {{"value", r.value},
          {"witness", r.witness},
          {"mode", r.mode == NormModeKind::Exact ? "exact" : "sampled"}};
}

json to_json(const TValue& t) {
  return {{"value", to_json(t.value)},
          {"method", t.method == TMethod::Spectral ? "spectral" : "brute"},
          {"p", t.p},
          {"spec", t.spec.to_string()}};
}

json to_json(const TBoundsReport& r) {
  return {{"abs_t", r.abs_t},
          {"scales", {r.scales[0], r.scales[1], r.scales[2]}},
          {"norm_values", {r.norm_values[0], r.norm_values[1], r.norm_values[2]}},
          {"norm_bound", r.norm_bound},
          {"l2_bound", r.l2_bound},
          {"norm_bound_holds", r.norm_bound_holds},
          {"l2_bound_holds", r.l2_bound_holds}};
}

json to_json(const CensusReport& r) {
  return {{"p", r.p},
          {"spec", r.spec.to_string()},
          {"r", r.r},
          {"class_sizes", r.class_sizes},
          {"mono_counts", r.mono_counts},
          {"tensor", r.tensor},
          {"total_solutions", r.total_solutions},
          {"mono_total", r.mono_total},
          {"min_colour", r.min_colour},
          {"min_count", r.min_count},
          {"density", r.density},
          {"trivial_solutions", r.trivial_solutions},
          {"oracle_checked", r.oracle_checked},
          {"max_rounding_error", r.max_rounding_error}};
}

json to_json(const CounterexampleReport& r, bool include_members) {
  json out = {{"size", r.size}, {"ratio", r.ratio}, {"solutions", r.solutions}};
  if (include_members) out["members"] = r.members;
  return out;
}

json to_json(const ScanSummary& s) {
  json records = json::array();
  for (const auto& rec : s.records) records.push_back({{"colouring", rec.descriptor}, {"mono_total", rec.mono_total}});
  return {{"colourings_tested", s.colourings_tested},
          {"min_count", s.min_count},
          {"min_density", s.min_density},
          {"argmin", s.argmin},
          {"records", records}};
}

json to_json(const RegularityDecomposition& d) {
  json steps = json::array();
  for (const auto& s : d.steps) {
    steps.push_back({{"colour", s.colour},
                     {"residual_u3", s.residual_u3},
                     {"witness", {s.witness_a, s.witness_b}}});
  }
  return {{"R", d.R},
          {"delta", d.delta},
          {"dimension", d.system.dim()},
          {"coefficients", d.system.coeffs()},
          {"iterations", d.iterations()},
          {"iteration_cap", d.iteration_cap},
          {"converged", d.converged},
          {"energy", d.energy},
          {"residual_u3", d.residual_u3},
          {"steps", steps}};
}

json to_json(const GapReport& g) {
  return {{"empirical", to_json(g.empirical)},
          {"main_term", to_json(g.main_term)},
          {"gap", g.gap},
          {"trig_norm", g.trig_norm},
          {"scaled_gap", g.scaled_gap}};
}

json to_json(const Majorant& m) {
  return {{"terms", m.poly.size()},
          {"dimension", m.poly.dim()},
          {"fejer_order", m.fejer_order},
          {"factor_slack", m.factor_slack},
          {"trig_norm", m.trig_norm},
          {"grid_points_checked", m.grid_points_checked},
          {"poly", json::parse(m.poly.to_json())}};
}

json to_json(const RamseyConstants& c) {
  return {{"r", c.r},
          {"eps", rational_string(c.eps)},
          {"rho", rational_string(c.rho)},
          {"log2_eps", log2_rational(c.eps)},
          {"log2_rho", log2_rational(c.rho)}};
}

json to_json(const RamseySearchResult& r) {
  return {{"best_colour", r.best_colour},
          {"value", r.value},
          {"values", r.values},
          {"set_lambda", r.set_lambda},
          {"constants", to_json(r.constants)},
          {"meets_rho", r.meets_rho}};
}

json to_json(const DenseFiber& f) {
  std::vector<std::size_t> y_prime, exceptional;
  for (std::size_t y = 0; y < f.y_prime.size(); ++y) {
    if (f.y_prime[y]) y_prime.push_back(y);
    if (f.exceptional[y]) exceptional.push_back(y);
  }
  return {{"witness", f.witness},
          {"alpha", f.alpha},
          {"y_prime", y_prime},
          {"exceptional", exceptional},
          {"nu_y_prime", f.nu_y_prime},
          {"nu_e_in_y_prime", f.nu_e_in_y_prime}};
}

json to_json(const SchurReport& r) {
  return {{"N", r.N},
          {"r", r.r},
          {"tensor", r.tensor},
          {"mono_counts", r.mono_counts},
          {"mono_total", r.mono_total},
          {"total", r.total},
          {"min_colour", r.min_colour},
          {"min_count", r.min_count}};
}

json to_json(const Case3Result& r) {
  return {{"best_colour", r.best_colour}, {"value", r.value}, {"values", r.values}};
}

}  // namespace fpreg
