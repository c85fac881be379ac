#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpreg/fpreg.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Failure {
  fpreg_status status;
  std::string message;
};

void check(fpreg_status s) {
  if (s != FPREG_OK) throw Failure{s, fpreg_last_error()};
}

void config_error(const std::string& msg) { throw Failure{FPREG_INVALID_ARGUMENT, msg}; }

int exit_code_for(fpreg_status s) {
  switch (s) {
    case FPREG_NUMERICAL_HEALTH:
    case FPREG_CONSTRUCTION_FAILED:
    case FPREG_NO_WITNESS:
    case FPREG_INTERNAL:
      return kExitNumerical;
    default:
      return kExitConfig;
  }
}

json take_json(char* text) {
  json out = json::parse(text);
  fpreg_string_free(text);
  return out;
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using FieldPtr = std::unique_ptr<fpreg_field, Deleter<fpreg_field, fpreg_field_destroy>>;
using ColouringPtr = std::unique_ptr<fpreg_colouring, Deleter<fpreg_colouring, fpreg_colouring_destroy>>;
using SystemPtr = std::unique_ptr<fpreg_system, Deleter<fpreg_system, fpreg_system_destroy>>;
using TrigPolyPtr = std::unique_ptr<fpreg_trigpoly, Deleter<fpreg_trigpoly, fpreg_trigpoly_destroy>>;
using DecompositionPtr =
    std::unique_ptr<fpreg_decomposition, Deleter<fpreg_decomposition, fpreg_decomposition_destroy>>;

struct Config {
  std::string command;
  std::uint64_t p = 101;
  std::uint64_t N = 32;
  std::string spec = "1,1,2";
  std::uint32_t r = 2;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10;
  std::string input = "ones";
  std::string colouring = "random";
  std::string colouring_file;
  std::string mode = "auto";
  std::uint64_t budget = 20000;
  double delta = 0.3;
  std::uint64_t R = 0;
  std::uint64_t exact_cap = 0;
  bool no_enforce_resolution = false;
  std::string trigpoly;
  std::string system = "1";
  std::optional<std::uint64_t> family;
  double eta = 0.2;
  double density = 0.3;
  int threads = 0;
  std::string format = "json";
  std::string output;

  json echo() const {
    json c = {{"seed", seed}, {"threads", fpreg_threads()}, {"format", format}};
    if (command == "count" || command == "norms") {
      c.update({{"p", p}, {"spec", spec}, {"input", input}});
      if (command == "norms") c.update({{"mode", mode}, {"budget", budget}});
    } else if (command == "gauss" || command == "counterexample") {
      c["p"] = p;
    } else if (command == "census") {
      c.update({{"p", p}, {"spec", spec}, {"r", r}, {"colouring", colouring}});
      if (colouring == "file") c["colouring_file"] = colouring_file;
    } else if (command == "scan") {
      c.update({{"p", p}, {"spec", spec}, {"r", r}, {"trials", trials}});
    } else if (command == "decompose") {
      c.update({{"p", p}, {"r", r}, {"delta", delta}, {"R", R}, {"colouring", colouring},
                {"exact_cap", exact_cap}, {"enforce_resolution", !no_enforce_resolution}});
      if (colouring == "file") c["colouring_file"] = colouring_file;
    } else if (command == "equidist") {
      c["p"] = p;
      if (!trigpoly.empty()) {
        c.update({{"trigpoly", trigpoly}, {"system", system}});
      } else if (family) {
        c["family"] = *family;
      }
    } else if (command == "ramsey") {
      c.update({{"N", N}, {"r", r}, {"trials", trials}});
    } else if (command == "schur") {
      c.update({{"N", N}, {"r", r}, {"trials", trials}, {"colouring", colouring}});
    } else if (command == "fiber") {
      c.update({{"N", N}, {"eta", eta}, {"density", density}});
    }
    return c;
  }
};

struct Outcome {
  json results;
  json oracle = {{"checked", false}};
  bool numerically_healthy = true;
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      config_error("expected a comma-separated list of nonnegative integers, got '" + text + "'");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) config_error("empty list");
  return out;
}

FieldPtr open_field(std::uint64_t p) {
  fpreg_field* f = nullptr;
  check(fpreg_field_create(p, &f));
  return FieldPtr(f);
}

fpreg_spec parse_spec(const std::string& text) {
  fpreg_spec s{};
  check(fpreg_spec_parse(text.c_str(), &s));
  return s;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<fpreg_complex> make_input(const Config& cfg, const fpreg_field* field) {
  const std::uint64_t p = fpreg_field_p(field);
  std::vector<fpreg_complex> f(p, fpreg_complex{0.0, 0.0});
  if (cfg.input == "ones") {
    for (auto& z : f) z.re = 1.0;
  } else if (cfg.input == "random") {
    std::mt19937_64 rng(cfg.seed);
    for (auto& z : f) z = {2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0};
  } else if (cfg.input == "counterexample") {
    char* text = nullptr;
    check(fpreg_counterexample_json(field, 1, &text));
    const json rep = take_json(text);
    for (std::uint64_t x : rep["members"]) f[x].re = 1.0;
  } else {
    config_error("unknown input '" + cfg.input + "' (ones|random|counterexample)");
  }
  return f;
}

ColouringPtr make_colouring(const Config& cfg, const fpreg_field* field, std::uint64_t size, std::uint64_t seed) {
  fpreg_colouring* c = nullptr;
  if (cfg.colouring == "random") {
    check(fpreg_colouring_random(size, cfg.r, seed, &c));
  } else if (cfg.colouring == "intervals") {
    check(fpreg_colouring_equal_intervals(size, cfg.r, &c));
  } else if (cfg.colouring == "residues") {
    check(fpreg_colouring_residues(size, cfg.r, &c));
  } else if (cfg.colouring == "power_cosets") {
    if (field == nullptr) config_error("power_cosets needs a prime field");
    check(fpreg_colouring_power_cosets(field, cfg.r, &c));
  } else if (cfg.colouring == "file") {
    if (cfg.colouring_file.empty()) config_error("--colouring file needs --colouring-file PATH");
    check(fpreg_colouring_load(cfg.colouring_file.c_str(), &c));
    if (fpreg_colouring_size(c) != size) {
      fpreg_colouring_destroy(c);
      config_error("colouring file size does not match the modulus");
    }
  } else {
    config_error("unknown colouring '" + cfg.colouring + "' (random|intervals|residues|power_cosets|file)");
  }
  return ColouringPtr(c);
}

fpreg_norm norm_with_mode(const Config& cfg, bool& sampled_fallback,
                          const std::function<fpreg_status(int, fpreg_norm*)>& call) {
  fpreg_norm out{};
  const int sampled = cfg.mode == "sampled";
  fpreg_status s = call(sampled, &out);
  if (s == FPREG_EXACT_CAP_EXCEEDED && cfg.mode == "auto") {
    sampled_fallback = true;
    s = call(1, &out);
  }
  check(s);
  return out;
}

json norm_json(const fpreg_norm& n) {
  return {{"value", n.value},
          {"witness", std::vector<std::uint64_t>(n.witness, n.witness + n.witness_len)},
          {"mode", n.sampled ? "sampled" : "exact"}};
}

Outcome run_count(const Config& cfg) {
  const auto field = open_field(cfg.p);
  const fpreg_spec spec = parse_spec(cfg.spec);
  const auto f = make_input(cfg, field.get());
  Outcome o;
  fpreg_complex t{};
  check(fpreg_t_value(field.get(), spec, f.data(), f.data(), f.data(), &t));
  std::uint64_t solutions = 0;
  double normalization = 0.0;
  check(fpreg_normalization(field.get(), spec, &solutions, &normalization));
  o.results = {{"T", {t.re, t.im}}, {"solutions", solutions}, {"normalization", normalization}};
  fpreg_complex brute{};
  const fpreg_status s = fpreg_t_value_brute(field.get(), spec, f.data(), f.data(), f.data(), &brute);
  if (s == FPREG_OK) {
    const double err = std::hypot(t.re - brute.re, t.im - brute.im);
    o.oracle = {{"checked", true}, {"passed", err <= 1e-9}, {"method", "brute"}, {"max_error", err}};
    o.numerically_healthy = err <= 1e-9;
  } else if (s != FPREG_CAP_EXCEEDED) {
    check(s);
  }
  return o;
}

Outcome run_norms(const Config& cfg) {
  if (cfg.mode != "auto" && cfg.mode != "exact" && cfg.mode != "sampled") {
    config_error("--mode must be auto, exact or sampled");
  }
  const auto field = open_field(cfg.p);
  const fpreg_spec spec = parse_spec(cfg.spec);
  const auto f = make_input(cfg, field.get());
  Outcome o;
  fpreg_norm u2{};
  check(fpreg_u2_norm(field.get(), f.data(), &u2));
  bool fallback_u3 = false, fallback_poly = false;
  const auto u3 = norm_with_mode(cfg, fallback_u3, [&](int sampled, fpreg_norm* out) {
    return fpreg_u3_norm(field.get(), f.data(), sampled, cfg.budget, cfg.seed, 0, out);
  });
  const auto poly = norm_with_mode(cfg, fallback_poly, [&](int sampled, fpreg_norm* out) {
    return fpreg_poly_norm(field.get(), f.data(), spec, sampled, cfg.budget, cfg.seed, out);
  });
  o.results = {{"u2", norm_json(u2)}, {"u3", norm_json(u3)}, {"poly", norm_json(poly)}};
  // u2 <= u3 holds for exact values
  if (!u3.sampled) {
    const bool ok = u2.value <= u3.value + 1e-12;
    o.oracle = {{"checked", true}, {"passed", ok}, {"method", "u2 <= u3"}};
    o.numerically_healthy = ok;
  }
  return o;
}

Outcome run_gauss(const Config& cfg) {
  const auto field = open_field(cfg.p);
  const double target = 1.0 / std::sqrt(static_cast<double>(cfg.p));
  double max_dev = 0.0, lo = INFINITY, hi = 0.0;
  for (std::uint64_t a = 1; a < cfg.p; ++a) {
    for (std::uint64_t b = 0; b < cfg.p; ++b) {
      const std::uint64_t coeffs[] = {0, b, a};
      fpreg_complex z{};
      check(fpreg_weyl_sum(field.get(), coeffs, 3, &z));
      const double m = std::hypot(z.re, z.im);
      max_dev = std::max(max_dev, std::abs(m - target));
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  Outcome o;
  o.results = {{"pairs", (cfg.p - 1) * cfg.p}, {"target", target}, {"min_abs", lo}, {"max_abs", hi},
               {"max_deviation", max_dev}};
  o.oracle = {{"checked", true}, {"passed", max_dev <= 1e-10}, {"method", "closed form p^{-1/2}"}};
  o.numerically_healthy = max_dev <= 1e-10;
  return o;
}

Outcome run_census(const Config& cfg) {
  const auto field = open_field(cfg.p);
  const auto c = make_colouring(cfg, field.get(), cfg.p, cfg.seed);
  char* text = nullptr;
  check(fpreg_census_json(field.get(), c.get(), parse_spec(cfg.spec), 2000, &text));
  Outcome o;
  o.results = take_json(text);
  o.results["colouring"] = fpreg_colouring_descriptor(c.get());
  if (o.results["oracle_checked"].get<bool>()) {
    o.oracle = {{"checked", true}, {"passed", true}, {"method", "integer enumeration"}};
  }
  return o;
}

Outcome run_scan(const Config& cfg) {
  const auto field = open_field(cfg.p);
  char* text = nullptr;
  check(fpreg_scan_json(field.get(), parse_spec(cfg.spec), cfg.r, cfg.trials, cfg.seed, &text));
  Outcome o;
  o.results = take_json(text);
  o.oracle = {{"checked", cfg.p <= 2000}, {"passed", cfg.p <= 2000}, {"method", "integer enumeration"}};
  return o;
}

Outcome run_counterexample(const Config& cfg) {
  const auto field = open_field(cfg.p);
  char* text = nullptr;
  check(fpreg_counterexample_json(field.get(), 0, &text));
  Outcome o;
  o.results = take_json(text);
  return o;
}

Outcome run_decompose(const Config& cfg) {
  const auto field = open_field(cfg.p);
  const auto c = make_colouring(cfg, field.get(), cfg.p, cfg.seed);
  fpreg_decomposition* raw = nullptr;
  check(fpreg_decompose(field.get(), c.get(), cfg.delta, cfg.R, cfg.exact_cap, !cfg.no_enforce_resolution, &raw));
  const DecompositionPtr d(raw);
  char* text = nullptr;
  check(fpreg_decomposition_json(d.get(), &text));
  Outcome o;
  o.results = take_json(text);
  o.results["colouring"] = fpreg_colouring_descriptor(c.get());
  return o;
}

json gap_pair(const fpreg_system* sys, const fpreg_trigpoly* poly) {
  char* text = nullptr;
  check(fpreg_equidistribution_json(sys, poly, &text));
  json out = {{"equidistribution", take_json(text)}};
  const fpreg_status s = fpreg_counting_json(sys, poly, &text);
  if (s == FPREG_OK) {
    out["counting"] = take_json(text);
  } else if (s != FPREG_UNSUPPORTED_EXPONENTS) {
    check(s);
  }
  return out;
}

Outcome run_equidist(const Config& cfg) {
  const auto field = open_field(cfg.p);
  Outcome o;
  if (!cfg.trigpoly.empty()) {
    fpreg_trigpoly* poly = nullptr;
    check(fpreg_trigpoly_load(cfg.trigpoly.c_str(), &poly));
    const TrigPolyPtr f(poly);
    const auto coeffs = parse_list(cfg.system);
    const std::uint64_t exps[] = {2, 1};
    fpreg_system* sys = nullptr;
    check(fpreg_system_create(field.get(), exps, 2, coeffs.data(), coeffs.size(), &sys));
    const SystemPtr s(sys);
    o.results = gap_pair(s.get(), f.get());
    return o;
  }
  json records = json::array();
  const std::size_t count = fpreg_reference_family_size();
  for (std::size_t k = 0; k < count; ++k) {
    if (cfg.family && *cfg.family != k) continue;
    fpreg_system* sys = nullptr;
    fpreg_trigpoly* poly = nullptr;
    check(fpreg_reference_family(field.get(), k, &sys, &poly));
    const SystemPtr s(sys);
    const TrigPolyPtr f(poly);
    json rec = gap_pair(s.get(), f.get());
    rec["index"] = k;
    rec["dimension"] = fpreg_system_dim(s.get());
    records.push_back(rec);
  }
  if (records.empty()) config_error("--family index out of range");
  o.results = {{"records", records}};
  return o;
}

Outcome run_ramsey(const Config& cfg) {
  char* text = nullptr;
  check(fpreg_ramsey_constants_json(cfg.r, &text));
  Outcome o;
  o.results["constants"] = take_json(text);
  std::vector<double> values(static_cast<std::size_t>(cfg.r) * cfg.N * cfg.N);
  json records = json::array();
  bool all = true;
  double min_value = INFINITY;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    check(fpreg_random_cover(cfg.N, cfg.r, 2, cfg.seed + t, values.data()));
    check(fpreg_ramsey_search_json(cfg.N, cfg.r, values.data(), &text));
    const json res = take_json(text);
    const bool meets = res["meets_rho"].get<bool>();
    all = all && meets;
    min_value = std::min(min_value, res["value"].get<double>());
    records.push_back({{"trial", t}, {"seed", cfg.seed + t}, {"best_colour", res["best_colour"]},
                       {"value", res["value"]}, {"meets_rho", meets}});
  }
  o.results["records"] = records;
  o.results["all_meet_rho"] = all;
  if (cfg.trials > 0) o.results["min_value"] = min_value;
  return o;
}

Outcome run_schur(const Config& cfg) {
  json records = json::array();
  std::uint64_t min_total = UINT64_MAX;
  bool totals_ok = true;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const auto c = make_colouring(cfg, nullptr, cfg.N, cfg.seed + t);
    char* text = nullptr;
    check(fpreg_schur_json(c.get(), &text));
    const json res = take_json(text);
    const std::uint64_t mono = res["mono_total"];
    min_total = std::min(min_total, mono);
    totals_ok = totals_ok && res["total"].get<std::uint64_t>() == cfg.N * cfg.N;
    records.push_back({{"trial", t}, {"colouring", fpreg_colouring_descriptor(c.get())}, {"mono_total", mono},
                       {"mono_counts", res["mono_counts"]}});
  }
  Outcome o;
  o.results = {{"records", records}, {"totals_identity", totals_ok}};
  if (cfg.trials > 0) o.results["min_mono_total"] = min_total;
  o.numerically_healthy = totals_ok;
  return o;
}

Outcome run_fiber(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::uint8_t> A(cfg.N * cfg.N);
  for (auto& a : A) a = unit(rng) < cfg.density;
  char* text = nullptr;
  check(fpreg_dense_fiber_json(cfg.N, cfg.N, A.data(), cfg.eta, &text));
  Outcome o;
  o.results = take_json(text);
  const double alpha = o.results["alpha"], nu = o.results["nu_y_prime"], bad = o.results["nu_e_in_y_prime"];
  const bool ok = nu >= alpha / 2.0 - 1e-12 && bad <= cfg.eta * nu + 1e-12;
  o.oracle = {{"checked", true}, {"passed", ok}, {"method", "direct check of both fiber inequalities"}};
  o.numerically_healthy = ok;
  return o;
}

Outcome run_selftest(const Config& cfg) {
  char* text = nullptr;
  check(fpreg_selftest_json(cfg.seed, &text));
  Outcome o;
  o.results = take_json(text);
  const bool ok = o.results["passed"];
  o.oracle = {{"checked", true}, {"passed", ok}, {"method", "oracle-agreement suite"}};
  o.numerically_healthy = ok;
  return o;
}

Outcome dispatch(const Config& cfg) {
  if (cfg.command == "count") return run_count(cfg);
  if (cfg.command == "norms") return run_norms(cfg);
  if (cfg.command == "gauss") return run_gauss(cfg);
  if (cfg.command == "census") return run_census(cfg);
  if (cfg.command == "scan") return run_scan(cfg);
  if (cfg.command == "counterexample") return run_counterexample(cfg);
  if (cfg.command == "decompose") return run_decompose(cfg);
  if (cfg.command == "equidist") return run_equidist(cfg);
  if (cfg.command == "ramsey") return run_ramsey(cfg);
  if (cfg.command == "schur") return run_schur(cfg);
  if (cfg.command == "fiber") return run_fiber(cfg);
  return run_selftest(cfg);
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  return s;
}

// Records become rows; anything else is flattened into key,value pairs.
std::string to_csv(const json& report) {
  std::ostringstream out;
  const json& results = report["results"];
  if (results.contains("records") && !results["records"].empty()) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : results["records"][0].items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << '\n';
    for (const auto& rec : results["records"]) {
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_cell(rec.value(keys[i], json()));
      out << '\n';
    }
    return out.str();
  }
  out << "key,value\n";
  const json flat = report.flatten();
  for (const auto& [k, v] : flat.items()) out << csv_cell(k) << ',' << csv_cell(v) << '\n';
  return out.str();
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Failure{FPREG_IO, "cannot write " + cfg.output};
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-analytic experiments on x^a + y^b = z^c over prime fields"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--threads", cfg.threads, "worker threads (default $FPREG_THREADS or 1)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
  };
  auto prime = [&](CLI::App* sub) { sub->add_option("--p", cfg.p, "prime modulus"); };
  auto spec = [&](CLI::App* sub) { sub->add_option("--spec", cfg.spec, "exponents alpha,beta,gamma"); };
  auto colours = [&](CLI::App* sub) { sub->add_option("--r", cfg.r, "number of colours")->check(CLI::PositiveNumber); };
  auto colouring = [&](CLI::App* sub) {
    sub->add_option("--colouring", cfg.colouring, "random|intervals|residues|power_cosets|file");
    sub->add_option("--colouring-file", cfg.colouring_file, "read the colouring from a file (implies --colouring file)")
        ->each([&](const std::string&) { cfg.colouring = "file"; });
  };
  auto group = [&](CLI::App* sub) {
    sub->add_option("--N,--group-order", cfg.N, "cyclic group order")->check(CLI::PositiveNumber);
  };
  auto trials = [&](CLI::App* sub) { sub->add_option("--trials", cfg.trials, "number of seeded trials"); };

  auto* count = app.add_subcommand("count", "solution-count functional T on one input");
  prime(count), spec(count);
  count->add_option("--input", cfg.input, "ones|random|counterexample");

  auto* norms = app.add_subcommand("norms", "u2, u3 and exponent-triple norms");
  prime(norms), spec(norms);
  norms->add_option("--input", cfg.input, "ones|random|counterexample");
  norms->add_option("--mode", cfg.mode, "auto|exact|sampled");
  norms->add_option("--budget", cfg.budget, "phase tuples in sampled mode");

  auto* gauss = app.add_subcommand("gauss", "exhaustive quadratic Gauss sum moduli");
  prime(gauss);

  auto* census = app.add_subcommand("census", "monochromatic solution census of one colouring");
  prime(census), spec(census), colours(census), colouring(census);

  auto* scan = app.add_subcommand("scan", "minimum census over random and structured colourings");
  prime(scan), spec(scan), colours(scan), trials(scan);

  auto* counterexample = app.add_subcommand("counterexample", "solution-free set for x + y = z^2");
  prime(counterexample);

  auto* decompose = app.add_subcommand("decompose", "energy-increment regularity decomposition");
  prime(decompose), colours(decompose), colouring(decompose);
  decompose->add_option("--delta", cfg.delta, "target residual u3 norm");
  decompose->add_option("--R", cfg.R, "cell resolution (default ceil(16 pi/delta) + 1)");
  decompose->add_option("--exact-cap", cfg.exact_cap, "largest p for exact u3 (default 1000)");
  decompose->add_flag("--no-enforce-resolution", cfg.no_enforce_resolution, "allow R <= 16 pi/delta");

  auto* equidist = app.add_subcommand("equidist", "equidistribution and counting main terms");
  prime(equidist);
  equidist->add_option("--trigpoly", cfg.trigpoly, "trig poly JSON file");
  equidist->add_option("--system", cfg.system, "quadratic system coefficients a1,a2,...");
  equidist->add_option("--family", cfg.family, "single reference family index");

  auto* ramsey = app.add_subcommand("ramsey", "Ramsey search on random covers of Z_N x Z_N");
  group(ramsey), colours(ramsey), trials(ramsey);

  auto* schur = app.add_subcommand("schur", "Schur triple census on Z_N");
  group(schur), colours(schur), trials(schur), colouring(schur);

  auto* fiber = app.add_subcommand("fiber", "dense fiber search on a random relation");
  group(fiber);
  fiber->add_option("--eta", cfg.eta, "exceptional-set parameter");
  fiber->add_option("--density", cfg.density, "relation density");

  auto* selftest = app.add_subcommand("selftest", "oracle-agreement suite");

  for (auto* sub : {count, norms, gauss, census, scan, counterexample, decompose, equidist, ramsey, schur, fiber,
                    selftest}) {
    common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.threads > 0) fpreg_set_threads(cfg.threads);

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = dispatch(cfg);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const json report = {{"tool", "fpreg"},
                         {"version", fpreg_version()},
                         {"command", cfg.command},
                         {"config", cfg.echo()},
                         {"results", o.results},
                         {"oracle", o.oracle},
                         {"timing_ms", ms}};
    write_output(cfg, cfg.format == "csv" ? to_csv(report) : report.dump(2) + "\n");
    return o.numerically_healthy ? kExitOk : kExitNumerical;
  } catch (const Failure& f) {
    std::cerr << "fpreg " << cfg.command << ": " << fpreg_status_name(f.status) << ": " << f.message << '\n';
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "fpreg " << cfg.command << ": " << e.what() << '\n';
    return kExitNumerical;
  }
}
