#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"
#include "solution_count.hpp"

namespace fpreg {

inline constexpr std::uint32_t kExcluded = 0;

// Colour assignment on {0..size-1} (F_p or Z_N). Colours are 1..r;
// kExcluded marks elements outside a partial colouring.
struct Colouring {
  std::uint64_t size = 0;
  std::uint32_t r = 1;
  std::vector<std::uint32_t> assignment;
  std::string descriptor;

  Colouring() = default;
  Colouring(std::uint64_t n, std::uint32_t colours, std::vector<std::uint32_t> assign, std::string desc = "explicit");

  bool is_total() const;
  double excluded_fraction() const;
  std::vector<std::uint64_t> class_sizes() const;  // index c-1 for colour c
  std::vector<std::uint8_t> class_mask(std::uint32_t colour) const;
};

Colouring random_colouring(std::uint64_t size, std::uint32_t r, std::uint64_t seed);
// Colour i+1 on [boundaries[i], boundaries[i+1]); boundaries start at 0.
Colouring interval_colouring(std::uint64_t size, std::span<const std::uint64_t> boundaries);
// r near-equal consecutive intervals.
Colouring equal_interval_colouring(std::uint64_t size, std::uint32_t r);
// Colour (x mod r) + 1.
Colouring residue_colouring(std::uint64_t size, std::uint32_t r);
// x != 0 coloured by its coset in F_p^* / (F_p^*)^r; 0 gets colour 1. Needs r | p-1.
Colouring power_coset_colouring(const FieldCtx& ctx, std::uint32_t r);

// Text format: first line "size r", then one colour per line for x = 0..size-1
// (1-based, 0 = excluded).
Colouring load_colouring(const std::string& path);
void save_colouring(const Colouring& c, const std::string& path);
Colouring parse_colouring(const std::string& text);
std::string format_colouring(const Colouring& c);

struct CensusReport {
  std::uint64_t p = 0;
  EquationSpec spec;
  std::uint32_t r = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> mono_counts;  // per colour, ordered triples
  std::vector<std::uint64_t> tensor;       // r^3, index ((i*r)+j)*r+k for colours of (x, y, z)
  std::uint64_t total_solutions = 0;
  std::uint64_t mono_total = 0;
  std::uint32_t min_colour = 1;
  std::uint64_t min_count = 0;
  double density = 0.0;                    // mono_total / p^2
  std::uint64_t trivial_solutions = 0;     // x = y = z solutions
  bool oracle_checked = false;
  double max_rounding_error = 0.0;
};

inline constexpr double kCensusRoundingTolerance = 1e-3;
inline constexpr std::uint64_t kCensusOracleMaxP = 2000;

// Spectral census; cross-checked against integer enumeration when p <= oracle_cap.
CensusReport census(const Field& ctx, const Colouring& c, const EquationSpec& spec,
                    std::uint64_t oracle_cap = kCensusOracleMaxP);

// Integer enumeration of the full colour tensor.
std::vector<std::uint64_t> census_tensor_brute(const FieldCtx& ctx, const Colouring& c, const EquationSpec& spec);

// #{x : x^alpha + x^beta = x^gamma}
std::uint64_t trivial_solution_count(const FieldCtx& ctx, const EquationSpec& spec);

struct CounterexampleReport {
  std::vector<std::uint64_t> members;
  std::uint64_t size = 0;
  double ratio = 0.0;
  std::uint64_t solutions = 0;  // ordered (x, y, z) in A^3 with x + y = z^2
};

// A = {0 <= x < p/3 : 2p/3 <= x^2 mod p < p}, compared exactly in integers.
CounterexampleReport counterexample_set(const FieldCtx& ctx);

struct ScanRecord {
  std::string descriptor;
  std::uint64_t mono_total = 0;
};

struct ScanSummary {
  std::uint64_t colourings_tested = 0;
  std::uint64_t min_count = 0;
  double min_density = 0.0;
  std::string argmin;
  std::vector<ScanRecord> records;
};

// Census over `trials` seeded random colourings plus the structured generators.
ScanSummary min_census_scan(const Field& ctx, const EquationSpec& spec, std::uint32_t r, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t oracle_cap = kCensusOracleMaxP);

}  // namespace fpreg
