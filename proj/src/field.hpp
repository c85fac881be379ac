#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace fpreg {

// Prime field F_p with a precomputed additive character table.
// Immutable after construction; share it through Field.
class FieldCtx {
 public:
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t generator() const noexcept { return generator_; }

  // e_p(k) = exp(2 pi i k / p), k reduced mod p.
  const std::complex<double>& e(std::uint64_t k) const noexcept { return chars_[k % p_]; }
  const std::vector<std::complex<double>>& char_table() const noexcept { return chars_; }

  std::uint64_t pow(std::uint64_t x, std::uint64_t k) const;

 private:
  friend std::shared_ptr<const FieldCtx> make_field(std::uint64_t p);
  explicit FieldCtx(std::uint64_t p);

  std::uint64_t p_;
  std::uint64_t generator_;
  std::vector<std::complex<double>> chars_;
};

using Field = std::shared_ptr<const FieldCtx>;

// Throws ModulusTooSmall for p < 3 and CompositeModulus for composite p.
Field make_field(std::uint64_t p);

// N_delta(w) = #{x in F_p : x^delta = w}.
struct RootCountTable {
  std::uint64_t delta = 1;
  std::vector<std::uint64_t> counts;
};

RootCountTable root_counts(const FieldCtx& ctx, std::uint64_t delta);

// x -> x^k mod p for all x, as a lookup table.
std::vector<std::uint64_t> power_table(const FieldCtx& ctx, std::uint64_t k);

}  // namespace fpreg
