#include "field.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"
#include "modular.hpp"

namespace fpreg {

FieldCtx::FieldCtx(std::uint64_t p) : p_(p), generator_(primitive_root(p)), chars_(p) {
  // Angles are reduced in long double; only the final value is rounded.
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::uint64_t k = 0; k < p; ++k) {
    const long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(p);
    chars_[k] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
  chars_[0] = {1.0, 0.0};
}

std::uint64_t FieldCtx::pow(std::uint64_t x, std::uint64_t k) const { return pow_mod(x, k, p_); }

Field make_field(std::uint64_t p) {
  if (p < 3) throw Error(ErrorCode::ModulusTooSmall, "modulus must be at least 3, got " + std::to_string(p));
  if (!is_prime(p)) throw Error(ErrorCode::CompositeModulus, std::to_string(p) + " is not prime");
  return Field(new FieldCtx(p));
}

RootCountTable root_counts(const FieldCtx& ctx, std::uint64_t delta) {
  if (delta == 0) throw Error(ErrorCode::InvalidArgument, "root_counts: delta must be >= 1");
  RootCountTable table{delta, std::vector<std::uint64_t>(ctx.p(), 0)};
  for (std::uint64_t x = 0; x < ctx.p(); ++x) ++table.counts[ctx.pow(x, delta)];
  return table;
}

std::vector<std::uint64_t> power_table(const FieldCtx& ctx, std::uint64_t k) {
  std::vector<std::uint64_t> out(ctx.p());
  for (std::uint64_t x = 0; x < ctx.p(); ++x) out[x] = ctx.pow(x, k);
  return out;
}

}  // namespace fpreg
