#pragma once

#include <cstdint>
#include <vector>

namespace fpreg {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Reduces a signed integer into {0..m-1}.
inline std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Smallest generator of the multiplicative group of F_p.
std::uint64_t primitive_root(std::uint64_t p);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace fpreg
