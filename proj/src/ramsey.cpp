#include "ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "error.hpp"

namespace fpreg {
namespace {

using boost::multiprecision::cpp_int;

constexpr std::uint64_t kMaxGroupOrder = 1u << 16;
constexpr double kValueRelativeSlack = 1e-12;

cpp_int to_cpp_int(unsigned __int128 v) {
  cpp_int hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

std::uint64_t checked_order(std::uint64_t N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "group order must be >= 1");
  if (N > kMaxGroupOrder) throw Error(ErrorCode::CapExceeded, "group order above " + std::to_string(kMaxGroupOrder));
  return N;
}

struct Base {
  std::vector<std::uint64_t> elems;
};

Base check_sets(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  checked_order(N);
  if (A.size() != N * N) throw Error(ErrorCode::DimensionMismatch, "A must be a mask over Z_N x Z_N");
  if (T.size() != N) throw Error(ErrorCode::DimensionMismatch, "T must be a mask over Z_N");
  Base b;
  for (std::uint64_t t = 0; t < N; ++t) {
    if (T[t]) b.elems.push_back(t);
  }
  if (b.elems.empty()) throw Error(ErrorCode::EmptyBase, "base set T is empty");
  return b;
}

// r(s) = #{(t1, t2) in T^2 : t1 + t2 = s}
std::vector<std::uint64_t> sum_representations(std::uint64_t N, const Base& b) {
  std::vector<std::uint64_t> r(N, 0);
  for (auto t1 : b.elems) {
    for (auto t2 : b.elems) ++r[(t1 + t2) % N];
  }
  return r;
}

struct Counted {
  unsigned __int128 num;
  unsigned __int128 den;
};

Counted delta_count(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  const Base b = check_sets(N, A, T);
  const auto r = sum_representations(N, b);
  unsigned __int128 num = 0;
  for (std::uint64_t s = 0; s < N; ++s) {
    if (r[s] == 0) continue;
    for (auto u : b.elems) {
      if (A[s * N + u]) num += r[s];
    }
  }
  const unsigned __int128 k = b.elems.size();
  return {num, k * k * k};
}

Counted lambda_count(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  const Base b = check_sets(N, A, T);
  const auto r = sum_representations(N, b);
  // a(u) = #{(t1, t6) : (t1+t6, u) in A}, b(v) = #{t5 : (v, t5) in A}
  std::vector<std::uint64_t> a(N, 0), bv(N, 0);
  for (std::uint64_t s = 0; s < N; ++s) {
    for (auto u : b.elems) {
      if (A[s * N + u]) {
        a[u] += r[s];
        ++bv[s];
      }
    }
  }
  unsigned __int128 num = 0;
  for (auto t2 : b.elems) {
    if (a[t2] == 0) continue;
    for (auto t4 : b.elems) {
      num += static_cast<unsigned __int128>(a[t2]) * a[t4] * bv[(t2 + t4) % N];
    }
  }
  unsigned __int128 den = 1;
  for (int i = 0; i < 7; ++i) den *= b.elems.size();
  return {num, den};
}

Rational to_rational(const Counted& c) { return Rational(to_cpp_int(c.num), to_cpp_int(c.den)); }

double to_double(const Counted& c) {
  return static_cast<double>(static_cast<long double>(c.num) / static_cast<long double>(c.den));
}

void check_coverage(std::span<const GroupFn> F, unsigned arity) {
  if (F.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one function");
  const std::uint64_t N = F[0].N;
  checked_order(N);
  for (const auto& f : F) {
    if (f.arity != arity || f.N != N) {
      throw Error(ErrorCode::DimensionMismatch, "all functions must live on the same Z_N^" + std::to_string(arity));
    }
    for (double v : f.values) {
      if (!(v >= 0.0)) throw Error(ErrorCode::InvalidArgument, "functions must be nonnegative");
    }
  }
  for (std::size_t i = 0; i < F[0].values.size(); ++i) {
    double sum = 0.0;
    for (const auto& f : F) sum += f.values[i];
    if (sum < 1.0 - kCoverageTolerance) {
      throw Error(ErrorCode::CoverageViolated, "pointwise sum " + std::to_string(sum) + " < 1 at index " +
                                                   std::to_string(i));
    }
  }
}

}  // namespace

GroupFn::GroupFn(std::uint64_t n, unsigned k, std::vector<double> v) : N(n), arity(k), values(std::move(v)) {
  if (k < 1 || k > 3) throw Error(ErrorCode::InvalidArgument, "arity must be 1, 2 or 3");
  checked_order(n);
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) size *= n;
  if (values.size() != size) throw Error(ErrorCode::DimensionMismatch, "GroupFn needs N^arity values");
}

GroupFn GroupFn::constant(std::uint64_t n, unsigned k, double c) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) size *= n;
  return GroupFn(n, k, std::vector<double>(size, c));
}

std::size_t GroupFn::index(std::span<const std::uint64_t> g) const {
  if (g.size() != arity) throw Error(ErrorCode::DimensionMismatch, "index has wrong arity");
  std::size_t idx = 0;
  for (auto v : g) idx = idx * N + v % N;
  return idx;
}

RamseyConstants ramsey_constants(std::uint32_t r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be >= 1");
  cpp_int fact = 1;
  for (std::uint32_t i = 2; i <= r; ++i) fact *= i;
  const cpp_int two_pow = cpp_int(1) << (7 * r);
  RamseyConstants c;
  c.r = r;
  c.eps = Rational(cpp_int(1), two_pow * fact * fact * fact);
  const cpp_int r3 = cpp_int(r) * r * r;
  c.rho = c.eps * c.eps * c.eps / Rational(r3);
  return c;
}

double log2_rational(const Rational& q) {
  if (q <= 0) throw Error(ErrorCode::InvalidArgument, "log2 of a non-positive rational");
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  auto lg = [](const cpp_int& v) {
    const std::size_t bits = boost::multiprecision::msb(v);
    const std::size_t shift = bits > 60 ? bits - 60 : 0;
    return std::log2(static_cast<double>(static_cast<std::uint64_t>(v >> shift))) + static_cast<double>(shift);
  };
  return lg(num) - lg(den);
}

std::string rational_string(const Rational& q) { return q.str(); }

Rational delta_T_exact(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  return to_rational(delta_count(N, A, T));
}

Rational lambda_T_exact(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  return to_rational(lambda_count(N, A, T));
}

double delta_T(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  return to_double(delta_count(N, A, T));
}

double lambda_T(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  return to_double(lambda_count(N, A, T));
}

double delta_T_brute(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  if (N > kBruteDeltaMaxN) throw Error(ErrorCode::CapExceeded, "brute delta_T is limited to N <= 32");
  const Base b = check_sets(N, A, T);
  std::uint64_t hits = 0;
  for (auto t1 : b.elems)
    for (auto t2 : b.elems)
      for (auto t : b.elems) hits += A[((t1 + t2) % N) * N + t];
  const double k = static_cast<double>(b.elems.size());
  return static_cast<double>(hits) / (k * k * k);
}

double lambda_T_brute(std::uint64_t N, std::span<const std::uint8_t> A, std::span<const std::uint8_t> T) {
  if (N > kBruteLambdaMaxN) throw Error(ErrorCode::CapExceeded, "brute Lambda_T is limited to N <= 8");
  const Base b = check_sets(N, A, T);
  const auto& e = b.elems;
  auto in = [&](std::uint64_t s, std::uint64_t u) { return A[(s % N) * N + u] != 0; };
  std::uint64_t hits = 0;
  for (auto t1 : e)
    for (auto t2 : e)
      for (auto t3 : e)
        for (auto t4 : e)
          for (auto t5 : e)
            for (auto t6 : e)
              for (auto t7 : e) hits += in(t1 + t6, t2) && in(t3 + t7, t4) && in(t2 + t4, t5);
  return static_cast<double>(hits) / std::pow(static_cast<double>(e.size()), 7);
}

bool value_at_least(double value, const Rational& bound) {
  if (!std::isfinite(value)) return false;
  double lo = value - std::abs(value) * kValueRelativeSlack;
  lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
  return Rational(lo) >= bound;
}

namespace {

// E_{u,u'} A(u) A(u') B(u+u') with A(u) = E_t f(t,u), B(v) = E_w f(v,w).
double ramsey_integral(const GroupFn& f) {
  const std::uint64_t N = f.N;
  const double n = static_cast<double>(N);
  std::vector<double> A(N, 0.0), B(N, 0.0);
  for (std::uint64_t t = 0; t < N; ++t) {
    for (std::uint64_t u = 0; u < N; ++u) {
      A[u] += f.at(t, u);
      B[t] += f.at(t, u);
    }
  }
  for (auto& v : A) v /= n;
  for (auto& v : B) v /= n;
  double acc = 0.0;
  for (std::uint64_t v = 0; v < N; ++v) {
    double conv = 0.0;
    for (std::uint64_t u = 0; u < N; ++u) conv += A[u] * A[(v + N - u) % N];
    acc += conv / n * B[v];
  }
  return acc / n;
}

GroupFn clamped(const GroupFn& f) {
  GroupFn out = f;
  for (auto& v : out.values) v = std::min(v, 1.0);
  return out;
}

}  // namespace

double ramsey_integral_brute(const GroupFn& f) {
  if (f.arity != 2) throw Error(ErrorCode::DimensionMismatch, "ramsey integral needs a function on Z_N^2");
  const std::uint64_t N = f.N;
  double acc = 0.0;
  for (std::uint64_t t = 0; t < N; ++t)
    for (std::uint64_t u = 0; u < N; ++u) {
      const double x = f.at(t, u);
      if (x == 0.0) continue;
      for (std::uint64_t t2 = 0; t2 < N; ++t2)
        for (std::uint64_t u2 = 0; u2 < N; ++u2) {
          const double y = x * f.at(t2, u2);
          if (y == 0.0) continue;
          for (std::uint64_t u3 = 0; u3 < N; ++u3) acc += y * f.at((u + u2) % N, u3);
        }
    }
  return acc / std::pow(static_cast<double>(N), 5);
}

RamseySearchResult ramsey_search(std::span<const GroupFn> F) {
  check_coverage(F, 2);
  const std::uint64_t N = F[0].N;
  const auto r = static_cast<std::uint32_t>(F.size());
  RamseySearchResult out;
  out.constants = ramsey_constants(r);
  std::vector<GroupFn> f;
  for (const auto& g : F) f.push_back(clamped(g));

  const double threshold = (1.0 - kCoverageTolerance) / r;
  std::vector<std::uint8_t> taken(N * N, 0);
  const std::vector<std::uint8_t> full_base(N, 1);
  for (std::uint32_t i = 0; i < r; ++i) {
    std::vector<std::uint8_t> set(N * N, 0);
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (!taken[k] && f[i].values[k] >= threshold) set[k] = taken[k] = 1;
    }
    out.set_lambda.push_back(lambda_T(N, set, full_base));
    out.sets.push_back(std::move(set));
    out.values.push_back(ramsey_integral(f[i]));
  }
  if (std::find(taken.begin(), taken.end(), 0) != taken.end()) {
    throw Error(ErrorCode::NumericalHealth, "greedy classes do not cover Z_N x Z_N");
  }
  const auto best = std::max_element(out.values.begin(), out.values.end());
  out.best_colour = static_cast<std::uint32_t>(best - out.values.begin()) + 1;
  out.value = *best;
  out.meets_rho = value_at_least(out.value, out.constants.rho);
  return out;
}

DenseFiber find_dense_fiber(std::size_t x_size, std::size_t y_size, std::span<const std::uint8_t> A, double eta,
                            std::span<const double> nu_x, std::span<const double> nu_y) {
  if (x_size == 0 || y_size == 0) throw Error(ErrorCode::EmptyBase, "X and Y must be nonempty");
  if (A.size() != x_size * y_size) throw Error(ErrorCode::DimensionMismatch, "relation must have |X||Y| entries");
  if (!(eta > 0.0 && eta <= 1.0)) throw Error(ErrorCode::InvalidArgument, "eta must lie in (0, 1]");
  auto weights = [](std::span<const double> w, std::size_t n, const char* name) {
    if (w.empty()) return std::vector<double>(n, 1.0 / static_cast<double>(n));
    if (w.size() != n) throw Error(ErrorCode::DimensionMismatch, std::string(name) + " has the wrong length");
    double total = 0.0;
    for (double v : w) {
      if (!(v >= 0.0)) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be nonnegative");
      total += v;
    }
    if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, std::string(name) + " has zero mass");
    std::vector<double> out(w.begin(), w.end());
    for (auto& v : out) v /= total;
    return out;
  };
  const auto wx = weights(nu_x, x_size, "nu_X");
  const auto wy = weights(nu_y, y_size, "nu_Y");

  DenseFiber out;
  std::vector<double> fiber_x(y_size, 0.0);  // nu_X(N_X(y))
  for (std::size_t x = 0; x < x_size; ++x) {
    for (std::size_t y = 0; y < y_size; ++y) {
      if (A[x * y_size + y]) fiber_x[y] += wx[x];
    }
  }
  for (std::size_t y = 0; y < y_size; ++y) out.alpha += wy[y] * fiber_x[y];
  if (!(out.alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "relation has measure zero (alpha = 0)");

  out.exceptional.assign(y_size, 0);
  for (std::size_t y = 0; y < y_size; ++y) {
    if (fiber_x[y] <= eta * out.alpha / 2.0) out.exceptional[y] = 1;
  }
  const double slack = 1e-12;
  for (std::size_t x = 0; x < x_size; ++x) {
    double integral = 0.0, mass = 0.0, bad = 0.0;
    for (std::size_t y = 0; y < y_size; ++y) {
      if (!A[x * y_size + y]) continue;
      mass += wy[y];
      if (out.exceptional[y]) bad += wy[y];
      integral += wy[y] * (1.0 - (out.exceptional[y] ? 1.0 / eta : 0.0));
    }
    if (integral >= out.alpha / 2.0 - slack) {
      out.witness = x;
      out.y_prime.assign(A.begin() + static_cast<std::ptrdiff_t>(x * y_size),
                         A.begin() + static_cast<std::ptrdiff_t>((x + 1) * y_size));
      out.nu_y_prime = mass;
      out.nu_e_in_y_prime = bad;
      return out;
    }
  }
  throw Error(ErrorCode::NoWitness, "no fiber satisfies the density condition");
}

SchurReport schur_census(const Colouring& c) {
  if (!c.is_total()) throw Error(ErrorCode::PartialColouring, "Schur census needs a total colouring");
  const std::uint64_t N = checked_order(c.size);
  const std::uint32_t r = c.r;
  SchurReport rep;
  rep.N = N;
  rep.r = r;
  rep.tensor.assign(static_cast<std::size_t>(r) * r * r, 0);
  std::vector<std::vector<std::uint64_t>> members(r);
  for (std::uint64_t x = 0; x < N; ++x) members[c.assignment[x] - 1].push_back(x);
  std::vector<std::uint64_t> conv(N);
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = 0; j < r; ++j) {
      std::fill(conv.begin(), conv.end(), 0);
      for (auto x : members[i])
        for (auto y : members[j]) ++conv[(x + y) % N];
      for (std::uint64_t z = 0; z < N; ++z) rep.tensor[(i * r + j) * r + c.assignment[z] - 1] += conv[z];
    }
  }
  rep.mono_counts.resize(r);
  for (std::uint32_t i = 0; i < r; ++i) rep.mono_counts[i] = rep.tensor[(i * r + i) * r + i];
  for (auto v : rep.tensor) rep.total += v;
  for (auto v : rep.mono_counts) rep.mono_total += v;
  const auto it = std::min_element(rep.mono_counts.begin(), rep.mono_counts.end());
  rep.min_colour = static_cast<std::uint32_t>(it - rep.mono_counts.begin()) + 1;
  rep.min_count = *it;
  if (rep.total != N * N) throw Error(ErrorCode::NumericalHealth, "Schur tensor does not sum to N^2");
  return rep;
}

std::vector<std::uint64_t> schur_tensor_brute(const Colouring& c) {
  if (!c.is_total()) throw Error(ErrorCode::PartialColouring, "Schur census needs a total colouring");
  const std::uint64_t N = c.size;
  const std::uint32_t r = c.r;
  std::vector<std::uint64_t> tensor(static_cast<std::size_t>(r) * r * r, 0);
  for (std::uint64_t x = 0; x < N; ++x)
    for (std::uint64_t y = 0; y < N; ++y)
      for (std::uint64_t z = 0; z < N; ++z) {
        if ((x + y) % N != z) continue;
        ++tensor[((c.assignment[x] - 1) * r + c.assignment[y] - 1) * r + c.assignment[z] - 1];
      }
  return tensor;
}

namespace {

double case3_integral(const GroupFn& f) {
  const std::uint64_t N = f.N;
  const double n = static_cast<double>(N);
  std::vector<double> m(N, 0.0), nn(N, 0.0), q(N, 0.0);
  for (std::uint64_t t = 0; t < N; ++t)
    for (std::uint64_t u = 0; u < N; ++u)
      for (std::uint64_t v = 0; v < N; ++v) {
        const double x = f.at(t, u, v);
        m[t] += x;
        nn[u] += x;
        q[v] += x;
      }
  for (std::uint64_t w = 0; w < N; ++w) {
    m[w] /= n * n;
    nn[w] /= n * n;
    q[w] /= n * n;
  }
  double acc = 0.0;
  for (std::uint64_t t1 = 0; t1 < N; ++t1)
    for (std::uint64_t u2 = 0; u2 < N; ++u2) acc += m[t1] * nn[u2] * q[(t1 + u2) % N];
  return acc / (n * n);
}

}  // namespace

double case3_integral_brute(const GroupFn& f) {
  if (f.arity != 3) throw Error(ErrorCode::DimensionMismatch, "case-3 integral needs a function on Z_N^3");
  const std::uint64_t N = f.N;
  double acc = 0.0;
  for (std::uint64_t t1 = 0; t1 < N; ++t1)
    for (std::uint64_t u1 = 0; u1 < N; ++u1)
      for (std::uint64_t v1 = 0; v1 < N; ++v1) {
        const double a = f.at(t1, u1, v1);
        for (std::uint64_t t2 = 0; t2 < N; ++t2)
          for (std::uint64_t u2 = 0; u2 < N; ++u2)
            for (std::uint64_t v2 = 0; v2 < N; ++v2) {
              const double b = a * f.at(t2, u2, v2);
              for (std::uint64_t t3 = 0; t3 < N; ++t3)
                for (std::uint64_t u3 = 0; u3 < N; ++u3) acc += b * f.at(t3, u3, (t1 + u2) % N);
            }
      }
  return acc / std::pow(static_cast<double>(N), 8);
}

Case3Result lambda_case3(std::span<const GroupFn> F) {
  check_coverage(F, 3);
  Case3Result out;
  for (const auto& f : F) out.values.push_back(case3_integral(f));
  const auto best = std::max_element(out.values.begin(), out.values.end());
  out.best_colour = static_cast<std::uint32_t>(best - out.values.begin()) + 1;
  out.value = *best;
  return out;
}

std::vector<GroupFn> random_cover(std::uint64_t N, std::uint32_t r, unsigned arity, std::uint64_t seed) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be >= 1");
  std::vector<GroupFn> out;
  for (std::uint32_t i = 0; i < r; ++i) out.push_back(GroupFn::constant(N, arity, 0.0));
  std::mt19937_64 rng(seed);
  const std::size_t size = out[0].values.size();
  std::vector<double> u(r);
  for (std::size_t k = 0; k < size; ++k) {
    double total = 0.0;
    for (auto& v : u) {
      v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      total += v;
    }
    if (total == 0.0) {
      u[0] = total = 1.0;
    }
    for (std::uint32_t i = 0; i < r; ++i) out[i].values[k] = u[i] / total;
  }
  return out;
}

}  // namespace fpreg
