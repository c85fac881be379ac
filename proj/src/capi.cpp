#include "fpreg/fpreg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "colouring.hpp"
#include "error.hpp"
#include "field.hpp"
#include "norms.hpp"
#include "parallel.hpp"
#include "quadsys.hpp"
#include "ramsey.hpp"
#include "report.hpp"
#include "selftest.hpp"
#include "solution_count.hpp"
#include "spectral.hpp"

struct fpreg_field {
  fpreg::Field ctx;
};

struct fpreg_colouring {
  fpreg::Colouring c;
};

struct fpreg_system {
  fpreg::PolySystem sys;
};

struct fpreg_trigpoly {
  fpreg::TrigPoly poly;
};

struct fpreg_decomposition {
  fpreg::RegularityDecomposition d;
};

namespace {

thread_local std::string g_last_error;

fpreg_status fail(fpreg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class Fn>
fpreg_status guarded(Fn&& fn) {
  try {
    fn();
    return FPREG_OK;
  } catch (const fpreg::Error& e) {
    return fail(static_cast<fpreg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FPREG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FPREG_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw fpreg::Error(fpreg::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const fpreg::json& j, char** out) {
  require(out, "output pointer");
  *out = dup_string(j.dump());
}

fpreg::EquationSpec to_spec(fpreg_spec s) {
  fpreg::EquationSpec spec{s.alpha, s.beta, s.gamma};
  spec.validate();
  return spec;
}

fpreg::GridFn to_grid(const fpreg_field* field, const fpreg_complex* f) {
  require(field, "field");
  require(f, "input array");
  std::vector<fpreg::cplx> v(field->ctx->p());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {f[i].re, f[i].im};
  return fpreg::GridFn(field->ctx, std::move(v));
}

fpreg_complex to_c(fpreg::cplx z) { return {z.real(), z.imag()}; }

void fill_norm(const fpreg::NormReport& r, fpreg_norm* out) {
  require(out, "output");
  out->value = r.value;
  out->witness_len = std::min<std::size_t>(r.witness.size(), 3);
  for (std::size_t i = 0; i < 3; ++i) out->witness[i] = i < r.witness.size() ? r.witness[i] : 0;
  out->sampled = r.mode == fpreg::NormModeKind::Sampled;
}

fpreg::NormMode to_mode(int sampled, uint64_t budget, uint64_t seed) {
  return sampled ? fpreg::NormMode::sampled(budget, seed) : fpreg::NormMode::exact();
}

template <class T, class... Args>
void make_handle(T** out, Args&&... args) {
  require(out, "output handle");
  *out = new T{std::forward<Args>(args)...};
}

std::vector<fpreg::GroupFn> to_group_fns(uint64_t N, uint32_t r, unsigned arity, const double* values) {
  require(values, "values");
  if (r < 1) throw fpreg::Error(fpreg::ErrorCode::InvalidArgument, "r must be >= 1");
  std::size_t size = 1;
  for (unsigned i = 0; i < arity; ++i) size *= N;
  std::vector<fpreg::GroupFn> F;
  for (uint32_t i = 0; i < r; ++i) {
    F.emplace_back(N, arity, std::vector<double>(values + i * size, values + (i + 1) * size));
  }
  return F;
}

}  // namespace

extern "C" {

const char* fpreg_version(void) { return "1.0.0"; }

const char* fpreg_last_error(void) { return g_last_error.c_str(); }

const char* fpreg_status_name(fpreg_status status) {
  if (status == FPREG_OK) return "Ok";
  if (status == FPREG_INTERNAL) return "Internal";
  return fpreg::error_name(static_cast<fpreg::ErrorCode>(status));
}

void fpreg_set_threads(int k) { fpreg::set_thread_count(k); }

int fpreg_threads(void) { return fpreg::thread_count(); }

void fpreg_string_free(char* s) { std::free(s); }

fpreg_status fpreg_field_create(uint64_t p, fpreg_field** out) {
  return guarded([&] { make_handle(out, fpreg::make_field(p)); });
}

void fpreg_field_destroy(fpreg_field* field) { delete field; }

uint64_t fpreg_field_p(const fpreg_field* field) { return field ? field->ctx->p() : 0; }

uint64_t fpreg_field_generator(const fpreg_field* field) { return field ? field->ctx->generator() : 0; }

fpreg_status fpreg_dft(const fpreg_field* field, const fpreg_complex* in, fpreg_complex* out) {
  return guarded([&] {
    require(out, "output array");
    const auto s = fpreg::dft(to_grid(field, in));
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) out[i] = to_c(s.coeffs[i]);
  });
}

fpreg_status fpreg_idft(const fpreg_field* field, const fpreg_complex* in, fpreg_complex* out) {
  return guarded([&] {
    require(out, "output array");
    const auto g = to_grid(field, in);
    const auto f = fpreg::idft(fpreg::Spectrum{g.ctx, g.values});
    for (std::size_t i = 0; i < f.values.size(); ++i) out[i] = to_c(f.values[i]);
  });
}

fpreg_status fpreg_spec_parse(const char* text, fpreg_spec* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    const auto s = fpreg::EquationSpec::parse(text);
    *out = {s.alpha, s.beta, s.gamma};
  });
}

fpreg_status fpreg_t_value(const fpreg_field* field, fpreg_spec spec, const fpreg_complex* f1,
                           const fpreg_complex* f2, const fpreg_complex* f3, fpreg_complex* out) {
  return guarded([&] {
    require(out, "output");
    *out = to_c(fpreg::t_value(to_grid(field, f1), to_grid(field, f2), to_grid(field, f3), to_spec(spec)).value);
  });
}

fpreg_status fpreg_t_value_brute(const fpreg_field* field, fpreg_spec spec, const fpreg_complex* f1,
                                 const fpreg_complex* f2, const fpreg_complex* f3, fpreg_complex* out) {
  return guarded([&] {
    require(out, "output");
    *out = to_c(
        fpreg::t_value_brute(to_grid(field, f1), to_grid(field, f2), to_grid(field, f3), to_spec(spec)).value);
  });
}

fpreg_status fpreg_normalization(const fpreg_field* field, fpreg_spec spec, uint64_t* solutions, double* value) {
  return guarded([&] {
    require(field, "field");
    const auto n = fpreg::normalization_constant(*field->ctx, to_spec(spec));
    if (solutions) *solutions = n.solutions;
    if (value) *value = n.value;
  });
}

fpreg_status fpreg_check_t_bounds(const fpreg_field* field, fpreg_spec spec, const fpreg_complex* f1,
                                  const fpreg_complex* f2, const fpreg_complex* f3, fpreg_t_bounds* out) {
  return guarded([&] {
    require(out, "output");
    const auto r =
        fpreg::check_t_bounds(to_grid(field, f1), to_grid(field, f2), to_grid(field, f3), to_spec(spec));
    *out = {r.abs_t, r.norm_bound, r.l2_bound, r.norm_bound_holds, r.l2_bound_holds};
  });
}

fpreg_status fpreg_u2_norm(const fpreg_field* field, const fpreg_complex* f, fpreg_norm* out) {
  return guarded([&] { fill_norm(fpreg::u2_norm(to_grid(field, f)), out); });
}

fpreg_status fpreg_u3_norm(const fpreg_field* field, const fpreg_complex* f, int sampled, uint64_t budget,
                           uint64_t seed, uint64_t exact_cap, fpreg_norm* out) {
  return guarded([&] {
    const uint64_t cap = exact_cap == 0 ? fpreg::kExactU3MaxP : exact_cap;
    fill_norm(fpreg::u3_norm(to_grid(field, f), to_mode(sampled, budget, seed), cap), out);
  });
}

fpreg_status fpreg_poly_norm(const fpreg_field* field, const fpreg_complex* f, fpreg_spec exponents, int sampled,
                             uint64_t budget, uint64_t seed, fpreg_norm* out) {
  return guarded([&] {
    fill_norm(fpreg::poly_norm(to_grid(field, f), exponents.alpha, exponents.beta, exponents.gamma,
                               to_mode(sampled, budget, seed)),
              out);
  });
}

fpreg_status fpreg_weyl_sum(const fpreg_field* field, const uint64_t* coeffs, size_t n, fpreg_complex* out) {
  return guarded([&] {
    require(field, "field");
    require(coeffs, "coefficients");
    require(out, "output");
    *out = to_c(fpreg::weyl_sum(*field->ctx, std::span<const std::uint64_t>(coeffs, n)));
  });
}

fpreg_status fpreg_colouring_random(uint64_t size, uint32_t r, uint64_t seed, fpreg_colouring** out) {
  return guarded([&] { make_handle(out, fpreg::random_colouring(size, r, seed)); });
}

fpreg_status fpreg_colouring_equal_intervals(uint64_t size, uint32_t r, fpreg_colouring** out) {
  return guarded([&] { make_handle(out, fpreg::equal_interval_colouring(size, r)); });
}

fpreg_status fpreg_colouring_intervals(uint64_t size, const uint64_t* boundaries, size_t n, fpreg_colouring** out) {
  return guarded([&] {
    require(boundaries, "boundaries");
    make_handle(out, fpreg::interval_colouring(size, std::span<const std::uint64_t>(boundaries, n)));
  });
}

fpreg_status fpreg_colouring_residues(uint64_t size, uint32_t r, fpreg_colouring** out) {
  return guarded([&] { make_handle(out, fpreg::residue_colouring(size, r)); });
}

fpreg_status fpreg_colouring_power_cosets(const fpreg_field* field, uint32_t r, fpreg_colouring** out) {
  return guarded([&] {
    require(field, "field");
    make_handle(out, fpreg::power_coset_colouring(*field->ctx, r));
  });
}

fpreg_status fpreg_colouring_from_array(uint64_t size, uint32_t r, const uint32_t* assignment,
                                        fpreg_colouring** out) {
  return guarded([&] {
    require(assignment, "assignment");
    make_handle(out, fpreg::Colouring(size, r, std::vector<std::uint32_t>(assignment, assignment + size)));
  });
}

fpreg_status fpreg_colouring_load(const char* path, fpreg_colouring** out) {
  return guarded([&] {
    require(path, "path");
    make_handle(out, fpreg::load_colouring(path));
  });
}

fpreg_status fpreg_colouring_save(const fpreg_colouring* c, const char* path) {
  return guarded([&] {
    require(c, "colouring");
    require(path, "path");
    fpreg::save_colouring(c->c, path);
  });
}

void fpreg_colouring_destroy(fpreg_colouring* c) { delete c; }

uint64_t fpreg_colouring_size(const fpreg_colouring* c) { return c ? c->c.size : 0; }

uint32_t fpreg_colouring_colours(const fpreg_colouring* c) { return c ? c->c.r : 0; }

const uint32_t* fpreg_colouring_assignment(const fpreg_colouring* c) { return c ? c->c.assignment.data() : nullptr; }

const char* fpreg_colouring_descriptor(const fpreg_colouring* c) { return c ? c->c.descriptor.c_str() : ""; }

fpreg_status fpreg_census_json(const fpreg_field* field, const fpreg_colouring* c, fpreg_spec spec,
                               uint64_t oracle_cap, char** out) {
  return guarded([&] {
    require(field, "field");
    require(c, "colouring");
    emit(fpreg::to_json(fpreg::census(field->ctx, c->c, to_spec(spec), oracle_cap)), out);
  });
}

fpreg_status fpreg_scan_json(const fpreg_field* field, fpreg_spec spec, uint32_t r, uint64_t trials, uint64_t seed,
                             char** out) {
  return guarded([&] {
    require(field, "field");
    emit(fpreg::to_json(fpreg::min_census_scan(field->ctx, to_spec(spec), r, trials, seed)), out);
  });
}

fpreg_status fpreg_counterexample_json(const fpreg_field* field, int include_members, char** out) {
  return guarded([&] {
    require(field, "field");
    emit(fpreg::to_json(fpreg::counterexample_set(*field->ctx), include_members != 0), out);
  });
}

fpreg_status fpreg_system_create(const fpreg_field* field, const uint64_t* exponents, size_t n_exponents,
                                 const uint64_t* coeffs, size_t d, fpreg_system** out) {
  return guarded([&] {
    require(field, "field");
    require(exponents, "exponents");
    require(coeffs, "coefficients");
    make_handle(out, fpreg::make_system(field->ctx, std::vector<std::uint64_t>(exponents, exponents + n_exponents),
                                        std::vector<std::uint64_t>(coeffs, coeffs + d)));
  });
}

void fpreg_system_destroy(fpreg_system* sys) { delete sys; }

size_t fpreg_system_dim(const fpreg_system* sys) { return sys ? sys->sys.dim() : 0; }

fpreg_status fpreg_trigpoly_from_json(const char* text, fpreg_trigpoly** out) {
  return guarded([&] {
    require(text, "text");
    make_handle(out, fpreg::TrigPoly::from_json(text));
  });
}

fpreg_status fpreg_trigpoly_load(const char* path, fpreg_trigpoly** out) {
  return guarded([&] {
    require(path, "path");
    make_handle(out, fpreg::TrigPoly::load(path));
  });
}

fpreg_status fpreg_trigpoly_to_json(const fpreg_trigpoly* poly, char** out) {
  return guarded([&] {
    require(poly, "trig poly");
    require(out, "output pointer");
    *out = dup_string(poly->poly.to_json());
  });
}

void fpreg_trigpoly_destroy(fpreg_trigpoly* poly) { delete poly; }

size_t fpreg_reference_family_size(void) { return fpreg::kReferenceFamilySize; }

fpreg_status fpreg_reference_family(const fpreg_field* field, size_t index, fpreg_system** sys,
                                    fpreg_trigpoly** poly) {
  return guarded([&] {
    require(field, "field");
    require(sys, "system handle");
    require(poly, "trig poly handle");
    auto [s, f] = fpreg::reference_family(field->ctx, index);
    *sys = new fpreg_system{std::move(s)};
    *poly = new fpreg_trigpoly{std::move(f)};
  });
}

fpreg_status fpreg_equidistribution_json(const fpreg_system* sys, const fpreg_trigpoly* poly, char** out) {
  return guarded([&] {
    require(sys, "system");
    require(poly, "trig poly");
    emit(fpreg::to_json(fpreg::equidistribution_gap(sys->sys, poly->poly)), out);
  });
}

fpreg_status fpreg_counting_json(const fpreg_system* sys, const fpreg_trigpoly* poly, char** out) {
  return guarded([&] {
    require(sys, "system");
    require(poly, "trig poly");
    emit(fpreg::to_json(fpreg::counting_main_term(sys->sys, poly->poly)), out);
  });
}

fpreg_status fpreg_image_density(const fpreg_system* sys, const double* h, size_t n, double eps, uint64_t* out) {
  return guarded([&] {
    require(sys, "system");
    require(h, "target");
    require(out, "output");
    *out = fpreg::image_density(sys->sys, std::span<const double>(h, n), eps);
  });
}

fpreg_status fpreg_majorant_json(uint64_t R, const uint32_t* cell, size_t n, double delta_prime, double eta,
                                 char** out) {
  return guarded([&] {
    require(cell, "cell");
    emit(fpreg::to_json(fpreg::build_majorant(R, std::span<const std::uint32_t>(cell, n), delta_prime, eta)), out);
  });
}

fpreg_status fpreg_decompose(const fpreg_field* field, const fpreg_colouring* c, double delta, uint64_t R,
                             uint64_t exact_cap, int enforce_resolution, fpreg_decomposition** out) {
  return guarded([&] {
    require(field, "field");
    require(c, "colouring");
    require(out, "output handle");
    fpreg::DecomposeOptions opts;
    if (R != 0) opts.R = R;
    if (exact_cap != 0) opts.exact_cap = exact_cap;
    opts.enforce_resolution = enforce_resolution != 0;
    *out = new fpreg_decomposition{fpreg::decompose(field->ctx, c->c, delta, opts)};
  });
}

void fpreg_decomposition_destroy(fpreg_decomposition* d) { delete d; }

fpreg_status fpreg_decomposition_json(const fpreg_decomposition* d, char** out) {
  return guarded([&] {
    require(d, "decomposition");
    emit(fpreg::to_json(d->d), out);
  });
}

size_t fpreg_decomposition_iterations(const fpreg_decomposition* d) { return d ? d->d.iterations() : 0; }

int fpreg_decomposition_converged(const fpreg_decomposition* d) { return d ? d->d.converged : 0; }

fpreg_status fpreg_ramsey_constants_json(uint32_t r, char** out) {
  return guarded([&] { emit(fpreg::to_json(fpreg::ramsey_constants(r)), out); });
}

fpreg_status fpreg_delta_T(uint64_t N, const uint8_t* A, const uint8_t* T, double* out) {
  return guarded([&] {
    require(A, "A");
    require(T, "T");
    require(out, "output");
    *out = fpreg::delta_T(N, std::span<const std::uint8_t>(A, N * N), std::span<const std::uint8_t>(T, N));
  });
}

fpreg_status fpreg_lambda_T(uint64_t N, const uint8_t* A, const uint8_t* T, double* out) {
  return guarded([&] {
    require(A, "A");
    require(T, "T");
    require(out, "output");
    *out = fpreg::lambda_T(N, std::span<const std::uint8_t>(A, N * N), std::span<const std::uint8_t>(T, N));
  });
}

fpreg_status fpreg_random_cover(uint64_t N, uint32_t r, unsigned arity, uint64_t seed, double* out) {
  return guarded([&] {
    require(out, "output");
    std::size_t offset = 0;
    for (const auto& f : fpreg::random_cover(N, r, arity, seed)) {
      std::copy(f.values.begin(), f.values.end(), out + offset);
      offset += f.values.size();
    }
  });
}

fpreg_status fpreg_ramsey_search_json(uint64_t N, uint32_t r, const double* values, char** out) {
  return guarded([&] { emit(fpreg::to_json(fpreg::ramsey_search(to_group_fns(N, r, 2, values))), out); });
}

fpreg_status fpreg_lambda_case3_json(uint64_t N, uint32_t r, const double* values, char** out) {
  return guarded([&] { emit(fpreg::to_json(fpreg::lambda_case3(to_group_fns(N, r, 3, values))), out); });
}

fpreg_status fpreg_schur_json(const fpreg_colouring* c, char** out) {
  return guarded([&] {
    require(c, "colouring");
    emit(fpreg::to_json(fpreg::schur_census(c->c)), out);
  });
}

fpreg_status fpreg_dense_fiber_json(size_t x_size, size_t y_size, const uint8_t* A, double eta, char** out) {
  return guarded([&] {
    require(A, "relation");
    emit(fpreg::to_json(
             fpreg::find_dense_fiber(x_size, y_size, std::span<const std::uint8_t>(A, x_size * y_size), eta)),
         out);
  });
}

fpreg_status fpreg_selftest_json(uint64_t seed, char** out) {
  return guarded([&] { emit(fpreg::run_selftest(seed), out); });
}

}  // extern "C"
