#ifndef FPREG_FPREG_H
#define FPREG_FPREG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FPREG_API __declspec(dllexport)
#else
#define FPREG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpreg_status {
  FPREG_OK = 0,
  FPREG_COMPOSITE_MODULUS = 1,
  FPREG_MODULUS_TOO_SMALL,
  FPREG_CONTEXT_MISMATCH,
  FPREG_EXACT_CAP_EXCEEDED,
  FPREG_CAP_EXCEEDED,
  FPREG_BAD_GENERATOR_SPEC,
  FPREG_FILE_FORMAT,
  FPREG_PARTIAL_COLOURING,
  FPREG_EMPTY_COEFFICIENTS,
  FPREG_DIMENSION_MISMATCH,
  FPREG_RESOLUTION_TOO_SMALL,
  FPREG_UNSUPPORTED_EXPONENTS,
  FPREG_CONSTRUCTION_FAILED,
  FPREG_EMPTY_BASE,
  FPREG_COVERAGE_VIOLATED,
  FPREG_NO_WITNESS,
  FPREG_NUMERICAL_HEALTH,
  FPREG_INVALID_ARGUMENT,
  FPREG_IO,
  FPREG_INTERNAL = 100
} fpreg_status;

typedef struct fpreg_complex {
  double re;
  double im;
} fpreg_complex;

typedef struct fpreg_spec {
  uint64_t alpha;
  uint64_t beta;
  uint64_t gamma;
} fpreg_spec;

typedef struct fpreg_norm {
  double value;
  uint64_t witness[3];
  size_t witness_len;
  int sampled;
} fpreg_norm;

typedef struct fpreg_t_bounds {
  double abs_t;
  double norm_bound;
  double l2_bound;
  int norm_bound_holds;
  int l2_bound_holds;
} fpreg_t_bounds;

typedef struct fpreg_field fpreg_field;
typedef struct fpreg_colouring fpreg_colouring;
typedef struct fpreg_system fpreg_system;
typedef struct fpreg_trigpoly fpreg_trigpoly;
typedef struct fpreg_decomposition fpreg_decomposition;

/* Library state. Messages are per thread and valid until the next failing call. */
FPREG_API const char* fpreg_version(void);
FPREG_API const char* fpreg_last_error(void);
FPREG_API const char* fpreg_status_name(fpreg_status status);
FPREG_API void fpreg_set_threads(int k);
FPREG_API int fpreg_threads(void);
/* Strings returned through char** out-parameters are released here. */
FPREG_API void fpreg_string_free(char* s);

/* Prime fields */
FPREG_API fpreg_status fpreg_field_create(uint64_t p, fpreg_field** out);
FPREG_API void fpreg_field_destroy(fpreg_field* field);
FPREG_API uint64_t fpreg_field_p(const fpreg_field* field);
FPREG_API uint64_t fpreg_field_generator(const fpreg_field* field);

/* Transforms on arrays of length p. */
FPREG_API fpreg_status fpreg_dft(const fpreg_field* field, const fpreg_complex* in, fpreg_complex* out);
FPREG_API fpreg_status fpreg_idft(const fpreg_field* field, const fpreg_complex* in, fpreg_complex* out);

/* Solution counting */
FPREG_API fpreg_status fpreg_spec_parse(const char* text, fpreg_spec* out);
FPREG_API fpreg_status fpreg_t_value(const fpreg_field* field, fpreg_spec spec, const fpreg_complex* f1,
                                     const fpreg_complex* f2, const fpreg_complex* f3, fpreg_complex* out);
FPREG_API fpreg_status fpreg_t_value_brute(const fpreg_field* field, fpreg_spec spec, const fpreg_complex* f1,
                                           const fpreg_complex* f2, const fpreg_complex* f3, fpreg_complex* out);
FPREG_API fpreg_status fpreg_normalization(const fpreg_field* field, fpreg_spec spec, uint64_t* solutions,
                                           double* value);
FPREG_API fpreg_status fpreg_check_t_bounds(const fpreg_field* field, fpreg_spec spec, const fpreg_complex* f1,
                                            const fpreg_complex* f2, const fpreg_complex* f3, fpreg_t_bounds* out);

/* Norms. sampled = 0 requests the exact computation. */
FPREG_API fpreg_status fpreg_u2_norm(const fpreg_field* field, const fpreg_complex* f, fpreg_norm* out);
FPREG_API fpreg_status fpreg_u3_norm(const fpreg_field* field, const fpreg_complex* f, int sampled, uint64_t budget,
                                     uint64_t seed, uint64_t exact_cap, fpreg_norm* out);
FPREG_API fpreg_status fpreg_poly_norm(const fpreg_field* field, const fpreg_complex* f, fpreg_spec exponents,
                                       int sampled, uint64_t budget, uint64_t seed, fpreg_norm* out);
/* E_x e_p(sum_k coeffs[k] x^k) */
FPREG_API fpreg_status fpreg_weyl_sum(const fpreg_field* field, const uint64_t* coeffs, size_t n, fpreg_complex* out);

/* Colourings. Colours are 1..r, 0 marks an excluded element. */
FPREG_API fpreg_status fpreg_colouring_random(uint64_t size, uint32_t r, uint64_t seed, fpreg_colouring** out);
FPREG_API fpreg_status fpreg_colouring_equal_intervals(uint64_t size, uint32_t r, fpreg_colouring** out);
FPREG_API fpreg_status fpreg_colouring_intervals(uint64_t size, const uint64_t* boundaries, size_t n,
                                                 fpreg_colouring** out);
FPREG_API fpreg_status fpreg_colouring_residues(uint64_t size, uint32_t r, fpreg_colouring** out);
FPREG_API fpreg_status fpreg_colouring_power_cosets(const fpreg_field* field, uint32_t r, fpreg_colouring** out);
FPREG_API fpreg_status fpreg_colouring_from_array(uint64_t size, uint32_t r, const uint32_t* assignment,
                                                  fpreg_colouring** out);
FPREG_API fpreg_status fpreg_colouring_load(const char* path, fpreg_colouring** out);
FPREG_API fpreg_status fpreg_colouring_save(const fpreg_colouring* c, const char* path);
FPREG_API void fpreg_colouring_destroy(fpreg_colouring* c);
FPREG_API uint64_t fpreg_colouring_size(const fpreg_colouring* c);
FPREG_API uint32_t fpreg_colouring_colours(const fpreg_colouring* c);
FPREG_API const uint32_t* fpreg_colouring_assignment(const fpreg_colouring* c);
FPREG_API const char* fpreg_colouring_descriptor(const fpreg_colouring* c);

/* JSON reports. Census counts are cross-checked by integer enumeration when
   p <= oracle_cap; 0 skips the check. */
FPREG_API fpreg_status fpreg_census_json(const fpreg_field* field, const fpreg_colouring* c, fpreg_spec spec,
                                         uint64_t oracle_cap, char** out);
FPREG_API fpreg_status fpreg_scan_json(const fpreg_field* field, fpreg_spec spec, uint32_t r, uint64_t trials,
                                       uint64_t seed, char** out);
FPREG_API fpreg_status fpreg_counterexample_json(const fpreg_field* field, int include_members, char** out);

/* Polynomial systems and trigonometric polynomials */
FPREG_API fpreg_status fpreg_system_create(const fpreg_field* field, const uint64_t* exponents, size_t n_exponents,
                                           const uint64_t* coeffs, size_t d, fpreg_system** out);
FPREG_API void fpreg_system_destroy(fpreg_system* sys);
FPREG_API size_t fpreg_system_dim(const fpreg_system* sys);
FPREG_API fpreg_status fpreg_trigpoly_from_json(const char* text, fpreg_trigpoly** out);
FPREG_API fpreg_status fpreg_trigpoly_load(const char* path, fpreg_trigpoly** out);
FPREG_API fpreg_status fpreg_trigpoly_to_json(const fpreg_trigpoly* poly, char** out);
FPREG_API void fpreg_trigpoly_destroy(fpreg_trigpoly* poly);
FPREG_API size_t fpreg_reference_family_size(void);
FPREG_API fpreg_status fpreg_reference_family(const fpreg_field* field, size_t index, fpreg_system** sys,
                                              fpreg_trigpoly** poly);
FPREG_API fpreg_status fpreg_equidistribution_json(const fpreg_system* sys, const fpreg_trigpoly* poly, char** out);
FPREG_API fpreg_status fpreg_counting_json(const fpreg_system* sys, const fpreg_trigpoly* poly, char** out);
FPREG_API fpreg_status fpreg_image_density(const fpreg_system* sys, const double* h, size_t n, double eps,
                                           uint64_t* out);
FPREG_API fpreg_status fpreg_majorant_json(uint64_t R, const uint32_t* cell, size_t n, double delta_prime, double eta,
                                           char** out);

/* Regularity decomposition. R = 0 selects the default resolution. */
FPREG_API fpreg_status fpreg_decompose(const fpreg_field* field, const fpreg_colouring* c, double delta, uint64_t R,
                                       uint64_t exact_cap, int enforce_resolution, fpreg_decomposition** out);
FPREG_API void fpreg_decomposition_destroy(fpreg_decomposition* d);
FPREG_API fpreg_status fpreg_decomposition_json(const fpreg_decomposition* d, char** out);
FPREG_API size_t fpreg_decomposition_iterations(const fpreg_decomposition* d);
FPREG_API int fpreg_decomposition_converged(const fpreg_decomposition* d);

/* Finite-group functionals on Z_N. Planar masks are indexed s*N + u. */
FPREG_API fpreg_status fpreg_ramsey_constants_json(uint32_t r, char** out);
FPREG_API fpreg_status fpreg_delta_T(uint64_t N, const uint8_t* A, const uint8_t* T, double* out);
FPREG_API fpreg_status fpreg_lambda_T(uint64_t N, const uint8_t* A, const uint8_t* T, double* out);
/* r*N^arity values, row-major per function, pointwise sum 1. */
FPREG_API fpreg_status fpreg_random_cover(uint64_t N, uint32_t r, unsigned arity, uint64_t seed, double* out);
FPREG_API fpreg_status fpreg_ramsey_search_json(uint64_t N, uint32_t r, const double* values, char** out);
FPREG_API fpreg_status fpreg_lambda_case3_json(uint64_t N, uint32_t r, const double* values, char** out);
FPREG_API fpreg_status fpreg_schur_json(const fpreg_colouring* c, char** out);
FPREG_API fpreg_status fpreg_dense_fiber_json(size_t x_size, size_t y_size, const uint8_t* A, double eta, char** out);

/* Oracle-agreement suite. */
FPREG_API fpreg_status fpreg_selftest_json(uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif
