#ifndef WAYLAB_WAYLAB_H
#define WAYLAB_WAYLAB_H

#include <stddef.h>

#if defined(WAYLAB_BUILDING_LIBRARY)
#define WAYLAB_API __attribute__((visibility("default")))
#else
#define WAYLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum waylab_status {
  WAYLAB_OK = 0,
  WAYLAB_ERR_DIMENSION_MISMATCH,
  WAYLAB_ERR_NOT_HERMITIAN,
  WAYLAB_ERR_NOT_UNITARY,
  WAYLAB_ERR_BLOCH_NORM,
  WAYLAB_ERR_INVALID_OBSERVABLE,
  WAYLAB_ERR_INVALID_MODEL,
  WAYLAB_ERR_INVALID_STATE,
  WAYLAB_ERR_UNKNOWN_OUTCOME,
  WAYLAB_ERR_UNKNOWN_ID,
  WAYLAB_ERR_BAD_PARAMS,
  WAYLAB_ERR_PRECONDITION,
  WAYLAB_ERR_NOT_SHARP_PROGRAM,
  WAYLAB_ERR_MALFORMED_CSV,
  WAYLAB_ERR_SCHEMA,
  WAYLAB_ERR_IO,
  WAYLAB_ERR_NUMERIC,
  WAYLAB_ERR_NULL_ARGUMENT,
  WAYLAB_ERR_INTERNAL
} waylab_status;

typedef struct waylab_context waylab_context;
typedef struct waylab_matrix waylab_matrix;
typedef struct waylab_measurement waylab_measurement;
typedef struct waylab_multimeter waylab_multimeter;
typedef struct waylab_string waylab_string;

WAYLAB_API const char* waylab_version(void);
WAYLAB_API const char* waylab_status_name(waylab_status status);
/* Message of the most recent failure on the calling thread; "" after success. */
WAYLAB_API const char* waylab_last_error(void);

/* Contexts carry the predicate tolerance (default 1e-10). */
WAYLAB_API waylab_status waylab_context_create(waylab_context** out);
WAYLAB_API void waylab_context_destroy(waylab_context* ctx);
WAYLAB_API waylab_status waylab_context_set_tolerance(waylab_context* ctx, double tol);
WAYLAB_API double waylab_context_tolerance(const waylab_context* ctx);

WAYLAB_API const char* waylab_string_data(const waylab_string* s);
WAYLAB_API size_t waylab_string_size(const waylab_string* s);
WAYLAB_API void waylab_string_destroy(waylab_string* s);

/* `re_im` holds rows*cols interleaved (re, im) pairs, row-major. */
WAYLAB_API waylab_status waylab_matrix_create(size_t rows, size_t cols, const double* re_im, waylab_matrix** out);
WAYLAB_API void waylab_matrix_destroy(waylab_matrix* m);
WAYLAB_API size_t waylab_matrix_rows(const waylab_matrix* m);
WAYLAB_API size_t waylab_matrix_cols(const waylab_matrix* m);
WAYLAB_API waylab_status waylab_matrix_get(const waylab_matrix* m, size_t i, size_t j, double* re, double* im);
WAYLAB_API waylab_status waylab_matrix_operator_norm(const waylab_matrix* m, double* out);
WAYLAB_API waylab_status waylab_matrix_commutator_norm(const waylab_matrix* a, const waylab_matrix* b,
                                                       double* out);
WAYLAB_API waylab_status waylab_matrix_is_unitary(const waylab_context* ctx, const waylab_matrix* m, int* out);

/* Catalog unitaries ("ex4-genway", "u-alpha", ...). params_json may be NULL. */
WAYLAB_API waylab_status waylab_catalog_unitary(const char* id, const char* params_json, waylab_matrix** out);

WAYLAB_API waylab_status waylab_measurement_from_json(const waylab_context* ctx, const char* json,
                                                      waylab_measurement** out);
WAYLAB_API void waylab_measurement_destroy(waylab_measurement* m);
WAYLAB_API waylab_status waylab_measurement_to_json(const waylab_measurement* m, waylab_string** out);
WAYLAB_API waylab_status waylab_measurement_sharpness_defect(const waylab_measurement* m, double* out);
WAYLAB_API waylab_status waylab_measurement_is_repeatable(const waylab_context* ctx, const waylab_measurement* m,
                                                          int* out);
WAYLAB_API waylab_status waylab_measurement_observable_json(const waylab_measurement* m, waylab_string** out);

WAYLAB_API waylab_status waylab_multimeter_from_json(const waylab_context* ctx, const char* json,
                                                     waylab_multimeter** out);
WAYLAB_API void waylab_multimeter_destroy(waylab_multimeter* m);
/* `phi` holds n interleaved (re, im) pairs. */
WAYLAB_API waylab_status waylab_multimeter_program_json(const waylab_multimeter* m, const double* phi, size_t n,
                                                        waylab_string** out);

/* Reports. *all_passed may be NULL. */
WAYLAB_API waylab_status waylab_example_report(const waylab_context* ctx, const char* id, const char* params_json,
                                               waylab_string** out, int* all_passed);
WAYLAB_API waylab_status waylab_catalog_index(waylab_string** out);
/* Optional inputs may be NULL. */
WAYLAB_API waylab_status waylab_analyze(const waylab_context* ctx, const char* model_json, const char* quantity_json,
                                        const char* additive_json, const char* multiplicative_json,
                                        waylab_string** out);
WAYLAB_API waylab_status waylab_multimeter_audit(const waylab_context* ctx, const char* model_json,
                                                 const char* states_json, waylab_string** out);
WAYLAB_API waylab_status waylab_scan_csv(double alpha_min, double alpha_max, size_t steps, waylab_string** out);
WAYLAB_API waylab_status waylab_region_csv(double alpha, size_t grid, waylab_string** out);
WAYLAB_API waylab_status waylab_render_svg(const char* csv, waylab_string** out);

#ifdef __cplusplus
}
#endif

#endif
