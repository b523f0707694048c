/* nroots C interface.
 *
 * Every function returns an nr_status; on failure a thread-local message is
 * available from nr_last_error(). Handles are opaque and owned by the caller,
 * who releases them with the matching *_destroy function. Strings returned
 * through char** out-parameters are released with nr_string_free. Handle and
 * string out-parameters are set to NULL whenever a call fails.
 */
#ifndef NROOTS_H
#define NROOTS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NR_API __declspec(dllexport)
#else
#define NR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nr_status {
  NR_OK = 0,
  NR_ERR_INVALID_ARGUMENT = 1,
  NR_ERR_PARSE = 2,
  NR_ERR_MALFORMED_NAME = 3,
  NR_ERR_PLACEMENT_MISMATCH = 4,
  NR_ERR_ENDPOINT_IS_ROOT = 5,
  NR_ERR_CONSTRAINT_VIOLATED = 6,
  NR_ERR_NON_POSITIVE_GAP = 7,
  NR_ERR_NON_POSITIVE_LIFT = 8,
  NR_ERR_NO_MIXED_ROW = 9,
  NR_ERR_SIZE_CAP = 10,
  NR_ERR_IO = 11,
  NR_ERR_INTERNAL = 12,
  NR_ERR_NULL_ARGUMENT = 13
} nr_status;

typedef enum nr_verdict { NR_FEASIBLE = 0, NR_INFEASIBLE = 1, NR_INDETERMINATE = 2 } nr_verdict;

typedef enum nr_format { NR_FORMAT_TEXT = 0, NR_FORMAT_CSV = 1, NR_FORMAT_JSON = 2 } nr_format;

typedef enum nr_pivot { NR_PIVOT_FIRST = 0, NR_PIVOT_MINPQ = 1 } nr_pivot;

typedef struct nr_config nr_config;
typedef struct nr_case nr_case;
typedef struct nr_check nr_check;
typedef struct nr_table nr_table;
typedef struct nr_witness nr_witness;
typedef struct nr_oracle nr_oracle;

NR_API const char* nr_version(void);
NR_API const char* nr_status_name(nr_status status);
/* Message of the last failure on this thread; empty after a success. */
NR_API const char* nr_last_error(void);
NR_API void nr_string_free(char* s);

/* Run configuration. Defaults: seed 42, samples 100, polya_max 4, pivot
 * first, size cap n <= 5, force off. */
NR_API nr_status nr_config_create(nr_config** out);
NR_API void nr_config_destroy(nr_config* cfg);
NR_API nr_status nr_config_set_seed(nr_config* cfg, uint64_t seed);
NR_API nr_status nr_config_set_samples(nr_config* cfg, size_t samples);
NR_API nr_status nr_config_set_polya_max(nr_config* cfg, unsigned polya_max);
NR_API nr_status nr_config_set_pivot(nr_config* cfg, nr_pivot pivot);
NR_API nr_status nr_config_set_force(nr_config* cfg, int force);
NR_API nr_status nr_config_set_n_cap(nr_config* cfg, unsigned cap);

/* Cases, by name ("S13L12" or "S1,3L1,2") or by parts. */
NR_API nr_status nr_case_parse(const char* name, nr_case** out);
NR_API nr_status nr_case_from_parts(unsigned n, const unsigned* subset, size_t subset_len, const unsigned* placement,
                                    size_t placement_len, nr_case** out);
NR_API nr_status nr_case_name(const nr_case* c, char** out);
NR_API nr_status nr_case_n(const nr_case* c, unsigned* out);
NR_API void nr_case_destroy(nr_case* c);

/* Symbolic decision for one case. */
NR_API nr_status nr_check_run(const nr_config* cfg, const nr_case* c, nr_check** out);
NR_API nr_status nr_check_verdict(const nr_check* r, nr_verdict* out);
/* Level at which the verdict was reached (0 = input system). */
NR_API nr_status nr_check_level(const nr_check* r, size_t* out);
NR_API nr_status nr_check_pf(const nr_check* r, int* out);
NR_API nr_status nr_check_render(const nr_check* r, nr_format format, int trace, char** out);
NR_API void nr_check_destroy(nr_check* r);

/* Every (subset, placement) case for n. */
NR_API nr_status nr_table_run(const nr_config* cfg, unsigned n, nr_table** out);
NR_API nr_status nr_table_size(const nr_table* t, size_t* out);
NR_API nr_status nr_table_row(const nr_table* t, size_t index, char** name, nr_verdict* verdict);
NR_API nr_status nr_table_render(const nr_table* t, nr_format format, char** out);
/* Compares against a golden CSV (case,verdict,step,pf). *ok is 1 when every
 * verdict matches; *report lists differences. */
NR_API nr_status nr_table_compare_golden(const nr_table* t, const char* path, int* ok, char** report);
NR_API void nr_table_destroy(nr_table* t);

/* Witness for one case. a and lambda are comma-separated rationals; pass both
 * NULL to sample an instance from the seeded class. */
NR_API nr_status nr_witness_run(const nr_config* cfg, const nr_case* c, const char* a, const char* lambda,
                                nr_witness** out);
/* 1 when a witness exists and its roots realize the placement. */
NR_API nr_status nr_witness_ok(const nr_witness* w, int* out);
NR_API nr_status nr_witness_refused(const nr_witness* w, int* out);
NR_API nr_status nr_witness_render(const nr_witness* w, nr_format format, char** out);
NR_API void nr_witness_destroy(nr_witness* w);

/* Placement list for n. */
NR_API nr_status nr_enumerate(unsigned n, nr_format format, char** out);
NR_API nr_status nr_placement_count(unsigned n, size_t* out);

/* Oracle cross-validation for one case or all cases of size n. */
NR_API nr_status nr_oracle_run_case(const nr_config* cfg, const nr_case* c, nr_oracle** out);
NR_API nr_status nr_oracle_run_all(const nr_config* cfg, unsigned n, nr_oracle** out);
NR_API nr_status nr_oracle_case_count(const nr_oracle* o, size_t* out);
NR_API nr_status nr_oracle_agreements(const nr_oracle* o, size_t* out);
NR_API nr_status nr_oracle_nonpositive_lifts(const nr_oracle* o, size_t* out);
NR_API nr_status nr_oracle_render(const nr_oracle* o, nr_format format, char** out);
NR_API void nr_oracle_destroy(nr_oracle* o);

#ifdef __cplusplus
}
#endif

#endif /* NROOTS_H */
