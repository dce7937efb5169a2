#ifndef HYPERRAMSEY_H
#define HYPERRAMSEY_H

/* C interface to the hyperramsey library. All handles are opaque; every
 * fallible call returns an hr_status and leaves a message for
 * hr_last_error() (per thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HR_API __declspec(dllexport)
#elif defined(__GNUC__)
#define HR_API __attribute__((visibility("default")))
#else
#define HR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hr_status {
  HR_OK = 0,
  HR_E_DOMAIN = 1,    /* a precondition on a parameter is violated */
  HR_E_FORMAT = 2,    /* malformed or unreadable file / config */
  HR_E_SOUNDNESS = 3, /* a construction produced an impossible object */
  HR_E_ARGUMENT = 4,  /* null handle or bad index */
  HR_E_INTERNAL = 5
} hr_status;

/* Outcome of a certificate; values match the CLI exit codes. */
typedef enum hr_verdict {
  HR_HOLDS = 0,
  HR_FAILS = 1,
  HR_UNDECIDED = 3 /* some search ran out of budget before settling */
} hr_verdict;

typedef enum hr_kind {
  HR_COLORING = 1,
  HR_HYPERGRAPH = 2,
  HR_TOURNAMENT = 3
} hr_kind;

typedef struct hr_params hr_params;
typedef struct hr_object hr_object;
typedef struct hr_certificate hr_certificate;

typedef struct hr_claim {
  const char* property; /* valid until the certificate changes */
  const char* status;
  uint64_t value;
  uint64_t budget;
  uint64_t seed;
  int holds;
} hr_claim;

typedef struct hr_t_result {
  int determined;  /* value holds T(n) */
  int exceeds_max; /* T(n) > max_n */
  uint64_t value;
  uint64_t witness_size;
} hr_t_result;

HR_API const char* hr_version(void);
HR_API const char* hr_last_error(void);

/* Key/value parameters; also carries run settings (seed, budget.nodes,
 * budget.trials, workers). */
HR_API hr_params* hr_params_new(void);
HR_API void hr_params_free(hr_params* p);
HR_API hr_status hr_params_set(hr_params* p, const char* key, const char* value);
/* Value for key, or NULL; valid until the key is set again. */
HR_API const char* hr_params_get(const hr_params* p, const char* key);
/* Merges a key=value config file; unknown keys are rejected. */
HR_API hr_status hr_params_load_config(hr_params* p, const char* path);

HR_API hr_status hr_build(const char* family, const hr_params* params, hr_object** out);
HR_API hr_status hr_load(const char* path, hr_object** out);
HR_API hr_status hr_save(const hr_object* obj, const char* path);
HR_API void hr_object_free(hr_object* obj);
HR_API hr_kind hr_object_kind(const hr_object* obj);
HR_API unsigned hr_object_uniformity(const hr_object* obj);
/* Vertex count as text ("32", "2^(2^20)"); snprintf-style truncation,
 * returns the full length. */
HR_API size_t hr_object_size(const hr_object* obj, char* buf, size_t len);
/* Certificate produced while building (half-graph searches), or NULL.
 * Caller frees. */
HR_API hr_certificate* hr_object_certificate(const hr_object* obj);

HR_API hr_certificate* hr_certificate_new(const hr_object* obj, uint64_t seed);
HR_API hr_status hr_certificate_load(const char* path, hr_certificate** out);
HR_API hr_status hr_certificate_save(const hr_certificate* cert, const char* path);
HR_API void hr_certificate_free(hr_certificate* cert);
HR_API size_t hr_certificate_claim_count(const hr_certificate* cert);
HR_API hr_status hr_certificate_claim(const hr_certificate* cert, size_t index, hr_claim* out);
HR_API hr_verdict hr_certificate_verdict(const hr_certificate* cert);
HR_API void hr_certificate_set_timestamp(hr_certificate* cert, const char* timestamp);

/* Runs a check (no-clique, alpha, no-halfgraph, max-transitive, theorem5)
 * and appends its claim. obj may be NULL for theorem5. */
HR_API hr_status hr_verify(const hr_object* obj, const char* check, const hr_params* params,
                           hr_certificate* cert, hr_verdict* verdict);

/* Re-runs every claim of `cert` against its own construction; *identical
 * is 1 when the fresh claims equal the recorded ones. */
HR_API hr_status hr_replay(const hr_certificate* cert, const char* cert_path,
                           const hr_params* settings, hr_certificate** out, int* identical);

HR_API hr_status hr_compute_t(unsigned n, uint64_t max_n, const hr_params* settings,
                              hr_t_result* out, char* report, size_t report_len,
                              size_t* report_needed);

#ifdef __cplusplus
}
#endif

#endif
