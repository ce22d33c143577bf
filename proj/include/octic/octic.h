/*
 * C interface to the octic monogenity library.
 *
 * All objects are opaque handles created by octic_* constructors and released
 * by the matching *_free function. Functions return an octic_status; on
 * failure octic_last_error() holds a message for the calling thread.
 * Integers that may exceed 64 bits travel as decimal strings; quadratic
 * integers use the text form "a+b*w".
 */
#ifndef OCTIC_OCTIC_H
#define OCTIC_OCTIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(OCTIC_BUILDING_LIBRARY)
#define OCTIC_API __attribute__((visibility("default")))
#else
#define OCTIC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum octic_status {
  OCTIC_OK = 0,
  OCTIC_ERR_INVALID_ARGUMENT = 1,
  OCTIC_ERR_PARSE = 2,
  OCTIC_ERR_MATH = 3,
  OCTIC_ERR_MISMATCH = 4,
  OCTIC_ERR_IO = 5,
  OCTIC_ERR_INTERNAL = 6
} octic_status;

typedef enum octic_units {
  OCTIC_UNITS_DEFAULT = 0, /* {1, i} for D4, all units otherwise */
  OCTIC_UNITS_ALL = 1,
  OCTIC_UNITS_MOD_SIGN = 2
} octic_units;

typedef struct octic_options {
  unsigned jobs;  /* 0 = number of hardware threads */
  int units;      /* octic_units */
  int timings;    /* nonzero: embed wall times in reports */
} octic_options;

typedef struct octic_family octic_family;
typedef struct octic_candidates octic_candidates;
typedef struct octic_report octic_report;

OCTIC_API const char* octic_version(void);
OCTIC_API const char* octic_last_error(void);
OCTIC_API const char* octic_status_name(octic_status status);
OCTIC_API void octic_options_init(octic_options* opts);

/* Family instances. */
OCTIC_API octic_status octic_family_d4(const char* T, octic_family** out);
OCTIC_API octic_status octic_family_composite(long d, long m, octic_family** out);
OCTIC_API octic_status octic_family_param1(long d, const char* t1, const char* t2, octic_family** out);
OCTIC_API octic_status octic_family_param2(long d, const char* t1, const char* t2, octic_family** out);
OCTIC_API int octic_family_hypothesis_holds(const octic_family* family);
OCTIC_API void octic_family_free(octic_family* family);

/* Composite candidate lists (JSON lines). Rows that fail validation are
 * skipped; `diagnostics` (optional) receives the ingest report. */
OCTIC_API octic_status octic_candidates_ingest(const char* path, octic_candidates** out, octic_report** diagnostics);
OCTIC_API size_t octic_candidates_count(const octic_candidates* cands);
OCTIC_API void octic_candidates_free(octic_candidates* cands);

/* Index of a single element A + X xi + Y xi^2 + Z xi^3. */
OCTIC_API octic_status octic_index(const octic_family* family, const char* A, const char* X, const char* Y,
                                   const char* Z, octic_report** out);

/* Runs. `config_json` (nullable) is echoed into the report. */
OCTIC_API octic_status octic_verify(const octic_family* const* families, size_t count, const octic_candidates* cands,
                                    const char* config_json, const octic_options* opts, octic_report** out);
OCTIC_API octic_status octic_pipeline(const octic_family* family, long bound, const char* config_json,
                                      const octic_options* opts, octic_report** out);
OCTIC_API octic_status octic_thue(const char* T, long bound, const char* config_json, const octic_options* opts,
                                  octic_report** out);
OCTIC_API octic_status octic_jpoly(const octic_family* family, int candidate_index, const char* eps,
                                   const octic_candidates* cands, const char* config_json,
                                   const octic_options* opts, octic_report** out);
OCTIC_API octic_status octic_oracle(const octic_family* family, unsigned samples, uint64_t seed,
                                    const char* config_json, const octic_options* opts, octic_report** out);
OCTIC_API octic_status octic_ingest(const char* path, const char* config_json, octic_report** out);

/* Reports. The JSON string is owned by the report. */
OCTIC_API const char* octic_report_json(const octic_report* report);
OCTIC_API int octic_report_exit_code(const octic_report* report);
OCTIC_API octic_status octic_report_write(const octic_report* report, const char* path);
OCTIC_API void octic_report_free(octic_report* report);

#ifdef __cplusplus
}
#endif

#endif /* OCTIC_OCTIC_H */
