/* C interface to the ribbon-code engine.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through `char**` out-parameters
 * are heap-allocated and released with rbn_string_free. Every call returns an
 * rbn_status; on failure rbn_last_error() describes the problem on the
 * calling thread until the next failing call. */
#ifndef RIBBON_RIBBON_H
#define RIBBON_RIBBON_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RBN_API __declspec(dllexport)
#else
#define RBN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbn_status {
  RBN_OK = 0,
  RBN_ERR_INVALID_ARGUMENT = 1, /* null pointer or bad option */
  RBN_ERR_PARSE = 2,            /* malformed code or partition text */
  RBN_ERR_DOMAIN = 3,           /* index out of range, invalid code */
  RBN_ERR_DISCONNECTED = 4,     /* bound requested on a code bounding a link */
  RBN_ERR_LIMIT = 5,            /* search or enumeration bound exceeded */
  RBN_ERR_IO = 6,
  RBN_ERR_INTERNAL = 7
} rbn_status;

typedef struct rbn_code rbn_code;
typedef struct rbn_report rbn_report;

typedef struct rbn_stats {
  uint32_t discs;
  uint32_t bands;
  int64_t chi;
  int connected;
  int64_t double_genus; /* meaningful only when connected != 0 */
  uint32_t components;
} rbn_stats;

RBN_API const char* rbn_last_error(void);
RBN_API const char* rbn_status_name(rbn_status status);
RBN_API void rbn_string_free(char* s);

/* Parsing and serialization. `strict` = 0 accepts semantically invalid codes
 * (disc range, duplicate ids) so that rbn_code_validate can diagnose them. */
RBN_API rbn_status rbn_code_parse(const char* text, size_t length, int strict, rbn_code** out);
RBN_API rbn_status rbn_code_load(const char* path, int strict, rbn_code** out);
RBN_API rbn_status rbn_code_serialize(const rbn_code* code, char** out);
RBN_API void rbn_code_free(rbn_code* code);

RBN_API uint32_t rbn_code_discs(const rbn_code* code);
RBN_API uint32_t rbn_code_bands(const rbn_code* code);

/* Newline-separated diagnostics (empty string when valid) and their count. */
RBN_API rbn_status rbn_code_validate(const rbn_code* code, char** diagnostics, size_t* count);
RBN_API rbn_status rbn_code_stats(const rbn_code* code, rbn_stats* out);
/* `d=.. b=.. chi=.. connected=.. double_genus=.. components=..` */
RBN_API rbn_status rbn_code_stats_text(const rbn_code* code, char** out);

/* Deterministic generator; *connected is set to 0 only when b < d - 1. */
RBN_API rbn_status rbn_code_generate(uint64_t seed, uint32_t discs, uint32_t bands, uint32_t max_word_len,
                                     rbn_code** out, int* connected);

/* Bounds. */
RBN_API rbn_status rbn_theorem2_bound(const rbn_code* code, uint32_t* out);
RBN_API rbn_status rbn_bound_report(const rbn_code* code, int refined, int heuristic, rbn_report** out);
RBN_API void rbn_report_free(rbn_report* report);
RBN_API uint32_t rbn_report_theorem2(const rbn_report* report);
/* Returns 0 when the report was built without the refined search. */
RBN_API int rbn_report_refined(const rbn_report* report, int64_t* genus_bound);
/* Partition of the refined certificate in `1,3|2,4` syntax, or NULL. Owned by the report. */
RBN_API const char* rbn_report_partition(const rbn_report* report);
RBN_API int rbn_report_certified(const rbn_report* report);
RBN_API int rbn_report_has_caveat(const rbn_report* report);
/* Flat key=value lines. */
RBN_API rbn_status rbn_report_text(const rbn_report* report, char** out);

/* Cancellation traces for every band under a partition in `1,3|2,4` syntax. */
RBN_API rbn_status rbn_reduce(const rbn_code* code, const char* partition, char** traces, int* all_cancellable);

/* Oracle checks. `report` receives PASS/FAIL/SKIP lines, *passed is 1 when
 * nothing failed, and `counterexample` (may be NULL) receives the first
 * failing code in file format, or NULL when none. */
RBN_API rbn_status rbn_oracle_check(const rbn_code* code, char** report, int* passed, char** counterexample);
RBN_API rbn_status rbn_oracle_sweep(size_t corpus_size, uint64_t seed, char** report, int* passed,
                                    char** counterexample);

#ifdef __cplusplus
}
#endif

#endif /* RIBBON_RIBBON_H */
