#ifndef KMHECKE_H
#define KMHECKE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define KMH_API __attribute__((visibility("default")))
#else
#define KMH_API
#endif

typedef struct kmh_job kmh_job;

/* Also the CLI exit codes. */
typedef enum {
  KMH_OK = 0,
  KMH_NEGATIVE = 1, /* the computation ran; the answer is negative or an expectation failed */
  KMH_USAGE = 2,    /* bad config, bad data, bound too small */
  KMH_INTERNAL = 3  /* an invariant that should always hold did not */
} kmh_status;

KMH_API const char* kmh_version(void);

KMH_API kmh_job* kmh_job_new(void);
KMH_API kmh_status kmh_job_from_text(const char* text, kmh_job** out);
KMH_API kmh_status kmh_job_from_file(const char* path, kmh_job** out);
KMH_API void kmh_job_free(kmh_job* job);

/* name: coroot_height, weyl_length, ball, n_cap, dominance_cap, probe_coeff */
KMH_API kmh_status kmh_job_set_bound(kmh_job* job, const char* name, long long value);
KMH_API kmh_status kmh_job_set_seed(kmh_job* job, unsigned long long seed);
/* "irreducible", "reducible", or NULL to clear */
KMH_API kmh_status kmh_job_set_expect(kmh_job* job, const char* expect);
KMH_API kmh_status kmh_job_serialize(const kmh_job* job, char** out);

/* format: "text" or "json". *out is set on KMH_OK and KMH_NEGATIVE, and for a failed
   verify-identities run; free it with kmh_string_free. */
KMH_API kmh_status kmh_run(const kmh_job* job, const char* subcommand, const char* format, char** out);

/* Last failure on this thread; empty if none. */
KMH_API const char* kmh_last_error(void);
KMH_API const char* kmh_last_error_code(void);

KMH_API void kmh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
