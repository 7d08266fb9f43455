#ifndef STARCLEAN_H
#define STARCLEAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SC_BUILDING_LIBRARY)
#    define SC_API __declspec(dllexport)
#  else
#    define SC_API __declspec(dllimport)
#  endif
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID = 1,  /* malformed spec or violated precondition */
  SC_ERR_LIMIT = 2,    /* a size or enumeration bound was hit */
  SC_ERR_INTERNAL = 3  /* a library self-check failed */
} sc_status;

typedef enum sc_format { SC_FORMAT_TEXT = 0, SC_FORMAT_JSON = 1 } sc_format;

typedef struct sc_field sc_field;
typedef struct sc_group sc_group;
typedef struct sc_report sc_report;

typedef struct sc_options {
  int oracle;
  int paranoid;
  uint64_t max_subsets;
  uint64_t max_order;
  int count_all;
  int distance;
  int matrices;
} sc_options;

SC_API const char* sc_version(void);
/* Message for the last failed call on this thread, "" if none. */
SC_API const char* sc_last_error(void);
SC_API void sc_string_free(char* s);
SC_API void sc_options_default(sc_options* opts);

/* GF(q); q must be a prime power up to 2^24. */
SC_API sc_status sc_field_create(uint64_t q, sc_field** out);
SC_API void sc_field_destroy(sc_field* f);
SC_API uint64_t sc_field_size(const sc_field* f);
SC_API uint64_t sc_field_characteristic(const sc_field* f);
SC_API sc_status sc_field_describe(const sc_field* f, char** out);

/* "C3xC9" style spec. */
SC_API sc_status sc_group_parse(const char* spec, sc_group** out);
SC_API void sc_group_destroy(sc_group* g);
SC_API uint64_t sc_group_order(const sc_group* g);
SC_API uint64_t sc_group_exponent(const sc_group* g);
SC_API sc_status sc_group_name(const sc_group* g, char** out);

/* involution: "classical" | "identity" | "sigma1:v=<int>" | "sigma2:v=<int>". */
SC_API sc_status sc_analyze(const sc_field* f, const sc_group* g, const char* involution, const sc_options* opts,
                            sc_report** out);
SC_API void sc_report_destroy(sc_report* r);
SC_API int sc_report_verdict(const sc_report* r);
/* Returns 1 and stores t when a witness exists. */
SC_API int sc_report_witness(const sc_report* r, uint64_t* t);
SC_API uint64_t sc_report_m(const sc_report* r);
SC_API int sc_report_oracle_checked(const sc_report* r);
SC_API int sc_report_discrepancy(const sc_report* r);
SC_API sc_status sc_report_render(const sc_report* r, sc_format fmt, char** out);

SC_API sc_status sc_idempotents(const sc_field* f, const sc_group* g, const sc_options* opts, sc_format fmt,
                                char** out);
SC_API sc_status sc_codes(const sc_field* f, const sc_group* g, const sc_options* opts, sc_format fmt, char** out);
SC_API sc_status sc_involutions(const sc_field* f, const sc_group* g, sc_format fmt, char** out);
/* discrepancy may be NULL. */
SC_API sc_status sc_scan(const sc_field* f, const char* involution, const sc_options* opts, sc_format fmt,
                         char** out, int* discrepancy);
/* Whether every involution of GF(q) G is sigma1-type; |G| odd, gcd(q, |G|) = 1. reason may be NULL. */
SC_API sc_status sc_only_sigma1(const sc_field* f, const sc_group* g, int* result, char** reason);

#ifdef __cplusplus
}
#endif

#endif
