/*
 * C interface to the pqtorsion library.
 *
 * Every call returns a pqt_status. On failure, pqt_last_error() returns a
 * message for the calling thread that stays valid until that thread's next
 * call into the library. Handles are opaque and must be released with the
 * matching *_destroy function. Strings returned through char** are owned by
 * the caller and must be released with pqt_free_string().
 */
#ifndef PQTORSION_PQTORSION_H
#define PQTORSION_PQTORSION_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PQTORSION_BUILDING_LIBRARY)
#define PQT_API __declspec(dllexport)
#else
#define PQT_API __declspec(dllimport)
#endif
#else
#define PQT_API __attribute__((visibility("default")))
#endif

#define PQT_ABI_VERSION 1u

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pqt_status {
  PQT_OK = 0,
  PQT_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value, bad bound */
  PQT_ERR_INVALID_PAIR = 2,     /* p or q not prime, or p == q */
  PQT_ERR_DOMAIN = 3,           /* e.g. ell not an odd prime */
  PQT_ERR_OVERFLOW = 4,         /* an intermediate left the 128-bit range */
  PQT_ERR_PARSE = 5,
  PQT_ERR_IO = 6,
  PQT_ERR_BUFFER_TOO_SMALL = 7, /* *count still receives the required size */
  PQT_ERR_INTERNAL = 8
} pqt_status;

typedef enum pqt_format { PQT_FORMAT_CSV = 0, PQT_FORMAT_JSON = 1 } pqt_format;

typedef enum pqt_report_style { PQT_REPORT_TEXT = 0, PQT_REPORT_JSON = 1 } pqt_report_style;

typedef enum pqt_ideal { PQT_IDEAL_M1 = 0, PQT_IDEAL_M2 = 1, PQT_IDEAL_M3 = 2, PQT_IDEAL_M4 = 3 } pqt_ideal;

typedef enum pqt_certificate { PQT_CERTIFIED = 0, PQT_NOT_CERTIFIED = 1 } pqt_certificate;

typedef struct pqt_rows pqt_rows;
typedef struct pqt_report pqt_report;

typedef struct pqt_genus_info {
  uint64_t e2;
  uint64_t e3;
  uint64_t genus;
} pqt_genus_info;

/* Numeric columns of one table row. d_order and k_order saturate to
 * UINT64_MAX if they exceed 64 bits; use pqt_rows_serialize for exact text. */
typedef struct pqt_row_info {
  uint64_t p;
  uint64_t q;
  uint64_t genus;
  int in_s3;
  int in_s5;
  int in_s7;
  uint64_t d_order;
  int has_k_order;
  uint64_t k_order;
} pqt_row_info;

typedef struct pqt_scan_options {
  uint64_t p_max;
  uint64_t q_max;
  int has_genus_max; /* nonzero keeps only 1 <= genus <= genus_max */
  uint64_t genus_max;
  unsigned threads; /* 0 = hardware concurrency */
} pqt_scan_options;

PQT_API uint32_t pqt_abi_version(void);
PQT_API const char* pqt_status_string(pqt_status status);
PQT_API const char* pqt_last_error(void);
PQT_API void pqt_free_string(char* s);

/* Scalar queries. */
PQT_API pqt_status pqt_is_prime(uint64_t n, int* out);
PQT_API pqt_status pqt_genus(uint64_t p, uint64_t q, pqt_genus_info* out);
PQT_API pqt_status pqt_ideal_maximal(uint64_t p, uint64_t q, uint64_t ell, pqt_ideal ideal, int* out);
PQT_API pqt_status pqt_skorobogatov_nonzero(uint64_t p, uint64_t q, uint64_t ell, int* out);
PQT_API pqt_status pqt_certify(uint64_t p, uint64_t q, uint64_t ell, pqt_certificate* out);
PQT_API pqt_status pqt_s_ell_member(uint64_t p, uint64_t q, uint64_t ell, int* out);
PQT_API pqt_status pqt_exceptional_primes(uint64_t p, uint64_t q, uint64_t* primes, size_t capacity,
                                          size_t* count);
/* Prime-power factors of D(pq) ascending, and its order. */
PQT_API pqt_status pqt_kernel_subgroup(uint64_t p, uint64_t q, uint64_t* factors, size_t capacity, size_t* count,
                                       uint64_t* order);

/* Row sets. */
PQT_API pqt_status pqt_table1(pqt_rows** out);
PQT_API pqt_status pqt_scan(const pqt_scan_options* options, pqt_rows** out);
PQT_API pqt_status pqt_rows_parse(const char* text, size_t length, pqt_format format, pqt_rows** out);
PQT_API size_t pqt_rows_count(const pqt_rows* rows);
PQT_API pqt_status pqt_rows_get(const pqt_rows* rows, size_t index, pqt_row_info* out);
/* Fixture mismatches recorded by pqt_table1; zero for other row sets. */
PQT_API size_t pqt_rows_mismatch_count(const pqt_rows* rows);
PQT_API const char* pqt_rows_mismatch(const pqt_rows* rows, size_t index);
PQT_API pqt_status pqt_rows_serialize(const pqt_rows* rows, pqt_format format, char** out);
PQT_API pqt_status pqt_rows_write(const pqt_rows* rows, pqt_format format, const char* path);
PQT_API void pqt_rows_destroy(pqt_rows* rows);

/* Full per-pair analysis. */
PQT_API pqt_status pqt_analyze(uint64_t p, uint64_t q, uint64_t ell_bound, pqt_report** out);
PQT_API int pqt_report_genus_zero(const pqt_report* report);
PQT_API pqt_status pqt_report_render(const pqt_report* report, pqt_report_style style, char** out);
PQT_API void pqt_report_destroy(pqt_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PQTORSION_PQTORSION_H */
