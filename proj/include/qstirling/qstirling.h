#ifndef QSTIRLING_H
#define QSTIRLING_H

/* C interface to the q-Stirling library. Every function returns a status;
 * results come back through out-parameters. Strings handed out by the
 * library are freed with qs_string_free, handles with their own free
 * function. On failure qs_last_error() describes the problem for the
 * calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#define QS_API __declspec(dllexport)
#else
#define QS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qs_status {
  QS_OK = 0,
  QS_INVALID_ARGUMENT = 1,
  QS_BOUND_EXCEEDED = 2,
  QS_DIVISION_BY_ZERO = 3,
  QS_NONZERO_REMAINDER = 4,
  QS_PARITY_VIOLATION = 5,
  QS_POLE_IN_RANGE = 6,
  QS_INVALID_WEIGHT = 7,
  QS_RANGE_VIOLATION = 8,
  QS_INTERNAL = 9
} qs_status;

typedef struct qs_poly qs_poly;
typedef struct qs_report qs_report;

QS_API const char* qs_status_message(qs_status status);
/* Message of the last failed call on this thread; "" if none. */
QS_API const char* qs_last_error(void);
QS_API void qs_string_free(char* s);

/* kind is 1 or 2; method is "enum", "closed", "closed-alt", "path" or
 * "identity" (NULL means "closed"). */
QS_API qs_status qs_stirling(int kind, int n, int k, const char* method, qs_poly** out);
QS_API qs_status qs_poly_parse(const char* text, qs_poly** out);
QS_API void qs_poly_free(qs_poly* p);
/* Canonical text, e.g. "q^3 + 2*q^2 + 2*q + 1". */
QS_API qs_status qs_poly_to_string(const qs_poly* p, char** out);
/* Array of decimal-string coefficients, ascending. */
QS_API qs_status qs_poly_to_json(const qs_poly* p, char** out);
/* Value at the integer q, in decimal. */
QS_API qs_status qs_poly_eval(const qs_poly* p, long q, char** out);
/* Degree, or -1 for the zero polynomial. */
QS_API qs_status qs_poly_degree(const qs_poly* p, long* out);
QS_API int qs_poly_equal(const qs_poly* a, const qs_poly* b);

/* format is "csv", "json" or "latex"; method as for qs_stirling. */
QS_API qs_status qs_table(int kind, int nmax, const char* method, const char* format, char** out);
/* Re-renders a JSON table as CSV. */
QS_API qs_status qs_table_json_to_csv(const char* json, char** out);

/* suite is one of "identities", "formulas", "paths", "bijections",
 * "hypergeometric", "proof-steps", "all". */
QS_API qs_status qs_verify(const char* suite, int nmax, qs_report** out);
QS_API void qs_report_free(qs_report* r);
QS_API size_t qs_report_total(const qs_report* r);
QS_API size_t qs_report_failed(const qs_report* r);
QS_API double qs_report_wall_seconds(const qs_report* r);
QS_API qs_status qs_report_to_json(const qs_report* r, char** out);
QS_API qs_status qs_report_to_text(const qs_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
