#ifndef QCI_H
#define QCI_H

/* C interface to the quantum complete intersection toolkit.
 *
 * The library works with finite dimensional algebras
 *   k<x_1..x_n> / (x_u^{a_u},  x_i x_j - q_ij x_j x_i  for i < j)
 * over an exact field k (a prime field "p:<prime>" or a cyclotomic field
 * "cyclo:<a>", the rationals with a primitive a-th root of unity adjoined).
 *
 * Conventions:
 *  - Every function that can fail returns a qci_status; QCI_OK is 0.  On
 *    failure the output parameters are untouched and qci_last_error() holds
 *    a human-readable message for the calling thread.
 *  - Scalars cross the boundary as strings in the field's own syntax
 *    (e.g. "3" over a prime field, "1,-1" for coordinates over a
 *    cyclotomic field); elements and reports cross as JSON text.
 *  - Strings returned through char** are heap-allocated; release them with
 *    qci_string_free().  Handles are released with their _destroy function.
 *    All functions tolerate NULL handles by failing cleanly.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qci_status {
  QCI_OK = 0,
  QCI_ERR_INTERNAL = 1,
  QCI_ERR_INVALID_ARGUMENT = 2,
  QCI_ERR_PARSE = 3,
  QCI_ERR_IO = 4,
  QCI_ERR_NO_PRIMITIVE_ROOT = 5,
  QCI_ERR_FIELD_MISMATCH = 6,
  QCI_ERR_PRESENTATION_MISMATCH = 7,
  QCI_ERR_DIMENSION_MISMATCH = 8,
  QCI_ERR_INHOMOGENEOUS_ELEMENT = 9,
  QCI_ERR_ZERO_LEADING_COORDINATE = 10,
  QCI_ERR_ODD_CODIMENSION = 11,
  QCI_ERR_INVALID_MODULE = 12,
  QCI_ERR_ILL_DEFINED_MAP = 13,
  QCI_ERR_WINDOW_EMPTY = 14,
  QCI_ERR_NO_ALPHA_FOUND = 15,
  QCI_ERR_INVALID_CHAIN_STEP = 16,
  QCI_ERR_POSITIVE_CHARACTERISTIC = 17,
  QCI_ERR_NON_UNITAL_INPUT = 18,
  QCI_ERR_CANNOT_DECIDE = 19,
  QCI_ERR_MATH_CHECK_FAILED = 20
} qci_status;

typedef struct qci_presentation qci_presentation;
typedef struct qci_element qci_element;

/* Library version, a static string; do not free. */
const char* qci_version(void);

/* Stable identifier for a status code ("InvalidArgument", ...); static. */
const char* qci_status_name(qci_status status);

/* Message from the most recent failing call on this thread; static storage,
 * valid until the next library call on the same thread.  Empty after a
 * successful call. */
const char* qci_last_error(void);

/* Release a string obtained from any char** output parameter. */
void qci_string_free(char* s);

/* ---- presentations ------------------------------------------------- */

/* Build a presentation from explicit data.  field_spec is "p:<prime>" or
 * "cyclo:<a>"; exponents lists n values a_u >= 2; commutators lists the
 * n*(n-1)/2 scalars q_ij in row-major pair order (1,2), (1,3), ...,
 * (n-1,n), each as a scalar string. */
qci_status qci_presentation_create(const char* field_spec, uint32_t n,
                                   const uint32_t* exponents,
                                   const char* const* commutators,
                                   qci_presentation** out);

/* Convenience constructor: all exponents equal to a and every q_ij the
 * same primitive a-th root of unity in the field. */
qci_status qci_presentation_homogeneous(const char* field_spec, uint32_t n,
                                        uint32_t a, qci_presentation** out);

void qci_presentation_destroy(qci_presentation* p);

/* Dimension of the algebra as a k-vector space (the product of the
 * exponents). */
qci_status qci_presentation_dimension(const qci_presentation* p,
                                      uint64_t* out);

/* 1 when all exponents agree and all q_ij equal one primitive root. */
qci_status qci_presentation_is_homogeneous(const qci_presentation* p,
                                           int* out);

qci_status qci_presentation_to_json(const qci_presentation* p, char** out);
qci_status qci_presentation_from_json(const char* json_text,
                                      qci_presentation** out);

/* ---- elements ------------------------------------------------------ */

qci_status qci_element_zero(const qci_presentation* p, qci_element** out);
qci_status qci_element_one(const qci_presentation* p, qci_element** out);
qci_status qci_element_generator(const qci_presentation* p, uint32_t index,
                                 qci_element** out);

/* The linear form sigma = alpha_1 x_1 + ... + alpha_n x_n; alpha lists n
 * scalar strings. */
qci_status qci_element_linear_form(const qci_presentation* p,
                                   const char* const* alpha,
                                   qci_element** out);

void qci_element_destroy(qci_element* e);

qci_status qci_element_add(const qci_element* a, const qci_element* b,
                           qci_element** out);
qci_status qci_element_mul(const qci_element* a, const qci_element* b,
                           qci_element** out);
qci_status qci_element_scale(const qci_element* a, const char* scalar,
                             qci_element** out);

/* 1 if zero, 0 if nonzero, -1 on NULL input. */
int qci_element_is_zero(const qci_element* e);

qci_status qci_element_to_string(const qci_element* e, char** out);
qci_status qci_element_to_json(const qci_element* e, char** out);

/* ---- certificates -------------------------------------------------- */

/* The witness word for a coefficient tuple alpha (n scalar strings): x_2
 * when n = 2, and for larger even n a product of one generator from each
 * later commuting pair chosen against alpha.  Requires even n. */
qci_status qci_witness_word(const qci_presentation* p,
                            const char* const* alpha, qci_element** out);

/* Decide whether the witness word of alpha lies in sigma*A + A*sigma,
 * where sigma is the linear form of alpha.  member_out gets 1 or 0;
 * report_json_out (optional, may be NULL) gets the full report including
 * the certificate coefficient. */
qci_status qci_membership(const qci_presentation* p,
                          const char* const* alpha, int* member_out,
                          char** report_json_out);

/* ---- command runner ------------------------------------------------ */

/* Run one toolkit command described by a JSON configuration object and
 * produce its report.  Returns the process exit code contract directly:
 *   0  every check passed (report written)
 *   1  a mathematical check failed (report still written)
 *   2  the configuration or input was unusable (no report; see
 *      qci_last_error())
 * report_out receives the JSON (or CSV) report text for codes 0 and 1. */
int qci_run_command(const char* config_json, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* QCI_H */
