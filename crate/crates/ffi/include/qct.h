#ifndef QCT_H
#define QCT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes. `QCT_STATUS_OK` is zero; everything else is a failure.
typedef enum QctStatus {
  QCT_STATUS_OK = 0,
  QCT_STATUS_NULL_POINTER = 1,
  QCT_STATUS_INVALID_UTF8 = 2,
  QCT_STATUS_NOT_PRIME = 3,
  QCT_STATUS_FIELD_TOO_LARGE = 4,
  QCT_STATUS_INVALID_FIELD = 5,
  QCT_STATUS_FIELD_MISMATCH = 6,
  QCT_STATUS_INVALID_BASIS = 7,
  QCT_STATUS_SEARCH_CAP_EXCEEDED = 8,
  QCT_STATUS_INVALID_DEFINING_SET = 9,
  QCT_STATUS_INVALID_PARAMETERS = 10,
  QCT_STATUS_MALFORMED_MATRIX = 11,
  QCT_STATUS_LENGTH_MISMATCH = 12,
  QCT_STATUS_NOT_NESTED = 13,
  QCT_STATUS_DEGENERATE = 14,
  QCT_STATUS_NOT_MDS = 15,
  QCT_STATUS_PRECONDITIONS = 16,
  QCT_STATUS_MALFORMED_RECORD = 17,
  QCT_STATUS_NOT_FOUND = 18,
  QCT_STATUS_IO = 19,
  QCT_STATUS_JSON = 20,
  QCT_STATUS_PANIC = 99,
} QctStatus;

// Opaque linear code handle.
typedef struct QctCode QctCode;

// Opaque finite field handle.
typedef struct QctField QctField;

// Message of the last failed call on this thread, or NULL. The pointer is
// valid until the next call into this library on the same thread.
const char *qct_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void qct_string_free(char *s);

// Builds GF(p^e).
enum QctStatus qct_field_new(uint32_t p, uint32_t e, struct QctField **out);

// # Safety
// `f` must come from [`qct_field_new`] and not have been freed.
void qct_field_free(struct QctField *f);

// Field order, or 0 for NULL.
uint32_t qct_field_order(const struct QctField *f);

enum QctStatus qct_field_add(const struct QctField *f, uint32_t a, uint32_t b, uint32_t *out);

enum QctStatus qct_field_mul(const struct QctField *f, uint32_t a, uint32_t b, uint32_t *out);

// Multiplicative inverse; zero has none and fails with
// `QCT_STATUS_INVALID_PARAMETERS`.
enum QctStatus qct_field_inv(const struct QctField *f, uint32_t a, uint32_t *out);

// Builds the code spanned by a row-major `rows x cols` generator matrix of
// element indices.
//
// # Safety
// `entries` must point to `rows * cols` readable values.
enum QctStatus qct_code_from_generator(const struct QctField *f,
                                       const uint32_t *entries,
                                       uintptr_t rows,
                                       uintptr_t cols,
                                       struct QctCode **out);

// Parses a JSON code record.
enum QctStatus qct_code_from_json(const char *json, struct QctCode **out);

// Serializes a code as a JSON record.
enum QctStatus qct_code_to_json(const struct QctCode *c, char **out);

// # Safety
// `c` must come from this library and not have been freed.
void qct_code_free(struct QctCode *c);

// Length n, or 0 for NULL.
uintptr_t qct_code_length(const struct QctCode *c);

// Dimension k, or 0 for NULL.
uintptr_t qct_code_dimension(const struct QctCode *c);

enum QctStatus qct_code_dual(const struct QctCode *c, struct QctCode **out);

// Hermitian dual of a code over GF(q^2).
enum QctStatus qct_code_hermitian_dual(const struct QctCode *c, struct QctCode **out);

// Whether `inner` is a subcode of `outer`.
enum QctStatus qct_code_contains(const struct QctCode *outer,
                                 const struct QctCode *inner,
                                 bool *out);

// Minimum distance. `exact` is set to false when only a lower bound could
// be certified within `cap` codewords (0 selects the default cap).
enum QctStatus qct_code_min_distance(const struct QctCode *c,
                                     uint64_t cap,
                                     uintptr_t *value,
                                     bool *exact);

// Standard CSS from C1 < C2; writes the parameter record as JSON.
enum QctStatus qct_css_standard(const struct QctCode *c1,
                                const struct QctCode *c2,
                                uint64_t cap,
                                char **out_json);

// Hermitian CSS from C1^(perp h) < C2; writes the parameter record as JSON.
enum QctStatus qct_css_hermitian(const struct QctCode *c1,
                                 const struct QctCode *c2,
                                 uint64_t cap,
                                 char **out_json);

// Runs a pipeline described by a JSON request such as
// `{"pipeline": "bch1", "m": 10, "d1": 15, "d2": 31}` (optional `"cap"`)
// and writes its JSON result.
enum QctStatus qct_quantum_json(const char *request, char **out_json);

// Audits one target (`table1` .. `table4`, `examples`) and writes the
// report as JSON.
enum QctStatus qct_audit_json(const char *target, uint64_t cap, char **out_json);

#endif  /* QCT_H */
