#ifndef ILNET_H
#define ILNET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum IlnetStatus {
  IlnetStatus_Ok = 0,
  IlnetStatus_NullPointer = 1,
  IlnetStatus_InvalidArgument = 2,
  IlnetStatus_ParseError = 3,
  IlnetStatus_ArithmeticError = 4,
  IlnetStatus_IntegrityError = 5,
  IlnetStatus_Unsupported = 6,
  IlnetStatus_VacuousDomain = 7,
} IlnetStatus;

/**
 * Opaque exact-matrix handle.
 */
typedef struct IlnetMatrix IlnetMatrix;

/**
 * Opaque network handle.
 */
typedef struct IlnetNetwork IlnetNetwork;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the most recent error on this thread, or null. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *ilnet_last_error(void);

/**
 * Free a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned by an `ilnet_*` function, or
 * null.
 */
void ilnet_string_free(char *s);

/**
 * Build the rectangular grid network with unit weights.
 */
enum IlnetStatus ilnet_network_grid(uint32_t m, uint32_t n, uint32_t k, struct IlnetNetwork **out);

/**
 * Build the rectangular grid network with seeded positive rational weights.
 */
enum IlnetStatus ilnet_network_grid_seeded(uint32_t m,
                                           uint32_t n,
                                           uint32_t k,
                                           uint64_t seed,
                                           struct IlnetNetwork **out);

/**
 * Parse a network in the line-oriented `ILNET 1` text format.
 *
 * # Safety
 * `text` must be a valid nul-terminated string; `out` non-null.
 */
enum IlnetStatus ilnet_network_parse(const char *text, struct IlnetNetwork **out);

/**
 * Render a network in the `ILNET 1` text format.
 *
 * # Safety
 * `net` must be a live handle; `out` non-null.
 */
enum IlnetStatus ilnet_network_render(const struct IlnetNetwork *net, char **out);

/**
 * # Safety
 * `net` must be a handle from this library or null; it is consumed.
 */
void ilnet_network_free(struct IlnetNetwork *net);

/**
 * Verify the stored bottleneck witness. `flags` receives five booleans:
 * non-returning, sink-branching, k-bottlenecked, sink-bottlenecked,
 * interlacing.
 *
 * # Safety
 * `net` must be a live handle; `flags` must point to at least 5 bytes.
 */
enum IlnetStatus ilnet_network_check(const struct IlnetNetwork *net, uint8_t *flags);

/**
 * Exhaustively check that the sink swap is a weight-preserving involution
 * on every pair of every pattern (desk-scale networks only).
 *
 * # Safety
 * `net` must be a live handle; `out_ok` non-null.
 */
enum IlnetStatus ilnet_swap_involution_check(const struct IlnetNetwork *net, uint8_t *out_ok);

/**
 * Three-term relation `wt(I,J) = wt(I,J') + wt(I,J'')`.
 *
 * # Safety
 * `net` must be a live handle; the index arrays must match their lengths;
 * `out_ok` non-null.
 */
enum IlnetStatus ilnet_verify_three_term(const struct IlnetNetwork *net,
                                         const uint32_t *i_set,
                                         uintptr_t i_len,
                                         const uint32_t *j_set,
                                         uintptr_t j_len,
                                         uint8_t *out_ok);

/**
 * Parity relation over sink patterns with a fixed even part.
 *
 * # Safety
 * As for `ilnet_verify_three_term`.
 */
enum IlnetStatus ilnet_verify_parity(const struct IlnetNetwork *net,
                                     const uint32_t *i_set,
                                     uintptr_t i_len,
                                     const uint32_t *k_even,
                                     uintptr_t k_len,
                                     uint8_t *out_ok);

/**
 * Path matrix of a network.
 *
 * # Safety
 * `net` must be a live handle; `out` non-null.
 */
enum IlnetStatus ilnet_path_matrix(const struct IlnetNetwork *net, struct IlnetMatrix **out);

/**
 * Parse a matrix: whitespace-separated exact entries, one row per line.
 *
 * # Safety
 * `text` must be a valid nul-terminated string; `out` non-null.
 */
enum IlnetStatus ilnet_matrix_parse(const char *text, struct IlnetMatrix **out);

/**
 * Render a matrix in the same text format.
 *
 * # Safety
 * `m` must be a live handle; `out` non-null.
 */
enum IlnetStatus ilnet_matrix_render(const struct IlnetMatrix *m, char **out);

/**
 * # Safety
 * `m` must be a handle from this library or null; it is consumed.
 */
void ilnet_matrix_free(struct IlnetMatrix *m);

/**
 * Interlacing-matrix predicate; on a negative verdict the violating minor
 * is described by `ilnet_last_error`.
 *
 * # Safety
 * `m` must be a live handle; `out_ok` non-null.
 */
enum IlnetStatus ilnet_matrix_is_interlacing(const struct IlnetMatrix *m,
                                             uint32_t k,
                                             uint8_t *out_ok);

/**
 * Three-term determinant identity on an interlacing matrix, checked both
 * directly and on the embedded Plucker coordinates.
 *
 * # Safety
 * As for `ilnet_verify_three_term`, with a matrix handle.
 */
enum IlnetStatus ilnet_verify_intermat(const struct IlnetMatrix *m,
                                       uint32_t k,
                                       const uint32_t *i_set,
                                       uintptr_t i_len,
                                       const uint32_t *j_set,
                                       uintptr_t j_len,
                                       uint8_t *out_ok);

/**
 * Vanishing-pattern membership for the interlacing cell.
 *
 * # Safety
 * `m` must be a live handle; both out-pointers non-null.
 */
enum IlnetStatus ilnet_mstar_membership(const struct IlnetMatrix *m,
                                        uint32_t k,
                                        uint8_t *out_in_closure,
                                        uint8_t *out_exact);

/**
 * Verify the octahedron recurrence, the product identity and the entry
 * recursion. Pass a matrix text, or null with a symbolic size.
 *
 * # Safety
 * `matrix_text` must be null or a valid string; `out_ok` non-null.
 */
enum IlnetStatus ilnet_rsk_verify(const char *matrix_text,
                                  uint32_t symbolic_m,
                                  uint32_t symbolic_n,
                                  uint8_t *out_ok);

/**
 * Render the four RSK tables for a matrix (or the symbolic input when
 * `matrix_text` is null).
 *
 * # Safety
 * As for `ilnet_rsk_verify`; `out` non-null.
 */
enum IlnetStatus ilnet_rsk_tables(const char *matrix_text,
                                  uint32_t symbolic_m,
                                  uint32_t symbolic_n,
                                  char **out);

/**
 * Verify one of the named Schur identities at `nvars` variables. Names:
 * flagged | flagged-top | rectangle-square | skew | overlap-shift |
 * interlacing-sum. `t` is the identity's integer parameter (the omitted
 * row index for flagged/skew, the row-count parameter for overlap-shift);
 * `mu` is used by interlacing-sum and may be empty otherwise.
 *
 * # Safety
 * `name` must be a valid string; the arrays must match their lengths;
 * `out_ok` non-null.
 */
enum IlnetStatus ilnet_schur_identity(const char *name,
                                      const uint32_t *lambda,
                                      uintptr_t lambda_len,
                                      const uint32_t *mu,
                                      uintptr_t mu_len,
                                      uint32_t t,
                                      uint32_t nvars,
                                      uint8_t *out_ok);

/**
 * Schur positivity of the rectangle-family difference.
 *
 * # Safety
 * `out_ok` must be non-null.
 */
enum IlnetStatus ilnet_rectangle_positivity(uint32_t c,
                                            uint32_t r,
                                            uint32_t t,
                                            uint32_t nvars,
                                            uint8_t *out_ok);

/**
 * Schur positivity of the row-omission difference.
 *
 * # Safety
 * `nu` must match its length; `out_ok` non-null.
 */
enum IlnetStatus ilnet_row_omission_positivity(const uint32_t *nu,
                                               uintptr_t nu_len,
                                               uintptr_t t,
                                               uint32_t nvars,
                                               uint8_t *out_ok);

/**
 * Run the difference-vector conjecture analysis; reports whether every
 * admissible index gives a Schur-positive difference.
 *
 * # Safety
 * The partition arrays must match their lengths; `out_all_positive`
 * non-null.
 */
enum IlnetStatus ilnet_conjecture_check(const uint32_t *lambda,
                                        uintptr_t lambda_len,
                                        const uint32_t *mu,
                                        uintptr_t mu_len,
                                        uint32_t nvars,
                                        uint8_t *out_all_positive);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ILNET_H */
