/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef STRONGRAT_H
#define STRONGRAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum StrongratStatus {
  STRONGRAT_STATUS_OK = 0,
  STRONGRAT_STATUS_NULL_ARGUMENT = 1,
  STRONGRAT_STATUS_INVALID_UTF8 = 2,
  STRONGRAT_STATUS_PARSE = 3,
  STRONGRAT_STATUS_SHAPE = 4,
  STRONGRAT_STATUS_OUT_OF_RANGE = 5,
  STRONGRAT_STATUS_INVALID_PRIMES = 6,
  STRONGRAT_STATUS_OCCURRENCE_BOUND = 7,
  STRONGRAT_STATUS_RESOURCE_LIMIT = 8,
  STRONGRAT_STATUS_INVALID_WITNESS = 9,
  STRONGRAT_STATUS_PARAMETER = 10,
  STRONGRAT_STATUS_BUFFER_TOO_SMALL = 11,
  STRONGRAT_STATUS_PANIC = 12,
} StrongratStatus;

/**
 * Satisfiability notion used by [`strongrat_formula_brute_force`].
 */
typedef enum StrongratSatMode {
  STRONGRAT_SAT_MODE_SAT = 0,
  STRONGRAT_SAT_MODE_ONE_IN_THREE = 1,
  STRONGRAT_SAT_MODE_ALL_SAME = 2,
} StrongratSatMode;

/**
 * Opaque 3-CNF formula.
 */
typedef struct StrongratFormula StrongratFormula;

/**
 * Opaque problem instance.
 */
typedef struct StrongratInstance StrongratInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *strongrat_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void strongrat_string_free(char *s);

/**
 * Parses the instance text format.
 */
enum StrongratStatus strongrat_instance_parse(const char *text, struct StrongratInstance **out);

/**
 * Releases an instance. Null is ignored.
 */
void strongrat_instance_free(struct StrongratInstance *inst);

/**
 * Number of items in the instance.
 */
enum StrongratStatus strongrat_instance_len(const struct StrongratInstance *inst, size_t *out_len);

/**
 * Serializes the instance in the text format.
 */
enum StrongratStatus strongrat_instance_to_text(const struct StrongratInstance *inst, char **out);

/**
 * Size measures as a CSV header line and one data line.
 */
enum StrongratStatus strongrat_instance_sizes_csv(const struct StrongratInstance *inst, char **out);

/**
 * Decides the instance by dynamic programming, or by exhaustive search when
 * `use_oracle` is set. `budget` caps DP cells or search nodes; 0 selects the
 * default. On a yes answer the witness (one quantity per item) is written to
 * `witness`, which must hold `strongrat_instance_len` entries.
 */
enum StrongratStatus strongrat_decide(const struct StrongratInstance *inst,
                                      bool use_oracle,
                                      uint64_t budget,
                                      bool *out_answer,
                                      uint64_t *witness,
                                      size_t witness_cap);

/**
 * Checks a witness of `len` quantities against the instance.
 */
enum StrongratStatus strongrat_verify(const struct StrongratInstance *inst,
                                      const uint64_t *witness,
                                      size_t len,
                                      bool *out_valid);

/**
 * Approximates a knapsack-01 instance within relative performance `rho`
 * (a rational such as "1/4"). The chosen subset goes to `subset` and the
 * achieved profit, as a rational string, to `out_profit`.
 */
enum StrongratStatus strongrat_fptas(const struct StrongratInstance *inst,
                                     const char *rho,
                                     uint64_t *subset,
                                     size_t subset_cap,
                                     char **out_profit);

/**
 * Parses DIMACS CNF text with three literals per clause.
 */
enum StrongratStatus strongrat_formula_parse(const char *text, struct StrongratFormula **out);

/**
 * Releases a formula. Null is ignored.
 */
void strongrat_formula_free(struct StrongratFormula *f);

enum StrongratStatus strongrat_formula_num_vars(const struct StrongratFormula *f, size_t *out);

enum StrongratStatus strongrat_formula_num_clauses(const struct StrongratFormula *f, size_t *out);

/**
 * Serializes the formula as DIMACS CNF.
 */
enum StrongratStatus strongrat_formula_to_dimacs(const struct StrongratFormula *f, char **out);

/**
 * Exhaustive search for a valuation accepted under `mode`. When one exists
 * its values (0 or 1 per variable) are written to `valuation`, which must
 * hold `num_vars` entries.
 */
enum StrongratStatus strongrat_formula_brute_force(const struct StrongratFormula *f,
                                                   enum StrongratSatMode mode,
                                                   bool *out_found,
                                                   uint8_t *valuation,
                                                   size_t valuation_cap);

/**
 * Satisfiability to one-in-three gadget. With `require_le4` the input must
 * have every variable occurring at most four times.
 */
enum StrongratStatus strongrat_gadget_one_in_three(const struct StrongratFormula *f,
                                                   bool require_le4,
                                                   struct StrongratFormula **out);

/**
 * One-in-three to all-the-same gadget.
 */
enum StrongratStatus strongrat_gadget_all_same(const struct StrongratFormula *f,
                                               struct StrongratFormula **out);

/**
 * Builds the prime-denominator instance for a formula, as unbounded subset
 * sum or, with `partition`, as a partition instance.
 */
enum StrongratStatus strongrat_reduce(const struct StrongratFormula *f,
                                      bool partition,
                                      struct StrongratInstance **out);

/**
 * Writes the first `n` primes to `buf`, which must hold `n` entries.
 */
enum StrongratStatus strongrat_first_primes(size_t n, uint64_t *buf, size_t cap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRONGRAT_H */
