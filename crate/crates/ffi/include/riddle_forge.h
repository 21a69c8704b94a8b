#ifndef RIDDLE_FORGE_H
#define RIDDLE_FORGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Bit flags for `rf_puzzles_solve_json`.
#define RF_SOLVE_CHECK 1

#define RF_SOLVE_EXPLAIN 2

#define RF_SOLVE_CEIL_SUBJECTS 4

typedef enum RfStatus {
  RF_STATUS_OK = 0,
  RF_STATUS_NULL_POINTER = 1,
  RF_STATUS_INVALID_UTF8 = 2,
  RF_STATUS_INVALID_INSTANCE = 3,
  RF_STATUS_INFEASIBLE = 4,
  RF_STATUS_ZERO_DENOMINATOR = 5,
  RF_STATUS_MALFORMED_TREE = 6,
  RF_STATUS_NO_MEETING = 7,
  RF_STATUS_INVALID_BOUNDS = 8,
  RF_STATUS_PARSE_ERROR = 9,
  RF_STATUS_OUT_OF_RANGE = 10,
  RF_STATUS_PANIC = 11,
} RfStatus;

typedef enum RfPuzzleKind {
  RF_PUZZLE_KIND_RATE = 0,
  RF_PUZZLE_KIND_WEIGHING = 1,
  RF_PUZZLE_KIND_PIGEONHOLE = 2,
  RF_PUZZLE_KIND_TRANSFER = 3,
  RF_PUZZLE_KIND_STATION = 4,
} RfPuzzleKind;

// Opaque list of parsed puzzles.
typedef struct RfPuzzleSet RfPuzzleSet;

// Opaque balance-scale decision tree.
typedef struct RfStrategy RfStrategy;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null if there was
// none. The caller owns the returned string.
char *rf_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void rf_string_free(char *s);

// Minimum worst-case weighings for `n_objects` by the closed formula.
//
// # Safety
// `out` must be valid for writes.
enum RfStatus rf_weighing_formula(uint64_t n_objects, uint32_t *out);

// Minimum worst-case weighings by exhaustive minimax; `n_objects` must
// not exceed 6561.
//
// # Safety
// `out` must be valid for writes.
enum RfStatus rf_weighing_oracle(uint64_t n_objects, uint32_t *out);

// `n_colors·(required − 1) + 1`.
//
// # Safety
// `out` must be valid for writes.
enum RfStatus rf_pigeonhole_formula(uint64_t n_colors, uint64_t required, uint64_t *out);

// Exact guarantee for the given per-color counts.
//
// # Safety
// `counts` must point to `n_colors` readable values; `out` must be valid
// for writes.
enum RfStatus rf_pigeonhole_oracle(const uint64_t *counts,
                                   size_t n_colors,
                                   uint64_t required,
                                   uint64_t *out);

// Builds the decision tree for `n_objects` (at most 6561).
//
// # Safety
// `out` must be valid for writes. Free the handle with `rf_strategy_free`.
enum RfStatus rf_strategy_new(uint64_t n_objects, struct RfStrategy **out);

// # Safety
// `strategy` must come from `rf_strategy_new` and not be used afterwards.
void rf_strategy_free(struct RfStrategy *strategy);

// Worst-case number of weighings in the tree.
//
// # Safety
// `strategy` must be a live handle; `out` must be valid for writes.
enum RfStatus rf_strategy_depth(const struct RfStrategy *strategy, uint32_t *out);

// Runs the tree against a heavy object at index `heavy`.
//
// # Safety
// `strategy` must be a live handle; both out-pointers must be valid for
// writes.
enum RfStatus rf_strategy_simulate(const struct RfStrategy *strategy,
                                   uint64_t heavy,
                                   uint64_t *out_found,
                                   uint32_t *out_weighings);

// Indented text form of the tree. The caller owns the string.
//
// # Safety
// `strategy` must be a live handle; `out` must be valid for writes.
enum RfStatus rf_strategy_to_text(const struct RfStrategy *strategy, char **out);

// Parses speck source. On `RF_STATUS_PARSE_ERROR` the last error message
// lists every error, one `line:col: kind: message` per line.
//
// # Safety
// `source` must be a NUL-terminated string; `out` must be valid for
// writes. Free the handle with `rf_puzzles_free`.
enum RfStatus rf_puzzles_parse(const char *source, struct RfPuzzleSet **out);

// # Safety
// `set` must come from `rf_puzzles_parse` and not be used afterwards.
void rf_puzzles_free(struct RfPuzzleSet *set);

// Number of puzzles in the set; zero for a null handle.
//
// # Safety
// `set` must be null or a live handle.
size_t rf_puzzles_len(const struct RfPuzzleSet *set);

// # Safety
// `set` must be a live handle; `out` must be valid for writes.
enum RfStatus rf_puzzles_kind(const struct RfPuzzleSet *set, size_t index, enum RfPuzzleKind *out);

// Solves one puzzle and returns its report as a JSON object. `flags` is a
// combination of the `RF_SOLVE_*` bits. The caller owns the string.
//
// # Safety
// `set` must be a live handle; `out` must be valid for writes.
enum RfStatus rf_puzzles_solve_json(const struct RfPuzzleSet *set,
                                    size_t index,
                                    uint32_t flags,
                                    char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIDDLE_FORGE_H */
