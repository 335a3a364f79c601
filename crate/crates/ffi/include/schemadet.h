#ifndef SCHEMADET_H
#define SCHEMADET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_UTF8 = 2,
  SD_STATUS_PARSE = 3,
  SD_STATUS_UNKNOWN_LETTER = 4,
  SD_STATUS_ALPHABET_MISMATCH = 5,
  SD_STATUS_NONDETERMINISTIC_SCHEMA = 6,
  SD_STATUS_KIND_MISMATCH = 7,
  SD_STATUS_PRECONDITION = 8,
  SD_STATUS_INTERNAL = 9,
} SdStatus;

/**
 * Opaque automaton handle: a word automaton or a stepwise hedge automaton.
 */
typedef struct SdAutomaton SdAutomaton;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *sd_last_error(void);

/**
 * Parses an automaton in the textual format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SdStatus sd_automaton_parse(const char *text, struct SdAutomaton **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `a` must come from this library and must not be used afterwards.
 */
void sd_automaton_free(struct SdAutomaton *a);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void sd_string_free(char *s);

/**
 * Canonical textual serialization.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum SdStatus sd_automaton_to_text(const struct SdAutomaton *a, char **out);

/**
 * DOT rendering.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum SdStatus sd_automaton_to_dot(const struct SdAutomaton *a, char **out);

/**
 * Number of states, or 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t sd_automaton_num_states(const struct SdAutomaton *a);

/**
 * Number of states plus number of rules, or 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t sd_automaton_size(const struct SdAutomaton *a);

/**
 * 1 when the automaton is a hedge automaton, 0 for a word automaton.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
bool sd_automaton_is_hedge(const struct SdAutomaton *a);

/**
 * # Safety
 * `a` must be null or a live handle.
 */
bool sd_automaton_is_deterministic(const struct SdAutomaton *a);

/**
 * Accessible determinization, states numbered by ascending subset.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum SdStatus sd_determinize(const struct SdAutomaton *a, struct SdAutomaton **out);

/**
 * Schema-based determinization, states numbered by ascending subset.
 *
 * # Safety
 * `a` and `schema` must be live handles and `out` a valid pointer.
 */
enum SdStatus sd_schema_determinize(const struct SdAutomaton *a,
                                    const struct SdAutomaton *schema,
                                    struct SdAutomaton **out);

/**
 * Schema-based cleaning.
 *
 * # Safety
 * `a` and `schema` must be live handles and `out` a valid pointer.
 */
enum SdStatus sd_schema_clean(const struct SdAutomaton *a,
                              const struct SdAutomaton *schema,
                              struct SdAutomaton **out);

/**
 * Accessible product.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum SdStatus sd_product(const struct SdAutomaton *a,
                         const struct SdAutomaton *b,
                         struct SdAutomaton **out);

/**
 * The one-x schema over the alphabet of `a`, of the same kind as `a`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum SdStatus sd_one_x_schema(const struct SdAutomaton *a, struct SdAutomaton **out);

/**
 * Membership of a whitespace-separated word, or nested word for hedge automata.
 *
 * # Safety
 * `a` must be a live handle, `input` a NUL-terminated string and `out` a valid pointer.
 */
enum SdStatus sd_accepts(const struct SdAutomaton *a, const char *input, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHEMADET_H */
