/* Shortest-edit-script toolkit: C interface.
 *
 * All functions that can fail return a ses_status and write results
 * through out parameters; SES_OK means every out parameter was written.
 * ses_last_error() describes the most recent failure on the calling
 * thread. Strings returned through char** are malloc-backed and must be
 * released with ses_string_free(); token text returned as const char* is
 * borrowed and lives as long as the owning object.
 */
#ifndef SES_H
#define SES_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef SES_API
#if defined(_WIN32)
#define SES_API
#else
#define SES_API __attribute__((visibility("default")))
#endif
#endif

typedef enum ses_status {
  SES_OK = 0,
  SES_ERROR_INVALID_ARGUMENT,
  SES_ERROR_ENCODING,
  SES_ERROR_GRANULARITY_MISMATCH,
  SES_ERROR_PARSE,
  SES_ERROR_CONFLICT,
  SES_ERROR_APPLY_MISMATCH,
  SES_ERROR_GUARD,
  SES_ERROR_NO_RESULT,
  SES_ERROR_NOMEM,
  SES_ERROR_INTERNAL,
  SES_ERROR_CHECK_FAILED
} ses_status;

typedef enum ses_granularity {
  SES_GRANULARITY_CHARACTER = 0,
  SES_GRANULARITY_WORD,
  SES_GRANULARITY_LINE
} ses_granularity;

typedef enum ses_format {
  SES_FORMAT_COMPACT = 0,
  SES_FORMAT_VERBOSE,
  SES_FORMAT_JSON
} ses_format;

typedef enum ses_op_kind {
  SES_OP_INSERT = 0,
  SES_OP_DELETE,
  SES_OP_SUBSTITUTE
} ses_op_kind;

typedef struct ses_sequence ses_sequence;
typedef struct ses_script ses_script;
typedef struct ses_matrix ses_matrix;

SES_API const char* ses_version(void);
SES_API const char* ses_status_name(ses_status status);

/* Message for the last failure on this thread; empty string if none. */
SES_API const char* ses_last_error(void);

SES_API void ses_string_free(char* text);

/* --- sequences --------------------------------------------------------- */

/* Splits text (text_len bytes, need not be NUL terminated) into tokens.
 * Input must be valid UTF-8. */
SES_API ses_status ses_tokenize(const char* text, size_t text_len,
                                ses_granularity granularity,
                                ses_sequence** out);
SES_API void ses_sequence_free(ses_sequence* seq);
SES_API size_t ses_sequence_size(const ses_sequence* seq);
SES_API ses_granularity ses_sequence_granularity(const ses_sequence* seq);

/* Borrowed pointer to the token's text; NULL if index is out of range. */
SES_API const char* ses_sequence_token(const ses_sequence* seq, size_t index,
                                       size_t* len_out);

/* Reassembles the sequence into text. len_out may be NULL. */
SES_API ses_status ses_detokenize(const ses_sequence* seq, char** out,
                                  size_t* len_out);

/* --- distances and scripts --------------------------------------------- */

SES_API ses_status ses_distance(const ses_sequence* source,
                                const ses_sequence* target, size_t* out);
SES_API ses_status ses_shortest_script(const ses_sequence* source,
                                       const ses_sequence* target,
                                       ses_script** out);

/* Same script recovered by walking the distance table backwards. */
SES_API ses_status ses_backtrace_script(const ses_sequence* source,
                                        const ses_sequence* target,
                                        ses_script** out);

SES_API void ses_script_free(ses_script* script);
SES_API size_t ses_script_size(const ses_script* script);
SES_API size_t ses_script_source_len(const ses_script* script);
SES_API size_t ses_script_target_len(const ses_script* script);

/* Reads one op. Any out parameter may be NULL; old/new text is borrowed
 * and set to NULL (length 0) when the op does not carry it. */
SES_API ses_status ses_script_op(const ses_script* script, size_t index,
                                 ses_op_kind* kind_out, size_t* source_pos_out,
                                 size_t* target_pos_out, const char** old_out,
                                 size_t* old_len_out, const char** new_out,
                                 size_t* new_len_out);

SES_API ses_status ses_script_serialize(const ses_script* script,
                                        ses_format format, char** out,
                                        size_t* len_out);

/* Compact and json formats only; the verbose format cannot be parsed. */
SES_API ses_status ses_script_parse(const char* text, size_t text_len,
                                    ses_format format, ses_script** out);

SES_API ses_status ses_script_invert(const ses_script* script,
                                     ses_script** out);
SES_API ses_status ses_script_apply(const ses_script* script,
                                    const ses_sequence* source,
                                    ses_sequence** out);

/* --- the full table ----------------------------------------------------- */

SES_API ses_status ses_script_matrix(const ses_sequence* source,
                                     const ses_sequence* target,
                                     ses_matrix** out);
SES_API void ses_matrix_free(ses_matrix* matrix);
SES_API size_t ses_matrix_rows(const ses_matrix* matrix);
SES_API size_t ses_matrix_cols(const ses_matrix* matrix);
SES_API ses_status ses_matrix_distance_at(const ses_matrix* matrix, size_t i,
                                          size_t j, size_t* out);
SES_API ses_status ses_matrix_script_length_at(const ses_matrix* matrix,
                                               size_t i, size_t j,
                                               size_t* out);
SES_API ses_status ses_matrix_script_at(const ses_matrix* matrix, size_t i,
                                        size_t j, ses_script** out);
SES_API ses_status ses_matrix_total_instructions(const ses_matrix* matrix,
                                                 size_t* out);

/* --- brute-force cross-checks ------------------------------------------ */

/* Exponential reference distance; both sequences limited to 8 tokens. */
SES_API ses_status ses_oracle_distance(const ses_sequence* source,
                                       const ses_sequence* target,
                                       size_t* out);

/* Compares the dynamic program against the brute force on every string
 * pair up to max_len (<= 4) over an alphabet of 1..3 letters. Returns
 * SES_OK with a one-line summary, or SES_ERROR_CHECK_FAILED with the
 * first disagreement in *summary_out. */
SES_API ses_status ses_oracle_check(size_t max_len, size_t alphabet,
                                    char** summary_out);

/* Probes the unguarded tie rule for a pair it gets wrong; scans lengths
 * up to max_len (<= 6) over 1..3 letters. *found_out (may be NULL) is set
 * to 1 when a witness exists, and *report_out to a one-line description
 * either way. */
SES_API ses_status ses_tie_rule_search(size_t max_len, size_t alphabet,
                                       int* found_out, char** report_out);

/* --- measurements ------------------------------------------------------- */

/* Times the table fill on worst-case pairs; sizes in 1..1024, trials >= 3.
 * Writes CSV rows plus `# key=value` summary lines. */
SES_API ses_status ses_bench_time_scaling(const size_t* sizes,
                                          size_t size_count, size_t trials,
                                          char** csv_out);

/* Counts stored edit instructions on worst-case pairs; sizes in 1..512. */
SES_API ses_status ses_bench_space_measurement(const size_t* sizes,
                                               size_t size_count,
                                               char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* SES_H */
