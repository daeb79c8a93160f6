/* C interface of the filtered-multiplicative-basis library.
 *
 * Every operation is JSON in, JSON out: `op` names the operation
 * ("fmb/verify", "lie/env", "group/corollary2", "scenario/lemma2",
 * "convert", ...), `json_in` carries its input document, and the result
 * document is returned as a heap string owned by the library. Output is
 * deterministic: identical inputs produce byte-identical text.
 *
 * Status codes double as CLI exit codes: OK when the requested property is
 * verified / the object is found / every check passes; REFUTED when the
 * property fails or nothing is found; INVALID on malformed or
 * precondition-violating input; INTERNAL only for library bugs.
 */
#ifndef FMB_H
#define FMB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FMB_OK = 0,
  FMB_REFUTED = 1,
  FMB_INVALID = 2,
  FMB_INTERNAL = 3
} fmb_status;

/* Runs one operation. `json_out` may be NULL when only the status matters;
 * otherwise it receives a NUL-terminated JSON document to be released with
 * fmb_string_release. On INVALID/INTERNAL no output is produced and
 * fmb_last_error() describes the problem. */
fmb_status fmb_run_json(const char* op, const char* json_in, char** json_out);

/* A parsed and validated input document (group, lie, or algebra schema). */
typedef struct fmb_object fmb_object;

/* Parses and validates `json_text`; on OK stores a handle in *out.
 * The handle is released with fmb_object_release. */
fmb_status fmb_object_parse(const char* json_text, fmb_object** out);

/* Schema kind of a parsed document: "group", "lie", or "algebra".
 * The string lives as long as the handle. */
const char* fmb_object_kind(const fmb_object* obj);

/* Canonical serialization of a parsed document (release the string). */
fmb_status fmb_object_dump(const fmb_object* obj, char** json_out);

/* Runs an operation whose input is a single entity: the document is wrapped
 * under its schema-kind key and all other parameters take their defaults. */
fmb_status fmb_run(const char* op, const fmb_object* obj, char** json_out);

void fmb_object_release(fmb_object* obj);
void fmb_string_release(char* s);

/* Message describing the last failure on the calling thread; never NULL. */
const char* fmb_last_error(void);

/* Operation catalog, stable order. */
int fmb_op_count(void);
const char* fmb_op_name(int index); /* NULL when out of range */

const char* fmb_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FMB_H */
