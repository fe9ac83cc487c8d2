#ifndef F1AN_H
#define F1AN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes.  Anything nonzero leaves a message in f1an_last_error(). */
typedef enum {
  F1AN_OK = 0,
  F1AN_EPARSE = 1,          /* malformed JSON or unknown request */
  F1AN_EDOMAIN = 2,         /* operand outside the operation's domain */
  F1AN_EUNSUPPORTED = 3,
  F1AN_ETOOLARGE = 4,
  F1AN_EPRECISION = 5,      /* p-adic precision exhausted */
  F1AN_EUNBOUNDED = 6,      /* no finite bound constant exists */
  F1AN_ECOUNTEREXAMPLE = 7, /* a verified inequality failed */
  F1AN_EINTERNAL = 8
} f1an_status;

/* Message for the most recent failure on this thread.  Borrowed pointer,
 * valid until the next failing call. */
const char* f1an_last_error(void);

/* All char** outputs are malloc'd; release them with this. */
void f1an_string_free(char* s);

/* Opaque finite normed pointed set. */
typedef struct f1an_set f1an_set;

f1an_status f1an_set_parse(const char* json, f1an_set** out);
f1an_status f1an_set_to_json(const f1an_set* s, char** json_out);
void f1an_set_free(f1an_set* s);

f1an_status f1an_set_product(const f1an_set* x, const f1an_set* y, f1an_set** out);
f1an_status f1an_set_coproduct(const f1an_set* x, const f1an_set* y, f1an_set** out);
f1an_status f1an_set_smash(const f1an_set* x, const f1an_set* y, f1an_set** out);
f1an_status f1an_set_hom(const f1an_set* x, const f1an_set* y, f1an_set** out);
f1an_status f1an_set_separation(const f1an_set* x, f1an_set** out);

/* Generic JSON-in / JSON-out evaluator.  The request carries an "op" field;
 * see the README for the operation catalogue and payload schemas. */
f1an_status f1an_eval(const char* request_json, char** result_json_out);

/* Berkovich-spectrum export; options select format ("json" | "svg"),
 * max_prime, samples_per_branch, and interval-ring overlays. */
f1an_status f1an_spectrum_export(const char* options_json, char** out);

/* Run a named verification suite ("all" runs everything); the report lists
 * one pass/fail entry per check. */
f1an_status f1an_verify(const char* suite, uint64_t seed, char** report_json_out);

#ifdef __cplusplus
}
#endif

#endif /* F1AN_H */
