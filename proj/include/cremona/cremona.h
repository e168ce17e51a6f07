#ifndef CREMONA_H
#define CREMONA_H

/* C interface to the exact plane Cremona toolkit.
 *
 * Objects are opaque handles created by the *_parse / computing functions
 * and released with the matching *_free. Strings returned through char**
 * are owned by the caller and released with crm_string_free. Every function
 * that can fail returns a crm_status; on failure crm_last_error(ctx) holds
 * a message until the next call on the same context. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CRM_API __attribute__((visibility("default")))
#else
#define CRM_API
#endif

typedef struct crm_context crm_context;
typedef struct crm_map crm_map;
typedef struct crm_word crm_word;
typedef struct crm_cert crm_cert;
typedef struct crm_triple crm_triple;

typedef enum crm_status {
  CRM_OK = 0,
  CRM_DIVISION_BY_ZERO,
  CRM_MIXED_FIELDS,
  CRM_DEGREE_MISMATCH,
  CRM_ZERO_POLYNOMIAL,
  CRM_NOT_DIVISIBLE,
  CRM_SINGULAR_MATRIX,
  CRM_DEGENERATE_COMPOSITION,
  CRM_UNSUPPORTED_DEGREE,
  CRM_IRRATIONAL_BASE_POINT,
  CRM_DUPLICATE_POINTS,
  CRM_COLLINEAR_BASE_POINTS,
  CRM_PATTERN_MISMATCH,
  CRM_HYPOTHESIS_FAILED,
  CRM_GENERICITY_FAILURE,
  CRM_NOT_IDENTITY,
  CRM_NOT_DE_JONQUIERES,
  CRM_SINGULAR_COMPONENT,
  CRM_SINGULAR_INPUT,
  CRM_PARSE_ERROR,
  CRM_INVALID_ARGUMENT,
  CRM_STUCK,          /* simplification stopped; see the stuck report */
  CRM_NULL_ARGUMENT,
  CRM_INTERNAL_ERROR
} crm_status;

CRM_API const char* crm_status_name(crm_status s);
CRM_API void crm_string_free(char* s);

/* field_mode: "q" or "fp:<prime>". */
CRM_API crm_status crm_context_new(const char* field_mode, crm_context** out);
CRM_API void crm_context_free(crm_context* ctx);
CRM_API const char* crm_last_error(const crm_context* ctx);

/* Maps "[f0 : f1 : f2]". */
CRM_API crm_status crm_map_parse(crm_context* ctx, const char* text, crm_map** out);
CRM_API crm_status crm_map_to_string(crm_context* ctx, const crm_map* m, char** out);
/* out = f o g */
CRM_API crm_status crm_map_compose(crm_context* ctx, const crm_map* f, const crm_map* g, crm_map** out);
CRM_API crm_status crm_map_degree(crm_context* ctx, const crm_map* m, int* out);
/* JSON array of points "[a:b:c]"; degree at most 2. */
CRM_API crm_status crm_map_base_points(crm_context* ctx, const crm_map* m, char** out_json);
/* point: "[a:b:c]" */
CRM_API crm_status crm_map_mult(crm_context* ctx, const crm_map* m, const char* point, int* out);
CRM_API crm_status crm_map_equal(crm_context* ctx, const crm_map* a, const crm_map* b, int* out);
CRM_API void crm_map_free(crm_map* m);

/* Words: one letter per line, "sigma" or "lin [[..],[..],[..]]". */
CRM_API crm_status crm_word_parse(crm_context* ctx, const char* text, crm_word** out);
CRM_API crm_status crm_word_to_string(crm_context* ctx, const crm_word* w, char** out);
CRM_API crm_status crm_word_eval(crm_context* ctx, const crm_word* w, crm_map** out);
CRM_API void crm_word_free(crm_word* w);

/* Reduces an identity word. On CRM_OK *out is the certificate; on CRM_STUCK
 * *stuck_json is the stuck report (reason, index, partial certificate). */
CRM_API crm_status crm_simplify(crm_context* ctx, const crm_word* w, uint64_t seed, crm_cert** out,
                                char** stuck_json);
CRM_API crm_status crm_cert_parse_json(crm_context* ctx, const char* json, crm_cert** out);
CRM_API crm_status crm_cert_to_json(crm_context* ctx, const crm_cert* c, char** out);
/* Replays the certificate. *ok is 1 on success; otherwise *failed_step and
 * *message describe the first failure. message may be NULL. */
CRM_API crm_status crm_cert_verify(crm_context* ctx, const crm_cert* c, int* ok, long* failed_step, char** message);
CRM_API void crm_cert_free(crm_cert* c);

/* Seeded check batteries; results as a JSON array of
 * {name, passed, samples, detail}. */
CRM_API crm_status crm_relations_check(crm_context* ctx, uint64_t seed, char** out_json, int* all_passed);
CRM_API crm_status crm_selftest(crm_context* ctx, uint64_t seed, char** out_json, int* all_passed);

/* Triples: n, then three n x n matrices row by row. */
CRM_API crm_status crm_triple_parse(crm_context* ctx, const char* text, crm_triple** out);
CRM_API crm_status crm_triple_to_string(crm_context* ctx, const crm_triple* t, char** out);
CRM_API crm_status crm_giz_act(crm_context* ctx, const crm_word* w, const crm_triple* t, crm_triple** out);
/* Relator checks of the action at one triple, as a JSON object. */
CRM_API crm_status crm_giz_check(crm_context* ctx, const crm_triple* t, char** out_json, int* all_passed);
CRM_API void crm_triple_free(crm_triple* t);

#ifdef __cplusplus
}
#endif

#endif
