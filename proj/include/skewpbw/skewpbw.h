/* Copyright 2026 The skewpbw Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* C interface to the skewpbw library.
 *
 * All objects are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Functions returning skp_status record a
 * message retrievable with skp_last_error_message() on the calling thread. */

#ifndef SKEWPBW_SKEWPBW_H_
#define SKEWPBW_SKEWPBW_H_

#include <stddef.h>

#if defined(__GNUC__)
#define SKP_API __attribute__((visibility("default")))
#else
#define SKP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skp_status {
  SKP_OK = 0,
  SKP_ERR_PARSE = 1,
  SKP_ERR_INVALID = 2,    /* invalid system, arity, context, shape */
  SKP_ERR_ARGUMENT = 3,
  SKP_ERR_BUDGET = 4,
  SKP_ERR_INDETERMINATE = 5,
  SKP_ERR_NULL = 6,
  SKP_ERR_INTERNAL = 7
} skp_status;

typedef struct skp_presentation skp_presentation;
typedef struct skp_options skp_options;
typedef struct skp_report skp_report;

SKP_API const char* skp_version(void);

/* Thread-local details of the last failing call. Line and column are 0
 * unless the failure was a located parse error. */
SKP_API const char* skp_last_error_message(void);
SKP_API size_t skp_last_error_line(void);
SKP_API size_t skp_last_error_column(void);

/* Parses and validates a presentation. */
SKP_API skp_status skp_presentation_parse(const char* text,
                                          skp_presentation** out);
SKP_API void skp_presentation_free(skp_presentation* p);
/* Canonical rendering and 16-hex-digit digest; valid until the handle is
 * freed. */
SKP_API const char* skp_presentation_render(const skp_presentation* p);
SKP_API const char* skp_presentation_digest(const skp_presentation* p);

SKP_API skp_options* skp_options_new(void);
SKP_API void skp_options_free(skp_options* o);
/* "NAME=VALUE" with a rational VALUE. */
SKP_API skp_status skp_options_set_param(skp_options* o, const char* assignment);
SKP_API void skp_options_set_oracle(skp_options* o, int enabled);
SKP_API void skp_options_set_max_degree(skp_options* o, size_t d);
SKP_API void skp_options_set_node_cap(skp_options* o, size_t cap);
SKP_API void skp_options_set_trace(skp_options* o, int enabled);
SKP_API void skp_options_set_timing(skp_options* o, int enabled);
SKP_API void skp_options_set_verify(skp_options* o, int enabled);
/* Presentation text for derive-conditions; NULL clears it. */
SKP_API void skp_options_set_substitute(skp_options* o, const char* text);

/* The commands take presentation text (not a parsed handle) so that parse
 * errors land in the report. `options` may be NULL. They fail only on NULL
 * arguments or allocation failure; every other outcome is a report. */
SKP_API skp_status skp_check(const char* text, const skp_options* options,
                             skp_report** out);
SKP_API skp_status skp_normal_form(const char* text, const char* expr,
                                   const skp_options* options,
                                   skp_report** out);
SKP_API skp_status skp_classify(const char* text, const skp_options* options,
                                skp_report** out);
SKP_API skp_status skp_derive_conditions(const skp_options* options,
                                         skp_report** out);

/* 0 success, 1 negative verdict, 2 input error, 3 indeterminate. */
SKP_API int skp_report_exit_code(const skp_report* r);
SKP_API const char* skp_report_text(const skp_report* r);
/* indent < 0 gives compact JSON. */
SKP_API const char* skp_report_json(skp_report* r, int indent);
SKP_API void skp_report_free(skp_report* r);

/* Name of the built-in corpus entry with this digest, or NULL. */
SKP_API const char* skp_corpus_lookup(const char* digest);
/* Text of a built-in corpus entry, or NULL. */
SKP_API const char* skp_corpus_text(const char* name);

#ifdef __cplusplus
}
#endif

#endif /* SKEWPBW_SKEWPBW_H_ */
