/*
 * Copyright 2026 braidtk developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * braidtk C API.
 *
 * Opaque handles over the braid toolkit: braid words, T-link specs, the
 * full-twist rewrite pipeline, satellite construction and the not-a-T-knot
 * certificates. Every function returns a btk_status; results come back
 * through out-parameters. Strings returned through char** are owned by the
 * caller and must be released with btk_string_free. Handles are released
 * with their _free function. On any failure btk_last_error() describes the
 * problem for the calling thread.
 */

#ifndef BRAIDTK_H
#define BRAIDTK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum btk_status {
  BTK_OK = 0,
  BTK_ERR_INVALID_ARGUMENT = 1, /* bad input or violated precondition */
  BTK_ERR_PARSE = 2,            /* malformed text input */
  BTK_ERR_PRECONDITION = 3,     /* no-op signal, e.g. destabilize refused */
  BTK_ERR_INTERNAL = 4          /* broken internal invariant (a bug) */
} btk_status;

typedef enum btk_framing {
  BTK_FRAMING_SEIFERT_ZERO = 0,
  BTK_FRAMING_BLACKBOARD = 1
} btk_framing;

typedef struct btk_braid btk_braid;
typedef struct btk_tlink btk_tlink;

const char* btk_version(void);
/* Message for the most recent failure on this thread; empty if none. */
const char* btk_last_error(void);
void btk_string_free(char* s);

/* ---- braid words ------------------------------------------------------- */

/* Text format: "n=<strands>\n<signed generator indices>". */
btk_status btk_braid_parse(const char* text, btk_braid** out);
btk_status btk_braid_from_letters(int strands, const int32_t* letters,
                                  int32_t count, btk_braid** out);
btk_status btk_braid_format(const btk_braid* w, char** out);
void btk_braid_free(btk_braid* w);

int32_t btk_braid_strands(const btk_braid* w);
int32_t btk_braid_length(const btk_braid* w);
/* Buffer must hold btk_braid_length entries. */
btk_status btk_braid_letters(const btk_braid* w, int32_t* buffer, int32_t size);
int32_t btk_braid_is_positive(const btk_braid* w);

btk_status btk_braid_compose(const btk_braid* a, const btk_braid* b, btk_braid** out);
btk_status btk_braid_inverse(const btk_braid* w, btk_braid** out);
btk_status btk_braid_conjugate(const btk_braid* w, const btk_braid* g, btk_braid** out);
/* BTK_ERR_PRECONDITION when sigma_{n-1} is not a single positive crossing. */
btk_status btk_braid_destabilize(const btk_braid* w, btk_braid** out);
btk_status btk_braid_full_twist(int32_t strands, btk_braid** out);

/* Buffer of `size` >= strands entries; image of each start position, 1-based. */
btk_status btk_braid_permutation(const btk_braid* w, int32_t* buffer, int32_t size);

/* ---- invariants --------------------------------------------------------- */

btk_status btk_braid_components(const btk_braid* w, int32_t* out);
btk_status btk_braid_exponent_sum(const btk_braid* w, int64_t* out);
btk_status btk_braid_self_linking(const btk_braid* w, int64_t* out);
/* Positive knot words only. */
btk_status btk_braid_genus(const btk_braid* w, int64_t* out);
/* Canonical Alexander polynomial as text, e.g. "1 - t + t^2". */
btk_status btk_braid_alexander(const btk_braid* w, char** out);
btk_status btk_braid_garside_inf(const btk_braid* w, int32_t* out);
btk_status btk_braid_contains_full_twist(const btk_braid* w, int32_t* out);
/* Normalized Kauffman bracket in A; refuses words above crossing_cap. */
btk_status btk_braid_kauffman(const btk_braid* w, int32_t crossing_cap, char** out);

/* ---- T-links ------------------------------------------------------------ */

/* Text format: "T((r1,s1),(r2,s2),...)". */
btk_status btk_tlink_parse(const char* text, btk_tlink** out);
/* rs_pairs is r0,s0,r1,s1,... of length 2*pair_count. */
btk_status btk_tlink_from_pairs(const int32_t* rs_pairs, int32_t pair_count,
                                btk_tlink** out);
btk_status btk_tlink_format(const btk_tlink* t, char** out);
void btk_tlink_free(btk_tlink* t);

int32_t btk_tlink_pair_count(const btk_tlink* t);
btk_status btk_tlink_pairs(const btk_tlink* t, int32_t* buffer, int32_t size);
btk_status btk_tlink_standard_braid(const btk_tlink* t, btk_braid** out);
btk_status btk_tlink_is_knot(const btk_tlink* t, int32_t* out);
btk_status btk_tlink_transpose_dual(const btk_tlink* t, btk_tlink** out);

/* ---- full-twist rewrite pipeline ---------------------------------------- */

/* Certificate JSON with the rewritten positive braid, step log, Garside inf
 * and the invariant evidence for both sides. */
btk_status btk_fulltwist_certificate(const btk_tlink* t, char** json_out);
btk_status btk_fulltwist_braid(const btk_tlink* t, btk_braid** out);

/* ---- satellites ---------------------------------------------------------- */

btk_status btk_satellite_braid(const btk_braid* companion, const btk_braid* pattern,
                               int32_t cable_width, btk_framing framing,
                               btk_braid** out);
/* Companion T(a,a+1), pattern T(lower...,(b,(a-1)(a+1)b+k)); lower_spec is a
 * T-link spec text for the lower pairs or NULL for none. */
btk_status btk_family_instance(const char* lower_spec, int32_t a, int32_t b,
                               int32_t k, btk_braid** out_braid,
                               int64_t* out_predicted_crossings);

/* ---- obstruction certificates -------------------------------------------- */

/* verdict_out: 1 = certified_not_tknot, 0 = inconclusive. */
btk_status btk_not_tknot_certificate(const char* lower_spec, int32_t a, int32_t b,
                                     int32_t k, char** json_out, int32_t* verdict_out);
btk_status btk_corollary_family(int32_t a, int32_t b, char** json_out,
                                int32_t* verdict_out);

/* ---- catalog -------------------------------------------------------------- */

/* Append a record to the JSON-lines catalog at `path`. id_out receives the
 * content hash; appended_out is 1 when a new line was written, 0 when the
 * hash was already present. */
btk_status btk_catalog_append(const char* path, const char* kind,
                              const char* payload_json, char** id_out,
                              int32_t* appended_out);

#ifdef __cplusplus
}
#endif

#endif /* BRAIDTK_H */
