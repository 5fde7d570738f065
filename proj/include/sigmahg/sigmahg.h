/* SPDX-License-Identifier: Apache-2.0 */
#ifndef SIGMAHG_SIGMAHG_H_
#define SIGMAHG_SIGMAHG_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SH_API __declspec(dllexport)
#else
#define SH_API __attribute__((visibility("default")))
#endif

typedef struct sh_instance sh_instance;
typedef struct sh_colouring sh_colouring;

typedef enum sh_status {
  SH_OK = 0,
  SH_ERR_VALIDATION = 1,
  SH_ERR_PRECONDITION = 2,
  SH_ERR_CAP_EXCEEDED = 3,
  SH_ERR_COLOURING = 4,
  SH_ERR_SIZE = 5,
  SH_ERR_PARSE = 6,
  SH_ERR_INTERNAL = 7,
  SH_ERR_ARGUMENT = 8
} sh_status;

typedef enum sh_format { SH_FORMAT_JSON = 0, SH_FORMAT_TEXT = 1 } sh_format;

typedef enum sh_direction { SH_WALK_DOWN = 0, SH_WALK_UP = 1 } sh_direction;

SH_API const char* sh_version(void);
SH_API const char* sh_status_name(sh_status status);
/* Message for the last failure on the calling thread; "" after success. */
SH_API const char* sh_last_error(void);
/* Releases any string returned through a char** out-parameter. */
SH_API void sh_string_free(char* text);

/* Instances. sigma parts may be given in any order. */
SH_API sh_status sh_instance_create(int n, int r, int q, const int* sigma, size_t parts,
                                    sh_instance** out);
SH_API sh_status sh_instance_from_json(const char* json, sh_instance** out);
SH_API void sh_instance_destroy(sh_instance* inst);
SH_API int sh_instance_n(const sh_instance* inst);
SH_API int sh_instance_r(const sh_instance* inst);
SH_API int sh_instance_q(const sh_instance* inst);
SH_API int sh_instance_degenerate(const sh_instance* inst);
SH_API sh_status sh_instance_to_json(const sh_instance* inst, char** out);

/* Colourings. Colours are relabelled onto 1..k preserving their order. */
SH_API sh_status sh_colouring_create(int n, int q, const int* colours, sh_colouring** out);
SH_API sh_status sh_colouring_from_json(const char* json, sh_colouring** out);
SH_API void sh_colouring_destroy(sh_colouring* col);
SH_API int sh_colouring_k(const sh_colouring* col);
SH_API sh_status sh_colouring_to_json(const sh_colouring* col, char** out);

/* Fast check; with cross_check != 0 also runs the explicit edge scan.
   *out_valid receives 1 for VALID (may be NULL). */
SH_API sh_status sh_check(const sh_instance* inst, const sh_colouring* col, int alpha, int beta,
                          int cross_check, sh_format format, char** out, int* out_valid);

/* count random colourings (seeded) checked by both checkers;
   *out_mismatches receives the number of status disagreements. */
SH_API sh_status sh_random_check(const sh_instance* inst, int alpha, int beta, int count,
                                 uint64_t seed, int max_colours, char** out, int* out_mismatches);

/* k_max = 0 means nq. budget = 0 means the library default. */
SH_API sh_status sh_spectrum(const sh_instance* inst, int alpha, int beta, int k_max,
                             uint64_t budget, sh_format format, char** out);

/* scheme is a name such as "zone" or "TWO_ZONE"; param is k for zone and t
   for two_zone, ignored otherwise. */
SH_API sh_status sh_construct(const sh_instance* inst, const char* scheme, int param,
                              sh_format format, char** out);

/* Applicable scheme names with parameters, one per line. */
SH_API sh_status sh_list_constructions(const sh_instance* inst, char** out);

/* JSON lines, one per step plus a terminal line. */
SH_API sh_status sh_walk(const sh_instance* inst, const sh_colouring* col, sh_direction direction,
                         int target_k, int step_limit, char** out);

/* k_max = 0 lets the verifier choose. *out_refuted may be NULL. */
SH_API sh_status sh_verify(const sh_instance* inst, int alpha, int beta, uint64_t budget,
                           int k_max, sh_format format, char** out, int* out_refuted);

/* Verifies every partition of r with at least two parts on H(n,r,q|sigma).
   alpha = beta = 0 selects NMNR bounds per instance. */
SH_API sh_status sh_sweep(int n, int r, int q, int alpha, int beta, uint64_t budget,
                          sh_format format, char** out, int* out_refuted);

#ifdef __cplusplus
}
#endif

#endif /* SIGMAHG_SIGMAHG_H_ */
