/* C interface to the orbihom library. Every function reporting a status
 * leaves a description retrievable with orbihom_last_error() on failure
 * (per thread). Strings returned through char** are released with
 * orbihom_string_free. */
#ifndef ORBIHOM_ORBIHOM_H
#define ORBIHOM_ORBIHOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(ORBIHOM_BUILDING_LIBRARY)
#define ORBIHOM_API __attribute__((visibility("default")))
#else
#define ORBIHOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orbihom_status {
    ORBIHOM_OK = 0,
    ORBIHOM_ERR_INPUT = 1,        /* malformed descriptor or file, unknown name */
    ORBIHOM_ERR_PRECONDITION = 2, /* valid input outside an operation's domain */
    ORBIHOM_ERR_ARGUMENT = 3,     /* null handle, index out of range */
    ORBIHOM_ERR_INTERNAL = 4
} orbihom_status;

typedef enum orbihom_model {
    ORBIHOM_MODEL_T = 0,
    ORBIHOM_MODEL_UNDERLYING = 1,
    ORBIHOM_MODEL_WS = 2
} orbihom_model;

typedef enum orbihom_coeff {
    ORBIHOM_COEFF_Z = 0,
    ORBIHOM_COEFF_Q = 1
} orbihom_coeff;

typedef struct orbihom_complex orbihom_complex;
typedef struct orbihom_groups orbihom_groups;
typedef struct orbihom_report orbihom_report;

ORBIHOM_API const char* orbihom_version(void);
ORBIHOM_API const char* orbihom_last_error(void);
ORBIHOM_API void orbihom_string_free(char* s);

/* complexes */
ORBIHOM_API orbihom_status orbihom_complex_from_desc(const char* desc, orbihom_model model,
                                                     orbihom_complex** out);
/* `source` names the input in diagnostics; may be NULL. */
ORBIHOM_API orbihom_status orbihom_complex_from_owc(const char* text, const char* source,
                                                    orbihom_complex** out);
ORBIHOM_API void orbihom_complex_free(orbihom_complex* c);
ORBIHOM_API int orbihom_complex_dim(const orbihom_complex* c);
ORBIHOM_API size_t orbihom_complex_cell_count(const orbihom_complex* c);
ORBIHOM_API orbihom_status orbihom_complex_serialize(const orbihom_complex* c, char** out);
/* Canonical descriptor text, or "file:<source>" for parsed files. */
ORBIHOM_API orbihom_status orbihom_complex_describe(const orbihom_complex* c, char** out);

/* homology; `rel_sub` names a subcomplex for relative groups, or NULL */
ORBIHOM_API orbihom_status orbihom_homology(const orbihom_complex* c, orbihom_coeff coeff,
                                            const char* rel_sub, orbihom_groups** out);
/* ws-cohomology of the complex read as a stratified cell structure */
ORBIHOM_API orbihom_status orbihom_ws_cohomology(const orbihom_complex* c, orbihom_coeff coeff,
                                                 const char* rel_sub, orbihom_groups** out);

ORBIHOM_API void orbihom_groups_free(orbihom_groups* g);
ORBIHOM_API size_t orbihom_groups_count(const orbihom_groups* g);
ORBIHOM_API size_t orbihom_groups_rank(const orbihom_groups* g, size_t q);
ORBIHOM_API size_t orbihom_groups_torsion_count(const orbihom_groups* g, size_t q);
/* i-th divisor of degree q in decimal */
ORBIHOM_API orbihom_status orbihom_groups_torsion(const orbihom_groups* g, size_t q, size_t i, char** out);
/* "Z^2 + Z/3", "0", or "Q^2" for rational coefficients */
ORBIHOM_API orbihom_status orbihom_groups_render(const orbihom_groups* g, size_t q, char** out);
ORBIHOM_API orbihom_status orbihom_groups_json(const orbihom_groups* g, char** out);

/* verdicts */
ORBIHOM_API orbihom_status orbihom_verify_mv(const orbihom_complex* c, const char* sub_a, const char* sub_b,
                                             orbihom_report** out);
ORBIHOM_API orbihom_status orbihom_verify_kunneth(const orbihom_complex* c, int torus_k, orbihom_report** out);
ORBIHOM_API orbihom_status orbihom_verify_rational(const orbihom_complex* c, orbihom_report** out);
ORBIHOM_API orbihom_status orbihom_verify_underlying(const orbihom_complex* c, orbihom_report** out);
ORBIHOM_API orbihom_status orbihom_verify_hurewicz(const orbihom_complex* c, orbihom_report** out);
ORBIHOM_API orbihom_status orbihom_verify_duality(const orbihom_complex* c, orbihom_report** out);
ORBIHOM_API orbihom_status orbihom_verify_bhomotopy(const orbihom_complex* a, const orbihom_complex* b,
                                                    orbihom_report** out);
ORBIHOM_API orbihom_status orbihom_affops_selftest(size_t trials, uint64_t seed, orbihom_report** out);

ORBIHOM_API void orbihom_report_free(orbihom_report* r);
ORBIHOM_API int orbihom_report_passed(const orbihom_report* r);
ORBIHOM_API size_t orbihom_report_assertion_count(const orbihom_report* r);
ORBIHOM_API size_t orbihom_report_failure_count(const orbihom_report* r);
ORBIHOM_API orbihom_status orbihom_report_text(const orbihom_report* r, char** out);
ORBIHOM_API orbihom_status orbihom_report_json(const orbihom_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
