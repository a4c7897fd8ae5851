#ifndef NETLTS_NETLTS_H
#define NETLTS_NETLTS_H

/* C interface to the netlts engine. Objects are opaque handles built from
 * JSON text; every operation returns a status code and, for status OK or
 * CHECK_FAILED, a JSON result string that the caller releases with
 * netlts_string_free. All numbers in results are exact rational strings. */

#include <stddef.h>

#if defined(NETLTS_BUILDING)
#define NETLTS_API __attribute__((visibility("default")))
#else
#define NETLTS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum netlts_status {
  NETLTS_OK = 0,
  NETLTS_CHECK_FAILED = 1,
  NETLTS_INPUT_ERROR = 2,
  NETLTS_INTERNAL_ERROR = 3
} netlts_status;

typedef struct netlts_algebra netlts_algebra;       /* lts, 3leibniz or lie structure constants */
typedef struct netlts_action netlts_action;         /* theta tensor */
typedef struct netlts_lie_action netlts_lie_action; /* rho tensor */
typedef struct netlts_matrix netlts_matrix;
typedef struct netlts_cochain netlts_cochain;
typedef struct netlts_pair netlts_pair;             /* a ^ b */
typedef struct netlts_context netlts_context;       /* two LTS and a coherent action */

typedef struct netlts_options {
  size_t witness_limit;     /* counterexamples kept per identity, default 1 */
  int allow_degree3;        /* cohomology in degree 3 */
  int cocycle_basis;        /* include a cocycle basis in cohomology results */
  int require_intertwining; /* conjugation also requires f T = T f' */
} netlts_options;

NETLTS_API void netlts_options_init(netlts_options* options);

/* Message of the last failure on the calling thread; empty when none. */
NETLTS_API const char* netlts_last_error(void);
NETLTS_API void netlts_string_free(char* s);
NETLTS_API const char* netlts_version(void);

/* Parsing runs shape checks only; axioms are checked by the operations. */
NETLTS_API netlts_status netlts_algebra_parse(const char* json, netlts_algebra** out);
NETLTS_API netlts_status netlts_algebra_json(const netlts_algebra* a, char** out);
NETLTS_API size_t netlts_algebra_dim(const netlts_algebra* a);
NETLTS_API void netlts_algebra_free(netlts_algebra* a);

NETLTS_API netlts_status netlts_action_parse(const char* json, netlts_action** out);
NETLTS_API netlts_status netlts_action_adjoint(const netlts_algebra* a, netlts_action** out);
NETLTS_API netlts_status netlts_action_json(const netlts_action* a, char** out);
NETLTS_API void netlts_action_free(netlts_action* a);

/* Dimensions may be 0 when the JSON carries acting_dim and acted_dim. */
NETLTS_API netlts_status netlts_lie_action_parse(const char* json, size_t acting_dim, size_t acted_dim,
                                                 netlts_lie_action** out);
NETLTS_API netlts_status netlts_lie_action_json(const netlts_lie_action* a, char** out);
NETLTS_API void netlts_lie_action_free(netlts_lie_action* a);

NETLTS_API netlts_status netlts_matrix_parse(const char* json, netlts_matrix** out);
NETLTS_API netlts_status netlts_matrix_json(const netlts_matrix* m, char** out);
NETLTS_API void netlts_matrix_free(netlts_matrix* m);

/* Dimensions may be 0 when the JSON carries in_dim and out_dim. */
NETLTS_API netlts_status netlts_cochain_parse(const char* json, size_t in_dim, size_t out_dim, netlts_cochain** out);
NETLTS_API netlts_status netlts_cochain_json(const netlts_cochain* c, char** out);
NETLTS_API void netlts_cochain_free(netlts_cochain* c);

NETLTS_API netlts_status netlts_pair_parse(const char* json, netlts_pair** out);
NETLTS_API void netlts_pair_free(netlts_pair* p);

/* Both algebras must be Lie triple systems and the action coherent;
 * otherwise CHECK_FAILED with the failing report in *report. *report may
 * be NULL on success. */
NETLTS_API netlts_status netlts_context_new(const netlts_algebra* L, const netlts_algebra* Lp,
                                            const netlts_action* theta, netlts_context** out, char** report);
NETLTS_API size_t netlts_context_dim(const netlts_context* ctx);
NETLTS_API size_t netlts_context_dim_p(const netlts_context* ctx);
NETLTS_API void netlts_context_free(netlts_context* ctx);

/* Operations. Results are JSON objects with a "pass" field; status is OK
 * when it is true and CHECK_FAILED when it is false. A failed precondition
 * (for example a base map that is not a net) is CHECK_FAILED with a
 * "precondition" field. options may be NULL. */
NETLTS_API netlts_status netlts_verify(const netlts_algebra* a, const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_action_check(const netlts_algebra* L, const netlts_algebra* Lp,
                                             const netlts_action* theta, const netlts_options* options,
                                             char** result);
NETLTS_API netlts_status netlts_hemi(const netlts_context* ctx, const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_net_check(const netlts_context* ctx, const netlts_matrix* T,
                                          const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_descend(const netlts_context* ctx, const netlts_matrix* T,
                                        const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_graph_check(const netlts_context* ctx, const netlts_matrix* T,
                                            const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_hom_check(const netlts_context* ctx, const netlts_matrix* Tsrc,
                                          const netlts_matrix* Tdst, const netlts_matrix* f, const netlts_matrix* fp,
                                          const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_conjugate(const netlts_context* ctx, const netlts_matrix* T, const netlts_matrix* f,
                                          const netlts_matrix* fp, const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_mc_check(const netlts_context* ctx, const netlts_matrix* T,
                                         const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_twisted_mc(const netlts_context* ctx, const netlts_matrix* T,
                                           const netlts_matrix* Ttilde, const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_d_square(const netlts_context* ctx, const netlts_matrix* T, const netlts_cochain* f,
                                         const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_cohomology(const netlts_context* ctx, const netlts_matrix* T, size_t degree,
                                           const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_compare_dt(const netlts_context* ctx, const netlts_matrix* T, const netlts_cochain* f,
                                           const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_deform_check(const netlts_context* ctx, const netlts_matrix* T,
                                             const netlts_matrix* T1, const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_equiv_check(const netlts_context* ctx, const netlts_matrix* T, const netlts_matrix* T1,
                                            const netlts_matrix* T1tilde, const netlts_pair* pair,
                                            const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_nijenhuis(const netlts_context* ctx, const netlts_matrix* T, const netlts_pair* pair,
                                          const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_trivial_deform(const netlts_context* ctx, const netlts_matrix* T,
                                               const netlts_pair* pair, const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_lie2lts(const netlts_algebra* lie, const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_lie_action_check(const netlts_algebra* L, const netlts_algebra* Lp,
                                                 const netlts_lie_action* rho, const netlts_options* options,
                                                 char** result);
NETLTS_API netlts_status netlts_lie_net_check(const netlts_algebra* L, const netlts_algebra* Lp,
                                              const netlts_lie_action* rho, const netlts_matrix* T,
                                              const netlts_options* options, char** result);
NETLTS_API netlts_status netlts_transport(const netlts_algebra* L, const netlts_algebra* Lp,
                                          const netlts_lie_action* rho, const netlts_matrix* T,
                                          const netlts_options* options, char** result);

#ifdef __cplusplus
}
#endif

#endif
