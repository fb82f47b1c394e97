/* C API for the Hilbert Group I / Group II geometry core.
 *
 * All handles are opaque and owned by the caller once returned; release
 * them with the matching *_free function. Strings returned as char* are
 * heap-allocated; release with hg_string_free. Functions that can fail
 * return NULL (handles/strings) or a negative value (ints) and record a
 * status and message retrievable via hg_last_status / hg_last_error,
 * both thread-local.
 */
#ifndef HILBERT_C_H
#define HILBERT_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hg_status {
  HG_OK = 0,
  HG_ERR_PARSE = 1,    /* malformed input text */
  HG_ERR_INVALID = 2,  /* precondition or constraint violation */
  HG_ERR_INTERNAL = 3  /* internal consistency check failed (a defect) */
} hg_status;

hg_status hg_last_status(void);
const char *hg_last_error(void);
void hg_string_free(char *s);

/* ---- finite incidence structures ---- */

typedef struct hg_model hg_model;

hg_model *hg_model_parse(const char *text);
hg_model *hg_model_tetrahedron(void);
char *hg_model_serialize(const hg_model *m);
/* 1, 0, or -1 on error */
int hg_model_isomorphic(const hg_model *a, const hg_model *b);
void hg_model_free(hg_model *m);

/* ---- axiom checking ---- */

typedef struct hg_reports hg_reports;

typedef enum hg_verdict { HG_HOLDS = 0, HG_FAILS = 1, HG_VACUOUS = 2 } hg_verdict;

hg_reports *hg_check_group_i(const hg_model *m);
/* text is a betweenness model file (points: / between: directives) */
hg_reports *hg_check_group_ii_linear(const char *text);
int hg_reports_count(const hg_reports *r);
/* e.g. "I,1"; valid until hg_reports_free */
const char *hg_reports_axiom(const hg_reports *r, int i);
int hg_reports_verdict(const hg_reports *r, int i);
/* space-separated witness names, NULL when there is no witness */
const char *hg_reports_witness(const hg_reports *r, int i);
void hg_reports_free(hg_reports *r);

/* ---- bounded model search ---- */

typedef struct hg_search hg_search;

hg_search *hg_find_min_model(int max_points, int max_lines, int max_planes);
int hg_search_satisfiable(const hg_search *s);
int hg_search_model_count(const hg_search *s);
/* caller owns the returned model */
hg_model *hg_search_model(const hg_search *s, int i);
unsigned long long hg_search_examined(const hg_search *s);
double hg_search_elapsed_seconds(const hg_search *s);
void hg_search_free(hg_search *s);

/* exhaustive search for a linear order model on n points; returns 1 if
 * none exists (the expected outcome), 0 if one was found, -1 on error */
int hg_no_linear_order_model(int n_points, unsigned long long *nodes_examined);

/* ---- successor diagrams ---- */

typedef struct hg_diagram hg_diagram;

/* spec: "A=(0,0);B=(1,1);C=(2,2);D=(0,-2);zero=(1,0);N=(1,0)" */
hg_diagram *hg_diagram_parse(const char *spec);
/* field is one of "A","B","C","D","zero","N"; returns "(x,y)" */
char *hg_diagram_point(const hg_diagram *d, const char *field);
/* one successor application; d_prime (if non-NULL) receives the "(x,y)"
 * of the auxiliary intersection point, owned by the caller */
hg_diagram *hg_diagram_successor(const hg_diagram *d, char **d_prime);
/* 1/0, or -1 on error; requires a fresh diagram (N = zero) */
int hg_diagram_verify_injective(const hg_diagram *d, int depth);
void hg_diagram_free(hg_diagram *d);

/* ---- collinear ordering ---- */

/* text: one "(x,y)" point per line, '#' comments. Returns the ordered
 * points, one per line (one of the two valid labelings). */
char *hg_order_points(const char *text);

/* ---- rational plane property suites ---- */

/* Runs the Group II / Theorem 3 property suites with the given seed and
 * per-suite sample count. Returns CSV lines "name,samples,failures" and
 * stores the total failure count in *failures if non-NULL. */
char *hg_verify_plane(unsigned long long seed, int samples, int *failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HILBERT_C_H */
