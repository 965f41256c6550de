/*
 * dehnfill — moduli of one-circle packings on complex affine tori and the
 * hyperbolic Dehn filling space they parameterize.
 *
 * C interface of the shared library. All functions are pure and thread-safe;
 * failures return a nonzero df_status and leave a human-readable message in
 * the calling thread's df_last_error() buffer. Infinite filling coefficients
 * and slopes are encoded as IEEE infinity (HUGE_VAL); test with isinf().
 */
#ifndef DEHNFILL_H
#define DEHNFILL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum df_status {
    DF_OK = 0,
    DF_ERR_DOMAIN = 1,  /* input outside the mathematical domain */
    DF_ERR_NUMERIC = 2, /* a solver failed to meet its contract */
    DF_ERR_INVALID = 3  /* malformed argument (bad index, null pointer, ...) */
} df_status;

typedef struct df_complex {
    double re;
    double im;
} df_complex;

const char* df_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char* df_last_error(void);

/* ---- level function kernel ---------------------------------------------- */

/* f(z) = 1 - cos(Im z/2)/cosh(Re z/2); total on finite inputs. */
df_status df_level_value(df_complex z, double* out);

/* Radius of the level curve L_s along direction theta (0 < s < 1 - 1e-12). */
df_status df_level_radius(double s, double theta, double* out);

/* level radius as a point: r(s,theta) * e^{i theta}. */
df_status df_level_point(double s, double theta, df_complex* out);

/* ---- moduli space -------------------------------------------------------- */

/* Region codes: 0 = origin, 1..12 = sectors C_1..C_12, 13..24 = loci l_1..l_12. */
#define DF_REGION_ORIGIN 0

typedef struct df_moduli_point {
    df_complex c;
    df_complex omega; /* Teichmueller parameter, Im > 0 */
    df_complex c1;    /* c * omega, on the same level curve */
    df_complex c2;    /* c * (omega - 1) = c1 - c */
    double s;         /* common level */
    int region;       /* region code of c */
} df_moduli_point;

df_status df_solve_parallelogram(df_complex c, df_moduli_point* out);
df_status df_fiber_partner(df_complex c, df_complex* out);
df_status df_rotate6(df_complex c, df_complex* out);

/* The twelve special points p_1..p_12 of L_s, counterclockwise from the
 * positive real axis. */
df_status df_special_points(double s, df_complex out[12]);
df_status df_locus_point(int j, double s, df_complex* out);

df_status df_classify(df_complex c, int* region);

/* "origin", "C1".."C12", "l1".."l12"; NULL for an invalid code. */
const char* df_region_name(int region);

/* ---- Dehn filling -------------------------------------------------------- */

typedef struct df_filling {
    double mu;     /* solution of mu c + lambda c omega = +2 pi i */
    double lambda;
    double t;      /* mu / (mu + lambda); infinity at the gap */
} df_filling;

df_status df_filling_coefficients(df_complex c, df_filling* out);
df_status df_slope_t(df_complex c, double* t);

/* Cone angle |Im(p c + q c omega)| and singular-locus length
 * |Re(r c + s c omega)| with p s - q r = 1 for the coprime (p,q) curve. */
df_status df_cone_data(df_complex c, long long p, long long q,
                       double* angle, double* length);

/* Point of L_s on the closed upper arc with slope t (t may be infinite).
 * theta_hint < 0 means no hint. */
df_status df_t_level_point(double t, double s, double theta_hint, df_complex* out);

/* 1 iff (mu, lambda) lies in the closed hexagon |mu| <= 2, |lambda| <= 2,
 * |mu + lambda| <= 2. */
int df_hexagon_contains(double mu, double lambda);

/* ---- developed circle packings ------------------------------------------ */

typedef struct df_packing df_packing; /* opaque */

typedef struct df_circle {
    df_complex center;
    double radius;
    int m, n;  /* lattice label */
    int kind;  /* 0 = packing circle, 1 = dual circle */
} df_circle;

typedef struct df_validation {
    double max_tangency_residual;      /* relative */
    double max_orthogonality_residual; /* relative */
    int local_overlap_violations;
} df_validation;

/* Window bounds are inclusive lattice index ranges. */
df_status df_packing_build_affine(df_complex c, int m_min, int m_max,
                                  int n_min, int n_max, df_packing** out);
df_status df_packing_build_euclidean(int m_min, int m_max, int n_min, int n_max,
                                     df_packing** out);
void df_packing_free(df_packing* p);

int df_packing_circle_count(const df_packing* p);
int df_packing_dual_count(const df_packing* p);
int df_packing_edge_count(const df_packing* p);
df_status df_packing_circle(const df_packing* p, int i, df_circle* out);
df_status df_packing_dual(const df_packing* p, int i, df_circle* out);
df_status df_packing_edge(const df_packing* p, int i, int* a, int* b);

/* kappa is the common radius/|center| ratio (0 in the euclidean case);
 * gen_a/gen_b are the holonomy multipliers e^c, e^{c omega} (affine) or the
 * lattice translations (euclidean). Any output pointer may be NULL. */
df_status df_packing_info(const df_packing* p, df_complex* c, df_complex* omega,
                          double* kappa, df_complex* gen_a, df_complex* gen_b,
                          int* euclidean);
df_status df_packing_validate(const df_packing* p, df_validation* out);

/* ---- acceptance self-test ------------------------------------------------ */

/* Called once per criterion with its PASS/FAIL state and measured values. */
typedef void (*df_selftest_line_fn)(int id, const char* name, int pass,
                                    const char* detail, void* user);

/* Runs the full acceptance suite; returns 1 iff every criterion passed.
 * inject_kappa_fault != 0 perturbs the packing radii as a negative control
 * (the suite must then fail). */
int df_selftest_run(int inject_kappa_fault, df_selftest_line_fn cb, void* user);

#ifdef __cplusplus
}
#endif

#endif /* DEHNFILL_H */
