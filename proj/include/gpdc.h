#ifndef GPDC_H
#define GPDC_H

/* C interface to the Grassmannian-bundle distance pipeline: synthetic
 * generators, tangent-frame estimation, orientation propagation, d_c and
 * Euclidean distance matrices, Vietoris-Rips persistence, bottleneck
 * distances, and the numerical theory checks.
 *
 * Every function that can fail returns a gpdc_status; GPDC_OK is 0. On
 * failure, gpdc_last_error() returns a thread-local message describing what
 * went wrong. Out-parameters are written only on success. All handles are
 * freed with their matching *_free function; freeing NULL is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpdc_status {
  GPDC_OK = 0,
  GPDC_ERR_PARAMETER = 1,
  GPDC_ERR_DIMENSION = 2,
  GPDC_ERR_INSUFFICIENT_POINTS = 3,
  GPDC_ERR_DEGENERATE_NEIGHBORHOOD = 4,
  GPDC_ERR_DEGENERATE_CLOUD = 5,
  GPDC_ERR_PRECONDITION = 6,
  GPDC_ERR_MATRIX = 7,
  GPDC_ERR_SIZE = 8,
  GPDC_ERR_IO = 9,
  GPDC_ERR_PARSE = 10,
  GPDC_ERR_DATA = 11,
  GPDC_ERR_NUMERICS = 12,
  GPDC_ERR_ORIENTATION = 13,
  GPDC_ERR_UNKNOWN = 14
} gpdc_status;

typedef struct gpdc_cloud gpdc_cloud;
typedef struct gpdc_frames gpdc_frames;
typedef struct gpdc_matrix gpdc_matrix;
typedef struct gpdc_diagram gpdc_diagram;
typedef struct gpdc_series gpdc_series;
typedef struct gpdc_checks gpdc_checks;

/* Library version, e.g. "1.0.0". */
const char* gpdc_version(void);

/* Thread-local message for the most recent failure in this thread; empty
 * string if none. The pointer stays valid until the next failing call. */
const char* gpdc_last_error(void);

/* ---- point clouds ---- */

typedef enum gpdc_point_format {
  GPDC_POINTS_CSV = 0,
  GPDC_POINTS_WHITESPACE = 1,
  GPDC_POINTS_OFF = 2
} gpdc_point_format;

/* coords is row-major, n x dim_ambient. dim_intrinsic may be 0 (unknown). */
gpdc_status gpdc_cloud_create(size_t n, size_t dim_ambient, size_t dim_intrinsic,
                              const double* coords, gpdc_cloud** out);
gpdc_status gpdc_cloud_load(const char* path, gpdc_point_format format, gpdc_cloud** out);
gpdc_status gpdc_cloud_save_csv(const gpdc_cloud* cloud, const char* path);
size_t gpdc_cloud_n(const gpdc_cloud* cloud);
size_t gpdc_cloud_dim_ambient(const gpdc_cloud* cloud);
size_t gpdc_cloud_dim_intrinsic(const gpdc_cloud* cloud);
gpdc_status gpdc_cloud_set_dim_intrinsic(gpdc_cloud* cloud, size_t d);
/* Borrowed pointer to the row-major coordinate block; valid until free. */
const double* gpdc_cloud_coords(const gpdc_cloud* cloud);
gpdc_status gpdc_cloud_select(const gpdc_cloud* cloud, const size_t* indices, size_t m,
                              gpdc_cloud** out);
void gpdc_cloud_free(gpdc_cloud* cloud);

/* Seeded uniform subsample without replacement; writes m sorted indices. */
gpdc_status gpdc_subsample_indices(size_t n, size_t m, uint64_t seed, size_t* out);

/* ---- generators ---- */

typedef enum gpdc_torus_mode { GPDC_TORUS_GRID = 0, GPDC_TORUS_RANDOM = 1 } gpdc_torus_mode;

/* Analytic frames are consistently oriented. frames_out may be NULL. */
gpdc_status gpdc_gen_torus(double R, double r, size_t n, uint64_t seed, gpdc_torus_mode mode,
                           gpdc_cloud** cloud_out, gpdc_frames** frames_out);
gpdc_status gpdc_gen_ellipse(double a, double b, size_t n, gpdc_cloud** cloud_out,
                             gpdc_frames** frames_out);
gpdc_status gpdc_gen_mobius(double R, double w, size_t n, uint64_t seed, gpdc_cloud** cloud_out);

gpdc_status gpdc_gen_double_gyre(double C, double eta, double omega, double x0, double y0,
                                 double T, size_t n, double h, gpdc_series** out);
size_t gpdc_series_len(const gpdc_series* s);
/* which: 0 = t, 1 = x, 2 = y. Borrowed pointer, valid until free. */
const double* gpdc_series_values(const gpdc_series* s, int which);
double gpdc_series_dt(const gpdc_series* s);
double gpdc_series_box_excursion(const gpdc_series* s);
void gpdc_series_free(gpdc_series* s);

gpdc_status gpdc_delay_embed(const double* series, size_t len, size_t tau_steps, size_t m,
                             gpdc_cloud** out);

/* ---- tangent frames and orientation ---- */

/* k = 0 picks the default neighborhood size for (n, d). */
gpdc_status gpdc_frames_estimate(const gpdc_cloud* cloud, size_t d, size_t k, gpdc_frames** out);
size_t gpdc_frames_n(const gpdc_frames* f);
size_t gpdc_frames_dim_ambient(const gpdc_frames* f);
size_t gpdc_frames_dim_intrinsic(const gpdc_frames* f);
int gpdc_frames_oriented(const gpdc_frames* f);
/* Column-major frame block of point i (dim_ambient x dim_intrinsic),
 * written to out (size dim_ambient * dim_intrinsic). */
gpdc_status gpdc_frames_get(const gpdc_frames* f, size_t i, double* out);
gpdc_status gpdc_frames_select(const gpdc_frames* f, const size_t* indices, size_t m,
                               gpdc_frames** out);
gpdc_status gpdc_frames_save(const gpdc_frames* f, const char* path);
gpdc_status gpdc_frames_load(const char* path, gpdc_frames** out);
void gpdc_frames_free(gpdc_frames* f);

/* Orientation propagation over the k-NN graph of the cloud (k = 0 default).
 * tau > 0 additionally records edges longer than tau/2. On return,
 * *consistent is 1 when every edge ended positive; *oriented_out then holds
 * the flipped frames (otherwise the input frames, still unoriented).
 * report_out (optional) receives a malloc'd text report; free with
 * gpdc_string_free. */
gpdc_status gpdc_orient(const gpdc_frames* frames, const gpdc_cloud* cloud, size_t k, double tau,
                        gpdc_frames** oriented_out, int* consistent, size_t* violations,
                        char** report_out);
void gpdc_string_free(char* s);

/* ---- metric ---- */

typedef enum gpdc_metric_tag { GPDC_METRIC_EUCLIDEAN = 0, GPDC_METRIC_DC = 1 } gpdc_metric_tag;

/* The scale rule c = diam(Y)^2 / max(pi, (pi/2) sqrt(min(d, D-d)))^2. */
gpdc_status gpdc_choose_scale(const gpdc_cloud* cloud, double* c_out, double* diameter_out);

gpdc_status gpdc_matrix_dc(const gpdc_cloud* cloud, const gpdc_frames* frames, double c,
                           gpdc_matrix** out);
gpdc_status gpdc_matrix_euclidean(const gpdc_cloud* cloud, gpdc_matrix** out);
size_t gpdc_matrix_n(const gpdc_matrix* m);
gpdc_metric_tag gpdc_matrix_metric(const gpdc_matrix* m);
double gpdc_matrix_c(const gpdc_matrix* m);
size_t gpdc_matrix_degenerate_pairs(const gpdc_matrix* m);
gpdc_status gpdc_matrix_get(const gpdc_matrix* m, size_t i, size_t j, double* out);
gpdc_status gpdc_matrix_enclosing_radius(const gpdc_matrix* m, double* out);
gpdc_status gpdc_matrix_save(const gpdc_matrix* m, const char* path);
gpdc_status gpdc_matrix_load(const char* path, gpdc_matrix** out);
gpdc_status gpdc_matrix_save_csv(const gpdc_matrix* m, const char* path);
void gpdc_matrix_free(gpdc_matrix* m);

/* ---- persistence ---- */

/* threshold < 0 means the default (the enclosing radius). */
gpdc_status gpdc_ph(const gpdc_matrix* m, int maxdim, double threshold, gpdc_diagram** out);
int gpdc_diagram_maxdim(const gpdc_diagram* d);
double gpdc_diagram_threshold(const gpdc_diagram* d);
size_t gpdc_diagram_count(const gpdc_diagram* d, int degree);
/* births/deaths hold gpdc_diagram_count(d, degree) entries; infinite deaths
 * come out as +inf. */
gpdc_status gpdc_diagram_bars(const gpdc_diagram* d, int degree, double* births, double* deaths);
gpdc_status gpdc_diagram_save_csv(const gpdc_diagram* d, const char* path);
gpdc_status gpdc_diagram_load_csv(const char* path, gpdc_diagram** out);
gpdc_status gpdc_diagram_save_svg(const gpdc_diagram* d, const char* path, const char* subtitle);
/* Degrees absent from a diagram compare as empty. */
gpdc_status gpdc_bottleneck(const gpdc_diagram* a, const gpdc_diagram* b, int degree,
                            double* out);
void gpdc_diagram_free(gpdc_diagram* d);

/* ---- theory checks ---- */

gpdc_status gpdc_run_checks(const char* filter, gpdc_checks** out);
size_t gpdc_checks_count(const gpdc_checks* c);
/* String pointers are borrowed from the handle. Any out-parameter may be
 * NULL to skip it. */
gpdc_status gpdc_checks_get(const gpdc_checks* c, size_t i, const char** name,
                            const char** detail, double* lhs, double* rhs, double* margin,
                            int* pass, int* skipped, const char** note);
void gpdc_checks_free(gpdc_checks* c);

/* out7 = {vol_c, vol_c_bound, l_c, sys_lower, ratio_sys, ratio_l, quad_error}. */
gpdc_status gpdc_torus_quantities(double R, double r, double c, double* out7);

/* Middle term of the curvature inequality at one torus point; dir is the
 * (du, dv) coordinate direction. */
gpdc_status gpdc_curvature_ratio(double R, double r, double u, double v, double dir_u,
                                 double dir_v, double c, double* out);

/* out6 = {statement_first_term, proof_first_term, second_term,
 *         statement_min, proof_min, discrepancy}. */
gpdc_status gpdc_homotopy_radius(double c, double ii_c_norm, double l_prime_c, double* out6);

/* Normal-offset stability table: writes ndeltas * (maxdim + 1) bottleneck
 * distances to out, row per delta, column per degree. */
gpdc_status gpdc_stability(double R, double r, size_t n, uint64_t seed, const double* deltas,
                           size_t ndeltas, int maxdim, double* out);

#ifdef __cplusplus
}
#endif

#endif /* GPDC_H */
