// Copyright 2026 The semg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * semg C interface.
 *
 * Matrices are passed as flat row-major double arrays. An "n x m" matrix over
 * instances and labels has n rows (instances x) and m columns (labels y).
 * Output arrays are allocated by the caller unless a function returns an
 * opaque handle, which must be released with the matching *_free function.
 *
 * Every function returning semg_status leaves a description of the last
 * failure on the calling thread in semg_last_error().
 */
#ifndef SEMG_SEMG_H_
#define SEMG_SEMG_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(SEMG_BUILDING_LIBRARY)
#define SEMG_API __declspec(dllexport)
#else
#define SEMG_API __declspec(dllimport)
#endif
#else
#define SEMG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semg_status {
  SEMG_OK = 0,
  SEMG_ERR_INVALID_ARGUMENT = 1,
  SEMG_ERR_ALL_ZERO_OVERLAP = 2,
  SEMG_ERR_DOMAIN_MISMATCH = 3,
  SEMG_ERR_NON_POSITIVE_SIGMA = 4,
  SEMG_ERR_NON_POSITIVE_LOGICAL_PROB = 5,
  SEMG_ERR_EMPTY_LABEL = 6,
  SEMG_ERR_NO_POSITIVE_TRUTH = 7,
  SEMG_ERR_DEGENERATE_ROW = 8,
  SEMG_ERR_ZERO_MIXTURE_DENSITY = 9,
  SEMG_ERR_EMPTY_COMPONENT = 10,
  SEMG_ERR_UNDEFINED_CONDITIONAL = 11,
  SEMG_ERR_UNKNOWN_FIGURE = 12,
  SEMG_ERR_OUT_OF_RANGE = 13,
  SEMG_ERR_INTERNAL = 99
} semg_status;

SEMG_API const char* semg_version(void);
SEMG_API const char* semg_status_name(semg_status status);
SEMG_API const char* semg_last_error(void);

/* Unit of every information quantity: SEMG_LOG_BITS (default) or SEMG_LOG_NATS. */
enum { SEMG_LOG_BITS = 2, SEMG_LOG_NATS = 0 };
SEMG_API semg_status semg_set_log_base(int base);
SEMG_API int semg_log_base(void);

typedef struct semg_solver_options {
  double tol;   /* max-norm change of P(y); default 1e-8 */
  int max_iter; /* default 2000 */
} semg_solver_options;

/* ------------------------------------------------------------------------ */
/* Probabilities, truth functions and information measures                   */

SEMG_API semg_status semg_semantic_bayes(size_t n, const double* source, const double* truth,
                                         double* posterior_out, double* logical_prob_out);
SEMG_API semg_status semg_truth_from_likelihood(size_t n, const double* source,
                                                const double* likelihood, double* truth_out);

typedef struct semg_measure_report {
  double shannon_mi;
  double semantic_mi;
  double semantic_entropy;
  double fuzzy_entropy;
  double semantic_posterior_entropy;
  double residual_kl;
} semg_measure_report;

SEMG_API semg_status semg_shannon_mi(size_t n, size_t m, const double* source,
                                     const double* channel, double* out);
SEMG_API semg_status semg_semantic_mi(size_t n, size_t m, const double* source,
                                      const double* channel, const double* sem,
                                      semg_measure_report* out);
SEMG_API semg_status semg_pointwise_g(double truth_value, double logical_prob, double* out);

/* ------------------------------------------------------------------------ */
/* Truth-function learning and classification                                */

/* sem_out (n x m): column j = P(y_j|x) / max_x P(y_j|x). */
SEMG_API semg_status semg_lbi_direct(size_t n, size_t m, const double* source,
                                     const double* channel, double* sem_out);

enum { SEMG_FAMILY_GAUSSIAN = 0, SEMG_FAMILY_TRAPEZOID = 1 };

/* points: n_points x arity (2 for Gaussian, 4 for trapezoid). */
SEMG_API semg_status semg_lbi_parametric(size_t n, const double* cond, const double* source,
                                         const double* values, int family, size_t n_points,
                                         const double* points, double* params_out,
                                         double* score_out, size_t* index_out);
SEMG_API semg_status semg_evaluate_family(size_t n, const double* values, int family,
                                          const double* params, double* truth_out);

enum { SEMG_CLASSIFY_MAX_INFORMATION = 0, SEMG_CLASSIFY_MIN_DISTORTION = 1 };

/* labels_out[i] = selected label of instance i (0-based). */
SEMG_API semg_status semg_classify(size_t n, size_t m, const double* source, const double* sem,
                                   int criterion, size_t* labels_out);

/* ------------------------------------------------------------------------ */
/* Rate-fidelity and rate-distortion solvers                                 */

typedef struct semg_rg_point_info {
  double s;
  double R;
  double G;
  int iterations;
  int converged;
} semg_rg_point_info;

typedef struct semg_rg_curve semg_rg_curve;

/* s_grid ascending. options may be NULL. jobs > 1 with warm_start == 0 solves
   points in parallel. */
SEMG_API semg_status semg_rg_curve_solve(size_t n, size_t m, const double* source,
                                         const double* sem, size_t n_s, const double* s_grid,
                                         const semg_solver_options* options, int warm_start,
                                         unsigned jobs, semg_rg_curve** out);
SEMG_API size_t semg_rg_curve_size(const semg_rg_curve* curve);
SEMG_API semg_status semg_rg_curve_point(const semg_rg_curve* curve, size_t k,
                                         semg_rg_point_info* out);
/* channel_out n x m and label_out m; either may be NULL. */
SEMG_API semg_status semg_rg_curve_channel(const semg_rg_curve* curve, size_t k,
                                           double* channel_out, double* label_out);
SEMG_API void semg_rg_curve_free(semg_rg_curve* curve);

enum { SEMG_CONSTRAINT_TRUTH = 0, SEMG_CONSTRAINT_DISTORTION = 1 };
enum { SEMG_RD_AT_SLOPE = 0, SEMG_RD_AT_DISTORTION = 1 };

typedef struct semg_rd_info {
  double s;
  double R;
  double D;
  int iterations;
  int converged;
} semg_rd_info;

/* constraint: n x m truth values or distortions (+inf allowed). mode selects
   whether value is the slope s or the target distortion. */
SEMG_API semg_status semg_rd_solve(size_t n, size_t m, const double* source,
                                   const double* constraint, int constraint_kind, int mode,
                                   double value, const semg_solver_options* options,
                                   semg_rd_info* info, double* channel_out, double* label_out);

typedef struct semg_capacity_info {
  double capacity;
  double R;
  int duplicate_peak;
  int evaluations;
} semg_capacity_info;

SEMG_API semg_status semg_capacity(size_t n, size_t m, const double* sem,
                                   semg_capacity_info* info, double* source_out,
                                   size_t* peaks_out);

enum { SEMG_GRAY_GAUSSIAN = 0, SEMG_GRAY_CRISP = 1 };

typedef struct semg_gray_config {
  int levels;     /* default 256 */
  int n_labels;   /* default 8 */
  int family;     /* SEMG_GRAY_GAUSSIAN */
  double sigma0;  /* <= 0 selects levels / 24 */
  double beta;    /* default 2 */
  double s;       /* default 1 */
  double tol;
  int max_iter;
} semg_gray_config;

SEMG_API void semg_gray_config_default(semg_gray_config* config);

typedef struct semg_gray_summary {
  double R;
  double G;
  int iterations;
  int converged;
  double G_max;
  double R_at_G_max;
  size_t levels;
  size_t labels;
  size_t trace_length;
} semg_gray_summary;

typedef struct semg_gray_demo semg_gray_demo;

SEMG_API semg_status semg_gray_demo_run(const semg_gray_config* config, semg_gray_demo** out);
SEMG_API semg_status semg_gray_demo_summary(const semg_gray_demo* demo, semg_gray_summary* out);
/* truth_out and channel_out: levels x labels; any pointer may be NULL. */
SEMG_API semg_status semg_gray_demo_matrices(const semg_gray_demo* demo, double* truth_out,
                                             double* channel_out);
SEMG_API semg_status semg_gray_demo_labels(const semg_gray_demo* demo, double* centers_out,
                                           double* sigmas_out, double* label_probs_out);
SEMG_API semg_status semg_gray_demo_trace(const semg_gray_demo* demo, int* iteration_out,
                                          double* R_out, double* G_out);
SEMG_API void semg_gray_demo_free(semg_gray_demo* demo);

/* ------------------------------------------------------------------------ */
/* Mixtures: EnM and semantic variational Bayes                             */

enum { SEMG_COMPONENT_GAUSSIAN = 0, SEMG_COMPONENT_TABLE = 1 };

typedef struct semg_component_spec {
  int kind;
  double mean;          /* Gaussian only */
  double sigma;         /* Gaussian only */
  const double* probs;  /* table only: n_grid entries */
} semg_component_spec;

typedef struct semg_enm_record {
  int iteration;
  double R;
  double G;
  double Rpp;
  double kl_data_model;
  double kl_labels;
  double Q;
  double Fprime;
  double F;
} semg_enm_record;

typedef struct semg_enm_summary {
  int outer_iterations;
  int converged;
  size_t trace_length;
  size_t components;
  size_t grid_size;
} semg_enm_summary;

typedef struct semg_enm_fit semg_enm_fit;

SEMG_API semg_status semg_enm_run(size_t n_grid, const double* grid, const double* data,
                                  size_t n_comp, const double* weights,
                                  const semg_component_spec* components, int n_inner, double tol,
                                  int max_outer, semg_enm_fit** out);
SEMG_API semg_status semg_enm_summary_get(const semg_enm_fit* fit, semg_enm_summary* out);
/* weights_out (n_comp) may be NULL. */
SEMG_API semg_status semg_enm_trace_record(const semg_enm_fit* fit, size_t k,
                                           semg_enm_record* out, double* weights_out);
/* Final model; any pointer may be NULL. probs_out is n_comp x n_grid. */
SEMG_API semg_status semg_enm_model(const semg_enm_fit* fit, double* weights_out, int* kinds_out,
                                    double* means_out, double* sigmas_out, double* probs_out);
SEMG_API void semg_enm_free(semg_enm_fit* fit);

enum { SEMG_SVB_LIKELIHOOD = 0, SEMG_SVB_TRUTH = 1 };

typedef struct semg_svb_info {
  double F;
  double posterior_entropy;
  double kl_labels;
  double R;
  double G;
  int iterations;
  int converged;
} semg_svb_info;

/* constraints: n x m (one column per latent label). options may be NULL
   (tolerance 1e-10, 20000 iterations). channel_out may be NULL. */
SEMG_API semg_status semg_svb_solve(size_t n, size_t m, const double* data,
                                    const double* constraints, int form, double s,
                                    const semg_solver_options* options, semg_svb_info* info,
                                    double* label_out, double* channel_out);

/* ------------------------------------------------------------------------ */
/* Goal-oriented control                                                     */

typedef struct semg_control_info {
  double R;
  double G;
  int iterations;
  int converged;
  double normal_R; /* NaN unless values were given */
  double normal_G;
} semg_control_info;

/* targets: n x m truth columns. values (n) may be NULL, which skips the
   normal projection. results_out is m x n (row j = P(x|a_j)). Output
   pointers other than info may be NULL. */
SEMG_API semg_status semg_control_solve(size_t n, size_t m, const double* baseline,
                                        const double* targets, double s, const double* values,
                                        const semg_solver_options* options,
                                        semg_control_info* info, double* action_out,
                                        double* channel_out, double* results_out,
                                        double* goal_info_out);

/* ------------------------------------------------------------------------ */
/* Maximum mutual information classification                                 */

typedef struct semg_maxmi_summary {
  int rounds;
  int converged;
  int cycle_detected;
  int dropped_empty;
  int monotone_violation;
  size_t trace_length;
} semg_maxmi_summary;

typedef struct semg_maxmi_result semg_maxmi_result;

/* z_given_x: n_x x n_z; init: n_z labels. */
SEMG_API semg_status semg_maxmi_classify(size_t n_x, size_t n_z, const double* source,
                                         const double* z_given_x, const size_t* init,
                                         int max_iter, semg_maxmi_result** out);
SEMG_API semg_status semg_maxmi_summary_get(const semg_maxmi_result* r, semg_maxmi_summary* out);
SEMG_API semg_status semg_maxmi_partition(const semg_maxmi_result* r, size_t* assignment_out);
SEMG_API semg_status semg_maxmi_trace(const semg_maxmi_result* r, double* mi_out);
SEMG_API void semg_maxmi_free(semg_maxmi_result* r);

/* ------------------------------------------------------------------------ */
/* Confirmation measures                                                     */

enum {
  SEMG_MEASURE_B1 = 0, /* channel confirmation */
  SEMG_MEASURE_C1 = 1, /* prediction confirmation */
  SEMG_MEASURE_PD = 2, /* causal probability */
  SEMG_MEASURE_CC = 3  /* causal confirmation */
};

SEMG_API semg_status semg_confirmation(double a, double b, double c, double d, int measure,
                                       double* out);
SEMG_API semg_status semg_predict_with_confirmation(double degree, const double* base2,
                                                    double* posterior2_out);

/* ------------------------------------------------------------------------ */
/* Portfolios                                                                */

SEMG_API semg_status semg_kelly(double win_prob, double r1, double r2, double r0,
                                double* q_out, int* no_edge_out);
SEMG_API semg_status semg_bet_growth(double win_prob, double r1, double r2, double r0, double q,
                                     double* out);

typedef struct semg_investment_capacity {
  double exact;
  double q_star;
  int no_edge;
  double full_bet_risk;
  double edge_to_risk;
  double closed_form;
  double approximation;
} semg_investment_capacity;

SEMG_API semg_status semg_investment_capacity_get(double win_prob, double r1, double r2,
                                                  double r0, semg_investment_capacity* out);

typedef struct semg_risk_measures {
  double arithmetic;
  double geometric;
  double risk;
  double sin_alpha;
} semg_risk_measures;

/* returns: w x k output ratios (column 0 cash); ratios: k. risk_out may be NULL. */
SEMG_API semg_status semg_growth_entropy(size_t w, size_t k, const double* probs,
                                         const double* returns, const double* ratios,
                                         double* growth_out, semg_risk_measures* risk_out);
SEMG_API semg_status semg_optimal_ratios(size_t w, size_t k, const double* probs,
                                         const double* returns, double* ratios_out);
/* q_prior_out, q_post_out (k) and pointwise_out (w) may be NULL. */
SEMG_API semg_status semg_information_value(size_t w, size_t k, const double* prior,
                                            const double* pred, const double* realized,
                                            const double* returns, double* value_out,
                                            double* q_prior_out, double* q_post_out,
                                            double* pointwise_out);
SEMG_API semg_status semg_arrow_value(size_t w, const double* probs, double* out);

/* ------------------------------------------------------------------------ */
/* Built-in figure reproductions                                             */

typedef struct semg_artifacts semg_artifacts;

SEMG_API size_t semg_figure_count(void);
SEMG_API const char* semg_figure_id(size_t k);
SEMG_API semg_status semg_reproduce(const char* figure, semg_artifacts** out);
SEMG_API size_t semg_artifacts_file_count(const semg_artifacts* a);
SEMG_API const char* semg_artifacts_file_name(const semg_artifacts* a, size_t k);
SEMG_API const char* semg_artifacts_file_content(const semg_artifacts* a, size_t k,
                                                 size_t* length_out);
SEMG_API size_t semg_artifacts_metric_count(const semg_artifacts* a);
SEMG_API const char* semg_artifacts_metric_name(const semg_artifacts* a, size_t k);
SEMG_API double semg_artifacts_metric_value(const semg_artifacts* a, size_t k);
SEMG_API size_t semg_artifacts_warning_count(const semg_artifacts* a);
SEMG_API const char* semg_artifacts_warning(const semg_artifacts* a, size_t k);
SEMG_API void semg_artifacts_free(semg_artifacts* a);

#ifdef __cplusplus
}
#endif

#endif /* SEMG_SEMG_H_ */
