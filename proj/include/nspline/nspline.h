/* nspline.h - C interface to the univariate neural-spline toolkit.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Every function returns a status code; on failure nsp_last_error() holds
 * a thread-local description of what went wrong.
 */
#ifndef NSPLINE_H
#define NSPLINE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    NSP_OK = 0,
    NSP_ERR_INPUT = 1,       /* bad arguments, malformed files */
    NSP_ERR_NUMERIC = 2,     /* divergence, non-finite values */
    NSP_ERR_UNSUPPORTED = 3, /* operation undefined for this configuration */
};

const char* nsp_last_error(void);

/* ---------------------------------------------------------------- datasets */

typedef struct nsp_dataset nsp_dataset;

int nsp_dataset_load_csv(const char* path, nsp_dataset** out);
int nsp_dataset_save_csv(const nsp_dataset* data, const char* path);
int nsp_dataset_generate(int n, unsigned long long seed, double noise_sigma,
                         nsp_dataset** out);
int nsp_dataset_size(const nsp_dataset* data, int* out);
int nsp_dataset_point(const nsp_dataset* data, int i, double* x, double* y);
void nsp_dataset_free(nsp_dataset* data);

/* ------------------------------------------------------------- activations */

/* Accepts "relu", "leaky_relu:A", "tpow:G", or "alpha,beta,gamma". */
int nsp_activation_parse(const char* text, double* alpha, double* beta,
                         double* gamma);
int nsp_activation_eval(double alpha, double beta, double gamma, double x,
                        double* out);
int nsp_activation_green_constant(double alpha, double beta, double gamma,
                                  double* out);

typedef struct nsp_admissibility_report {
    int admissible;
    int has_fitted;
    double alpha, beta, gamma; /* valid when has_fitted */
    double gamma_estimate;
    double max_residual;
    char reason[240];
} nsp_admissibility_report;

int nsp_check_admissibility(const double* xs, const double* ys, int n,
                            double tolerance, nsp_admissibility_report* out);

/* ---------------------------------------------------------------- networks */

typedef struct nsp_network nsp_network;

int nsp_network_load(const char* path, nsp_network** out);
int nsp_network_save(const nsp_network* net, const char* path);
int nsp_network_eval(const nsp_network* net, double x, double* out);
int nsp_network_width(const nsp_network* net, int* out);
int nsp_network_path_norm(const nsp_network* net, double* out);
int nsp_network_weight_decay(const nsp_network* net, double* out);
int nsp_network_seminorm(const nsp_network* net, double* out);
int nsp_network_balance(const nsp_network* net, nsp_network** out);
int nsp_network_reduce(const nsp_network* net, nsp_network** out);
void nsp_network_free(nsp_network* net);

/* ----------------------------------------------------------------- splines */

typedef struct nsp_spline nsp_spline;

int nsp_spline_connect_the_dots(const nsp_dataset* data, nsp_spline** out);
int nsp_spline_natural_cubic(const nsp_dataset* data, nsp_spline** out);
int nsp_network_to_spline(const nsp_network* net, nsp_spline** out);
int nsp_spline_eval(const nsp_spline* s, double x, double* out);
int nsp_spline_seminorm(const nsp_spline* s, double* out);
int nsp_spline_knot_count(const nsp_spline* s, int* out);
int nsp_spline_load(const char* path, nsp_spline** out);
int nsp_spline_save(const nsp_spline* s, const char* path);
void nsp_spline_free(nsp_spline* s);

/* ---------------------------------------------------------------- training */

typedef struct nsp_history nsp_history;

typedef struct nsp_train_config {
    int width;
    double alpha, beta, gamma;  /* activation triple */
    double lambda;
    int reg;                    /* 0 weight decay, 1 path norm, 2 none */
    double learning_rate;
    long long epochs;
    unsigned long long seed;
    double init_scale;
    long long log_every;        /* 0 silent, else stderr CSV period */
} nsp_train_config;

/* Fills the documented defaults (ReLU, K=200, lambda=1e-5, ...). */
int nsp_train_config_init(nsp_train_config* config);

/* history_out may be NULL when the loss trace is not needed. */
int nsp_train(const nsp_train_config* config, const nsp_dataset* data,
              nsp_network** net_out, nsp_history** history_out);
int nsp_history_size(const nsp_history* h, long long* out);
int nsp_history_entry(const nsp_history* h, long long i, double* data_loss,
                      double* reg_value, double* objective);
void nsp_history_free(nsp_history* h);

/* ------------------------------------------------------------------ oracle */

typedef struct nsp_oracle_solution nsp_oracle_solution;

/* grid_points <= 0 selects the default of 20 * N candidate knots. */
int nsp_oracle_solve(const nsp_dataset* data, double gamma, double lambda,
                     int grid_points, long long max_iters, double tol,
                     nsp_oracle_solution** out);
int nsp_oracle_seminorm(const nsp_oracle_solution* sol, double* out);
int nsp_oracle_objective(const nsp_oracle_solution* sol, double* out);
int nsp_oracle_data_residual(const nsp_oracle_solution* sol, double* out);
int nsp_oracle_kkt_residual(const nsp_oracle_solution* sol, double* out);
int nsp_oracle_converged(const nsp_oracle_solution* sol, int* out);
int nsp_oracle_to_spline(const nsp_oracle_solution* sol, nsp_spline** out);
void nsp_oracle_solution_free(nsp_oracle_solution* sol);

/* -------------------------------------------------------------- experiment */

/* Runs the configured methods, writing <method>.csv, report.txt and
 * optionally plot.svg into out_dir. */
int nsp_experiment_run(const char* config_path, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* NSPLINE_H */
