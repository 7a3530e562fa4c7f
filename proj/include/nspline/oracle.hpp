#pragma once

#include <cstddef>
#include <vector>

#include "nspline/dataset.hpp"
#include "nspline/spline.hpp"

namespace nspline {

/// Grid-restricted synthesis problem: minimize over coefficients c (one per
/// candidate knot) and an unpenalized polynomial p
///     ||y - A [c; p]||^2 + lambda * ||c||_1,
/// where the dictionary columns are normalized one-sided power atoms
/// rho_plus(x_n - grid_j) and monomials x_n^j.
struct GridProblem {
    double gamma;
    std::vector<double> grid;  // strictly increasing candidate knots
    double lambda;
    Dataset data;

    GridProblem(double gamma, std::vector<double> grid, double lambda, Dataset data);
};

// Data sites plus uniform fill to m points over [x_min, x_max].
std::vector<double> default_grid(const Dataset& data, std::size_t m);

// Row-major N x (M + ceil(gamma)) measurement matrix.
std::vector<std::vector<double>> build_dictionary(const GridProblem& problem);

double soft_threshold(double x, double tau);

struct OracleSolution {
    std::vector<double> coeffs;  // size M, mostly zero
    std::vector<double> poly;    // ceil(gamma), unpenalized
    double objective = 0.0;
    double data_residual = 0.0;  // sum of squared residuals
    std::size_t iterations = 0;
    bool converged = false;
};

/// Accelerated proximal gradient (monotone restart variant), step size from
/// a power-iteration estimate of the Lipschitz constant.  Stops when the
/// relative objective change drops below tol; returns the best iterate
/// flagged non-converged otherwise.
OracleSolution solve(const GridProblem& problem, std::size_t max_iters = 200000,
                     double tol = 1e-10);

double oracle_seminorm(const OracleSolution& sol);

/// Max KKT violation relative to lambda: inactive atoms need
/// |2 A^T r|_j <= lambda, active ones 2 (A^T r)_j = lambda * sgn(c_j), and
/// the polynomial block a vanishing gradient.
double kkt_residual(const GridProblem& problem, const OracleSolution& sol);

// The solution as a canonical spline (grid knots with nonzero coefficients).
CanonicalSpline oracle_to_spline(const GridProblem& problem, const OracleSolution& sol);

}  // namespace nspline
