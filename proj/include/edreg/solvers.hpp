#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>

namespace edreg {

// Quadratic-plus-weighted-l1 objective
//   beta' A beta - 2 b' beta + mu * sum_j penalty_weights[j] * |beta_j|.
// Index 0 is the intercept and carries penalty weight 0; an infinite penalty
// weight pins its coordinate at exactly zero.
struct QuadraticProblem {
    Eigen::MatrixXd A;                // symmetric PSD
    Eigen::VectorXd b;
    Eigen::VectorXd penalty_weights;  // nonnegative, may contain +inf
    double mu = 0.0;
};

struct SolverReport {
    Eigen::VectorXd beta;
    int iterations = 0;  // full coordinate sweeps
    double kkt_residual = 0.0;
    bool converged = false;
};

inline double soft_threshold(double z, double a) {
    if (z > a) return z - a;
    if (z < -a) return z + a;
    return 0.0;
}

// Solves (C + lambda P) beta = R for the projection-penalized weighted least
// squares problem. P is an idempotent penalty matrix, so the normal equations
// add lambda P directly. Throws RankDeficiencyError when the system is
// numerically singular (min eigenvalue <= 1e-12 * max eigenvalue).
Eigen::VectorXd solve_penalized_wls(const Eigen::MatrixXd& C,
                                    const Eigen::VectorXd& R, double lambda,
                                    const Eigen::MatrixXd& P);

// Cyclic coordinate descent with soft thresholding. Stops when the largest
// coordinate update and the KKT residual both fall below tol. The KKT
// residual is, per coordinate,
//   beta_j != 0:  |2(A beta - b)_j + mu pw_j sign(beta_j)|
//   beta_j == 0:  max(0, |2(A beta - b)_j| - mu pw_j)
// Returns converged = false when max_iter sweeps elapse first.
SolverReport coordinate_descent_wl1(const QuadraticProblem& problem,
                                    Eigen::VectorXd warm_start,
                                    double tol = 1e-8, int max_iter = 100000);

double quadratic_objective(const QuadraticProblem& problem,
                           const Eigen::VectorXd& beta);

}  // namespace edreg
