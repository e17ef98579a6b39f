#include "edreg/solvers.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "edreg/errors.hpp"

namespace edreg {

Eigen::VectorXd solve_penalized_wls(const Eigen::MatrixXd& C,
                                    const Eigen::VectorXd& R, double lambda,
                                    const Eigen::MatrixXd& P) {
    if (lambda < 0.0) throw std::invalid_argument("solve_penalized_wls: lambda must be >= 0");
    const Eigen::MatrixXd A = C + lambda * P;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    const double max_eig = es.eigenvalues().cwiseAbs().maxCoeff();
    const double min_eig = es.eigenvalues().minCoeff();
    if (!(min_eig > 1e-12 * max_eig)) {
        throw RankDeficiencyError(
            "solve_penalized_wls: penalized system is numerically singular "
            "(min eigenvalue " + std::to_string(min_eig) + "); increase lambda or decrease d");
    }
    return A.ldlt().solve(R);
}

double quadratic_objective(const QuadraticProblem& problem, const Eigen::VectorXd& beta) {
    double penalty = 0.0;
    for (Eigen::Index j = 0; j < beta.size(); ++j) {
        const double pw = problem.penalty_weights(j);
        if (beta(j) != 0.0) {
            if (std::isinf(pw)) return std::numeric_limits<double>::infinity();
            penalty += pw * std::abs(beta(j));
        }
    }
    return beta.dot(problem.A * beta) - 2.0 * problem.b.dot(beta) + problem.mu * penalty;
}

namespace {

double kkt_residual(const QuadraticProblem& problem, const Eigen::VectorXd& beta) {
    const Eigen::VectorXd grad = 2.0 * (problem.A * beta - problem.b);
    double worst = 0.0;
    for (Eigen::Index j = 0; j < beta.size(); ++j) {
        const double pw = problem.penalty_weights(j);
        if (std::isinf(pw)) continue;  // pinned coordinate
        double violation;
        if (beta(j) != 0.0) {
            violation = std::abs(grad(j) + problem.mu * pw * (beta(j) > 0 ? 1.0 : -1.0));
        } else {
            violation = std::max(0.0, std::abs(grad(j)) - problem.mu * pw);
        }
        worst = std::max(worst, violation);
    }
    return worst;
}

}  // namespace

SolverReport coordinate_descent_wl1(const QuadraticProblem& problem,
                                    Eigen::VectorXd warm_start, double tol,
                                    int max_iter) {
    const Eigen::Index m = problem.A.rows();
    if (problem.A.cols() != m || problem.b.size() != m || problem.penalty_weights.size() != m) {
        throw std::invalid_argument("coordinate_descent_wl1: inconsistent problem dimensions");
    }
    if (problem.mu < 0.0) throw std::invalid_argument("coordinate_descent_wl1: mu must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("coordinate_descent_wl1: tol must be > 0");
    for (Eigen::Index j = 0; j < m; ++j) {
        const double pw = problem.penalty_weights(j);
        if (std::isnan(pw) || pw < 0.0) {
            throw std::invalid_argument("coordinate_descent_wl1: penalty weights must be >= 0");
        }
    }

    Eigen::VectorXd beta = warm_start.size() == m ? std::move(warm_start)
                                                  : Eigen::VectorXd::Zero(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        if (std::isinf(problem.penalty_weights(j))) beta(j) = 0.0;
    }

    // residual = A beta, maintained incrementally across coordinate updates.
    Eigen::VectorXd a_beta = problem.A * beta;

    SolverReport report;
    int sweep = 0;
    for (; sweep < max_iter; ++sweep) {
        double max_update = 0.0;
        for (Eigen::Index j = 0; j < m; ++j) {
            const double pw = problem.penalty_weights(j);
            if (std::isinf(pw)) continue;
            const double ajj = problem.A(j, j);
            const double partial = problem.b(j) - (a_beta(j) - ajj * beta(j));
            double updated;
            if (ajj > 0.0) {
                updated = soft_threshold(partial, 0.5 * problem.mu * pw) / ajj;
            } else {
                // PSD A with a zero diagonal entry has a zero row; the
                // coordinate cannot reduce the quadratic term.
                updated = 0.0;
            }
            const double delta = updated - beta(j);
            if (delta != 0.0) {
                a_beta += delta * problem.A.col(j);
                beta(j) = updated;
                max_update = std::max(max_update, std::abs(delta));
            }
        }
        if (max_update < tol) {
            report.kkt_residual = kkt_residual(problem, beta);
            if (report.kkt_residual < tol) {
                report.converged = true;
                ++sweep;
                break;
            }
            if (max_update == 0.0) {
                // Fixed point that still violates KKT (degenerate problem);
                // further sweeps cannot move.
                ++sweep;
                break;
            }
        }
    }
    report.iterations = sweep;
    if (!report.converged) report.kkt_residual = kkt_residual(problem, beta);
    report.beta = std::move(beta);
    return report;
}

}  // namespace edreg
