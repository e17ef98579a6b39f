#include "edreg/estimators.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "edreg/errors.hpp"

namespace edreg {

std::string to_string(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::Nede: return "nede";
        case EstimatorKind::Nalede: return "nalede";
        case EstimatorKind::Nedep: return "nedep";
        case EstimatorKind::Naledep: return "naledep";
        case EstimatorKind::Ede: return "ede";
        case EstimatorKind::Alede: return "alede";
        case EstimatorKind::Edep: return "edep";
        case EstimatorKind::Aledep: return "aledep";
        case EstimatorKind::OlsMp: return "ols";
        case EstimatorKind::Ridge: return "ridge";
        case EstimatorKind::Pcr: return "pcr";
        case EstimatorKind::ElasticNet: return "en";
    }
    return "?";
}

EstimatorKind kind_from_string(const std::string& name) {
    if (name == "nede") return EstimatorKind::Nede;
    if (name == "nalede") return EstimatorKind::Nalede;
    if (name == "nedep") return EstimatorKind::Nedep;
    if (name == "naledep") return EstimatorKind::Naledep;
    if (name == "ede") return EstimatorKind::Ede;
    if (name == "alede") return EstimatorKind::Alede;
    if (name == "edep") return EstimatorKind::Edep;
    if (name == "aledep") return EstimatorKind::Aledep;
    if (name == "ols" || name == "ols_mp" || name == "mp") return EstimatorKind::OlsMp;
    if (name == "ridge" || name == "rr") return EstimatorKind::Ridge;
    if (name == "pcr") return EstimatorKind::Pcr;
    if (name == "en" || name == "elasticnet") return EstimatorKind::ElasticNet;
    throw std::invalid_argument("unknown estimator '" + name + "'");
}

bool is_local_kind(EstimatorKind kind) {
    return kind == EstimatorKind::Nede || kind == EstimatorKind::Nalede ||
           kind == EstimatorKind::Nedep || kind == EstimatorKind::Naledep;
}

bool is_lasso_kind(EstimatorKind kind) {
    return kind == EstimatorKind::Nalede || kind == EstimatorKind::Naledep ||
           kind == EstimatorKind::Alede || kind == EstimatorKind::Aledep ||
           kind == EstimatorKind::ElasticNet;
}

bool is_thresholded_kind(EstimatorKind kind) {
    return kind == EstimatorKind::Nedep || kind == EstimatorKind::Naledep ||
           kind == EstimatorKind::Edep || kind == EstimatorKind::Aledep;
}

namespace {

bool is_global_linear_kind(EstimatorKind kind) {
    return kind == EstimatorKind::Ede || kind == EstimatorKind::Alede ||
           kind == EstimatorKind::Edep || kind == EstimatorKind::Aledep;
}

EstimatorKind pilot_kind(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::Nalede: return EstimatorKind::Nede;
        case EstimatorKind::Naledep: return EstimatorKind::Nedep;
        case EstimatorKind::Alede: return EstimatorKind::Ede;
        case EstimatorKind::Aledep: return EstimatorKind::Edep;
        default: return kind;
    }
}

}  // namespace

Kernel EstimatorConfig::resolved_kernel() const {
    if (kernel) return *kernel;
    // Thresholded local fits assume a finite-support kernel.
    if (kind == EstimatorKind::Nedep || kind == EstimatorKind::Naledep) return Kernel::Biweight;
    return Kernel::Gaussian;
}

void EstimatorConfig::validate() const {
    if (h < 0.0) throw std::invalid_argument("EstimatorConfig: h must be >= 0");
    if (lambda < 0.0) throw std::invalid_argument("EstimatorConfig: lambda must be >= 0");
    if (mu < 0.0) throw std::invalid_argument("EstimatorConfig: mu must be >= 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("EstimatorConfig: gamma must be > 0");
    if (t < 0.0) throw std::invalid_argument("EstimatorConfig: t must be >= 0");
    if (sigma_nu2 < 0.0) throw std::invalid_argument("EstimatorConfig: sigma_nu2 must be >= 0");
    if (lambda2 < 0.0) throw std::invalid_argument("EstimatorConfig: lambda2 must be >= 0");
    if (d && *d < 0) throw std::invalid_argument("EstimatorConfig: d must be >= 0");
}

Eigen::VectorXd Estimate::stacked() const {
    Eigen::VectorXd beta(dxf_hat.size() + 1);
    beta(0) = f_hat;
    beta.tail(dxf_hat.size()) = dxf_hat;
    return beta;
}

double predict(const Estimate& estimate, const Eigen::VectorXd& x) {
    return estimate.f_hat + estimate.dxf_hat.dot(x - estimate.center);
}

namespace {

// Exact solve of M beta = r through the eigendecomposition when M is
// numerically nonsingular; otherwise the minimum-norm least-squares solution
// (eigenvalues below the cutoff inverted as zero). M must be symmetric.
Eigen::VectorXd sym_solve_or_pinv(const Eigen::MatrixXd& M, const Eigen::VectorXd& r,
                                  bool* used_pinv) {
    const SymmetricEigen es = eigendecompose_sym(M);
    const double max_abs = es.values.cwiseAbs().maxCoeff();
    const double cutoff = 1e-12 * max_abs;
    const double min_abs = es.values.cwiseAbs().minCoeff();
    *used_pinv = !(max_abs > 0.0) || min_abs <= cutoff;
    Eigen::VectorXd inv = es.values;
    for (Eigen::Index i = 0; i < inv.size(); ++i) {
        inv(i) = std::abs(es.values(i)) > cutoff ? 1.0 / es.values(i) : 0.0;
    }
    return es.vectors * (inv.asDiagonal() * (es.vectors.transpose() * r));
}

Eigen::MatrixXd ridge_penalty(Eigen::Index p) {
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(p + 1, p + 1);
    P(0, 0) = 0.0;
    return P;
}

}  // namespace

Estimate fit_moments(const LocalGram& gram, const EstimatorConfig& config,
                     double effective_n) {
    config.validate();
    const Eigen::Index p = gram.p();
    const EstimatorKind kind = config.kind;

    Eigen::MatrixXd C = gram.C;
    Eigen::VectorXd R = gram.R;

    Estimate est;
    est.center = gram.x0;
    est.diagnostics.config = config;
    est.diagnostics.effective_n = effective_n;

    if (is_thresholded_kind(kind)) {
        C = threshold(C, config.t);
        R = threshold(R, config.t);
        if (C.isZero(0.0) && R.isZero(0.0)) {
            est.diagnostics.degenerate_threshold = true;
            est.diagnostics.warnings.push_back(
                "threshold t zeroed every moment; estimate is identically zero");
        }
    }

    // Errors-in-variables correction for the global linear family: subtract
    // sigma_nu2 from the covariance block and floor its spectrum at zero.
    SymmetricEigen eig;
    if (is_global_linear_kind(kind)) {
        Eigen::MatrixXd c22 = C.bottomRightCorner(p, p);
        c22.diagonal().array() -= config.sigma_nu2;
        eig = eigendecompose_sym(c22);
        if (config.sigma_nu2 > 0.0 && eig.values(0) < 0.0) {
            throw std::invalid_argument(
                "sigma_nu2 = " + std::to_string(config.sigma_nu2) +
                " leaves the corrected covariance negative definite; supply a smaller value");
        }
        if (eig.values(p - 1) < 0.0) {
            eig.values = eig.values.cwiseMax(0.0);
            c22 = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
        }
        C.bottomRightCorner(p, p) = c22;
    } else {
        eig = eigendecompose_sym(C.bottomRightCorner(p, p));
    }

    const int d_used = config.d ? *config.d : numerical_rank(eig.values);
    const ProjectionPair proj = projection_matrices(eig, d_used);
    est.diagnostics.eigenvalues = eig.values;
    est.diagnostics.spectral_gap = proj.spectral_gap();
    est.diagnostics.d_used = d_used;

    // Direct (non-l1) solve shared by the plain estimators and the adaptive
    // lasso pilots.
    const auto direct_solve = [&](EstimatorKind solve_kind) -> Eigen::VectorXd {
        if (is_thresholded_kind(solve_kind)) {
            bool used_pinv = false;
            Eigen::VectorXd beta =
                sym_solve_or_pinv(C + config.lambda * proj.P, R, &used_pinv);
            if (used_pinv) {
                est.diagnostics.pinv_fallback = true;
                if (!est.diagnostics.degenerate_threshold) {
                    est.diagnostics.warnings.push_back(
                        "thresholded system is rank deficient; returned the minimum-norm solution");
                }
            }
            return beta;
        }
        return solve_penalized_wls(C, R, config.lambda, proj.P);
    };

    Eigen::VectorXd beta;
    switch (kind) {
        case EstimatorKind::Nede:
        case EstimatorKind::Ede:
        case EstimatorKind::Nedep:
        case EstimatorKind::Edep:
            beta = direct_solve(kind);
            break;

        case EstimatorKind::Nalede:
        case EstimatorKind::Naledep:
        case EstimatorKind::Alede:
        case EstimatorKind::Aledep: {
            const Eigen::VectorXd pilot = direct_solve(pilot_kind(kind));
            QuadraticProblem problem;
            problem.A = C + config.lambda * proj.P;
            problem.b = R;
            problem.mu = config.mu;
            problem.penalty_weights.resize(p + 1);
            problem.penalty_weights(0) = 0.0;
            for (Eigen::Index j = 1; j <= p; ++j) {
                const double w = std::abs(pilot(j));
                problem.penalty_weights(j) =
                    w == 0.0 ? std::numeric_limits<double>::infinity()
                             : std::pow(w, -config.gamma);
            }
            SolverReport report = coordinate_descent_wl1(problem, pilot, 1e-10);
            beta = report.beta;
            est.diagnostics.solver = std::move(report);
            break;
        }

        case EstimatorKind::OlsMp:
            beta = pinv(C) * R;
            break;

        case EstimatorKind::Ridge:
            beta = solve_penalized_wls(C, R, config.lambda, ridge_penalty(p));
            break;

        case EstimatorKind::Pcr: {
            // Regress on the leading d principal components, then map back.
            Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(p + 1, d_used + 1);
            basis(0, 0) = 1.0;
            basis.block(1, 1, p, d_used) = proj.U_R;
            const Eigen::MatrixXd c_red = basis.transpose() * C * basis;
            const Eigen::VectorXd r_red = basis.transpose() * R;
            const Eigen::MatrixXd no_penalty = Eigen::MatrixXd::Zero(d_used + 1, d_used + 1);
            beta = basis * solve_penalized_wls(c_red, r_red, 0.0, no_penalty);
            break;
        }

        case EstimatorKind::ElasticNet: {
            QuadraticProblem problem;
            problem.A = C + config.lambda2 * ridge_penalty(p);
            problem.b = R;
            problem.mu = config.mu;
            problem.penalty_weights = Eigen::VectorXd::Ones(p + 1);
            problem.penalty_weights(0) = 0.0;
            SolverReport report =
                coordinate_descent_wl1(problem, Eigen::VectorXd::Zero(p + 1), 1e-10);
            beta = report.beta;
            est.diagnostics.solver = std::move(report);
            break;
        }
    }

    est.f_hat = beta(0);
    est.dxf_hat = beta.tail(p);

    // Residual of the final normal equations, for the diagnostics record.
    {
        Eigen::MatrixXd A = C;
        if (kind == EstimatorKind::Ridge) {
            A += config.lambda * ridge_penalty(p);
        } else if (kind == EstimatorKind::ElasticNet) {
            A += config.lambda2 * ridge_penalty(p);
        } else if (kind != EstimatorKind::OlsMp && kind != EstimatorKind::Pcr) {
            A += config.lambda * proj.P;
        }
        est.diagnostics.normal_eq_residual = (A * beta - R).cwiseAbs().maxCoeff();
    }
    return est;
}

Estimate fit(const DataSet& data, const EstimatorConfig& config,
             const std::optional<Eigen::VectorXd>& x0) {
    data.validate();
    config.validate();
    const EstimatorKind kind = config.kind;
    const bool local = is_local_kind(kind);
    const bool baseline_local = !local && !is_global_linear_kind(kind) && x0.has_value();

    if (local && !x0) {
        throw std::invalid_argument(to_string(kind) + " is a local estimator and needs an x0");
    }
    if (config.d && *config.d > data.p()) {
        throw std::invalid_argument("EstimatorConfig: d exceeds the number of predictors");
    }

    if (local || baseline_local) {
        if (!(config.h > 0.0)) {
            throw std::invalid_argument("local fit at x0 needs a bandwidth h > 0");
        }
        const LocalWeights weights = weight_matrix(data, *x0, config.h, config.resolved_kernel());
        const LocalGram gram = weighted_gram(data, weights, *x0, config.h);
        Estimate est = fit_moments(gram, config, weights.effective_n);
        est.x0 = *x0;
        if (config.kernel && *config.kernel == Kernel::Gaussian &&
            (kind == EstimatorKind::Nedep || kind == EstimatorKind::Naledep)) {
            est.diagnostics.warnings.push_back(
                "thresholded local fits assume a finite-support kernel; "
                "consider epanechnikov or biweight");
        }
        return est;
    }

    // Global path: center at the column means.
    const Eigen::VectorXd center = data.column_means();
    const LocalGram gram =
        weighted_gram(data, uniform_weights(data.n(), center), center, 0.0);
    Estimate est = fit_moments(gram, config, static_cast<double>(data.n()));
    if (x0 && is_global_linear_kind(kind)) {
        est.diagnostics.warnings.push_back(to_string(kind) +
                                           " is a global estimator; x0 was ignored");
    }
    return est;
}

}  // namespace edreg
