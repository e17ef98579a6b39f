#include "edreg/simdata.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

#include "edreg/rng.hpp"

namespace edreg {

std::string to_string(ModelKind kind) {
    return kind == ModelKind::Linear ? "linear" : "nonlinear";
}

ModelKind model_from_string(const std::string& name) {
    if (name == "linear") return ModelKind::Linear;
    if (name == "nonlinear") return ModelKind::Nonlinear;
    throw std::invalid_argument("unknown model '" + name + "' (expected linear|nonlinear)");
}

namespace {

// Half-away-from-zero rounding, fixed so that seeded runs are reproducible.
int round_half_away(double x) { return static_cast<int>(std::lround(x)); }

}  // namespace

Eigen::MatrixXd covariance_factor(int p) {
    if (p < 2) throw std::invalid_argument("covariance_factor: p must be >= 2");
    const int d = round_half_away(0.75 * p);
    const int q = round_half_away(0.5 * p);
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(p, p);
    for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= p; ++j) {
            if (i <= d && j <= d) {
                F(i - 1, j - 1) = std::pow(0.3, std::abs(i - j));
            } else if (i >= d + 1 && (j == q + i - d || j == q + i + 1 - d)) {
                F(i - 1, j - 1) = 0.3;
            }
        }
    }
    return F;
}

GroundTruthSpec make_ground_truth(int p) {
    GroundTruthSpec spec;
    spec.F = covariance_factor(p);
    spec.q = round_half_away(0.5 * p);
    spec.d_design = round_half_away(0.75 * p);
    spec.w = Eigen::VectorXd::Zero(p);
    for (int i = 1; i <= spec.q; i += 2) spec.w(i - 1) = 1.0;
    return spec;
}

Eigen::VectorXd true_exterior_derivative(const Eigen::MatrixXd& F,
                                         const Eigen::VectorXd& w,
                                         double rank_tol) {
    if (!F.allFinite()) throw std::invalid_argument("true_exterior_derivative: F has non-finite entries");
    if (F.rows() != w.size()) {
        throw std::invalid_argument("true_exterior_derivative: F is " + std::to_string(F.rows()) +
                                    "x" + std::to_string(F.cols()) + " but w has " +
                                    std::to_string(w.size()) + " entries");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(F, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return Eigen::VectorXd::Zero(w.size());
    int rank = 0;
    while (rank < sv.size() && sv(rank) > rank_tol * sv(0)) ++rank;
    const Eigen::MatrixXd U_r = svd.matrixU().leftCols(rank);
    return U_r * (U_r.transpose() * w);
}

namespace {

struct SimConfig {
    int p;
    int n;
    double sigma_nu2;
    double sigma2;
    std::uint64_t seed;
};

void check_sim_args(const SimConfig& cfg) {
    if (cfg.p < 2) throw std::invalid_argument("generate: p must be >= 2");
    if (cfg.n < 1) throw std::invalid_argument("generate: n must be >= 1");
    if (cfg.sigma_nu2 < 0 || cfg.sigma2 < 0) {
        throw std::invalid_argument("generate: noise variances must be >= 0");
    }
}

// Rows of the returned matrix are N(0, FF') draws: row = F z with z standard
// normal, filled row-major so the stream is independent of storage order.
Eigen::MatrixXd sample_latent(const Eigen::MatrixXd& F, int n, Rng& rng) {
    const int p = static_cast<int>(F.rows());
    Eigen::MatrixXd Z(n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) Z(i, j) = rng.normal();
    return Z * F.transpose();
}

SimulatedInstance assemble(const SimConfig& cfg, ModelKind kind) {
    check_sim_args(cfg);
    const GroundTruthSpec truth = make_ground_truth(cfg.p);
    Rng rng(cfg.seed);

    Eigen::MatrixXd xi = sample_latent(truth.F, cfg.n, rng);
    if (kind == ModelKind::Nonlinear) xi = xi.array().sin().matrix();

    Eigen::VectorXd eta(cfg.n);
    if (kind == ModelKind::Linear) {
        eta = (xi * truth.w).array() + 1.0;
    } else {
        eta = (xi.array().sin().matrix() * truth.w).array() + 1.0;
    }

    SimulatedInstance inst;
    inst.model_kind = kind;
    inst.sigma_nu2 = cfg.sigma_nu2;
    inst.sigma2 = cfg.sigma2;
    inst.seed = cfg.seed;
    inst.x0 = Eigen::VectorXd::Zero(cfg.p);

    inst.data.X = xi;
    if (cfg.sigma_nu2 > 0) {
        const double sd = std::sqrt(cfg.sigma_nu2);
        for (int i = 0; i < cfg.n; ++i)
            for (int j = 0; j < cfg.p; ++j) inst.data.X(i, j) += sd * rng.normal();
    }
    inst.data.Y = eta;
    if (cfg.sigma2 > 0) {
        const double sd = std::sqrt(cfg.sigma2);
        for (int i = 0; i < cfg.n; ++i) inst.data.Y(i) += sd * rng.normal();
    }

    inst.beta_true.resize(cfg.p + 1);
    inst.beta_true(0) = 1.0;
    inst.beta_true.tail(cfg.p) = true_exterior_derivative(truth.F, truth.w);
    return inst;
}

}  // namespace

SimulatedInstance generate_linear(int p, int n, double sigma_nu2, double sigma2,
                                  std::uint64_t seed) {
    return assemble({p, n, sigma_nu2, sigma2, seed}, ModelKind::Linear);
}

SimulatedInstance generate_nonlinear(int p, int n, double sigma_nu2, double sigma2,
                                     std::uint64_t seed) {
    return assemble({p, n, sigma_nu2, sigma2, seed}, ModelKind::Nonlinear);
}

}  // namespace edreg
