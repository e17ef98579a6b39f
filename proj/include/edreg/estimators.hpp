#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "edreg/dataset.hpp"
#include "edreg/kernels.hpp"
#include "edreg/localgeom.hpp"
#include "edreg/solvers.hpp"

namespace edreg {

enum class EstimatorKind {
    // Local (kernel-weighted) exterior derivative estimators.
    Nede,     // projection-penalized local linear fit
    Nalede,   // Nede pilot + adaptive lasso
    Nedep,    // thresholded moments variant
    Naledep,  // thresholded + adaptive lasso
    // Global linear counterparts with errors-in-variables correction.
    Ede,
    Alede,
    Edep,
    Aledep,
    // Baselines.
    OlsMp,
    Ridge,
    Pcr,
    ElasticNet,
};

std::string to_string(EstimatorKind kind);
EstimatorKind kind_from_string(const std::string& name);

bool is_local_kind(EstimatorKind kind);        // Nede family
bool is_lasso_kind(EstimatorKind kind);        // adaptive-lasso variants + EN
bool is_thresholded_kind(EstimatorKind kind);  // *dep variants

struct EstimatorConfig {
    EstimatorKind kind = EstimatorKind::Ede;
    double h = 0.0;                 // bandwidth; required > 0 for local fits
    std::optional<Kernel> kernel;   // default Gaussian; Biweight for Nedep/Naledep
    double lambda = 0.0;            // projection / ridge penalty strength
    std::optional<int> d;           // manifold dimension; defaults to the
                                    // numerical rank of the local covariance
    double mu = 0.0;                // l1 strength
    double gamma = 1.0;             // adaptive-lasso exponent
    double t = 0.0;                 // hard threshold on the moments
    double sigma_nu2 = 0.0;         // predictor noise variance (global kinds)
    double lambda2 = 0.0;           // elastic-net ridge strength

    Kernel resolved_kernel() const;
    void validate() const;  // nonnegativity etc., even for unused fields
};

struct Diagnostics {
    Eigen::VectorXd eigenvalues;  // spectrum of the covariance block used
    double spectral_gap = 0.0;    // NaN when d is 0 or p
    double effective_n = 0.0;
    int d_used = 0;
    std::optional<SolverReport> solver;  // present for coordinate-descent kinds
    double normal_eq_residual = 0.0;     // ||(A beta - b)||_inf of the final system
    bool pinv_fallback = false;          // singular thresholded system
    bool degenerate_threshold = false;   // threshold wiped out every moment
    std::vector<std::string> warnings;
    EstimatorConfig config;
};

struct Estimate {
    double f_hat = 0.0;
    Eigen::VectorXd dxf_hat;
    std::optional<Eigen::VectorXd> x0;  // present for local fits
    Eigen::VectorXd center;             // expansion point actually used
    Diagnostics diagnostics;

    Eigen::VectorXd stacked() const;  // (f_hat, dxf_hat)
};

// Linear prediction at x from the fitted expansion point.
double predict(const Estimate& estimate, const Eigen::VectorXd& x);

// Core fit from precomputed moments; every estimator routes through this.
Estimate fit_moments(const LocalGram& gram, const EstimatorConfig& config,
                     double effective_n);

// Dispatch on config.kind. Local kinds require x0. Baselines run globally
// (centered at the column means) unless x0 and a bandwidth are supplied, in
// which case the same normal equations are kernel-weighted.
Estimate fit(const DataSet& data, const EstimatorConfig& config,
             const std::optional<Eigen::VectorXd>& x0 = std::nullopt);

}  // namespace edreg
