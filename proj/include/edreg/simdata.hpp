#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>

#include "edreg/dataset.hpp"

namespace edreg {

enum class ModelKind { Linear, Nonlinear };

std::string to_string(ModelKind kind);
ModelKind model_from_string(const std::string& name);

// The simulation design behind both synthetic models: a banded covariance
// factor F, the sparse coefficient pattern w, and the derived sizes.
struct GroundTruthSpec {
    Eigen::MatrixXd F;  // p x p covariance factor, predictors ~ N(0, FF')
    Eigen::VectorXd w;  // ones at odd 1-based positions <= q
    int q = 0;          // round(p/2)
    int d_design = 0;   // round(3p/4), block size of the Toeplitz part of F
};

struct SimulatedInstance {
    DataSet data;
    Eigen::VectorXd beta_true;  // intercept followed by the exterior derivative
    Eigen::VectorXd x0;         // evaluation point (zero for the nonlinear model)
    ModelKind model_kind = ModelKind::Linear;
    double sigma_nu2 = 0.0;     // predictor noise variance
    double sigma2 = 0.0;        // response noise variance
    std::uint64_t seed = 0;
};

// Covariance factor F: a 0.3^|i-j| Toeplitz block of size round(3p/4),
// plus two 0.3 entries per remaining row. Rounding is half-away-from-zero.
Eigen::MatrixXd covariance_factor(int p);

GroundTruthSpec make_ground_truth(int p);

// Orthogonal projection of w onto the column space of F; the column space is
// spanned by left singular vectors with sigma > rank_tol * sigma_max.
Eigen::VectorXd true_exterior_derivative(const Eigen::MatrixXd& F,
                                         const Eigen::VectorXd& w,
                                         double rank_tol = 1e-10);

// eta = 1 + sum of xi_i over odd i <= q, with xi ~ N(0, FF').
SimulatedInstance generate_linear(int p, int n, double sigma_nu2, double sigma2,
                                  std::uint64_t seed);

// eta = 1 + sum of sin(xi_i) over odd i <= q, with xi = sin(z), z ~ N(0, FF').
SimulatedInstance generate_nonlinear(int p, int n, double sigma_nu2, double sigma2,
                                     std::uint64_t seed);

}  // namespace edreg
