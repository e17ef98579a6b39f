#pragma once

#include <Eigen/Core>

#include <string>

#include "edreg/dataset.hpp"

namespace edreg {

// Radially symmetric kernel profiles. Gaussian has exponential tails;
// Epanechnikov and Biweight vanish identically for ||u|| >= 1.
enum class Kernel { Gaussian, Epanechnikov, Biweight };

std::string to_string(Kernel kernel);
Kernel kernel_from_string(const std::string& name);

// Gaussian: exp(-||u||^2/2); Epanechnikov: (1-||u||^2)+; Biweight: (1-||u||^2)+^2.
// Normalization constants are omitted; they cancel in every estimator ratio.
double kernel_eval(Kernel kernel, const Eigen::VectorXd& u);

// Profile as a function of the squared norm; kernel_eval is a thin wrapper.
double kernel_profile(Kernel kernel, double squared_norm);

// Diagonal of the localization weight matrix centered at x0.
struct LocalWeights {
    Eigen::VectorXd w;       // n nonnegative weights
    double h = 0.0;          // bandwidth used
    Eigen::VectorXd x0;      // center
    double effective_n = 0;  // sum(w) / max(w); 0 when all weights vanish

    double sum() const { return w.sum(); }
};

// w_i = K((X_i - x0)/h). The h^{-p} prefactor is omitted: it cancels against
// the weight normalization used downstream.
LocalWeights weight_matrix(const DataSet& data, const Eigen::VectorXd& x0,
                           double h, Kernel kernel);

// Uniform weights; the degenerate global case of weight_matrix.
LocalWeights uniform_weights(Eigen::Index n, const Eigen::VectorXd& x0);

// h = kappa * n^{-1/(d+4)}.
double default_bandwidth(long n, int d, double kappa);

}  // namespace edreg
