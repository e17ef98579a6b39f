#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edreg/dataset.hpp"
#include "edreg/estimators.hpp"

namespace edreg {

// Candidate values for the sequential bootstrap search. Keep the grids small:
// every entry costs B fits, and long grids invite overfitting the selection.
struct ParamGrid {
    std::vector<double> lambdas{1e-4, 1e-3, 1e-2, 1e-1, 1.0};
    std::vector<int> dims;          // defaults to 0..p at selection time
    std::vector<double> mus{1e-4, 1e-3, 1e-2, 1e-1, 1.0};
    std::vector<double> ts{0.0};    // bootstrap struggles with t; opt in explicitly
    std::vector<double> kappas{0.5, 1.0, 2.0};
    int B = 50;                     // bootstrap replicates per grid point
};

struct StageResult {
    std::string name;                // "kappa", "lambda", "d", "mu", "t"
    std::vector<double> grid;        // evaluated values, in grid order
    std::vector<double> risks;       // bootstrap risk per grid value (inf = all fits failed)
    double chosen = 0.0;
};

struct SelectedParams {
    double lambda = 0.0;
    int d = 0;
    double mu = 0.0;
    double t = 0.0;
    double kappa = 0.0;  // 0 when no bandwidth stage ran
    std::vector<StageResult> stages;
    long fits_executed = 0;
    std::vector<std::string> warnings;
};

using Fitter = std::function<Estimate(const DataSet&)>;

// Mean out-of-bag squared prediction error over B bootstrap resamples.
// Deterministic given the seed; replicates with an empty out-of-bag set are
// redrawn (bounded retries).
double bootstrap_risk(const DataSet& data, const Fitter& fitter, int B,
                      std::uint64_t seed, long* fit_counter = nullptr);

// One-dimensional searches in a fixed order: kappa (local kinds only),
// lambda via Ridge, d via the projection estimator, mu via the adaptive-lasso
// variant, t via the thresholded target. Each stage fixes the values chosen
// before it; ties break toward the stronger regularization (larger lambda,
// mu, t, kappa; smaller d).
SelectedParams select_sequential(const DataSet& data, const ParamGrid& grid,
                                 EstimatorKind target_kind, std::uint64_t seed,
                                 std::optional<Eigen::VectorXd> x0 = std::nullopt);

}  // namespace edreg
