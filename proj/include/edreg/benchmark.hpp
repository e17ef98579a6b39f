#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edreg/estimators.hpp"
#include "edreg/selection.hpp"
#include "edreg/simdata.hpp"

namespace edreg {

struct BenchEstimator {
    std::string name;        // row label, e.g. "ridge"
    EstimatorConfig config;  // fixed hyperparameters when auto_select is off
    bool auto_select = true; // pick hyperparameters per replication by bootstrap
};

struct BenchSpec {
    ModelKind model = ModelKind::Linear;
    int p = 8;
    int n = 1000;
    double sigma_nu2 = 0.01;
    double sigma2 = 1.0;
    int replications = 100;
    std::vector<BenchEstimator> estimators;
    std::uint64_t base_seed = 7;
    ParamGrid grid;          // grids for auto-selected estimators
    double kappa = 1.0;      // bandwidth multiplier when no kappa stage runs
};

struct ErrorRow {
    std::string estimator;
    double mean_err = 0.0;
    double sd_err = 0.0;
    double mean_time_s = 0.0;
    double sd_time_s = 0.0;
    int failures = 0;
    std::vector<double> per_replication_err;  // successes only, in order
};

struct ErrorTable {
    BenchSpec spec;
    std::vector<ErrorRow> rows;

    int total_failures() const;
};

// Generates one instance per replication (seed = base_seed + r), fits every
// estimator, and aggregates the squared coefficient error ||beta_hat - beta||^2
// and per-fit wall time. Individual fit failures become missing cells.
ErrorTable run_replications(const BenchSpec& spec);

enum class TableFormat { Csv, Json, Markdown };

TableFormat format_from_string(const std::string& name);

void emit_table(const ErrorTable& table, TableFormat format,
                const std::string& path);
std::string render_table(const ErrorTable& table, TableFormat format);

}  // namespace edreg
