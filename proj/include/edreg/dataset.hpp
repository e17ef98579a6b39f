#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace edreg {

// Raw regression input: n predictor rows and n responses.
struct DataSet {
    Eigen::MatrixXd X;               // n x p, rows are samples
    Eigen::VectorXd Y;               // n
    std::vector<std::string> names;  // optional p column labels

    Eigen::Index n() const { return X.rows(); }
    Eigen::Index p() const { return X.cols(); }

    // Throws std::invalid_argument when shapes disagree, n or p is zero,
    // or any entry is non-finite.
    void validate() const;

    Eigen::VectorXd column_means() const { return X.colwise().mean(); }
};

}  // namespace edreg
