#include "edreg/dataset.hpp"

#include <stdexcept>
#include <string>

namespace edreg {

void DataSet::validate() const {
    if (X.rows() < 1 || X.cols() < 1) {
        throw std::invalid_argument("DataSet: need at least one row and one column, got " +
                                    std::to_string(X.rows()) + "x" + std::to_string(X.cols()));
    }
    if (Y.size() != X.rows()) {
        throw std::invalid_argument("DataSet: X has " + std::to_string(X.rows()) +
                                    " rows but Y has " + std::to_string(Y.size()) + " entries");
    }
    if (!X.allFinite() || !Y.allFinite()) {
        throw std::invalid_argument("DataSet: non-finite entries");
    }
    if (!names.empty() && static_cast<Eigen::Index>(names.size()) != X.cols()) {
        throw std::invalid_argument("DataSet: " + std::to_string(names.size()) +
                                    " column names for " + std::to_string(X.cols()) + " columns");
    }
}

}  // namespace edreg
