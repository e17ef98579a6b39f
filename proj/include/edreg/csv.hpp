#pragma once

#include <string>

#include "edreg/dataset.hpp"

namespace edreg {

// Reads a numeric CSV with mandatory header row; the named column becomes Y,
// every other column becomes X in header order. Throws ParseError with the
// offending row/column on malformed input.
DataSet load_csv(const std::string& path, const std::string& response_column);

// Writes header + data with 17 significant digits (round-trips doubles).
void save_csv(const DataSet& data, const std::string& path,
              const std::string& response_column = "y");

// One-column CSV, used for ground-truth coefficient vectors.
void save_vector_csv(const Eigen::VectorXd& v, const std::string& path,
                     const std::string& column_name);

}  // namespace edreg
