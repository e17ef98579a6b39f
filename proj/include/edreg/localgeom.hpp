#pragma once

#include <Eigen/Core>

#include "edreg/dataset.hpp"
#include "edreg/kernels.hpp"

namespace edreg {

// Localized second moments of the augmented, centered predictors.
// With z_i = X_i - x0 and a_i = (1, z_i):
//   C = sum_i w_i a_i a_i' / sum_i w_i     ((p+1) x (p+1), symmetric PSD)
//   R = sum_i w_i a_i Y_i / sum_i w_i      (p+1)
// The (1,1) entry is the Nadaraya-Watson denominator (identically 1 after
// normalization); the lower-right p x p block is the local covariance.
struct LocalGram {
    Eigen::MatrixXd C;
    Eigen::VectorXd R;
    double h = 0.0;      // bandwidth the weights came from; 0 means unweighted
    Eigen::VectorXd x0;  // centering point
    double sum_w = 0.0;

    Eigen::Index p() const { return C.rows() - 1; }
    Eigen::MatrixXd c22() const { return C.bottomRightCorner(p(), p()); }
};

LocalGram weighted_gram(const DataSet& data, const LocalWeights& weights,
                        const Eigen::VectorXd& x0, double h);

// Symmetric eigendecomposition with a deterministic convention: eigenvalues
// sorted descending; each eigenvector's largest-magnitude component (lowest
// index on ties) is made positive.
struct SymmetricEigen {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // orthonormal columns, aligned with values
};

SymmetricEigen eigendecompose_sym(const Eigen::MatrixXd& m);

// Count of eigenvalues above rel_tol times the largest (nonnegative) one.
int numerical_rank(const Eigen::VectorXd& eigenvalues_desc, double rel_tol = 1e-8);

// Tangent/normal split of an eigenbasis and the induced projections.
// Pi projects onto the normal space (the last p-d eigenvectors); P is Pi
// bordered with a zero intercept row and column.
struct ProjectionPair {
    Eigen::MatrixXd U_R;          // p x d tangent eigenvectors
    Eigen::MatrixXd U_N;          // p x (p-d) normal eigenvectors
    Eigen::MatrixXd Pi;           // p x p, U_N U_N'
    Eigen::MatrixXd P;            // (p+1) x (p+1), diag(0, Pi)
    Eigen::VectorXd eigenvalues;  // descending
    int d = 0;
    // Gap between the retained and discarded spectrum; NaN when d is 0 or p.
    double spectral_gap() const;
};

ProjectionPair projection_matrices(const SymmetricEigen& eigen, int d);

// Elementwise hard threshold: entry kept iff |entry| > t (diagonal included).
Eigen::MatrixXd threshold(const Eigen::MatrixXd& m, double t);
Eigen::VectorXd threshold(const Eigen::VectorXd& v, double t);

// SVD-based Moore-Penrose pseudoinverse; singular values <= tol * sigma_max
// are treated as zero.
Eigen::MatrixXd pinv(const Eigen::MatrixXd& m, double tol = 1e-10);

}  // namespace edreg
