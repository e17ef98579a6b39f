#include "edreg/localgeom.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "edreg/errors.hpp"

namespace edreg {

LocalGram weighted_gram(const DataSet& data, const LocalWeights& weights,
                        const Eigen::VectorXd& x0, double h) {
    data.validate();
    if (weights.w.size() != data.n()) {
        throw std::invalid_argument("weighted_gram: weights were built for a different sample size");
    }
    const double sum_w = weights.w.sum();
    if (!(sum_w > 0.0)) {
        throw DegenerateNeighborhoodError(
            "weighted_gram: every localization weight is zero at this x0; "
            "increase the bandwidth h (or switch to a kernel with wider support)");
    }
    const Eigen::Index n = data.n();
    const Eigen::Index p = data.p();

    LocalGram gram;
    gram.h = h;
    gram.x0 = x0;
    gram.sum_w = sum_w;

    // Accumulate moments of the centered rows, then border them with the
    // intercept row/column. C11 is exactly 1 after normalization.
    const Eigen::MatrixXd Z = data.X.rowwise() - x0.transpose();
    const Eigen::VectorXd wn = weights.w / sum_w;

    const Eigen::MatrixXd Zw = wn.asDiagonal() * Z;
    const Eigen::VectorXd z_mean = Zw.colwise().sum();
    const Eigen::MatrixXd z_cov = Z.transpose() * Zw;

    gram.C.resize(p + 1, p + 1);
    gram.C(0, 0) = 1.0;
    gram.C.block(0, 1, 1, p) = z_mean.transpose();
    gram.C.block(1, 0, p, 1) = z_mean;
    gram.C.bottomRightCorner(p, p) = 0.5 * (z_cov + z_cov.transpose());

    gram.R.resize(p + 1);
    gram.R(0) = wn.dot(data.Y);
    gram.R.tail(p) = Zw.transpose() * data.Y;

    return gram;
}

SymmetricEigen eigendecompose_sym(const Eigen::MatrixXd& m) {
    if (!m.allFinite()) throw std::invalid_argument("eigendecompose_sym: non-finite entries");
    if (m.rows() != m.cols()) throw std::invalid_argument("eigendecompose_sym: matrix is not square");
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-8) {
        throw std::invalid_argument("eigendecompose_sym: matrix is asymmetric by " + std::to_string(asym));
    }
    const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecompose_sym: eigensolver failed");
    }

    const Eigen::Index p = m.rows();
    SymmetricEigen out;
    out.values.resize(p);
    out.vectors.resize(p, p);
    // Eigen returns ascending order; flip to descending.
    for (Eigen::Index k = 0; k < p; ++k) {
        out.values(k) = solver.eigenvalues()(p - 1 - k);
        out.vectors.col(k) = solver.eigenvectors().col(p - 1 - k);
    }
    // Sign convention: the largest-magnitude component (lowest index on ties)
    // of each eigenvector is positive.
    for (Eigen::Index k = 0; k < p; ++k) {
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < p; ++i) {
            const double mag = std::abs(out.vectors(i, k));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (out.vectors(pivot, k) < 0.0) out.vectors.col(k) = -out.vectors.col(k);
    }
    return out;
}

int numerical_rank(const Eigen::VectorXd& eigenvalues_desc, double rel_tol) {
    if (eigenvalues_desc.size() == 0) return 0;
    const double largest = eigenvalues_desc(0);
    if (!(largest > 0.0)) return 0;
    int rank = 0;
    while (rank < eigenvalues_desc.size() && eigenvalues_desc(rank) > rel_tol * largest) ++rank;
    return rank;
}

double ProjectionPair::spectral_gap() const {
    const Eigen::Index p = eigenvalues.size();
    if (d <= 0 || d >= p) return std::numeric_limits<double>::quiet_NaN();
    return eigenvalues(d - 1) - eigenvalues(d);
}

ProjectionPair projection_matrices(const SymmetricEigen& eigen, int d) {
    const Eigen::Index p = eigen.vectors.rows();
    if (d < 0 || d > p) {
        throw std::invalid_argument("projection_matrices: d = " + std::to_string(d) +
                                    " out of range 0.." + std::to_string(p));
    }
    ProjectionPair pair;
    pair.d = d;
    pair.eigenvalues = eigen.values;
    pair.U_R = eigen.vectors.leftCols(d);
    pair.U_N = eigen.vectors.rightCols(p - d);
    pair.Pi = pair.U_N * pair.U_N.transpose();
    pair.P = Eigen::MatrixXd::Zero(p + 1, p + 1);
    pair.P.bottomRightCorner(p, p) = pair.Pi;
    return pair;
}

Eigen::MatrixXd threshold(const Eigen::MatrixXd& m, double t) {
    if (t < 0.0) throw std::invalid_argument("threshold: t must be >= 0");
    return m.unaryExpr([t](double v) { return std::abs(v) > t ? v : 0.0; });
}

Eigen::VectorXd threshold(const Eigen::VectorXd& v, double t) {
    if (t < 0.0) throw std::invalid_argument("threshold: t must be >= 0");
    return v.unaryExpr([t](double x) { return std::abs(x) > t ? x : 0.0; });
}

Eigen::MatrixXd pinv(const Eigen::MatrixXd& m, double tol) {
    if (!m.allFinite()) throw std::invalid_argument("pinv: non-finite entries");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return Eigen::MatrixXd::Zero(m.cols(), m.rows());
    Eigen::VectorXd inv = sv;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        inv(i) = sv(i) > tol * sv(0) ? 1.0 / sv(i) : 0.0;
    }
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

}  // namespace edreg
