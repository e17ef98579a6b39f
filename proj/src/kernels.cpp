#include "edreg/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace edreg {

std::string to_string(Kernel kernel) {
    switch (kernel) {
        case Kernel::Gaussian: return "gaussian";
        case Kernel::Epanechnikov: return "epanechnikov";
        case Kernel::Biweight: return "biweight";
    }
    return "?";
}

Kernel kernel_from_string(const std::string& name) {
    if (name == "gaussian") return Kernel::Gaussian;
    if (name == "epanechnikov") return Kernel::Epanechnikov;
    if (name == "biweight") return Kernel::Biweight;
    throw std::invalid_argument("unknown kernel '" + name +
                                "' (expected gaussian|epanechnikov|biweight)");
}

double kernel_profile(Kernel kernel, double squared_norm) {
    switch (kernel) {
        case Kernel::Gaussian:
            return std::exp(-0.5 * squared_norm);
        case Kernel::Epanechnikov:
            return squared_norm < 1.0 ? 1.0 - squared_norm : 0.0;
        case Kernel::Biweight: {
            if (squared_norm >= 1.0) return 0.0;
            const double s = 1.0 - squared_norm;
            return s * s;
        }
    }
    return 0.0;
}

double kernel_eval(Kernel kernel, const Eigen::VectorXd& u) {
    return kernel_profile(kernel, u.squaredNorm());
}

LocalWeights weight_matrix(const DataSet& data, const Eigen::VectorXd& x0,
                           double h, Kernel kernel) {
    if (!(h > 0.0)) throw std::invalid_argument("weight_matrix: bandwidth h must be > 0");
    if (x0.size() != data.p()) {
        throw std::invalid_argument("weight_matrix: x0 has " + std::to_string(x0.size()) +
                                    " entries for p = " + std::to_string(data.p()));
    }
    LocalWeights weights;
    weights.h = h;
    weights.x0 = x0;
    weights.w.resize(data.n());
    const double inv_h2 = 1.0 / (h * h);
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        const double s = (data.X.row(i).transpose() - x0).squaredNorm() * inv_h2;
        weights.w(i) = kernel_profile(kernel, s);
    }
    const double max_w = weights.w.maxCoeff();
    weights.effective_n = max_w > 0.0 ? weights.w.sum() / max_w : 0.0;
    return weights;
}

LocalWeights uniform_weights(Eigen::Index n, const Eigen::VectorXd& x0) {
    LocalWeights weights;
    weights.h = 0.0;
    weights.x0 = x0;
    weights.w = Eigen::VectorXd::Ones(n);
    weights.effective_n = static_cast<double>(n);
    return weights;
}

double default_bandwidth(long n, int d, double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("default_bandwidth: kappa must be > 0");
    if (n < 1) throw std::invalid_argument("default_bandwidth: n must be >= 1");
    if (d < 0) throw std::invalid_argument("default_bandwidth: d must be >= 0");
    return kappa * std::pow(static_cast<double>(n), -1.0 / (d + 4));
}

}  // namespace edreg
