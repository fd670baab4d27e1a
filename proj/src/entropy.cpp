#include "bsent/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace bsent {

namespace {

double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

EntropyValue von_neumann_entropy(const TwoModeFockState& state) {
    const double norm = state.norm_sq();
    if (std::abs(norm - 1.0) > 1e-8) {
        throw std::domain_error("von_neumann_entropy: state not normalized");
    }
    const int n = state.cutoff() + 1;
    Eigen::MatrixXcd grid = Eigen::MatrixXcd::Zero(n, n);
    for (int n1 = 0; n1 < n; ++n1) {
        for (int n2 = 0; n2 + n1 < n; ++n2) {
            grid(n1, n2) = state.at(n1, n2);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(grid);
    double entropy = 0.0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        const double lambda = svd.singularValues()(i) * svd.singularValues()(i);
        entropy -= xlnx(lambda);
    }
    return {std::max(entropy, 0.0), EntropyMethod::fock_schmidt};
}

double symplectic_entropy_function(double nu) {
    if (nu < 1.0 - 1e-9) {
        throw std::domain_error("symplectic_entropy_function: nu below 1");
    }
    if (nu <= 1.0) return 0.0;
    const double np = (nu + 1.0) / 2.0;
    const double nm = (nu - 1.0) / 2.0;
    return xlnx(np) - xlnx(nm);
}

EntropyValue gaussian_entropy(const GaussianState& state, bool require_pure) {
    if (state.modes() != 2) throw std::invalid_argument("gaussian_entropy: two-mode state required");
    if (require_pure) {
        // Pure Gaussian states have both global symplectic eigenvalues at 1.
        const Eigen::VectorXd nus = symplectic_eigenvalues(state.covariance());
        if (nus.maxCoeff() > 1.0 + 1e-6) {
            throw std::domain_error("gaussian_entropy: state is not pure");
        }
    }
    const Eigen::Matrix2d A = state.matrix().topLeftCorner<2, 2>();
    const double det = A.determinant();
    if (det < 1.0 - 1e-9) {
        throw std::domain_error("gaussian_entropy: reduced block below the uncertainty bound");
    }
    const double nu = std::sqrt(std::max(det, 1.0));
    return {symplectic_entropy_function(nu), EntropyMethod::gaussian_symplectic};
}

}  // namespace bsent
