#include "bsent/fock.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace bsent {

namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(171);
        t[0] = 1.0;
        for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

}  // namespace

TwoModeFockState::TwoModeFockState(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("TwoModeFockState: cutoff must be >= 0");
    amp_.assign(static_cast<std::size_t>(triangle_dim(cutoff)), cdouble(0.0, 0.0));
}

int TwoModeFockState::index(int n1, int n2) const {
    if (n1 < 0 || n2 < 0 || n1 + n2 > cutoff_) {
        throw std::out_of_range("TwoModeFockState: index outside truncation");
    }
    const int total = n1 + n2;
    return total * (total + 1) / 2 + n1;
}

double TwoModeFockState::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return s;
}

cdouble bs_coefficient(int n1, int n2, int N1, int N2, const BeamSplitter& bs) {
    if (n1 < 0 || n2 < 0 || N1 < 0 || N2 < 0) {
        throw std::invalid_argument("bs_coefficient: photon numbers must be >= 0");
    }
    if (N1 + N2 != n1 + n2) return cdouble(0.0, 0.0);

    const double t = bs.t();
    const double r = bs.r();
    const bool use_logs = n1 + n2 > 20;

    double sum = 0.0;
    for (int k = 0; k <= n1; ++k) {
        const int l = n2 + k - N1;  // from the Kronecker delta N1 = n2 + k - l
        if (l < 0 || l > n2) continue;
        const int rpow = n1 + n2 - k - l;
        const int tpow = k + l;
        double mag;
        if (use_logs) {
            mag = std::exp(0.5 * (log_factorial(n1) + log_factorial(n2) +
                                  log_factorial(N1) + log_factorial(N2)) -
                           log_factorial(k) - log_factorial(n1 - k) -
                           log_factorial(l) - log_factorial(n2 - l));
        } else {
            mag = std::sqrt(factorial(n1) * factorial(n2) * factorial(N1) * factorial(N2)) /
                  (factorial(k) * factorial(n1 - k) * factorial(l) * factorial(n2 - l));
        }
        const double sign = ((n1 - k) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * mag * std::pow(r, rpow) * std::pow(t, tpow);
    }
    const cdouble phase = std::exp(cdouble(0.0, -bs.phi * (n1 - N1)));
    return phase * sum;
}

TwoModeFockState fock_output(int n1, int n2, const BeamSplitter& bs, int cutoff) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("fock_output: photon numbers must be >= 0");
    const int total = n1 + n2;
    if (cutoff < 0) cutoff = total;
    if (cutoff < total) {
        throw std::invalid_argument("fock_output: cutoff smaller than total photon number");
    }
    TwoModeFockState out(cutoff);
    for (int N1 = 0; N1 <= total; ++N1) {
        out.set(N1, total - N1, bs_coefficient(n1, n2, N1, total - N1, bs));
    }
    return out;
}

std::vector<cdouble> su2_coefficients(int N, const BeamSplitter& bs) {
    if (N < 0) throw std::invalid_argument("su2_coefficients: N must be >= 0");
    const double t = bs.t();
    const double r = bs.r();
    std::vector<cdouble> c(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        const double binom_sqrt =
            std::exp(0.5 * (log_factorial(N) - log_factorial(k) - log_factorial(N - k)));
        c[static_cast<std::size_t>(k)] =
            binom_sqrt * std::pow(r, k) * std::pow(t, N - k) * std::exp(cdouble(0.0, k * bs.phi));
    }
    return c;
}

Eigen::MatrixXcd bs_unitary_matrix(int cutoff, const BeamSplitter& bs) {
    if (cutoff < 0) throw std::invalid_argument("bs_unitary_matrix: cutoff must be >= 0");
    const int dim = TwoModeFockState::triangle_dim(cutoff);
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(dim, dim);
    const cdouble eip = std::exp(cdouble(0.0, bs.phi));

    for (int N = 0; N <= cutoff; ++N) {
        const int offset = N * (N + 1) / 2;
        Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(N + 1, N + 1);
        // Basis within the block: |N1, N - N1>, N1 = 0..N.
        // a^dag b e^{i phi} raises N1; a b^dag e^{-i phi} lowers it.
        for (int N1 = 0; N1 < N; ++N1) {
            const int N2 = N - N1;
            const double amp = std::sqrt(static_cast<double>(N1 + 1) * N2);
            G(N1 + 1, N1) += eip * amp;
            G(N1, N1 + 1) -= std::conj(eip) * amp;
        }
        Eigen::MatrixXcd blockU = ((bs.theta / 2.0) * G).exp();
        U.block(offset, offset, N + 1, N + 1) = blockU;
    }
    return U;
}

}  // namespace bsent
