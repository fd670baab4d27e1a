#include "bsent/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace bsent::oracle {

namespace {

constexpr double kTraceGuard = 1e-4;

Eigen::MatrixXcd single_mode_fock(int n, int side) {
    if (n < 0 || n >= side) throw std::invalid_argument("oracle: Fock index outside truncation");
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(side, side);
    rho(n, n) = 1.0;
    return rho;
}

Eigen::MatrixXcd single_mode_coherent(std::complex<double> alpha, int side) {
    Eigen::VectorXcd c(side);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < side; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    if (c.squaredNorm() < 1.0 - kTraceGuard) {
        throw std::domain_error("oracle: coherent amplitude too large for cutoff");
    }
    return c * c.adjoint();
}

Eigen::MatrixXcd single_mode_thermal(double nbar, int side) {
    if (nbar < 0.0) throw std::invalid_argument("oracle: nbar must be >= 0");
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(side, side);
    double p = 1.0 / (1.0 + nbar);
    const double ratio = nbar / (1.0 + nbar);
    double trace = 0.0;
    for (int n = 0; n < side; ++n) {
        rho(n, n) = p;
        trace += p;
        p *= ratio;
    }
    if (trace < 1.0 - kTraceGuard) {
        throw std::domain_error("oracle: thermal occupation too large for cutoff");
    }
    return rho;
}

// Squeeze operator S(s) = exp[(s/2)(a^2 - a^dag^2)] on the truncated space.
Eigen::MatrixXcd squeeze_matrix(double s, int side) {
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(side, side);
    for (int n = 2; n < side; ++n) {
        const double amp = 0.5 * s * std::sqrt(static_cast<double>(n) * (n - 1));
        G(n - 2, n) += amp;
        G(n, n - 2) -= amp;
    }
    return G.exp();
}

Eigen::MatrixXcd single_mode_squeezed_thermal(double nbar, double s, int side) {
    const Eigen::MatrixXcd S = squeeze_matrix(s, side);
    return S * single_mode_thermal(nbar, side) * S.adjoint();
}

Eigen::MatrixXcd single_mode(const ModeSpec& spec, int side) {
    switch (spec.kind) {
        case ModeSpec::Kind::fock: return single_mode_fock(spec.n, side);
        case ModeSpec::Kind::coherent: return single_mode_coherent(spec.alpha, side);
        case ModeSpec::Kind::thermal: return single_mode_thermal(spec.nbar, side);
        case ModeSpec::Kind::squeezed_thermal:
            return single_mode_squeezed_thermal(spec.nbar, spec.s, side);
    }
    throw std::logic_error("oracle: unknown mode kind");
}

}  // namespace

ModeSpec ModeSpec::fock(int n) {
    ModeSpec m;
    m.kind = Kind::fock;
    m.n = n;
    return m;
}

ModeSpec ModeSpec::coherent(std::complex<double> alpha) {
    ModeSpec m;
    m.kind = Kind::coherent;
    m.alpha = alpha;
    return m;
}

ModeSpec ModeSpec::thermal(double nbar) {
    ModeSpec m;
    m.kind = Kind::thermal;
    m.nbar = nbar;
    return m;
}

ModeSpec ModeSpec::squeezed_thermal(double nbar, double s) {
    ModeSpec m;
    m.kind = Kind::squeezed_thermal;
    m.nbar = nbar;
    m.s = s;
    return m;
}

TruncatedDensityMatrix::TruncatedDensityMatrix(int cutoff, Eigen::MatrixXcd rho)
    : cutoff_(cutoff), rho_(std::move(rho)) {
    if (cutoff < 0) throw std::invalid_argument("TruncatedDensityMatrix: cutoff must be >= 0");
    const int dim = (cutoff + 1) * (cutoff + 1);
    if (rho_.rows() != dim || rho_.cols() != dim) {
        throw std::invalid_argument("TruncatedDensityMatrix: dimension mismatch");
    }
}

TruncatedDensityMatrix build_state(const ModeSpec& a, const ModeSpec& b, int cutoff) {
    const int side = cutoff + 1;
    const Eigen::MatrixXcd ra = single_mode(a, side);
    const Eigen::MatrixXcd rb = single_mode(b, side);
    Eigen::MatrixXcd rho(side * side, side * side);
    for (int n1 = 0; n1 < side; ++n1) {
        for (int m1 = 0; m1 < side; ++m1) {
            rho.block(n1 * side, m1 * side, side, side) = ra(n1, m1) * rb;
        }
    }
    return TruncatedDensityMatrix(cutoff, std::move(rho));
}

TruncatedDensityMatrix apply_bs(const TruncatedDensityMatrix& in, const BeamSplitter& bs) {
    const int side = in.side();
    const int cutoff = in.cutoff();
    using cd = std::complex<double>;
    const cd eip = std::exp(cd(0.0, bs.phi));

    // Index lists and block unitaries per total photon number; blocks with
    // N > cutoff are clipped to the square truncation but remain unitary.
    std::vector<std::vector<int>> blocks;
    std::vector<Eigen::MatrixXcd> unitaries;
    for (int N = 0; N <= 2 * cutoff; ++N) {
        std::vector<int> idx;
        const int lo = std::max(0, N - cutoff);
        const int hi = std::min(N, cutoff);
        for (int N1 = lo; N1 <= hi; ++N1) idx.push_back(in.index(N1, N - N1));
        const int d = static_cast<int>(idx.size());
        Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(d, d);
        for (int i = 0; i + 1 < d; ++i) {
            const int N1 = lo + i;
            const int N2 = N - N1;
            const double amp = std::sqrt(static_cast<double>(N1 + 1) * N2);
            G(i + 1, i) += eip * amp;
            G(i, i + 1) -= std::conj(eip) * amp;
        }
        blocks.push_back(std::move(idx));
        unitaries.push_back(((bs.theta / 2.0) * G).exp());
    }

    const Eigen::MatrixXcd& rho = in.rho();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (std::size_t N = 0; N < blocks.size(); ++N) {
        for (std::size_t M = 0; M < blocks.size(); ++M) {
            const auto& bi = blocks[N];
            const auto& bj = blocks[M];
            Eigen::MatrixXcd sub(bi.size(), bj.size());
            for (std::size_t i = 0; i < bi.size(); ++i) {
                for (std::size_t j = 0; j < bj.size(); ++j) sub(i, j) = rho(bi[i], bj[j]);
            }
            const Eigen::MatrixXcd res = unitaries[N] * sub * unitaries[M].adjoint();
            for (std::size_t i = 0; i < bi.size(); ++i) {
                for (std::size_t j = 0; j < bj.size(); ++j) out(bi[i], bj[j]) = res(i, j);
            }
        }
    }
    return TruncatedDensityMatrix(cutoff, std::move(out));
}

Eigen::MatrixXcd reduced_mode_a(const TruncatedDensityMatrix& in) {
    const int side = in.side();
    Eigen::MatrixXcd ra = Eigen::MatrixXcd::Zero(side, side);
    for (int n1 = 0; n1 < side; ++n1) {
        for (int m1 = 0; m1 < side; ++m1) {
            std::complex<double> sum = 0.0;
            for (int n2 = 0; n2 < side; ++n2) sum += in.rho()(in.index(n1, n2), in.index(m1, n2));
            ra(n1, m1) = sum;
        }
    }
    return ra;
}

double reduced_entropy(const TruncatedDensityMatrix& in) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(reduced_mode_a(in),
                                                       Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()(i);
        if (l > 0.0) entropy -= l * std::log(l);
    }
    return entropy;
}

double negativity(const TruncatedDensityMatrix& in) {
    const int side = in.side();
    Eigen::MatrixXcd pt(in.rho().rows(), in.rho().cols());
    for (int n1 = 0; n1 < side; ++n1) {
        for (int n2 = 0; n2 < side; ++n2) {
            for (int m1 = 0; m1 < side; ++m1) {
                for (int m2 = 0; m2 < side; ++m2) {
                    pt(in.index(n1, n2), in.index(m1, m2)) =
                        in.rho()(in.index(n1, m2), in.index(m1, n2));
                }
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
    double neg = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()(i);
        if (l < 0.0) neg -= l;
    }
    return neg;
}

PptResult ppt_separability(const GaussianState& state) {
    if (state.modes() != 2) throw std::invalid_argument("ppt_separability: two-mode state required");
    Eigen::Matrix4d Lambda = Eigen::Matrix4d::Identity();
    Lambda(3, 3) = -1.0;  // momentum sign flip on mode b
    const Eigen::MatrixXd flipped = Lambda * state.covariance() * Lambda;
    const double min_nu = symplectic_eigenvalues(flipped).minCoeff();
    return {min_nu, min_nu >= 1.0 - 1e-10 ? Separability::separable : Separability::entangled};
}

}  // namespace bsent::oracle
