#pragma once

#include <complex>

#include <Eigen/Dense>

#include "bsent/beam_splitter.hpp"
#include "bsent/gaussian.hpp"

namespace bsent::oracle {

// Brute-force ground truth over the square two-mode Fock basis
// {(N1, N2) : N1, N2 <= cutoff}.  Test support only; nothing here is exposed
// through the CLI.

struct ModeSpec {
    enum class Kind { fock, coherent, thermal, squeezed_thermal };
    Kind kind = Kind::fock;
    int n = 0;                          // fock
    std::complex<double> alpha{0, 0};   // coherent
    double nbar = 0.0;                  // thermal, squeezed_thermal
    double s = 0.0;                     // squeezed_thermal

    static ModeSpec fock(int n);
    static ModeSpec coherent(std::complex<double> alpha);
    static ModeSpec thermal(double nbar);
    static ModeSpec squeezed_thermal(double nbar, double s);
};

class TruncatedDensityMatrix {
  public:
    TruncatedDensityMatrix(int cutoff, Eigen::MatrixXcd rho);

    int cutoff() const { return cutoff_; }
    int side() const { return cutoff_ + 1; }
    const Eigen::MatrixXcd& rho() const { return rho_; }

    // Row-major index of |n1, n2> in the square basis.
    int index(int n1, int n2) const { return n1 * side() + n2; }

    double trace() const { return rho_.trace().real(); }

  private:
    int cutoff_;
    Eigen::MatrixXcd rho_;
};

// Product input state.  Throws if the truncated trace drops below 1 - 1e-4.
TruncatedDensityMatrix build_state(const ModeSpec& a, const ModeSpec& b, int cutoff);

// Conjugation by the matrix exponential of the beam splitter generator,
// block-decomposed over total photon number.
TruncatedDensityMatrix apply_bs(const TruncatedDensityMatrix& rho, const BeamSplitter& bs);

// Partial trace over mode b.
Eigen::MatrixXcd reduced_mode_a(const TruncatedDensityMatrix& rho);

// Von Neumann entropy of the reduced mode-a state, in nats.
double reduced_entropy(const TruncatedDensityMatrix& rho);

// Magnitude of the summed negative eigenvalues of the partial transpose.
double negativity(const TruncatedDensityMatrix& rho);

struct PptResult {
    double min_symplectic;
    Separability decision;
};

// Simon criterion: separable iff the minimum symplectic eigenvalue of the
// momentum-flipped covariance matrix is >= 1.
PptResult ppt_separability(const GaussianState& state);

}  // namespace bsent::oracle
