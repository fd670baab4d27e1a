#pragma once

#include <Eigen/Dense>

#include "bsent/beam_splitter.hpp"

namespace bsent {

// Gaussian state of one or two modes, represented by the real symmetric
// matrix M of its Weyl characteristic function
//   C(zeta, eta) = exp[-1/2 (zeta_i, zeta_r, eta_i, eta_r) M (...)^T]
// with the vacuum equal to the identity.  First moments are excluded:
// separability of Gaussian states depends only on second moments.
class GaussianState {
  public:
    static GaussianState vacuum(int modes = 1);
    static GaussianState thermal(double nbar);
    static GaussianState squeezed_thermal(double nbar, double s);

    // Validates symmetry, positive definiteness and the uncertainty bound
    // (symplectic eigenvalues >= 1 - 1e-9).
    static GaussianState from_matrix(const Eigen::MatrixXd& M);

    int modes() const { return static_cast<int>(M_.rows()) / 2; }
    const Eigen::MatrixXd& matrix() const { return M_; }

    // Quadrature covariance matrix V (vacuum = identity), ordering
    // (x_a, p_a[, x_b, p_b]).  V = J M J with J = diag(1, -1, 1, -1).
    Eigen::MatrixXd covariance() const;

    double min_symplectic_eigenvalue() const;

  private:
    explicit GaussianState(Eigen::MatrixXd M) : M_(std::move(M)) {}
    Eigen::MatrixXd M_;
};

// Symplectic eigenvalues of a quadrature covariance matrix (ordering
// (x_1, p_1, ...)), i.e. the moduli of the eigenvalues of i Omega V.
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& V);

// True iff a quadrature variance lies below the vacuum limit (minimum
// eigenvalue of M below 1).  Single-mode states only.
bool is_nonclassical(const GaussianState& state);

// True iff the state has a proper P-function: M - I positive semidefinite.
bool is_classical_gaussian(const GaussianState& state);

GaussianState tensor(const GaussianState& a, const GaussianState& b);

// Beam splitter action on the characteristic function,
//   C_out(zeta, eta) = C_in(t zeta + r e^{i phi} eta, -r e^{-i phi} zeta + t eta),
// as the orthogonal congruence M_out = S^T M_in S.
GaussianState beam_split(const GaussianState& state, const BeamSplitter& bs);

// The orthogonal 4x4 map induced by the beam splitter on (zeta_i, zeta_r,
// eta_i, eta_r).
Eigen::Matrix4d beam_split_map(const BeamSplitter& bs);

// Local squeezing of each output mode: congruence by
// diag(e^{-s_a}, e^{s_a}, e^{-s_b}, e^{s_b}).  local_squeeze(thermal, s)
// equals squeezed_thermal(nbar, s).
GaussianState local_squeeze(const GaussianState& state, double s_a, double s_b);

// Local phase rotation R(theta) applied to one mode (0 = a, 1 = b).
GaussianState rotate_mode(const GaussianState& state, int mode, double theta);

// Duan standard form parameters: diagonal 2x2 blocks and diagonal
// correlation block, subject to
//   (b1-1)/(d1-1) = (b2-1)/(d2-1)
//   |c1| - |c2| = sqrt((b1-1)(d1-1)) - sqrt((b2-1)(d2-1)).
struct StandardForm {
    double b1, b2, d1, d2, c1, c2;
};

struct StandardFormResult {
    StandardForm form;
    // Accumulated local map L with M' = L^T M L (block-diagonal over modes).
    Eigen::Matrix4d local_map;
    // Product of vacua; caller short-circuits to separable.
    bool degenerate;
};

StandardFormResult to_standard_form(const GaussianState& state);

enum class Separability { separable, entangled };

struct SeparabilityVerdict {
    Separability decision;
    double duan_lhs;             // <(Delta u)^2> + <(Delta v)^2>
    double duan_rhs;             // q0^2 + 1/q0^2
    double ppt_min_symplectic;   // cross-check value, not used for the decision
};

// Necessary and sufficient separability test for two-mode Gaussian states.
SeparabilityVerdict duan_separability(const GaussianState& state);

}  // namespace bsent
