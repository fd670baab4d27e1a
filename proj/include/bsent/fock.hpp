#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "bsent/beam_splitter.hpp"

namespace bsent {

using cdouble = std::complex<double>;

// Pure two-mode state in the Fock basis, truncated to total photon number
// N1 + N2 <= cutoff.  Storage is dense over the triangle, ordered by total
// photon number N and then by N1, so each fixed-N block is contiguous.
class TwoModeFockState {
  public:
    explicit TwoModeFockState(int cutoff);

    int cutoff() const { return cutoff_; }
    int dim() const { return static_cast<int>(amp_.size()); }

    cdouble at(int n1, int n2) const { return amp_[index(n1, n2)]; }
    void set(int n1, int n2, cdouble value) { amp_[index(n1, n2)] = value; }

    double norm_sq() const;

    // Position of |n1, n2> in the triangular ordering.
    int index(int n1, int n2) const;
    static int triangle_dim(int cutoff) { return (cutoff + 1) * (cutoff + 2) / 2; }

    const std::vector<cdouble>& amplitudes() const { return amp_; }

  private:
    int cutoff_;
    std::vector<cdouble> amp_;
};

// Matrix element B_{n1 n2}^{N1 N2} = <N1, N2| B |n1, n2> of the beam
// splitter unitary.  Exactly zero unless N1 + N2 = n1 + n2.
cdouble bs_coefficient(int n1, int n2, int N1, int N2, const BeamSplitter& bs);

// B |n1, n2> as a truncated two-mode state.  The default cutoff is n1 + n2
// (photon number is conserved, so nothing is lost).
TwoModeFockState fock_output(int n1, int n2, const BeamSplitter& bs, int cutoff = -1);

// Coefficients c_k of the SU(2) coherent state B |0, N> = sum_k c_k |k, N-k>.
std::vector<cdouble> su2_coefficients(int N, const BeamSplitter& bs);

// Dense matrix of the beam splitter unitary on the truncated space, in the
// same triangular basis ordering as TwoModeFockState.  Block diagonal over
// fixed total photon number; each block is a matrix exponential of the
// generator (theta/2)(a^dag b e^{i phi} - a b^dag e^{-i phi}).
Eigen::MatrixXcd bs_unitary_matrix(int cutoff, const BeamSplitter& bs);

}  // namespace bsent
