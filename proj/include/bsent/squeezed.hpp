#pragma once

#include <complex>

#include "bsent/beam_splitter.hpp"
#include "bsent/entropy.hpp"

namespace bsent {

// Squeezing parameters of the two input modes, zeta_j = s_j exp(i varphi_j).
struct SqueezeParams {
    double s1 = 0.0;
    double s2 = 0.0;
    double varphi1 = 0.0;
    double varphi2 = 0.0;
};

// Result of moving the squeezing phases into the beam splitter phase via
//   B(theta, phi) S(s e^{i varphi}) = R(varphi/2) B(theta, phi - varphi/2) S(s) R^dag(varphi/2).
// The discarded rotations are local unitaries and do not affect entanglement.
struct CanonicalSqueezeConfig {
    SqueezeParams params;       // varphi1 = varphi2 = 0
    BeamSplitter bs;            // phi shifted by (-varphi1 + varphi2)/2
    double rotation_a;          // discarded local rotation angles
    double rotation_b;
};

CanonicalSqueezeConfig canonicalize_phases(const SqueezeParams& p, const BeamSplitter& bs);

// Effective two-mode squeezing parameter zeta_ab = (s1 e^{i phi} - s2 e^{-i phi})/2
// of the 50:50 decomposition, valid for phi a multiple of pi/2.  Its modulus
// alone fixes the output entanglement.
std::complex<double> effective_two_mode_squeezing(double s1, double s2, double phi);

// Entanglement entropy of the beam splitter output for two squeezed-vacuum
// inputs with real squeezing parameters, via the Gaussian engine.
EntropyValue squeezed_output_entropy(double s1, double s2, const BeamSplitter& bs);

}  // namespace bsent
