#include "bsent/squeezed.hpp"

#include <cmath>
#include <stdexcept>

#include "bsent/gaussian.hpp"

namespace bsent {

CanonicalSqueezeConfig canonicalize_phases(const SqueezeParams& p, const BeamSplitter& bs) {
    if (p.s1 < 0.0 || p.s2 < 0.0) {
        throw std::invalid_argument("canonicalize_phases: squeezing magnitudes must be >= 0");
    }
    CanonicalSqueezeConfig out{
        SqueezeParams{p.s1, p.s2, 0.0, 0.0},
        BeamSplitter(bs.theta, bs.phi - p.varphi1 / 2.0 + p.varphi2 / 2.0),
        p.varphi1 / 2.0,
        p.varphi2 / 2.0,
    };
    return out;
}

std::complex<double> effective_two_mode_squeezing(double s1, double s2, double phi) {
    const double quarter = phi / (M_PI / 2.0);
    if (std::abs(quarter - std::round(quarter)) > 1e-9) {
        throw std::invalid_argument(
            "effective_two_mode_squeezing: phi must be a multiple of pi/2");
    }
    const std::complex<double> eip = std::exp(std::complex<double>(0.0, phi));
    return 0.5 * (s1 * eip - s2 * std::conj(eip));
}

EntropyValue squeezed_output_entropy(double s1, double s2, const BeamSplitter& bs) {
    const GaussianState in =
        tensor(GaussianState::squeezed_thermal(0.0, s1), GaussianState::squeezed_thermal(0.0, s2));
    return gaussian_entropy(beam_split(in, bs));
}

}  // namespace bsent
