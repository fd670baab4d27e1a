#pragma once

#include <cmath>
#include <stdexcept>

namespace bsent {

// Lossless two-mode beam splitter, parameterized by the mixing angle theta
// and the reflection phase phi.  Amplitude coefficients: t = cos(theta/2),
// r = sin(theta/2).  theta = pi/2 is the 50:50 splitter.
struct BeamSplitter {
    double theta;
    double phi;

    BeamSplitter(double theta_, double phi_) : theta(theta_), phi(phi_) {
        if (!(theta >= 0.0 && theta <= M_PI)) {
            throw std::invalid_argument("BeamSplitter: theta must lie in [0, pi]");
        }
    }

    double t() const { return std::cos(theta / 2.0); }
    double r() const { return std::sin(theta / 2.0); }

    // Reflectance R = r^2.
    double reflectance() const { return r() * r(); }

    static BeamSplitter from_reflectance(double R, double phi) {
        if (!(R >= 0.0 && R <= 1.0)) {
            throw std::invalid_argument("BeamSplitter: reflectance must lie in [0, 1]");
        }
        return BeamSplitter(2.0 * std::asin(std::sqrt(R)), phi);
    }

    static BeamSplitter balanced(double phi = 0.0) { return BeamSplitter(M_PI / 2.0, phi); }
};

}  // namespace bsent
