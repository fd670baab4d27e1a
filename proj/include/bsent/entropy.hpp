#pragma once

#include "bsent/fock.hpp"
#include "bsent/gaussian.hpp"

namespace bsent {

enum class EntropyMethod { fock_schmidt, gaussian_symplectic };

// Von Neumann entropy in nats together with the route that produced it.
struct EntropyValue {
    double nats;
    EntropyMethod method;

    double bits() const { return nats / std::log(2.0); }
};

// Entanglement entropy of a pure two-mode Fock state: -sum lambda ln lambda
// over the Schmidt spectrum (singular values of the amplitude grid squared).
EntropyValue von_neumann_entropy(const TwoModeFockState& state);

// Entanglement entropy of a pure two-mode Gaussian state from the symplectic
// eigenvalue nu = sqrt(det A) of the mode-a block:
//   g(nu) = ((nu+1)/2) ln((nu+1)/2) - ((nu-1)/2) ln((nu-1)/2).
EntropyValue gaussian_entropy(const GaussianState& state, bool require_pure = true);

// g(nu) itself; also the closed form for the two-mode squeezed vacuum at
// nu = cosh(2s).
double symplectic_entropy_function(double nu);

}  // namespace bsent
