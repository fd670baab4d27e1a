#include <doctest.h>

#include <cmath>

#include "bsent/entropy.hpp"
#include "bsent/squeezed.hpp"

using namespace bsent;

namespace {

double binom(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

TEST_CASE("product outputs carry zero entropy") {
    // theta = 0 leaves the input factorized.
    const TwoModeFockState out = fock_output(3, 2, BeamSplitter(0.0, 0.8));
    CHECK(von_neumann_entropy(out).nats < 1e-12);
}

TEST_CASE("single photon through a 50:50 splitter gives ln 2") {
    const TwoModeFockState out = fock_output(0, 1, BeamSplitter::balanced());
    const EntropyValue e = von_neumann_entropy(out);
    CHECK(e.method == EntropyMethod::fock_schmidt);
    CHECK(std::abs(e.nats - std::log(2.0)) < 1e-12);
    CHECK(std::abs(e.bits() - 1.0) < 1e-12);
}

TEST_CASE("|0,N> through a 50:50 splitter gives the binomial entropy") {
    const int N = 10;
    const TwoModeFockState out = fock_output(0, N, BeamSplitter::balanced(0.4));
    double expected = 0.0;
    for (int k = 0; k <= N; ++k) {
        const double p = binom(N, k) / std::pow(2.0, N);
        expected -= p * std::log(p);
    }
    CHECK(std::abs(von_neumann_entropy(out).nats - expected) < 1e-12);
}

TEST_CASE("von_neumann_entropy rejects unnormalized states") {
    TwoModeFockState state(2);
    state.set(1, 1, cdouble(0.5, 0.0));
    CHECK_THROWS_AS(von_neumann_entropy(state), std::domain_error);
}

TEST_CASE("entropy is symmetric under mode exchange") {
    const BeamSplitter bs = BeamSplitter::balanced(1.2);
    const double e12 = von_neumann_entropy(fock_output(1, 2, bs)).nats;
    const double e21 = von_neumann_entropy(fock_output(2, 1, bs)).nats;
    CHECK(std::abs(e12 - e21) < 1e-10);

    TwoModeFockState swapped(3);
    const TwoModeFockState out = fock_output(1, 2, bs);
    for (int n1 = 0; n1 <= 3; ++n1) {
        for (int n2 = 0; n1 + n2 <= 3; ++n2) {
            swapped.set(n2, n1, out.at(n1, n2));
        }
    }
    CHECK(std::abs(von_neumann_entropy(swapped).nats - e12) < 1e-12);
}

TEST_CASE("entropy is invariant under local phases") {
    const TwoModeFockState out = fock_output(2, 1, BeamSplitter(0.9, 0.3));
    const double base = von_neumann_entropy(out).nats;
    TwoModeFockState phased(out.cutoff());
    const double alpha = 0.37, beta = -1.21;
    for (int n1 = 0; n1 <= out.cutoff(); ++n1) {
        for (int n2 = 0; n1 + n2 <= out.cutoff(); ++n2) {
            phased.set(n1, n2, out.at(n1, n2) * std::exp(cdouble(0.0, alpha * n1 + beta * n2)));
        }
    }
    CHECK(std::abs(von_neumann_entropy(phased).nats - base) < 1e-12);
}

TEST_CASE("symplectic_entropy_function") {
    CHECK(symplectic_entropy_function(1.0) == 0.0);
    CHECK_THROWS_AS(symplectic_entropy_function(0.5), std::domain_error);
    // g(3) = 2 ln 2 - 1 ln 1 = ln 4.
    CHECK(std::abs(symplectic_entropy_function(3.0) - std::log(4.0)) < 1e-14);
    // Monotone increasing.
    CHECK(symplectic_entropy_function(2.0) < symplectic_entropy_function(2.5));
}

TEST_CASE("gaussian_entropy of the vacuum is zero") {
    const GaussianState out =
        beam_split(tensor(GaussianState::vacuum(), GaussianState::vacuum()), BeamSplitter::balanced());
    const EntropyValue e = gaussian_entropy(out);
    CHECK(e.method == EntropyMethod::gaussian_symplectic);
    CHECK(e.nats < 1e-12);
}

TEST_CASE("two-mode squeezed vacuum entropy is g(cosh 2s)") {
    for (double s : {0.25, 0.5, 1.0}) {
        const double e = squeezed_output_entropy(s, s, BeamSplitter::balanced(M_PI / 2.0)).nats;
        CHECK(std::abs(e - symplectic_entropy_function(std::cosh(2.0 * s))) < 1e-10);
    }
}

TEST_CASE("equal squeezers at phi = 0 disentangle") {
    CHECK(squeezed_output_entropy(0.7, 0.7, BeamSplitter::balanced(0.0)).nats < 1e-10);
}

TEST_CASE("gaussian_entropy rejects mixed states when purity is required") {
    const GaussianState out = beam_split(
        tensor(GaussianState::thermal(0.5), GaussianState::vacuum()), BeamSplitter::balanced());
    CHECK_THROWS_AS(gaussian_entropy(out), std::domain_error);
    CHECK_NOTHROW(gaussian_entropy(out, false));
}

TEST_CASE("gaussian_entropy requires two modes") {
    CHECK_THROWS_AS(gaussian_entropy(GaussianState::vacuum()), std::invalid_argument);
}
