#pragma once

#include "bsent/beam_splitter.hpp"
#include "bsent/gaussian.hpp"

namespace bsent {

// Case-study output states.  Each pipes the stated inputs through the beam
// splitter and applies the local phase rotation that presents the matrix in
// the block form (b1, b2, d1, d2, c1, c2) at phi = pi/2; the rotation is a
// local unitary and never changes the separability verdict.

// Two equally squeezed thermal states.
GaussianState preset_squeezed_thermal_pair(double nbar, double s, const BeamSplitter& bs);

// Squeezed thermal state on input b, vacuum on input a.
GaussianState preset_squeezed_thermal_vacuum(double nbar, double s, const BeamSplitter& bs);

// Squeezed vacuum on input a, thermal state on input b.
GaussianState preset_squeezed_vacuum_thermal(double nbar, double s, const BeamSplitter& bs);

// Local-squeezing reduction of the squeezed-vacuum + thermal output; maps it
// onto the squeezed-thermal + vacuum block with squeezing factor -s.
GaussianState reduce_squeezed_vacuum_thermal(const GaussianState& output, double s);

}  // namespace bsent
