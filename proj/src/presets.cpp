#include "bsent/presets.hpp"

namespace bsent {

GaussianState preset_squeezed_thermal_pair(double nbar, double s, const BeamSplitter& bs) {
    const GaussianState in = tensor(GaussianState::squeezed_thermal(nbar, s),
                                    GaussianState::squeezed_thermal(nbar, s));
    return rotate_mode(beam_split(in, bs), 1, M_PI / 2.0);
}

GaussianState preset_squeezed_thermal_vacuum(double nbar, double s, const BeamSplitter& bs) {
    const GaussianState in =
        tensor(GaussianState::vacuum(), GaussianState::squeezed_thermal(nbar, s));
    return rotate_mode(beam_split(in, bs), 0, M_PI / 2.0);
}

GaussianState preset_squeezed_vacuum_thermal(double nbar, double s, const BeamSplitter& bs) {
    const GaussianState in =
        tensor(GaussianState::squeezed_thermal(0.0, s), GaussianState::thermal(nbar));
    return rotate_mode(beam_split(in, bs), 1, -M_PI / 2.0);
}

GaussianState reduce_squeezed_vacuum_thermal(const GaussianState& output, double s) {
    return local_squeeze(output, -s, -s);
}

}  // namespace bsent
