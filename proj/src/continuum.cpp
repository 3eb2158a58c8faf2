#include "wavedisp/continuum.hpp"

#include <cmath>

namespace wavedisp {

ContinuumFactor continuum_factor(double omega_c) {
    const double denom = 1.0 + omega_c * omega_c;
    return {1.0 / denom, omega_c / denom};
}

ContinuumWave continuum_wavenumber(const WaveSetting& s) {
    const DerivedGroups g = derived_groups(s);
    const double wc2 = g.omega_c * g.omega_c;

    ContinuumWave w;
    w.rho_c = 1.0 / std::sqrt(1.0 + wc2);
    // arctan rather than the arccos form keeps full precision near omega*c = 0.
    w.theta = std::atan(g.omega_c);
    const double scale = (kOmega / kReferenceVelocity) * std::pow(1.0 + wc2, -0.25);
    w.a_star = scale * std::cos(0.5 * w.theta);
    w.b_star = scale * std::sin(0.5 * w.theta);
    w.velocity = kOmega / w.a_star;
    return w;
}

}  // namespace wavedisp
