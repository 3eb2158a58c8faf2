#pragma once

// Exact dispersion of the 1D Kelvin-Voigt wave equation
//   u_xx + c u_xxt - u_tt / v_r^2 = 0.

#include "wavedisp/core.hpp"

namespace wavedisp {

struct ContinuumWave {
    double a_star = 0.0;    ///< wave number (1/length)
    double b_star = 0.0;    ///< spatial attenuation (1/length)
    double velocity = 0.0;  ///< phase velocity omega/a_star
    double rho_c = 1.0;     ///< 1/sqrt(1 + (omega c)^2)
    double theta = 0.0;     ///< arctan(omega c), in [0, pi/2)

    Complex wavenumber() const { return {a_star, b_star}; }
};

/// Forward-travelling root a_star + i b_star of
/// beta^2 (1 - i omega c) - (omega/v_r)^2 = 0. Only gamma is used.
ContinuumWave continuum_wavenumber(const WaveSetting& s);

/// The real and imaginary parts of 1/(1 - i omega c).
struct ContinuumFactor {
    double real = 1.0;
    double imag = 0.0;
};
ContinuumFactor continuum_factor(double omega_c);

}  // namespace wavedisp
