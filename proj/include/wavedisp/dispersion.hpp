#pragma once

// Closed-form numerical wave number of the two-node element / Newmark
// average-acceleration discretization of the Kelvin-Voigt wave equation.
//
// Substituting the discrete plane wave
//   u_(j,k) = A exp(i(beta_n j l - omega k dt))
// (and the same form for velocity and acceleration) into the nodal
// equilibrium and the two Newmark relations gives a 3x3 homogeneous system.
// Its solvability condition fixes cos(beta_n l) = D + F i, which is inverted
// for beta_n l = d + h i: d/l is the numerical wave number and h/l the
// numerical attenuation.

#include <array>
#include <optional>

#include "wavedisp/core.hpp"

namespace wavedisp {

/// Intermediate terms of cos(beta_n l) = (d1 + f1 i)/(d2 + f1 i).
struct CosineTerms {
    double d1 = 0.0;
    double d2 = 0.0;
    double f1 = 0.0;
    double d = 0.0;  ///< Re cos(beta_n l)
    double f = 0.0;  ///< Im cos(beta_n l), <= 0 for gamma >= 0
};

/// Throws DomainError when a <= 2 or b <= 2 (below the sampling limit).
CosineTerms cosine_terms(const WaveSetting& s);

/// D + F i.
Complex cos_numerical_wavenumber(const WaveSetting& s);

/// Which closed form of the inverse cosine to use.
///  - corrected: the roots cos^2 d and cosh^2 h of t^2 - (1+D^2+F^2) t + D^2 = 0.
///  - printed:   the historically published radicand (1+D^2+F^2) - 4D^2, kept
///               only to demonstrate that it fails the undamped sanity case.
enum class RadicandForm { corrected, printed };

struct PhaseAttenuation {
    double d = 0.0;  ///< phase increment per element, in [0, pi]
    double h = 0.0;  ///< attenuation per element, >= 0 whenever Im(input) <= 0
};

/// Solves cos(d + h i) = cos_bl. The sign of h follows sin(d) sinh(h) = -F so
/// that a forward wave decays in its direction of travel.
PhaseAttenuation invert_transcendental(Complex cos_bl, RadicandForm form = RadicandForm::corrected);

struct NumericalWave {
    double d = 0.0;
    double h = 0.0;
    Complex cos_bl;
    Complex amp_vel;  ///< B*dt for a unit displacement amplitude
    Complex amp_acc;  ///< C*dt^2 for a unit displacement amplitude

    Complex phase() const { return {d, h}; }
};

NumericalWave numerical_wave(const WaveSetting& s);

struct EigenvectorAmplitudes {
    Complex b_amp;  ///< B*dt = -2i sin(w dt)/(cos(w dt) + 1)
    Complex c_amp;  ///< C*dt^2 = 4(cos(w dt) - 1)/(cos(w dt) + 1)
};

/// Throws DomainError unless omega_dt lies in (0, pi).
EigenvectorAmplitudes eigenvector_amplitudes(double omega_dt);

using Matrix3c = std::array<std::array<Complex, 3>, 3>;

/// The 3x3 system acting on (A, B dt, C dt^2) for a given cos(beta_n l).
Matrix3c dispersion_matrix(const WaveSetting& s, Complex cos_bl);

Complex determinant(const Matrix3c& m);

struct DispersionErrors {
    /// 100 (d/l - A*)/(d/l): relative numerical wave velocity error, (v - v_n)/v.
    double vel_err_pct = 0.0;
    /// 100 (B* - h/l)/B*: relative numerical damping error; absent when gamma = 0.
    std::optional<double> damp_err_pct;
};

DispersionErrors dispersion_errors(const WaveSetting& s);

}  // namespace wavedisp
