#include "wavedisp/dispersion.hpp"

#include <cmath>

#include "wavedisp/continuum.hpp"

namespace wavedisp {

CosineTerms cosine_terms(const WaveSetting& s) {
    s.validate();
    if (s.a <= 2.0 || s.b <= 2.0) {
        throw DomainError("mesh parameter below Nyquist limit (a and b must exceed 2)");
    }
    const DerivedGroups g = derived_groups(s);
    const double cw = std::cos(g.omega_dt);
    const double sw = std::sin(g.omega_dt);

    CosineTerms t;
    t.d1 = -((cw + 1.0) / 4.0 + g.psi1 * s.mass.m1 * (cw - 1.0));
    t.d2 = -(cw + 1.0) / 4.0 + g.psi1 * s.mass.m2 * (cw - 1.0);
    t.f1 = g.psi2 * sw / 2.0;

    const double denom = t.d2 * t.d2 + t.f1 * t.f1;
    t.d = (t.d1 * t.d2 + t.f1 * t.f1) / denom;
    t.f = (g.psi1 * g.psi2 * (cw - 1.0) * (s.mass.m1 + s.mass.m2) * sw / 2.0) / denom;
    return t;
}

Complex cos_numerical_wavenumber(const WaveSetting& s) {
    const CosineTerms t = cosine_terms(s);
    return {t.d, t.f};
}

namespace {

PhaseAttenuation invert_printed(double dr, double fi) {
    const double sum = 1.0 + dr * dr + fi * fi;
    const double inner = std::sqrt(sum - 4.0 * dr * dr);
    const double cos_d = std::sqrt((sum - inner) / 2.0);
    const double cosh_h = std::sqrt((sum + inner) / 2.0);
    PhaseAttenuation p;
    p.d = std::acos(cos_d);
    p.h = std::log(cosh_h + std::sqrt(cosh_h * cosh_h - 1.0));
    return p;
}

}  // namespace

PhaseAttenuation invert_transcendental(Complex cos_bl, RadicandForm form) {
    const double dr = cos_bl.real();
    const double fi = cos_bl.imag();
    if (!std::isfinite(dr) || !std::isfinite(fi)) throw DomainError("cos(beta l) must be finite");
    if (form == RadicandForm::printed) return invert_printed(dr, fi);

    // With cos(d + hi) = cos d cosh h - i sin d sinh h:
    //   sin^2 d - sinh^2 h = 1 - D^2 - F^2 =: X,   sin^2 d * sinh^2 h = F^2,
    // so sin^2 d = (X + r)/2 and sinh^2 h = (r - X)/2 with r = sqrt(X^2 + 4F^2).
    // Whichever of the two is free of cancellation is formed directly.
    const double x = (1.0 - dr) * (1.0 + dr) - fi * fi;
    const double r = std::hypot(x, 2.0 * fi);
    double sin2 = 0.0;
    double sinh2 = 0.0;
    if (x >= 0.0) {
        sin2 = 0.5 * (x + r);
        sinh2 = sin2 > 0.0 ? fi * fi / sin2 : 0.0;
    } else {
        sinh2 = 0.5 * (r - x);
        sin2 = sinh2 > 0.0 ? fi * fi / sinh2 : 0.0;
    }
    const double sin_d = std::sqrt(sin2);
    const double cosh_h = std::sqrt(1.0 + sinh2);
    const double cos_d = dr / cosh_h;

    PhaseAttenuation p;
    p.d = std::atan2(sin_d, cos_d);
    p.h = std::asinh(std::sqrt(sinh2));
    if (fi > 0.0) p.h = -p.h;
    return p;
}

EigenvectorAmplitudes eigenvector_amplitudes(double omega_dt) {
    if (!(omega_dt > 0.0 && omega_dt < kPi)) throw DomainError("omega*dt must lie in (0, pi)");
    const double cw = std::cos(omega_dt);
    const double sw = std::sin(omega_dt);
    return {Complex(0.0, -2.0 * sw / (cw + 1.0)), Complex(4.0 * (cw - 1.0) / (cw + 1.0), 0.0)};
}

NumericalWave numerical_wave(const WaveSetting& s) {
    const CosineTerms t = cosine_terms(s);
    NumericalWave w;
    w.cos_bl = {t.d, t.f};
    const PhaseAttenuation p = invert_transcendental(w.cos_bl);
    w.d = p.d;
    w.h = p.h;
    const EigenvectorAmplitudes amps = eigenvector_amplitudes(derived_groups(s).omega_dt);
    w.amp_vel = amps.b_amp;
    w.amp_acc = amps.c_amp;
    return w;
}

Matrix3c dispersion_matrix(const WaveSetting& s, Complex cos_bl) {
    const DerivedGroups g = derived_groups(s);
    const double cw = std::cos(g.omega_dt);
    const double sw = std::sin(g.omega_dt);
    const Complex one_minus = 1.0 - cos_bl;
    Matrix3c m{};
    m[0] = {one_minus, g.psi2 * one_minus, g.psi1 * (s.mass.m2 * cos_bl + s.mass.m1)};
    m[1] = {Complex(0.0), Complex(cw - 1.0), Complex(0.0, 0.5 * sw)};
    m[2] = {Complex(cw - 1.0), Complex(0.0), Complex(-(cw + 1.0) / 4.0)};
    return m;
}

Complex determinant(const Matrix3c& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

DispersionErrors dispersion_errors(const WaveSetting& s) {
    const ContinuumWave exact = continuum_wavenumber(s);
    const NumericalWave num = numerical_wave(s);
    const double beta_n = num.d * s.b;
    const double damping_n = num.h * s.b;

    DispersionErrors e;
    e.vel_err_pct = 100.0 * (beta_n - exact.a_star) / beta_n;
    if (s.gamma > 0.0) e.damp_err_pct = 100.0 * (exact.b_star - damping_n) / exact.b_star;
    return e;
}

}  // namespace wavedisp
