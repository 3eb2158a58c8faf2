#include "wavedisp/reflection.hpp"

#include <algorithm>
#include <cmath>

#include "wavedisp/dispersion.hpp"

namespace wavedisp {

WaveSetting transmitted_side(const WaveSetting& s) {
    WaveSetting right = s;
    right.b = s.b / s.alpha;
    right.alpha = 1.0;
    return right;
}

InterfaceCoefficients interface_coefficients(const WaveSetting& s, InterfaceForm form) {
    s.validate();
    const DerivedGroups g = derived_groups(s);
    const double cw = std::cos(g.omega_dt);
    const double sw = std::sin(g.omega_dt);
    // Newmark eigenvector: C dt^2 = 4q, B dt = -2i t.
    const double q = (cw - 1.0) / (1.0 + cw);
    const double t = sw / (1.0 + cw);
    const double inv_alpha = 1.0 / s.alpha;
    const double mass_factor = form == InterfaceForm::assembled ? 1.0 + s.alpha : 1.0 + inv_alpha;

    InterfaceCoefficients k;
    k.a_bar = -1.0 + 4.0 * g.psi1 * q * s.mass.m2;
    k.a_star = 2.0 * g.psi2 * t;
    k.b_bar = 1.0 + inv_alpha + 4.0 * g.psi1 * s.mass.m1 * q * mass_factor;
    k.b_star = -2.0 * g.psi2 * t * (1.0 + inv_alpha);
    k.c_bar = -inv_alpha + 4.0 * g.psi1 * s.alpha * q * s.mass.m2;
    k.c_star = 2.0 * inv_alpha * g.psi2 * t;
    return k;
}

namespace {

ReflectionResult make_result(Complex a_re) {
    return {a_re, 100.0 * std::abs(a_re), 1.0 + a_re};
}

void check_denominator(double magnitude) {
    if (!(magnitude > 0.0) || !std::isfinite(magnitude)) {
        throw SingularConfiguration("interface reflection denominator vanishes");
    }
}

}  // namespace

ReflectionResult reflection_amplitude(const WaveSetting& s, InterfaceForm form) {
    const InterfaceCoefficients k = interface_coefficients(s, form);
    const Complex beta_in = numerical_wave(s).phase();
    const Complex beta_tr = numerical_wave(transmitted_side(s)).phase();
    const Complex i(0.0, 1.0);

    const Complex transmitted = k.c() * std::exp(i * beta_tr);
    const Complex numerator = k.a() * std::exp(-i * beta_in) + k.b() + transmitted;
    const Complex denominator = k.a() * std::exp(i * beta_in) + k.b() + transmitted;
    check_denominator(std::abs(denominator));
    return make_result(-numerator / denominator);
}

namespace {

struct SineParts {
    double g = 0.0;
    double h = 0.0;
};

// sin(beta l) = G + H i given cos(beta l) = D - Fp i.
SineParts sine_parts(double d, double fp, SineForm form) {
    const double x = 1.0 - d * d + fp * fp;
    const double h2 = 0.5 * (-x + std::sqrt(x * x + 4.0 * d * d * fp * fp));
    double h = form == SineForm::corrected ? std::sqrt(h2) : h2;
    if (d < 0.0) h = -h;
    if (h == 0.0) return {std::sqrt(std::max(0.0, 1.0 - d * d)), 0.0};
    return {d * fp / h, h};
}

}  // namespace

ReflectionResult reflection_amplitude_expanded(const WaveSetting& s, InterfaceForm form, SineForm sine) {
    const InterfaceCoefficients k = interface_coefficients(s, form);
    const Complex cin = cos_numerical_wavenumber(s);
    const Complex ctr = cos_numerical_wavenumber(transmitted_side(s));

    const double D = cin.real();
    const double F = -cin.imag();
    const double Db = ctr.real();
    const double Fb = -ctr.imag();
    const SineParts in = sine_parts(D, F, sine);
    const SineParts tr = sine_parts(Db, Fb, sine);
    const double G = in.g, H = in.h, Gb = tr.g, Hb = tr.h;

    const double Ab = k.a_bar, As = k.a_star, Bb = k.b_bar, Bs = k.b_star, Cb = k.c_bar, Cs = k.c_star;
    const double d1 = Ab * D + As * G + Bb + Cb * Db - Cs * Gb + As * F + Ab * H + Cs * Fb - Cb * Hb;
    const double d2 = -Ab * F + As * H - Cb * Fb - Cs * Hb + As * D - Ab * G + Bs + Cs * Db + Cb * Gb;
    const double d3 = Ab * D - As * G + Bb + Cb * Db - Cs * Gb + As * F - Ab * H + Cs * Fb - Cb * Hb;
    const double d4 = -Ab * F - As * H - Cb * Fb - Cs * Hb + As * D + Ab * G + Bs + Cs * Db + Cb * Gb;

    const double denom = d3 * d3 + d4 * d4;
    check_denominator(denom);
    const Complex a_re(-(d1 * d3 + d2 * d4) / denom, -(d2 * d3 - d1 * d4) / denom);
    ReflectionResult r = make_result(a_re);
    r.magnitude_pct = 100.0 * std::sqrt(std::pow(d1 * d3 + d2 * d4, 2) + std::pow(d2 * d3 - d1 * d4, 2)) / denom;
    return r;
}

}  // namespace wavedisp
