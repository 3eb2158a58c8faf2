#pragma once

// Spurious reflection at the node joining elements of length l (left) and
// L = alpha*l (right) in an otherwise homogeneous bar.
//
// A unit incident wave, a reflected wave of amplitude A_re and a transmitted
// wave of amplitude A_tr = 1 + A_re are substituted into the equilibrium of
// the interface node. With the Newmark eigenvector amplitudes this leaves
//   A_re = -[A e^{-i beta l} + B + C e^{i beta_tr L}] / [A e^{i beta l} + B + C e^{i beta_tr L}]
// where A, B, C are complex interface coefficients. beta_tr L is the numerical
// wave number of the right mesh, i.e. the dispersion solve with b/alpha.

#include "wavedisp/core.hpp"

namespace wavedisp {

/// Which mass factor multiplies m1 in the interface-node coefficient B.
///  - assembled: m1 (1 + alpha), the sum of the two half-element masses
///    meeting at the interface node (what a global assembly produces).
///  - printed:   m1 (1 + 1/alpha), the historically published form; kept for
///    diagnostics only.
enum class InterfaceForm { assembled, printed };

/// Real/imaginary parts of the three interface-node coefficients, multiplying
/// u_(-1), u_0 and u_(+1) respectively.
struct InterfaceCoefficients {
    double a_bar = 0.0;
    double a_star = 0.0;
    double b_bar = 0.0;
    double b_star = 0.0;
    double c_bar = 0.0;
    double c_star = 0.0;

    Complex a() const { return {a_bar, a_star}; }
    Complex b() const { return {b_bar, b_star}; }
    Complex c() const { return {c_bar, c_star}; }
};

InterfaceCoefficients interface_coefficients(const WaveSetting& s, InterfaceForm form = InterfaceForm::assembled);

/// Thrown when the reflection denominator vanishes.
class SingularConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReflectionResult {
    Complex a_re;               ///< complex reflected amplitude
    double magnitude_pct = 0.0; ///< 100 |a_re|
    Complex a_tr;               ///< transmitted amplitude, 1 + a_re
};

/// Compact complex evaluation. Requires b > 2 and b/alpha > 2.
ReflectionResult reflection_amplitude(const WaveSetting& s, InterfaceForm form = InterfaceForm::assembled);

/// Whether sin(beta l) = G + H i is formed with the square root of the
/// quadratic root for H^2 (correct) or, as published, without it.
enum class SineForm { corrected, printed };

/// Real-arithmetic expansion of the same quantity via cos(beta l) = D - F' i,
/// sin(beta l) = G + H i (F' = -Im cos(beta l)) and the d1..d4 combination.
/// With SineForm::corrected this agrees with reflection_amplitude.
ReflectionResult reflection_amplitude_expanded(const WaveSetting& s, InterfaceForm form = InterfaceForm::assembled,
                                               SineForm sine = SineForm::corrected);

/// Right-side mesh setting: same a, gamma and mass model, space parameter b/alpha.
WaveSetting transmitted_side(const WaveSetting& s);

}  // namespace wavedisp
