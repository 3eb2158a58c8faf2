#pragma once

// Shared numeric types and the dimensionless parameterization.
//
// Everything in the library works in normalized units: angular frequency
// omega = 2*pi, period T = 1, reference velocity v_r = 1 and reference
// wavelength lambda = 1. A problem is then fully described by the mesh
// parameters a = T/dt and b = lambda/l, the physical damping gamma and the
// element-size ratio alpha, so dt = 1/a, l = 1/b and c = gamma/pi.

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wavedisp {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
/// Angular frequency of the normalized problem.
inline constexpr double kOmega = 2.0 * std::numbers::pi;
/// Reference (elastic) wave velocity of the normalized problem.
inline constexpr double kReferenceVelocity = 1.0;

/// Thrown when an input lies outside the domain where a formula is valid.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dimensionless element mass-matrix coefficients, rho*l*[[m1, m2], [m2, m1]].
struct MassModel {
    double m1 = 1.0 / 3.0;
    double m2 = 1.0 / 6.0;

    static constexpr MassModel consistent() { return {1.0 / 3.0, 1.0 / 6.0}; }
    static constexpr MassModel lumped() { return {0.5, 0.0}; }

    bool is_consistent() const { return m1 == 1.0 / 3.0 && m2 == 1.0 / 6.0; }
    bool is_lumped() const { return m1 == 0.5 && m2 == 0.0; }

    friend bool operator==(const MassModel&, const MassModel&) = default;
};

/// "consistent", "lumped" or "custom".
std::string_view mass_model_name(const MassModel& mass);

/// Parses "consistent" or "lumped"; throws DomainError otherwise.
MassModel parse_mass_model(std::string_view name);

/// Dimensionless statement of one wave/mesh configuration.
struct WaveSetting {
    double a = 100.0;      ///< time steps per period, T/dt
    double b = 100.0;      ///< elements per reference wavelength, lambda/l
    double gamma = 0.0;    ///< physical damping, omega*c/2
    MassModel mass = MassModel::consistent();
    double alpha = 1.0;    ///< right/left element-size ratio L/l

    /// Throws DomainError unless a > 0, b > 0, gamma >= 0 and alpha > 0.
    void validate() const;

    double dt() const { return 1.0 / a; }
    double element_length() const { return 1.0 / b; }
    /// Kelvin-Voigt damping constant c in normalized units.
    double damping_constant() const { return gamma / kPi; }
    double courant() const { return b / a; }
};

struct DerivedGroups {
    double psi1 = 0.0;      ///< rho*l^2/(E*dt^2) = (a/b)^2
    double psi2 = 0.0;      ///< c/dt = gamma*a/pi
    double omega_dt = 0.0;  ///< 2*pi/a
    double omega_c = 0.0;   ///< 2*gamma
};

DerivedGroups derived_groups(const WaveSetting& s);

}  // namespace wavedisp
