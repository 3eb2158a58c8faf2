#include "wavedisp/core.hpp"

#include <cmath>

namespace wavedisp {

std::string_view mass_model_name(const MassModel& mass) {
    if (mass.is_consistent()) return "consistent";
    if (mass.is_lumped()) return "lumped";
    return "custom";
}

MassModel parse_mass_model(std::string_view name) {
    if (name == "consistent") return MassModel::consistent();
    if (name == "lumped") return MassModel::lumped();
    throw DomainError("unknown mass model '" + std::string(name) + "' (expected consistent or lumped)");
}

void WaveSetting::validate() const {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("time mesh parameter a must be positive");
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("space mesh parameter b must be positive");
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("physical damping gamma must be non-negative");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("element-size ratio alpha must be positive");
}

DerivedGroups derived_groups(const WaveSetting& s) {
    s.validate();
    DerivedGroups g;
    const double ratio = s.a / s.b;
    g.psi1 = ratio * ratio;
    g.psi2 = s.gamma * s.a / kPi;
    g.omega_dt = kOmega / s.a;
    g.omega_c = 2.0 * s.gamma;
    return g;
}

}  // namespace wavedisp
