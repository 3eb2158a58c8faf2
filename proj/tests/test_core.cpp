#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wavedisp/core.hpp"

using namespace wavedisp;

namespace {

WaveSetting setting(double a, double b, double gamma) {
    WaveSetting s;
    s.a = a;
    s.b = b;
    s.gamma = gamma;
    return s;
}

}  // namespace

TEST(MassModel, Coefficients) {
    EXPECT_DOUBLE_EQ(MassModel::consistent().m1, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(MassModel::consistent().m2, 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(MassModel::lumped().m1, 0.5);
    EXPECT_DOUBLE_EQ(MassModel::lumped().m2, 0.0);
    for (const MassModel& m : {MassModel::consistent(), MassModel::lumped()}) EXPECT_NEAR(m.m1 + m.m2, 0.5, 1e-16);
    EXPECT_TRUE(MassModel::consistent().is_consistent());
    EXPECT_FALSE(MassModel::consistent().is_lumped());
    EXPECT_TRUE(MassModel::lumped().is_lumped());
}

TEST(MassModel, Names) {
    EXPECT_EQ(mass_model_name(MassModel::consistent()), "consistent");
    EXPECT_EQ(mass_model_name(MassModel::lumped()), "lumped");
    EXPECT_EQ(mass_model_name(MassModel{0.4, 0.1}), "custom");
    EXPECT_EQ(parse_mass_model("lumped"), MassModel::lumped());
    EXPECT_EQ(parse_mass_model("consistent"), MassModel::consistent());
    EXPECT_THROW(parse_mass_model("diagonal"), DomainError);
}

TEST(DerivedGroups, UnityCourant) {
    const DerivedGroups g = derived_groups(setting(100, 100, 0.1));
    EXPECT_DOUBLE_EQ(g.psi1, 1.0);
    EXPECT_NEAR(g.psi2, 3.183098861837907, 1e-14);
    EXPECT_NEAR(g.omega_dt, 0.06283185307179587, 1e-16);
    EXPECT_DOUBLE_EQ(g.omega_c, 0.2);
}

TEST(DerivedGroups, Undamped) {
    const DerivedGroups g = derived_groups(setting(50, 100, 0.0));
    EXPECT_DOUBLE_EQ(g.psi1, 0.25);
    EXPECT_EQ(g.psi2, 0.0);
    EXPECT_EQ(g.omega_c, 0.0);
}

TEST(DerivedGroups, CoarseMesh) {
    const DerivedGroups g = derived_groups(setting(10, 5, 0.01));
    EXPECT_DOUBLE_EQ(g.psi1, 4.0);
    EXPECT_NEAR(g.psi2, 0.1 / 3.141592653589793, 1e-16);
    EXPECT_DOUBLE_EQ(g.omega_c, 0.02);
}

TEST(DerivedGroups, RejectsInvalidSettings) {
    EXPECT_THROW(derived_groups(setting(0, 10, 0)), DomainError);
    EXPECT_THROW(derived_groups(setting(10, -1, 0)), DomainError);
    EXPECT_THROW(derived_groups(setting(10, 10, -0.1)), DomainError);
    WaveSetting s = setting(10, 10, 0);
    s.alpha = 0.0;
    EXPECT_THROW(s.validate(), DomainError);
    s.alpha = 1.0;
    s.a = std::nan("");
    EXPECT_THROW(s.validate(), DomainError);
}

TEST(DerivedGroups, Psi2TimesOmegaDtIsOmegaC) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mesh(2.5, 1000.0), damp(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const DerivedGroups g = derived_groups(setting(mesh(rng), mesh(rng), damp(rng)));
        EXPECT_NEAR(g.psi2 * g.omega_dt, g.omega_c, 1e-14);
        EXPECT_EQ(g.psi2 == 0.0, g.omega_c == 0.0);
    }
}

TEST(WaveSetting, NormalizedLengths) {
    const WaveSetting s = setting(40, 20, 0.3);
    EXPECT_DOUBLE_EQ(s.dt(), 0.025);
    EXPECT_DOUBLE_EQ(s.element_length(), 0.05);
    EXPECT_DOUBLE_EQ(s.courant(), 0.5);
    EXPECT_DOUBLE_EQ(s.damping_constant(), 0.3 / kPi);
}

TEST(ComplexValue, FieldAxiomsAndBranch) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const Complex x{u(rng), u(rng)}, y{u(rng), u(rng)};
        const Complex back = (x * y) / y;
        EXPECT_LT(std::abs(back - x), 1e-13 * std::abs(x) + 1e-300);
        const Complex r = std::sqrt(x);
        EXPECT_GE(r.real(), 0.0);
    }
    const Complex r = std::sqrt(Complex{-4.0, 0.0});
    EXPECT_DOUBLE_EQ(r.real(), 0.0);
    EXPECT_DOUBLE_EQ(r.imag(), 2.0);
}
