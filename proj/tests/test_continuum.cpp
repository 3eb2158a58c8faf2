#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wavedisp/continuum.hpp"

using namespace wavedisp;

namespace {

WaveSetting damped(double gamma) {
    WaveSetting s;
    s.gamma = gamma;
    return s;
}

double residual(const ContinuumWave& w, double gamma) {
    const double omega_c = 2.0 * gamma;
    const Complex beta = w.wavenumber();
    return std::abs(beta * beta * Complex(1.0, -omega_c) - kOmega * kOmega) / (kOmega * kOmega);
}

}  // namespace

TEST(Continuum, ElasticLimit) {
    const ContinuumWave w = continuum_wavenumber(damped(0.0));
    EXPECT_EQ(w.a_star, kOmega);
    EXPECT_EQ(w.b_star, 0.0);
    EXPECT_EQ(w.velocity, 1.0);
    EXPECT_EQ(w.theta, 0.0);
    EXPECT_EQ(w.rho_c, 1.0);
}

// High-precision values of omega / sqrt(1 - i omega c).
TEST(Continuum, KnownRoots) {
    const ContinuumWave w1 = continuum_wavenumber(damped(0.1));
    EXPECT_NEAR(w1.a_star, 6.1915987570641193, 1e-13);
    EXPECT_NEAR(w1.b_star, 0.61308909728618025, 1e-14);
    EXPECT_NEAR(w1.theta, 0.19739555984988078, 1e-15);
    const ContinuumWave w5 = continuum_wavenumber(damped(0.5));
    EXPECT_NEAR(w5.a_star, 4.8813249021517834, 1e-13);
    EXPECT_NEAR(w5.b_star, 2.0219109768207898, 1e-13);
}

TEST(Continuum, DampingRaisesPhaseVelocity) {
    const ContinuumWave w = continuum_wavenumber(damped(0.1));
    EXPECT_GT(w.velocity, 1.0);
    EXPECT_NEAR(w.velocity * w.a_star, kOmega, 1e-14);
}

TEST(Continuum, ResidualOverRandomDamping) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> g(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double gamma = g(rng);
        const ContinuumWave w = continuum_wavenumber(damped(gamma));
        EXPECT_LT(residual(w, gamma), 1e-12) << "gamma=" << gamma;
        // arccos form of the phase angle
        const ContinuumFactor f = continuum_factor(2.0 * gamma);
        const double rho = std::hypot(f.real, f.imag);
        EXPECT_NEAR(w.theta, std::acos(f.real / rho), 1e-7);
        EXPECT_NEAR(w.rho_c, 1.0 / std::sqrt(1.0 + 4.0 * gamma * gamma), 1e-15);
    }
}

// acos loses digits near 0; away from it the two forms agree to 1e-12.
TEST(Continuum, ArccosFormAwayFromZero) {
    for (double gamma = 0.05; gamma <= 1.0; gamma += 0.05) {
        const ContinuumWave w = continuum_wavenumber(damped(gamma));
        const ContinuumFactor f = continuum_factor(2.0 * gamma);
        EXPECT_NEAR(w.theta, std::acos(f.real / std::hypot(f.real, f.imag)), 1e-12);
    }
}

TEST(Continuum, PolarCartesianFactor) {
    for (double gamma : {0.0, 0.01, 0.1, 0.7}) {
        const ContinuumWave w = continuum_wavenumber(damped(gamma));
        const ContinuumFactor f = continuum_factor(2.0 * gamma);
        const Complex polar = std::polar(w.rho_c, w.theta);
        EXPECT_NEAR(f.real, polar.real(), 1e-14);
        EXPECT_NEAR(f.imag, polar.imag(), 1e-14);
    }
}

// B* grows with damping up to omega c = sqrt(3) (theta = pi/3), where
// d/dtheta [cos(theta)^(1/2) sin(theta/2)] vanishes, and falls beyond it.
TEST(Continuum, AttenuationPeaksAtOmegaCRootThree) {
    const double peak = std::sqrt(3.0) / 2.0;
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double gamma = peak * i / 200.0;
        const double b = continuum_wavenumber(damped(gamma)).b_star;
        EXPECT_GT(b, prev) << gamma;
        prev = b;
    }
    for (int i = 1; i <= 50; ++i) {
        const double b = continuum_wavenumber(damped(peak + i * 0.01)).b_star;
        EXPECT_LT(b, prev);
        prev = b;
    }
    EXPECT_NEAR(continuum_wavenumber(damped(peak)).theta, kPi / 3, 1e-15);
}

TEST(Continuum, OnlyGammaMatters) {
    WaveSetting s = damped(0.2);
    const ContinuumWave ref = continuum_wavenumber(s);
    s.a = 7;
    s.b = 13;
    s.mass = MassModel::lumped();
    EXPECT_EQ(continuum_wavenumber(s).a_star, ref.a_star);
}
