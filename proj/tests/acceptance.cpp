// Acceptance criteria runner. Prints one PASS/FAIL line per criterion and
// exits non-zero when any selected criterion fails.
//
//   acceptance            all criteria
//   acceptance 3 8        only criteria 3 and 8

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wavedisp/continuum.hpp"
#include "wavedisp/dispersion.hpp"
#include "wavedisp/reference_tables.hpp"
#include "wavedisp/reflection.hpp"
#include "wavedisp/report.hpp"
#include "wavedisp/simulator.hpp"

using namespace wavedisp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

void note(const TableRow& r, const ComparedCell& c) {
    std::printf("    table %d row %2zu a=%g b=%g alpha=%g %-40s computed %.6g printed %.6g\n", r.table, r.index,
                r.setting.a, r.setting.b, r.setting.alpha, c.name.c_str(), c.computed, c.printed);
}

bool within(double computed, double printed, double rel, double abs_floor) {
    return std::abs(computed - printed) <= std::max(rel * std::abs(printed), abs_floor);
}

Outcome criterion1() {
    const auto t0 = Clock::now();
    const auto rows = reproduce_table(1);
    const double elapsed = seconds_since(t0);
    Outcome o;
    int cells = 0, bad = 0;
    double worst = 0.0;
    for (const TableRow& r : rows) {
        for (const ComparedCell& c : r.cells) {
            if (c.suspect) {
                WaveSetting s = r.setting;
                s.mass = MassModel::lumped();
                const double formula = dispersion_errors(s).vel_err_pct;
                if (c.computed != formula) {
                    o.pass = false;
                    note(r, c);
                }
                std::printf("    suspect cell table 1 row %zu %s: printed %.4g, formula %.6g (documented deviation)\n",
                            r.index, c.name.c_str(), c.printed, formula);
                continue;
            }
            ++cells;
            worst = std::max(worst, c.rel_dev());
            if (!within(c.computed, c.printed, 0.01, 0.002)) {
                ++bad;
                note(r, c);
            }
        }
    }
    o.pass = o.pass && bad == 0 && cells == 59 && elapsed < 1.0;
    o.detail = fmt("%.0f/%.0f cells within max(1%% rel, 0.002 abs), worst rel dev %.3g, %.3f s", cells - bad, cells,
                   worst, elapsed);
    return o;
}

// Table comparison for the tables that leave gamma unstated.
Outcome unstated_gamma_table(int which, double rel, double abs_floor, double sweep_rel, double sweep_abs) {
    const auto t0 = Clock::now();
    const auto rows = reproduce_table(which);
    const double elapsed = seconds_since(t0);
    int cells = 0, bad_default = 0, bad_sweep = 0;
    for (const TableRow& r : rows) {
        for (const ComparedCell& c : r.cells) {
            if (c.name.find("printed_interface") != std::string::npos) continue;
            ++cells;
            const bool ok = within(c.computed, c.printed, rel, abs_floor);
            bool any = false;
            for (const auto& [gamma, value] : c.sensitivity) any = any || within(value, c.printed, sweep_rel, sweep_abs);
            if (!ok) ++bad_default;
            if (!any) ++bad_sweep;
            if (!ok || !any) note(r, c);
        }
    }
    Outcome o;
    o.pass = bad_default == 0 && bad_sweep == 0 && elapsed < 1.0;
    o.detail = fmt("gamma=%g: %.0f/%.0f cells within tolerance; sweep: %.0f cells with no passing gamma; ",
                   rows.front().setting.gamma, cells - bad_default, cells, bad_sweep) +
               fmt("%.3f s", elapsed);
    return o;
}

Outcome criterion2() { return unstated_gamma_table(2, 0.02, 0.0, 0.01, 0.0); }
// Alongside the comparison, print what an independent time-domain run
// measures at the coarsest published setting.
Outcome criterion3() {
    Outcome o = unstated_gamma_table(3, 0.03, 0.05, 0.03, 0.05);
    WaveSetting s;
    s.a = s.b = 10;
    s.alpha = 2.0;
    s.gamma = kTable3Gamma;
    const ExperimentPlan plan = plan_experiment(s, ExperimentKind::reflection);
    const SimRecord rec = run(plan.mesh, plan.config);
    std::printf("    a=b=10 alpha=2 consistent: printed 66.34%%, closed form %.4g%% (published interface coefficient"
                " %.4g%%), time-domain simulation %.4g%%\n",
                reflection_amplitude(s).magnitude_pct, reflection_amplitude(s, InterfaceForm::printed).magnitude_pct,
                rec.measured_reflection_pct.value_or(NAN));
    return o;
}

WaveSetting random_setting(std::mt19937_64& rng, double mesh_lo, double mesh_hi, double gamma_hi) {
    std::uniform_real_distribution<double> mesh(mesh_lo, mesh_hi), damp(0.0, gamma_hi);
    WaveSetting s;
    s.a = mesh(rng);
    s.b = mesh(rng);
    s.gamma = damp(rng);
    s.mass = rng() % 2 ? MassModel::consistent() : MassModel::lumped();
    return s;
}

Outcome criterion4() {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const WaveSetting s = random_setting(rng, 2.5, 500.0, 0.5);
        worst = std::max(worst, std::abs(reflection_amplitude(s).a_re));
    }
    return {worst < 1e-12, fmt("max |A_re| at alpha=1 over 200 settings = %.3g", worst)};
}

Outcome criterion5() {
    std::mt19937_64 rng(2025);
    std::uniform_real_distribution<double> damp(0.001, 0.5);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        WaveSetting s = random_setting(rng, 5.0, 500.0, 0.5);
        s.gamma = damp(rng);
        const Complex z = cos_numerical_wavenumber(s);
        const PhaseAttenuation p = invert_transcendental(z);
        worst = std::max(worst, std::abs(std::cos(Complex(p.d, p.h)) - z));
    }
    const PhaseAttenuation printed = invert_transcendental({0.5, 0.0}, RadicandForm::printed);
    const PhaseAttenuation corrected = invert_transcendental({0.5, 0.0});
    const bool printed_fails = !(std::abs(printed.d - kPi / 3) < 1e-10 && std::abs(printed.h) < 1e-10);
    const bool corrected_passes = std::abs(corrected.d - kPi / 3) < 1e-14 && corrected.h == 0.0;
    return {worst < 1e-12 && printed_fails && corrected_passes,
            fmt("max |cos(d+hi) - (D+Fi)| = %.3g over 1000 settings; D=0.5,F=0: corrected d=%.15g h=%g, ", worst,
                corrected.d, corrected.h) +
                fmt("printed d=%g h=%g ", printed.d, printed.h) + (printed_fails ? "(fails as expected)" : "(PASSES)")};
}

Outcome criterion6() {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> ratio(0.3, 2.5);
    double worst = 0.0;
    int n = 0;
    while (n < 1000) {
        WaveSetting s = random_setting(rng, 5.0, 400.0, 0.5);
        s.alpha = ratio(rng);
        if (s.b / s.alpha <= 2.5) continue;
        ++n;
        const Complex direct = reflection_amplitude(s).a_re;
        const Complex expanded = reflection_amplitude_expanded(s).a_re;
        worst = std::max(worst, std::abs(direct - expanded));
    }
    return {worst < 1e-10, fmt("max |direct - expanded| = %.3g over 1000 settings", worst)};
}

Outcome criterion7() {
    WaveSetting s;
    s.gamma = 0.1;
    s.a = s.b = 50;
    const double e50 = dispersion_errors(s).vel_err_pct;
    s.a = s.b = 100;
    const double e100 = dispersion_errors(s).vel_err_pct;
    const double ratio = e100 / e50;
    return {ratio >= 0.22 && ratio <= 0.28, fmt("error(100)/error(50) = %.6g / %.6g = %.4f", e100, e50, ratio)};
}

Outcome criterion8() {
    const auto t0 = Clock::now();
    Outcome o;
    std::size_t max_elements = 0, max_steps = 0;
    auto track = [&](const ExperimentPlan& p) {
        max_elements = std::max(max_elements, p.mesh.element_count());
        max_steps = std::max(max_steps, p.config.total_steps);
    };

    WaveSetting s;
    s.a = s.b = 50;
    s.gamma = 0.1;
    const ExperimentPlan prop = plan_experiment(s, ExperimentKind::propagation);
    track(prop);
    const SimRecord r1 = run(prop.mesh, prop.config);
    const NumericalWave w = numerical_wave(s);
    const double v = kOmega / (w.d * s.b), att = w.h * s.b;
    const double dv = std::abs(r1.measured_velocity - v) / v;
    const double datt = std::abs(r1.measured_attenuation_per_length - att) / att;
    const bool i_ok = dv < 0.005 && datt < 0.05;
    std::printf("    (i)   velocity %.6g vs %.6g (%.3g%%), attenuation %.6g vs %.6g (%.3g%%)\n", r1.measured_velocity, v,
                100 * dv, r1.measured_attenuation_per_length, att, 100 * datt);

    WaveSetting g;
    g.a = g.b = 10;
    g.alpha = 2.0;
    g.gamma = 0.01;
    const ExperimentPlan refl = plan_experiment(g, ExperimentKind::reflection);
    track(refl);
    const SimRecord r2 = run(refl.mesh, refl.config);
    const double closed = reflection_amplitude(g).magnitude_pct;
    const bool ii_ok = r2.measured_reflection_pct && std::abs(*r2.measured_reflection_pct - closed) < 5.0;
    std::printf("    (ii)  reflection %.4g%% vs closed form %.4g%% (gamma=%g, consistent)\n",
                r2.measured_reflection_pct.value_or(NAN), closed, g.gamma);

    WaveSetting e;
    e.a = e.b = 50;
    e.gamma = 0.0;
    const ExperimentPlan en = plan_experiment(e, ExperimentKind::propagation);
    track(en);
    const SimRecord r3 = integrate(en.mesh, en.config);
    const auto first = static_cast<std::size_t>(std::ceil(r3.forcing_end_time / r3.dt));
    double drift = 0.0;
    for (std::size_t k = first; k < r3.energy.size(); ++k)
        drift = std::max(drift, std::abs(r3.energy[k] - r3.energy[first]) / r3.energy[first]);
    const bool iii_ok = drift < 1e-8;
    std::printf("    (iii) max relative energy drift after forcing %.3g over %zu steps\n", drift, r3.energy.size() - first);

    const double elapsed = seconds_since(t0);
    const bool scale_ok = max_elements <= 5000 && max_steps <= 20000;
    o.pass = i_ok && ii_ok && iii_ok && elapsed < 30.0 && scale_ok;
    o.detail = fmt("(i) %.0f (ii) %.0f (iii) %.0f; ", i_ok, ii_ok, iii_ok) +
               fmt("max %.0f elements, %.0f steps, %.2f s", double(max_elements), double(max_steps), elapsed);
    return o;
}

Outcome criterion9() {
    std::mt19937_64 rng(2027);
    std::uniform_real_distribution<double> damp(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        WaveSetting s;
        s.gamma = damp(rng);
        const Complex beta = continuum_wavenumber(s).wavenumber();
        const double res = std::abs(beta * beta * Complex(1.0, -2.0 * s.gamma) - kOmega * kOmega) / (kOmega * kOmega);
        worst = std::max(worst, res);
    }
    WaveSetting elastic;
    elastic.gamma = 0.0;
    const ContinuumWave w = continuum_wavenumber(elastic);
    const bool exact = w.a_star == kOmega && w.b_star == 0.0 && w.velocity == kReferenceVelocity;
    return {worst < 1e-12 && exact,
            fmt("max residual %.3g over 1000 gamma; elastic limit A*=%.17g B*=%g v=%.17g", worst, w.a_star, w.b_star,
                w.velocity)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3,
                                                            criterion4, criterion5, criterion6,
                                                            criterion7, criterion8, criterion9};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) selected.push_back(n);

    bool all = true;
    for (int n : selected) {
        Outcome o;
        try {
            o = criteria[n - 1]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
    }
    return all ? 0 : 1;
}
