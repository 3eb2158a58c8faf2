// wavedisp: closed-form dispersion/reflection numbers, table reproduction and
// time-domain cross-checks.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wavedisp/continuum.hpp"
#include "wavedisp/dispersion.hpp"
#include "wavedisp/reflection.hpp"
#include "wavedisp/report.hpp"
#include "wavedisp/simulator.hpp"

namespace {

using namespace wavedisp;

constexpr int kExitInvalidArgs = 2;
constexpr int kExitMeasurementInvalid = 3;

struct Common {
    std::string format = "csv";
    std::string out;
};

struct PointArgs {
    double a = 0.0;
    std::optional<double> b;
    double gamma = 0.0;
    double alpha = 1.0;
    std::string mass = "consistent";
    std::string interface_form = "assembled";
};

struct CurveArgs {
    std::string kind = "dispersion";
    double a_min = 4.0;
    double a_max = 100.0;
    int points = 50;
    double courant = 1.0;
};

struct SimArgs {
    int cycles = 16;
    std::optional<std::size_t> total_steps;
    std::string boundary = "fixed";
    std::string series;
};

std::vector<MassModel> requested_masses(const std::string& name) {
    if (name == "both") return {MassModel::consistent(), MassModel::lumped()};
    return {parse_mass_model(name)};
}

InterfaceForm parse_interface_form(const std::string& name) {
    if (name == "assembled") return InterfaceForm::assembled;
    if (name == "printed") return InterfaceForm::printed;
    throw DomainError("unknown interface form '" + name + "' (expected assembled or printed)");
}

Boundary parse_boundary(const std::string& name) {
    if (name == "fixed") return Boundary::fixed_far_end;
    if (name == "absorbing") return Boundary::absorbing_pad;
    throw DomainError("unknown boundary '" + name + "' (expected fixed or absorbing)");
}

// Output goes to a file when --out is given; written only after everything succeeded.
void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + c.out + "'");
    f << text;
}

WaveSetting point_setting(const PointArgs& p, const MassModel& m) {
    WaveSetting s;
    s.a = p.a;
    s.b = p.b.value_or(p.a);
    s.gamma = p.gamma;
    s.alpha = p.alpha;
    s.mass = m;
    s.validate();
    return s;
}

void cmd_dispersion(const Common& c, const PointArgs& p) {
    std::vector<ReportRow> rows;
    for (const MassModel& m : requested_masses(p.mass)) {
        WaveSetting s = point_setting(p, m);
        s.alpha = 1.0;
        rows.push_back(dispersion_row(s));
    }
    std::ostringstream out;
    write_rows(out, rows, parse_format(c.format));
    emit(c, out.str());
}

void cmd_reflect(const Common& c, const PointArgs& p) {
    const InterfaceForm form = parse_interface_form(p.interface_form);
    std::vector<ReportRow> rows;
    for (const MassModel& m : requested_masses(p.mass)) rows.push_back(reflection_row(point_setting(p, m), form));
    std::ostringstream out;
    write_rows(out, rows, parse_format(c.format));
    emit(c, out.str());
}

void cmd_table(const Common& c, int which, std::optional<double> gamma) {
    TableOptions opt;
    opt.gamma = gamma;
    const auto rows = reproduce_table(which, opt);
    std::ostringstream out;
    write_table(out, rows, parse_format(c.format));
    emit(c, out.str());
}

void cmd_curve(const Common& c, const PointArgs& p, const CurveArgs& k) {
    if (k.points < 2) throw DomainError("--points must be at least 2");
    if (!(k.a_min < k.a_max)) throw DomainError("--a-min must be below --a-max");
    const bool reflection = k.kind == "reflection";
    if (!reflection && k.kind != "dispersion") throw DomainError("--kind must be dispersion or reflection");
    const InterfaceForm form = parse_interface_form(p.interface_form);
    std::vector<ReportRow> rows;
    for (const MassModel& m : requested_masses(p.mass)) {
        for (int i = 0; i < k.points; ++i) {
            // Geometric spacing, the natural axis for errors that scale with a power of 1/a.
            const double a = k.a_min * std::pow(k.a_max / k.a_min, double(i) / (k.points - 1));
            WaveSetting s;
            s.a = a;
            s.b = a * k.courant;
            s.gamma = p.gamma;
            s.alpha = reflection ? p.alpha : 1.0;
            s.mass = m;
            s.validate();
            rows.push_back(reflection ? reflection_row(s, form) : dispersion_row(s));
        }
    }
    std::ostringstream out;
    write_rows(out, rows, parse_format(c.format));
    emit(c, out.str());
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void summary_line(std::ostream& out, const char* quantity, double closed, double simulated) {
    out << quantity << ',' << fmt(closed) << ',' << fmt(simulated) << ',' << fmt(std::abs(simulated - closed)) << ','
        << fmt(std::abs(simulated - closed) / std::abs(closed)) << '\n';
}

void cmd_simulate(const Common& c, const PointArgs& p, const SimArgs& sa) {
    if (parse_format(c.format) != Format::csv) throw DomainError("simulate only writes csv");
    const MassModel mass = parse_mass_model(p.mass);
    const WaveSetting s = point_setting(p, mass);
    const ExperimentKind kind = s.alpha == 1.0 ? ExperimentKind::propagation : ExperimentKind::reflection;
    ExperimentPlan plan = plan_experiment(s, kind, sa.cycles, parse_boundary(sa.boundary));
    if (sa.total_steps) plan.config.total_steps = *sa.total_steps;
    const SimRecord rec = run(plan.mesh, plan.config);

    const NumericalWave w = numerical_wave(s);
    std::ostringstream out;
    out << "# wavedisp " << kToolVersion << " simulate a=" << fmt(s.a) << " b=" << fmt(s.b)
        << " gamma=" << fmt(s.gamma) << " alpha=" << fmt(s.alpha) << " mass=" << mass_model_name(mass)
        << " cycles=" << sa.cycles << " elements=" << plan.mesh.element_count()
        << " steps=" << plan.config.total_steps << '\n';
    out << "quantity,closed_form,simulated,abs_dev,rel_dev\n";
    summary_line(out, "velocity", kOmega / (w.d * s.b), rec.measured_velocity);
    if (s.gamma > 0.0) summary_line(out, "attenuation_per_length", w.h * s.b, rec.measured_attenuation_per_length);
    if (rec.measured_reflection_pct) {
        summary_line(out, "reflection_pct", reflection_amplitude(s).magnitude_pct, *rec.measured_reflection_pct);
    }
    emit(c, out.str());

    if (!sa.series.empty()) {
        std::ofstream f(sa.series);
        if (!f) throw DomainError("cannot open series file '" + sa.series + "'");
        write_series_csv(f, plan.mesh, plan.config, rec);
    }
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", c.out, "output path (default stdout)");
}

void add_point(CLI::App* app, PointArgs& p, double default_gamma, bool with_alpha, bool with_form) {
    app->add_option("--a", p.a, "time steps per period")->required();
    app->add_option("--b", p.b, "elements per wavelength (default: a)");
    p.gamma = default_gamma;
    app->add_option("--gamma", p.gamma, "physical damping gamma")->capture_default_str();
    if (with_alpha) app->add_option("--alpha", p.alpha, "right/left element length ratio")->capture_default_str();
    if (with_form) {
        app->add_option("--interface-form", p.interface_form, "assembled or printed")
            ->check(CLI::IsMember({"assembled", "printed"}));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite element dispersion and spurious reflection for the 1D viscoelastic wave equation"};
    app.set_version_flag("--version", std::string(wavedisp::kToolVersion));
    app.require_subcommand(1);

    Common common;
    PointArgs disp_args, refl_args, curve_point, sim_args_point;
    CurveArgs curve_args;
    SimArgs sim_args;
    int table_no = 0;
    std::optional<double> table_gamma;

    auto* disp = app.add_subcommand("dispersion", "velocity and damping errors at one setting");
    add_point(disp, disp_args, 0.0, false, false);
    disp->add_option("--mass", disp_args.mass, "consistent, lumped or both")
        ->check(CLI::IsMember({"consistent", "lumped", "both"}));
    add_common(disp, common);

    auto* refl = app.add_subcommand("reflect", "spurious reflection at an element size change");
    add_point(refl, refl_args, 0.01, true, true);
    refl->add_option("--mass", refl_args.mass, "consistent, lumped or both")
        ->check(CLI::IsMember({"consistent", "lumped", "both"}));
    add_common(refl, common);

    auto* table = app.add_subcommand("table", "reproduce a published table next to its printed values");
    table->add_option("which", table_no, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
    table->add_option("--gamma", table_gamma, "damping for tables that leave it unstated");
    add_common(table, common);

    auto* curve = app.add_subcommand("curve", "error or reflection against a, at fixed Courant number");
    curve->add_option("--kind", curve_args.kind, "dispersion or reflection")
        ->check(CLI::IsMember({"dispersion", "reflection"}));
    curve->add_option("--a-min", curve_args.a_min)->capture_default_str();
    curve->add_option("--a-max", curve_args.a_max)->capture_default_str();
    curve->add_option("--points", curve_args.points)->capture_default_str();
    curve->add_option("--courant", curve_args.courant, "b/a")->capture_default_str();
    curve->add_option("--gamma", curve_point.gamma)->capture_default_str();
    curve->add_option("--alpha", curve_point.alpha)->capture_default_str();
    curve->add_option("--mass", curve_point.mass, "consistent, lumped or both")
        ->check(CLI::IsMember({"consistent", "lumped", "both"}));
    curve->add_option("--interface-form", curve_point.interface_form)
        ->check(CLI::IsMember({"assembled", "printed"}));
    add_common(curve, common);

    auto* sim = app.add_subcommand("simulate", "time-domain tone burst run compared with the closed forms");
    add_point(sim, sim_args_point, 0.0, true, false);
    sim->add_option("--mass", sim_args_point.mass, "consistent or lumped")
        ->check(CLI::IsMember({"consistent", "lumped"}));
    sim->add_option("--cycles", sim_args.cycles, "tone burst length in periods")->capture_default_str();
    sim->add_option("--total-steps", sim_args.total_steps, "override the planned record length");
    sim->add_option("--boundary", sim_args.boundary, "fixed or absorbing")
        ->check(CLI::IsMember({"fixed", "absorbing"}));
    sim->add_option("--series", sim_args.series, "write probe time series CSV here");
    add_common(sim, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalidArgs;
    }

    try {
        if (*disp) cmd_dispersion(common, disp_args);
        else if (*refl) cmd_reflect(common, refl_args);
        else if (*table) cmd_table(common, table_no, table_gamma);
        else if (*curve) cmd_curve(common, curve_point, curve_args);
        else if (*sim) cmd_simulate(common, sim_args_point, sim_args);
    } catch (const MeasurementInvalid& e) {
        std::cerr << "measurement invalid: " << e.what() << '\n';
        return kExitMeasurementInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidArgs;
    } catch (const SingularConfiguration& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidArgs;
    }
    return 0;
}
