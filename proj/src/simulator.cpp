#include "wavedisp/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace wavedisp {

namespace {

// Periods of slack around every packet when gating.
constexpr double kGateMargin = 1.0;
// Largest admissible amplification when undoing the round-trip decay.
constexpr double kMaxDecayCompensation = 1.0e6;

double record_time(const SimConfig& cfg) {
    return static_cast<double>(cfg.total_steps) / cfg.setting.a;
}

struct ProbeGeometry {
    double x0 = 0.0;
    double x1 = 0.0;
    double x_interface = 0.0;
    double x_end = 0.0;
};

ProbeGeometry probe_geometry(const BarMesh& mesh, const SimConfig& cfg) {
    const double l = cfg.setting.element_length();
    ProbeGeometry g;
    g.x0 = mesh.node_position(cfg.probe_nodes[0], l);
    g.x1 = mesh.node_position(cfg.probe_nodes[1], l);
    g.x_interface = mesh.node_position(mesh.interface_node(), l);
    g.x_end = mesh.node_position(mesh.node_count() - 1, l);
    return g;
}

// Time after the incident packet has cleared a probe at x and before the
// reflected packet can arrive there.
double split_time(double x, double x_interface, int n_cycles) {
    const double incident_end = x / kMinPacketVelocity + n_cycles + kGateMargin;
    const double reflected_start = (2.0 * x_interface - x) / kMaxPacketVelocity;
    return 0.5 * (incident_end + reflected_start);
}

// LDL^T factorization of a symmetric positive definite tridiagonal matrix.
class TridiagonalFactor {
public:
    explicit TridiagonalFactor(const Tridiagonal& a) : d_(a.size()), l_(a.off.size()) {
        d_[0] = a.diag[0];
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            l_[i] = a.off[i] / d_[i];
            d_[i + 1] = a.diag[i + 1] - l_[i] * a.off[i];
        }
    }

    void solve(std::span<double> x) const {
        const std::size_t n = d_.size();
        for (std::size_t i = 1; i < n; ++i) x[i] -= l_[i - 1] * x[i - 1];
        for (std::size_t i = 0; i < n; ++i) x[i] /= d_[i];
        for (std::size_t i = n - 1; i-- > 0;) x[i] -= l_[i] * x[i + 1];
    }

private:
    std::vector<double> d_;
    std::vector<double> l_;
};

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double mechanical_energy(const AssembledBar& bar, std::span<const double> u, std::span<const double> v,
                         std::vector<double>& scratch) {
    bar.mass.multiply(v, scratch);
    const double kinetic = 0.5 * dot(v, scratch);
    bar.stiffness.multiply(u, scratch);
    return kinetic + 0.5 * dot(u, scratch);
}

struct Peak {
    std::size_t index = 0;
    double value = 0.0;
};

// Largest envelope sample in [begin, end), refined by a parabola through its neighbours.
Peak envelope_peak(const std::vector<double>& env, std::size_t begin, std::size_t end) {
    Peak p{begin, -1.0};
    for (std::size_t i = begin; i < end; ++i) {
        if (env[i] > p.value) p = {i, env[i]};
    }
    if (p.index > 0 && p.index + 1 < env.size()) {
        const double ym = env[p.index - 1], y0 = env[p.index], yp = env[p.index + 1];
        const double curv = ym - 2.0 * y0 + yp;
        if (curv < 0.0) {
            const double off = 0.5 * (ym - yp) / curv;
            p.value = y0 - 0.25 * (ym - yp) * off;
        }
    }
    return p;
}

std::vector<double> magnitudes(const std::vector<Complex>& z, std::size_t end) {
    std::vector<double> m(z.size(), 0.0);
    for (std::size_t i = 0; i < std::min(end, z.size()); ++i) m[i] = std::abs(z[i]);
    return m;
}

std::size_t time_to_index(double t, double dt, std::size_t n) {
    // Sample k holds time (k + 1) dt.
    const double k = std::floor(t / dt) - 1.0;
    if (k <= 0.0) return 0;
    return std::min(n, static_cast<std::size_t>(k));
}

}  // namespace

double BarMesh::node_position(std::size_t j, double l) const {
    if (j <= n_left) return static_cast<double>(j) * l;
    return static_cast<double>(n_left) * l + static_cast<double>(j - n_left) * alpha * l;
}

void BarMesh::validate() const {
    if (element_count() < 2) throw DomainError("bar mesh needs at least two elements");
    if (n_left == 0) throw DomainError("bar mesh needs at least one left element");
    if (!(alpha > 0.0)) throw DomainError("element-size ratio alpha must be positive");
}

void Tridiagonal::multiply(std::span<const double> x, std::span<double> y) const {
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) y[i] = diag[i] * x[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        y[i] += off[i] * x[i + 1];
        y[i + 1] += off[i] * x[i];
    }
}

double Tridiagonal::row_entry(std::size_t i, std::size_t j) const {
    if (i == j) return diag[i];
    if (j == i + 1) return off[i];
    if (i == j + 1) return off[j];
    return 0.0;
}

AssembledBar assemble(const BarMesh& mesh, const WaveSetting& s) {
    const std::vector<double> damping(mesh.element_count(), s.damping_constant());
    return assemble(mesh, s, damping);
}

AssembledBar assemble(const BarMesh& mesh, const WaveSetting& s, std::span<const double> element_damping) {
    mesh.validate();
    s.validate();
    if (element_damping.size() != mesh.element_count()) {
        throw DomainError("one damping constant per element is required");
    }
    const std::size_t n = mesh.node_count();
    const double l = s.element_length();

    AssembledBar bar;
    for (Tridiagonal* t : {&bar.stiffness, &bar.damping, &bar.mass}) {
        t->diag.assign(n, 0.0);
        t->off.assign(n - 1, 0.0);
    }
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double le = mesh.element_length(e, l);
        const double k = 1.0 / le;
        const double c = element_damping[e] * k;
        bar.stiffness.diag[e] += k;
        bar.stiffness.diag[e + 1] += k;
        bar.stiffness.off[e] -= k;
        bar.damping.diag[e] += c;
        bar.damping.diag[e + 1] += c;
        bar.damping.off[e] -= c;
        bar.mass.diag[e] += le * mesh.mass.m1;
        bar.mass.diag[e + 1] += le * mesh.mass.m1;
        bar.mass.off[e] += le * mesh.mass.m2;
    }
    bar.node_x.resize(n);
    for (std::size_t j = 0; j < n; ++j) bar.node_x[j] = mesh.node_position(j, l);
    return bar;
}

Drive tone_burst(double t, int n_cycles) {
    const double duration = static_cast<double>(n_cycles);
    if (t <= 0.0 || t >= duration) return {};
    const double window_rate = kOmega / duration;
    const double w = 0.5 * (1.0 - std::cos(window_rate * t));
    const double w1 = 0.5 * window_rate * std::sin(window_rate * t);
    const double w2 = 0.5 * window_rate * window_rate * std::cos(window_rate * t);
    const double sn = std::sin(kOmega * t);
    const double cs = std::cos(kOmega * t);
    return {sn * w, kOmega * cs * w + sn * w1, -kOmega * kOmega * sn * w + 2.0 * kOmega * cs * w1 + sn * w2};
}

void validate_config(const BarMesh& mesh, const SimConfig& cfg) {
    mesh.validate();
    cfg.setting.validate();
    if (cfg.n_cycles < 1) throw DomainError("tone burst needs at least one cycle");
    if (cfg.total_steps == 0) throw DomainError("total_steps must be positive");
    if (cfg.probe_nodes.size() < 2) throw DomainError("at least two probes are required");
    for (std::size_t i = 0; i < cfg.probe_nodes.size(); ++i) {
        if (cfg.probe_nodes[i] >= mesh.node_count()) throw DomainError("probe node outside the mesh");
        if (i > 0 && cfg.probe_nodes[i] <= cfg.probe_nodes[i - 1]) {
            throw DomainError("probe nodes must be strictly increasing");
        }
    }
    if (cfg.probe_nodes[0] == 0) throw DomainError("probe 0 sits on the driven node");
    if (cfg.probe_nodes[1] > mesh.interface_node() || (mesh.has_interface() && cfg.probe_nodes[1] == mesh.interface_node())) {
        throw DomainError("measurement probes must lie left of the interface");
    }

    const ProbeGeometry g = probe_geometry(mesh, cfg);
    const double t_rec = record_time(cfg);
    const double burst = cfg.n_cycles;
    std::ostringstream why;

    double needed = g.x1 / kMinPacketVelocity + burst + kGateMargin;
    if (mesh.has_interface()) {
        const double incident_end = g.x1 / kMinPacketVelocity + burst + kGateMargin;
        const double reflected_start = (2.0 * g.x_interface - g.x1) / kMaxPacketVelocity;
        if (incident_end > reflected_start) {
            why << "incident and reflected packets overlap at probe node " << cfg.probe_nodes[1]
                << " (incident clears at t=" << incident_end << ", reflection may arrive at t=" << reflected_start
                << "); move the probe away from the interface or shorten the burst";
            throw MeasurementInvalid(why.str());
        }
        needed = (2.0 * g.x_interface - g.x1) / kMinPacketVelocity + burst + kGateMargin;
        const double driven_end_echo = (2.0 * g.x_interface + g.x1) / kMaxPacketVelocity;
        if (driven_end_echo < t_rec) {
            why << "reflected packet returns from the driven end at t=" << driven_end_echo
                << " before the record ends at t=" << t_rec << " and packets overlap";
            throw MeasurementInvalid(why.str());
        }
    }
    if (t_rec < needed) {
        why << "record of " << cfg.total_steps << " steps (t=" << t_rec << ") ends before the measured packets clear"
            << " the probes (t=" << needed << "); packets overlap the record boundary";
        throw MeasurementInvalid(why.str());
    }
    const double far_end_echo = (2.0 * g.x_end - g.x1) / kMaxPacketVelocity;
    if (far_end_echo < t_rec) {
        why << "far-end echo reaches probe node " << cfg.probe_nodes[1] << " at t=" << far_end_echo
            << " before the record ends at t=" << t_rec << "; packets overlap (lengthen the bar)";
        throw MeasurementInvalid(why.str());
    }
}

SimRecord integrate(const BarMesh& mesh, const SimConfig& cfg, const StepObserver& observer) {
    const WaveSetting& s = cfg.setting;
    mesh.validate();
    s.validate();
    for (std::size_t p : cfg.probe_nodes) {
        if (p >= mesh.node_count()) throw DomainError("probe node outside the mesh");
    }

    std::vector<double> element_damping(mesh.element_count(), s.damping_constant());
    if (cfg.boundary == Boundary::absorbing_pad && cfg.pad_elements > 0) {
        const std::size_t pad = std::min(cfg.pad_elements, mesh.element_count());
        for (std::size_t i = 0; i < pad; ++i) {
            const double ramp = static_cast<double>(i + 1) / static_cast<double>(pad);
            element_damping[mesh.element_count() - pad + i] += cfg.pad_gamma / kPi * ramp * ramp;
        }
    }
    const AssembledBar bar = assemble(mesh, s, element_damping);

    const std::size_t n = mesh.node_count();
    const std::size_t first = 1;
    const std::size_t last = cfg.boundary == Boundary::fixed_far_end ? n - 2 : n - 1;
    const std::size_t nf = last - first + 1;
    const double dt = s.dt();
    const double c0 = 4.0 / (dt * dt);
    const double c1 = 4.0 / dt;
    const double c2 = 2.0 / dt;

    Tridiagonal effective;
    effective.diag.resize(nf);
    effective.off.resize(nf - 1);
    for (std::size_t i = 0; i < nf; ++i) {
        const std::size_t j = first + i;
        effective.diag[i] = bar.stiffness.diag[j] + c2 * bar.damping.diag[j] + c0 * bar.mass.diag[j];
        if (i + 1 < nf) effective.off[i] = bar.stiffness.off[j] + c2 * bar.damping.off[j] + c0 * bar.mass.off[j];
    }
    const TridiagonalFactor factor(effective);

    std::vector<double> u(n, 0.0), v(n, 0.0), acc(n, 0.0);
    std::vector<double> hist_m(n), hist_c(n), rhs(n), tmp(n), scratch(n);

    SimRecord rec;
    rec.dt = dt;
    rec.forcing_end_time = cfg.n_cycles;
    rec.probe_series.assign(cfg.probe_nodes.size(), std::vector<double>(cfg.total_steps));
    rec.energy.resize(cfg.total_steps);
    if (observer) observer(0, {u, v, acc});

    for (std::size_t k = 0; k < cfg.total_steps; ++k) {
        const double t = static_cast<double>(k + 1) * dt;
        const Drive drive = tone_burst(t, cfg.n_cycles);

        for (std::size_t j = 0; j < n; ++j) {
            const bool free = j >= first && j <= last;
            hist_m[j] = free ? c0 * u[j] + c1 * v[j] + acc[j] : 0.0;
            hist_c[j] = free ? c2 * u[j] + v[j] : 0.0;
        }
        bar.mass.multiply(hist_m, rhs);
        bar.damping.multiply(hist_c, tmp);
        for (std::size_t j = 0; j < n; ++j) rhs[j] += tmp[j];
        rhs[first] -= bar.mass.off[0] * drive.u_ddot + bar.damping.off[0] * drive.u_dot + bar.stiffness.off[0] * drive.u;

        std::span<double> free_rhs(rhs.data() + first, nf);
        factor.solve(free_rhs);
        for (std::size_t j = first; j <= last; ++j) {
            const double un = rhs[j];
            const double an = c0 * (un - u[j]) - c1 * v[j] - acc[j];
            v[j] += 0.5 * dt * (acc[j] + an);
            acc[j] = an;
            u[j] = un;
        }
        u[0] = drive.u;
        v[0] = drive.u_dot;
        acc[0] = drive.u_ddot;

        for (std::size_t p = 0; p < cfg.probe_nodes.size(); ++p) rec.probe_series[p][k] = u[cfg.probe_nodes[p]];
        rec.energy[k] = mechanical_energy(bar, u, v, scratch);
        if (observer) observer(k + 1, {u, v, acc});
    }
    return rec;
}

std::vector<Complex> demodulate(std::span<const double> series, double dt) {
    const std::size_t n = series.size();
    const double period_samples = 1.0 / dt;  // T = 1
    const double half = 0.5 * period_samples;
    const auto reach = static_cast<std::ptrdiff_t>(std::floor(half + 0.5));

    // Weight of sample offset j: overlap of [j - 1/2, j + 1/2] with [-half, half].
    std::vector<double> weights(2 * reach + 1);
    for (std::ptrdiff_t j = -reach; j <= reach; ++j) {
        const double lo = std::max(static_cast<double>(j) - 0.5, -half);
        const double hi = std::min(static_cast<double>(j) + 0.5, half);
        weights[j + reach] = std::max(0.0, hi - lo) / period_samples;
    }

    std::vector<Complex> mixed(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k + 1) * dt;
        mixed[k] = series[k] * std::polar(1.0, kOmega * t);
    }
    std::vector<Complex> z(n);
    const auto sn = static_cast<std::ptrdiff_t>(n);
    for (std::ptrdiff_t k = 0; k < sn; ++k) {
        Complex acc(0.0);
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(-reach, -k);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(reach, sn - 1 - k);
        for (std::ptrdiff_t j = lo; j <= hi; ++j) acc += weights[j + reach] * mixed[k + j];
        z[k] = 2.0 * acc;
    }
    return z;
}

double cross_correlation_delay(std::span<const double> a, std::span<const double> b, double dt) {
    const std::size_t n = std::min(a.size(), b.size());
    const auto argmax = [](std::span<const double> x) {
        return static_cast<std::ptrdiff_t>(std::max_element(x.begin(), x.end()) - x.begin());
    };
    const std::ptrdiff_t guess = argmax(b.first(n)) - argmax(a.first(n));
    const auto width = static_cast<std::ptrdiff_t>(std::ceil(2.0 / dt));  // two periods either side

    const auto correlation = [&](std::ptrdiff_t lag) {
        double s = 0.0;
        for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(0, -lag);
             i < static_cast<std::ptrdiff_t>(n) && i + lag < static_cast<std::ptrdiff_t>(n); ++i) {
            s += a[i] * b[i + lag];
        }
        return s;
    };
    std::ptrdiff_t best = guess;
    double best_value = correlation(guess);
    for (std::ptrdiff_t lag = guess - width; lag <= guess + width; ++lag) {
        const double c = correlation(lag);
        if (c > best_value) {
            best_value = c;
            best = lag;
        }
    }
    const double cm = correlation(best - 1), cp = correlation(best + 1);
    const double curv = cm - 2.0 * best_value + cp;
    const double off = curv < 0.0 ? 0.5 * (cm - cp) / curv : 0.0;
    return (static_cast<double>(best) + off) * dt;
}

SimRecord run(const BarMesh& mesh, const SimConfig& cfg, const StepObserver& observer) {
    validate_config(mesh, cfg);
    SimRecord rec = integrate(mesh, cfg, observer);

    const ProbeGeometry g = probe_geometry(mesh, cfg);
    const double dt = rec.dt;
    const std::size_t steps = cfg.total_steps;

    std::size_t end0 = steps, end1 = steps;
    if (mesh.has_interface()) {
        end0 = time_to_index(split_time(g.x0, g.x_interface, cfg.n_cycles), dt, steps);
        end1 = time_to_index(split_time(g.x1, g.x_interface, cfg.n_cycles), dt, steps);
    }
    const std::vector<Complex> z0 = demodulate(rec.probe_series[0], dt);
    const std::vector<Complex> z1 = demodulate(rec.probe_series[1], dt);
    const std::vector<double> env0 = magnitudes(z0, end0);
    const std::vector<double> env1 = magnitudes(z1, end1);
    const Peak p0 = envelope_peak(env0, 0, end0);
    const Peak p1 = envelope_peak(env1, 0, end1);
    if (!(p0.value > 0.0) || !(p1.value > 0.0)) throw MeasurementInvalid("no incident packet reached the probes");

    const double separation = g.x1 - g.x0;
    const double group_delay = cross_correlation_delay(env0, env1, dt);
    // Carrier phase grows as k x; the envelope delay resolves the whole cycles.
    const double phase_step = std::arg(z1[p1.index] * std::conj(z0[p0.index]));
    const double cycles = std::round((kOmega * group_delay - phase_step) / (2.0 * kPi));
    const double wavenumber = (phase_step + 2.0 * kPi * cycles) / separation;
    if (!(wavenumber > 0.0)) throw MeasurementInvalid("could not resolve the carrier phase between probes");
    rec.measured_velocity = kOmega / wavenumber;
    rec.measured_attenuation_per_length = std::log(p0.value / p1.value) / separation;

    if (mesh.has_interface()) {
        const std::vector<double> full1 = magnitudes(z1, steps);
        const Peak reflected = envelope_peak(full1, end1, steps);
        const double round_trip = 2.0 * (g.x_interface - g.x1);
        const double compensation = std::exp(rec.measured_attenuation_per_length * round_trip);
        if (!(compensation < kMaxDecayCompensation)) {
            throw MeasurementInvalid("reflected packet decays below the noise floor before returning to the probe");
        }
        rec.measured_reflection_pct = 100.0 * reflected.value / p1.value * compensation;
    }
    return rec;
}

ExperimentPlan plan_experiment(const WaveSetting& s, ExperimentKind kind, int n_cycles, Boundary boundary) {
    s.validate();
    if (n_cycles < 1) throw DomainError("tone burst needs at least one cycle");
    const double burst = n_cycles + kGateMargin;
    const double vlo = kMinPacketVelocity;
    const double vhi = kMaxPacketVelocity;
    const auto to_node = [&](double x) { return static_cast<std::size_t>(std::ceil(x * s.b)); };

    ExperimentPlan plan;
    plan.mesh.mass = s.mass;
    plan.config.setting = s;
    plan.config.n_cycles = n_cycles;
    plan.config.boundary = boundary;

    double x1 = 0.0;
    double t_rec = 0.0;
    if (kind == ExperimentKind::propagation) {
        plan.mesh.alpha = 1.0;
        x1 = 5.0;
        plan.config.probe_nodes = {to_node(2.0), to_node(x1)};
        t_rec = x1 / vlo + burst + 1.0;
        const double x_end = 0.5 * (t_rec * vhi + x1) + 1.0;
        plan.mesh.n_left = to_node(x_end);
        plan.mesh.n_right = 0;
    } else {
        // Smallest probe position x1 for which the incident and reflected
        // packets separate at the probe and the echo from the driven end
        // arrives after the record ends; see validate_config.
        const double slack = 1.0;
        double x_interface = 0.0;
        for (x1 = 4.0;; x1 += 1.0) {
            x_interface = std::ceil(0.5 * (x1 * (1.0 + vhi / vlo) + burst * vhi) + slack);
            t_rec = (2.0 * x_interface - x1) / vlo + burst + 0.5;
            if ((2.0 * x_interface + x1) / vhi >= t_rec + slack) break;
        }
        plan.mesh.alpha = s.alpha;
        plan.mesh.n_left = to_node(x_interface);
        plan.config.probe_nodes = {to_node(x1 - 3.0), to_node(x1)};
        const double x_end = 0.5 * (t_rec * vhi + x1) + 1.0;
        plan.mesh.n_right = static_cast<std::size_t>(std::ceil((x_end - x_interface) * s.b / s.alpha));
    }
    plan.config.total_steps = static_cast<std::size_t>(std::ceil(t_rec * s.a));
    if (boundary == Boundary::absorbing_pad) {
        plan.config.pad_elements = std::max<std::size_t>(4, plan.mesh.element_count() / 5);
        plan.mesh.n_right += kind == ExperimentKind::reflection ? plan.config.pad_elements : 0;
        if (kind == ExperimentKind::propagation) plan.mesh.n_left += plan.config.pad_elements;
    }
    validate_config(plan.mesh, plan.config);
    return plan;
}

void write_series_csv(std::ostream& out, const BarMesh& mesh, const SimConfig& cfg, const SimRecord& rec) {
    const WaveSetting& s = cfg.setting;
    out.precision(17);
    out << "# a=" << s.a << " b=" << s.b << " gamma=" << s.gamma << " alpha=" << mesh.alpha
        << " mass=" << mass_model_name(mesh.mass) << " n_left=" << mesh.n_left << " n_right=" << mesh.n_right
        << " n_cycles=" << cfg.n_cycles << " total_steps=" << cfg.total_steps << " probe_nodes=";
    for (std::size_t i = 0; i < cfg.probe_nodes.size(); ++i) out << (i ? ";" : "") << cfg.probe_nodes[i];
    out << " boundary=" << (cfg.boundary == Boundary::fixed_far_end ? "fixed_far_end" : "absorbing_pad")
        << " pad_elements=" << cfg.pad_elements << " pad_gamma=" << cfg.pad_gamma << " dt=" << rec.dt << '\n';
    out << "time";
    for (std::size_t p = 0; p < rec.probe_series.size(); ++p) out << ",probe_" << p;
    out << '\n';
    for (std::size_t k = 0; k < cfg.total_steps; ++k) {
        out << static_cast<double>(k + 1) * rec.dt;
        for (const auto& series : rec.probe_series) out << ',' << series[k];
        out << '\n';
    }
}

}  // namespace wavedisp
