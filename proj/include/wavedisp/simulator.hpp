#pragma once

// Time-domain finite element model of a 1D Kelvin-Voigt bar, used as an
// independent check of the closed-form dispersion and reflection results.
//
// The bar has n_left elements of length l = 1/b followed by n_right elements
// of length alpha*l. Node 0 is driven by a prescribed raised-cosine tone burst
// u(t) = sin(omega t) w(t); the far end is either fixed or terminated by a
// damping pad. The semi-discrete system is integrated with Newmark average
// acceleration in one-step form, with the tridiagonal effective matrix
// factored once.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wavedisp/core.hpp"

namespace wavedisp {

struct BarMesh {
    std::size_t n_left = 0;
    std::size_t n_right = 0;
    double alpha = 1.0;
    MassModel mass = MassModel::consistent();

    std::size_t element_count() const { return n_left + n_right; }
    std::size_t node_count() const { return n_left + n_right + 1; }
    std::size_t interface_node() const { return n_left; }
    bool uniform() const { return n_right == 0 || alpha == 1.0; }
    bool has_interface() const { return n_right > 0; }
    /// Length of element e for left element length l.
    double element_length(std::size_t e, double l) const { return e < n_left ? l : alpha * l; }
    double node_position(std::size_t j, double l) const;
    void validate() const;
};

/// Symmetric tridiagonal matrix: diag[i] = A(i,i), off[i] = A(i,i+1) = A(i+1,i).
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }
    /// y = A x.
    void multiply(std::span<const double> x, std::span<double> y) const;
    double row_entry(std::size_t i, std::size_t j) const;
};

struct AssembledBar {
    Tridiagonal stiffness;
    Tridiagonal damping;
    Tridiagonal mass;
    std::vector<double> node_x;
};

/// Global K, C = c K and M (E = rho = 1, l = 1/b, c = gamma/pi).
AssembledBar assemble(const BarMesh& mesh, const WaveSetting& s);
/// Same with a per-element damping constant.
AssembledBar assemble(const BarMesh& mesh, const WaveSetting& s, std::span<const double> element_damping);

enum class Boundary { fixed_far_end, absorbing_pad };

struct SimConfig {
    WaveSetting setting;
    int n_cycles = 16;
    std::size_t total_steps = 0;
    /// Node indices of the probes; at least two, increasing, in the left region.
    std::vector<std::size_t> probe_nodes;
    Boundary boundary = Boundary::fixed_far_end;
    /// Elements at the far end whose damping ramps up when boundary == absorbing_pad.
    std::size_t pad_elements = 0;
    double pad_gamma = 2.0;
};

/// A configuration that cannot yield a clean measurement (overlapping packets,
/// too short a record, signal below the noise floor).
class MeasurementInvalid : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimRecord {
    double dt = 0.0;
    std::vector<std::vector<double>> probe_series;  ///< [probe][step], time = (step + 1) dt
    std::vector<double> energy;                     ///< 0.5 v'Mv + 0.5 u'Ku after each step
    double forcing_end_time = 0.0;
    double measured_velocity = 0.0;
    double measured_attenuation_per_length = 0.0;
    std::optional<double> measured_reflection_pct;
};

struct StateView {
    std::span<const double> u;
    std::span<const double> u_dot;
    std::span<const double> u_ddot;
};

/// Called with step = 0 for the initial state and after every step.
using StepObserver = std::function<void(std::size_t step, const StateView& state)>;

/// Gating assumptions: every packet travels between these velocity bounds.
inline constexpr double kMinPacketVelocity = 0.75;
inline constexpr double kMaxPacketVelocity = 1.25;

/// Throws MeasurementInvalid when the geometry/duration cannot separate packets.
void validate_config(const BarMesh& mesh, const SimConfig& cfg);

/// Integrates without measuring (no probe requirements beyond valid indices).
SimRecord integrate(const BarMesh& mesh, const SimConfig& cfg, const StepObserver& observer = {});

/// Validates, integrates and measures velocity, attenuation and, when the
/// mesh has an interface, the reflected-packet ratio.
SimRecord run(const BarMesh& mesh, const SimConfig& cfg, const StepObserver& observer = {});

struct ExperimentPlan {
    BarMesh mesh;
    SimConfig config;
};

enum class ExperimentKind { propagation, reflection };

/// Chooses bar length, probe positions and record length so that the packets
/// of interest are separated under the velocity bounds above.
ExperimentPlan plan_experiment(const WaveSetting& s, ExperimentKind kind, int n_cycles = 16,
                               Boundary boundary = Boundary::fixed_far_end);

/// Prescribed displacement, velocity and acceleration of the driven node.
struct Drive {
    double u = 0.0;
    double u_dot = 0.0;
    double u_ddot = 0.0;
};
Drive tone_burst(double t, int n_cycles);

/// 2 * (one-period moving average of x(t) e^{i omega t}); |z| is the envelope
/// and arg z the carrier phase.
std::vector<Complex> demodulate(std::span<const double> series, double dt);

/// Delay of b relative to a maximizing their cross-correlation (parabolic refinement).
double cross_correlation_delay(std::span<const double> a, std::span<const double> b, double dt);

/// Probe series as CSV: key=value header line, column names, one row per step.
void write_series_csv(std::ostream& out, const BarMesh& mesh, const SimConfig& cfg, const SimRecord& rec);

}  // namespace wavedisp
