#pragma once

// Two-node bar element and the Newmark average-acceleration relations.

#include <array>

#include "wavedisp/core.hpp"

namespace wavedisp {

using Mat2 = std::array<std::array<double, 2>, 2>;

struct ElementMatrices {
    Mat2 k{};      ///< stiffness, (E/l) [[1,-1],[-1,1]]
    Mat2 c_mat{};  ///< damping, c * k
    Mat2 m{};      ///< mass, rho*l [[m1,m2],[m2,m1]]
};

ElementMatrices element_matrices(const MassModel& mass, double length, double e_mod, double density,
                                 double damping_c);

/// Values at the nodes (j-1, j, j+1).
template <class T>
using NodalTriple = std::array<T, 3>;

/// Left-hand side of the interior-node equilibrium of a uniform mesh, divided
/// by E/l, in the normalized units of WaveSetting:
///   {-u_(j-1) + 2u_j - u_(j+1)} + c{same on u_dot} + l^2{m2 u''_(j-1) + 2 m1 u''_j + m2 u''_(j+1)}.
/// Works for real fields and for complex plane-wave states.
template <class T>
T stencil_residual(const NodalTriple<T>& u, const NodalTriple<T>& u_dot, const NodalTriple<T>& u_ddot,
                   const WaveSetting& s) {
    const double c = s.damping_constant();
    const double l = s.element_length();
    const auto second_difference = [](const NodalTriple<T>& v) { return -v[0] + 2.0 * v[1] - v[2]; };
    const T inertia = s.mass.m2 * u_ddot[0] + 2.0 * s.mass.m1 * u_ddot[1] + s.mass.m2 * u_ddot[2];
    return second_difference(u) + c * second_difference(u_dot) + (l * l) * inertia;
}

template <class T>
struct Kinematics {
    T u{};
    T u_dot{};
    T u_ddot{};
};

template <class T>
struct NewmarkResiduals {
    T r_vel{};
    T r_disp{};
};

/// The two-step form of Newmark average acceleration over levels k-1, k, k+1:
///   u'_(k+1) - 2u'_k + u'_(k-1) + dt/2 (u''_(k-1) - u''_(k+1)) = 0
///   u_(k+1) - 2u_k + u_(k-1) - dt^2/4 (u''_(k-1) + 2u''_k + u''_(k+1)) = 0
class NewmarkOperators {
public:
    explicit NewmarkOperators(double dt) : dt_(dt) {
        if (!(dt > 0.0)) throw DomainError("time increment must be positive");
    }

    double dt() const { return dt_; }

    template <class T>
    NewmarkResiduals<T> residuals(const Kinematics<T>& prev, const Kinematics<T>& cur,
                                  const Kinematics<T>& next) const {
        NewmarkResiduals<T> r;
        r.r_vel = next.u_dot - 2.0 * cur.u_dot + prev.u_dot + 0.5 * dt_ * (prev.u_ddot - next.u_ddot);
        r.r_disp = next.u - 2.0 * cur.u + prev.u - 0.25 * dt_ * dt_ * (prev.u_ddot + 2.0 * cur.u_ddot + next.u_ddot);
        return r;
    }

private:
    double dt_;
};

template <class T>
NewmarkResiduals<T> newmark_residuals(const Kinematics<T>& prev, const Kinematics<T>& cur,
                                      const Kinematics<T>& next, double dt) {
    return NewmarkOperators(dt).residuals(prev, cur, next);
}

}  // namespace wavedisp
