#include "wavedisp/discretization.hpp"

namespace wavedisp {

ElementMatrices element_matrices(const MassModel& mass, double length, double e_mod, double density,
                                 double damping_c) {
    if (!(length > 0.0)) throw DomainError("element length must be positive");
    if (!(e_mod > 0.0)) throw DomainError("elastic modulus must be positive");
    if (!(density > 0.0)) throw DomainError("density must be positive");
    if (!(damping_c >= 0.0)) throw DomainError("damping constant must be non-negative");

    const double ks = e_mod / length;
    const double ms = density * length;
    ElementMatrices em;
    em.k = {{{ks, -ks}, {-ks, ks}}};
    em.c_mat = {{{damping_c * ks, -damping_c * ks}, {-damping_c * ks, damping_c * ks}}};
    em.m = {{{ms * mass.m1, ms * mass.m2}, {ms * mass.m2, ms * mass.m1}}};
    return em;
}

}  // namespace wavedisp
