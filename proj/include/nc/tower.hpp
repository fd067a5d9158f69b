#pragma once

#include <vector>

#include "nc/gauge.hpp"

namespace nc {

/// Invert d on a closed 1-form: returns chi with d chi = w and zero
/// constant term (q-antiderivative of the dq part plus p-antiderivative of
/// the q-free remainder). Throws not_closed carrying d w as witness.
AlgebraMatrix integrate_closed_one_form(const Form& w);

/// Invert J = star d(dagger(chi)) for a conserved J: d(dagger(chi)) =
/// eps_1^{-1} star J, then integrate, then dagger; constant term normalized
/// to zero. Throws not_conserved carrying d star J.
AlgebraMatrix extract_potential(const Form& j, const HodgeTable& table);

/// The next current D chi of the recursion.
Form next_current(const AlgebraMatrix& chi_prev, const GaugeField& field);

struct TowerCertificate {
    unsigned step;
    Form conservation; // d star J^(m)
    Form closedness;   // d(eps_1^{-1} star J^(m)), the integrator's precondition
};

/// chi^(0) = 1, J^(m) = D chi^(m-1), chi^(m) extracted from J^(m); every
/// step certified. Such towers exist whenever the field is both harmonic
/// and flat at the working truncation order.
struct Tower {
    GaugeField field;
    HodgeTable table;
    std::vector<AlgebraMatrix> chis; // chi^(0) .. chi^(M)
    std::vector<Form> currents;      // J^(1) .. J^(M)
    std::vector<TowerCertificate> certificates;

    unsigned depth() const { return static_cast<unsigned>(currents.size()); }
};

Tower build_tower(const GaugeField& field, unsigned depth, const HodgeTable& table);

/// d star D chi + eps_1 (D star d(dagger(chi)))^dagger; identically zero
/// for harmonic fields. Throws not_harmonic otherwise.
Form lemma_residual(const AlgebraMatrix& chi, const GaugeField& field, const HodgeTable& table);

/// Per-order residuals star d(dagger(chi^(m))) - J^(m) of the master linear
/// equation, m = 1..M, against the tower's stored currents.
std::vector<Form> master_residuals(const Tower& tower);

/// ((d star A)^dagger - eps_1 lambda F) chi.
Form integrability_residual(const AlgebraMatrix& chi, const GaugeField& field,
                            const GaussianRational& lambda, const HodgeTable& table);

} // namespace nc
