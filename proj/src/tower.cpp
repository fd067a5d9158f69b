#include "nc/tower.hpp"

#include "nc/print.hpp"

namespace nc {

namespace {

AlgebraElement strip_constant(const AlgebraElement& f) {
    AlgebraElement r(f.context());
    for (const auto& [m, c] : f.terms())
        if (m != MonoExp{0, 0})
            r.add_term(m, c);
    return r;
}

AlgebraMatrix strip_constant(const AlgebraMatrix& m) {
    return m.map([](const AlgebraElement& e) { return strip_constant(e); });
}

} // namespace

AlgebraMatrix integrate_closed_one_form(const Form& w) {
    if (!w.homogeneous(1))
        throw Error(Errc::wrong_degree, "integrator expects a 1-form");
    Form dw = exterior_d(w);
    if (!dw.is_zero())
        throw Error(Errc::not_closed, "form is not closed; d w = " + to_string(dw),
                    to_string(dw));
    const auto& wq = w[FormBasis::dq];
    const auto& wp = w[FormBasis::dp];
    // chi1 soaks up the dq part; the rest of the dp part is q-free because
    // the form is closed, so a p-antiderivative finishes it.
    AlgebraMatrix chi1 = wq.map([](const AlgebraElement& e) {
        return antiderivative(e, Var::q);
    });
    AlgebraMatrix rem = wp - partial(chi1, Var::p);
    AlgebraMatrix chi2 = rem.map([](const AlgebraElement& e) {
        return antiderivative(e, Var::p);
    });
    return chi1 + chi2;
}

AlgebraMatrix extract_potential(const Form& j, const HodgeTable& table) {
    auto check = is_conserved(j, table);
    if (!check.conserved)
        throw Error(Errc::not_conserved,
                    "current is not conserved; d star J = " + to_string(check.residual),
                    to_string(check.residual));
    Form alpha = star(j, table);
    alpha.scale(table.eps[1].inverse());
    AlgebraMatrix chi_dag = integrate_closed_one_form(alpha);
    return strip_constant(dagger(chi_dag));
}

Form next_current(const AlgebraMatrix& chi_prev, const GaugeField& field) {
    return covariant_d(chi_prev, field);
}

Tower build_tower(const GaugeField& field, unsigned depth, const HodgeTable& table) {
    Form hm = harmonic_residual(field, table);
    if (!hm.is_zero())
        throw Error(Errc::not_harmonic,
                    "field is not harmonic; d star A = " + to_string(hm), to_string(hm));
    Form f = curvature(field);
    if (!f.is_zero())
        throw Error(Errc::not_flat, "field is not flat; F = " + to_string(f), to_string(f));

    Tower tower{field, table, {}, {}, {}};
    tower.chis.push_back(AlgebraMatrix::identity(field.context(), field.size()));
    for (unsigned m = 1; m <= depth; ++m) {
        Form j = next_current(tower.chis.back(), field);
        auto check = is_conserved(j, table);
        if (!check.conserved)
            throw Error(Errc::not_conserved,
                        "step " + std::to_string(m) + ": d star J = " +
                            to_string(check.residual),
                        to_string(check.residual), static_cast<int>(m));
        Form alpha = star(j, table);
        alpha.scale(table.eps[1].inverse());
        TowerCertificate cert{m, check.residual, exterior_d(alpha)};
        AlgebraMatrix chi = strip_constant(dagger(integrate_closed_one_form(alpha)));
        tower.currents.push_back(std::move(j));
        tower.certificates.push_back(std::move(cert));
        tower.chis.push_back(std::move(chi));
    }
    return tower;
}

Form lemma_residual(const AlgebraMatrix& chi, const GaugeField& field,
                    const HodgeTable& table) {
    Form hm = harmonic_residual(field, table);
    if (!hm.is_zero())
        throw Error(Errc::not_harmonic,
                    "lemma needs d star A = 0; got " + to_string(hm), to_string(hm));
    Form lhs = exterior_d(star(covariant_d(chi, field), table));
    Form inner = covariant_d(star(exterior_d(dagger(chi)), table), field);
    Form rhs = dagger_form(inner);
    rhs.scale(table.eps[1]);
    return lhs + rhs;
}

std::vector<Form> master_residuals(const Tower& tower) {
    std::vector<Form> out;
    out.reserve(tower.depth());
    for (unsigned m = 1; m <= tower.depth(); ++m) {
        Form lhs = star(exterior_d(dagger(tower.chis[m])), tower.table);
        out.push_back(lhs - tower.currents[m - 1]);
    }
    return out;
}

Form integrability_residual(const AlgebraMatrix& chi, const GaugeField& field,
                            const GaussianRational& lambda, const HodgeTable& table) {
    Form bracket = dagger_form(harmonic_residual(field, table));
    Form fterm = curvature(field);
    fterm.scale(table.eps[1] * lambda);
    return wedge(bracket - fterm, chi);
}

} // namespace nc
