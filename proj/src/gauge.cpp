#include "nc/gauge.hpp"

namespace nc {

GeneralizedInversePair::GeneralizedInversePair(AlgebraMatrix a, AlgebraMatrix s)
    : a_(std::move(a)), s_(std::move(s)) {
    require_same_shape(a_, s_);
    const AlgebraMatrix id = AlgebraMatrix::identity(a_.context(), a_.size());
    if (s_ * a_ != id || a_ * s_ != id)
        throw Error(Errc::invalid_inverse_pair,
                    "S(a) a = 1 = a S(a) fails at the given truncation order");
}

GeneralizedInversePair unitary_pair(const AlgebraMatrix& x) {
    if (!is_antihermitian(x))
        throw Error(Errc::not_antihermitian, "generator is not anti-hermitean");
    const Context ctx = x.context();
    const unsigned n = x.size();
    AlgebraMatrix u = AlgebraMatrix::identity(ctx, n);
    AlgebraMatrix uinv = u;
    AlgebraMatrix power = u;
    mpz_class kfac(1);
    for (unsigned k = 1; k <= ctx.order; ++k) {
        power = power * x;
        kfac *= k;
        AlgebraMatrix term = power.map(
            [k](const AlgebraElement& e) { return e.shifted_params(0, k); });
        if (term.is_zero())
            break;
        term.scale(GaussianRational(mpq_class(1) / mpq_class(kfac)));
        u += term;
        if (k % 2)
            uinv -= term;
        else
            uinv += term;
    }
    return {u, uinv};
}

GaugeField pure_gauge(const GeneralizedInversePair& pair) {
    Form da = exterior_d(pair.a());
    return GaugeField(wedge(pair.s(), da), Provenance::pure_gauge);
}

GaugeField from_phi(const AlgebraMatrix& phi, const HodgeTable& table) {
    return GaugeField(star(exterior_d(dagger(phi)), table), Provenance::from_phi);
}

GaugeField raw_field(Form a) { return GaugeField(std::move(a), Provenance::raw); }

Form covariant_d(const AlgebraMatrix& chi, const GaugeField& field) {
    return exterior_d(chi) + wedge(field.a(), chi);
}

Form covariant_d(const Form& w, const GaugeField& field) {
    return exterior_d(w) + wedge(field.a(), w);
}

Form curvature(const GaugeField& field) {
    return exterior_d(field.a()) + wedge(field.a(), field.a());
}

Form harmonic_residual(const GaugeField& field, const HodgeTable& table) {
    return exterior_d(star(field.a(), table));
}

ConservationCheck is_conserved(const Form& j, const HodgeTable& table) {
    if (!j.homogeneous(1))
        throw Error(Errc::wrong_degree, "conservation check expects a 1-form");
    Form residual = exterior_d(star(j, table));
    return {residual.is_zero(), std::move(residual)};
}

} // namespace nc
