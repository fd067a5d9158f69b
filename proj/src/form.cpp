#include "nc/form.hpp"

namespace nc {

const char* basis_name(FormBasis b) {
    switch (b) {
    case FormBasis::one: return "deg0";
    case FormBasis::dq: return "dq";
    case FormBasis::dp: return "dp";
    case FormBasis::dqdp: return "dqdp";
    }
    return "?";
}

HodgeTable HodgeTable::standard() {
    HodgeTable t;
    t.target = {FormBasis::dqdp, FormBasis::dp, FormBasis::dq, FormBasis::one};
    t.factor = {GaussianRational(1), GaussianRational(1), GaussianRational(1),
                GaussianRational(-1)};
    t.eps = {GaussianRational(-1), GaussianRational(1), GaussianRational(-1)};
    return t;
}

bool HodgeTable::invertible() const {
    std::array<bool, 4> hit{false, false, false, false};
    for (unsigned b = 0; b < 4; ++b) {
        if (factor[b].is_zero())
            return false;
        unsigned tgt = static_cast<unsigned>(target[b]);
        if (hit[tgt])
            return false;
        hit[tgt] = true;
    }
    return true;
}

HodgeTable HodgeTable::inverse() const {
    if (!invertible())
        throw Error(Errc::star_table_singular, "star table is not invertible");
    HodgeTable inv;
    inv.eps = eps;
    for (unsigned b = 0; b < 4; ++b) {
        unsigned tgt = static_cast<unsigned>(target[b]);
        // star(f basis_b) = c dagger(f) basis_tgt  =>
        // star^{-1}(g basis_tgt) = conj(c)^{-1} dagger(g) basis_b
        inv.target[tgt] = static_cast<FormBasis>(b);
        inv.factor[tgt] = factor[b].conj().inverse();
    }
    return inv;
}

Form Form::from_deg0(const AlgebraMatrix& c) {
    Form w(c.context(), c.size());
    w[FormBasis::one] = c;
    return w;
}

Form Form::one_form(const AlgebraMatrix& cq, const AlgebraMatrix& cp) {
    require_same_shape(cq, cp);
    Form w(cq.context(), cq.size());
    w[FormBasis::dq] = cq;
    w[FormBasis::dp] = cp;
    return w;
}

Form Form::from_deg2(const AlgebraMatrix& c) {
    Form w(c.context(), c.size());
    w[FormBasis::dqdp] = c;
    return w;
}

Form Form::basis_element(Context ctx, unsigned n, FormBasis b) {
    Form w(ctx, n);
    w[b] = AlgebraMatrix::identity(ctx, n);
    return w;
}

bool Form::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero())
            return false;
    return true;
}

bool Form::homogeneous(unsigned degree) const {
    for (unsigned b = 0; b < 4; ++b)
        if (basis_degree(static_cast<FormBasis>(b)) != degree && !comps_[b].is_zero())
            return false;
    return true;
}

Form Form::operator-() const {
    Form r = *this;
    for (auto& c : r.comps_)
        c = -c;
    return r;
}

Form& Form::operator+=(const Form& o) {
    for (unsigned b = 0; b < 4; ++b)
        comps_[b] += o.comps_[b];
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (unsigned b = 0; b < 4; ++b)
        comps_[b] -= o.comps_[b];
    return *this;
}

Form& Form::scale(const GaussianRational& c) {
    for (auto& m : comps_)
        m.scale(c);
    return *this;
}

Form exterior_d(const Form& w) {
    Form r(w.context(), w.size());
    r[FormBasis::dq] = partial(w[FormBasis::one], Var::q);
    r[FormBasis::dp] = partial(w[FormBasis::one], Var::p);
    r[FormBasis::dqdp] = partial(w[FormBasis::dp], Var::q) - partial(w[FormBasis::dq], Var::p);
    return r;
}

Form exterior_d(const AlgebraMatrix& m) { return exterior_d(Form::from_deg0(m)); }

Form wedge(const Form& a, const Form& b) {
    const auto& a0 = a[FormBasis::one];
    const auto& aq = a[FormBasis::dq];
    const auto& ap = a[FormBasis::dp];
    const auto& a2 = a[FormBasis::dqdp];
    const auto& b0 = b[FormBasis::one];
    const auto& bq = b[FormBasis::dq];
    const auto& bp = b[FormBasis::dp];
    const auto& b2 = b[FormBasis::dqdp];
    Form r(a.context(), a.size());
    r[FormBasis::one] = a0 * b0;
    r[FormBasis::dq] = a0 * bq + aq * b0;
    r[FormBasis::dp] = a0 * bp + ap * b0;
    r[FormBasis::dqdp] = a0 * b2 + a2 * b0 + aq * bp - ap * bq;
    return r;
}

Form wedge(const AlgebraMatrix& a, const Form& b) { return wedge(Form::from_deg0(a), b); }
Form wedge(const Form& a, const AlgebraMatrix& b) { return wedge(a, Form::from_deg0(b)); }

Form star(const Form& w, const HodgeTable& table) {
    Form r(w.context(), w.size());
    for (unsigned b = 0; b < 4; ++b) {
        const AlgebraMatrix& comp = w[static_cast<FormBasis>(b)];
        if (comp.is_zero())
            continue;
        AlgebraMatrix img = dagger(comp);
        img.scale(table.factor[b]);
        r[table.target[b]] += img;
    }
    return r;
}

Form star_inverse(const Form& w, const HodgeTable& table) { return star(w, table.inverse()); }

Form dagger_form(const Form& w) {
    Form r(w.context(), w.size());
    r[FormBasis::one] = dagger(w[FormBasis::one]);
    r[FormBasis::dq] = -dagger(w[FormBasis::dq]);
    r[FormBasis::dp] = -dagger(w[FormBasis::dp]);
    r[FormBasis::dqdp] = -dagger(w[FormBasis::dqdp]);
    return r;
}

AlgebraMatrix inner_product(const Form& alpha, const Form& beta, const HodgeTable& table) {
    if (!alpha.homogeneous(1) || !beta.homogeneous(1))
        throw Error(Errc::wrong_degree, "inner product expects degree-1 forms");
    return star_inverse(wedge(alpha, star(beta, table)), table)[FormBasis::one];
}

} // namespace nc
