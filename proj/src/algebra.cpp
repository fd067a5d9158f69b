#include "nc/algebra.hpp"

namespace nc {

AlgebraElement AlgebraElement::scalar(Context ctx, const GaussianRational& c) {
    AlgebraElement r(ctx);
    r.add_term({0, 0}, ScalarPoly(c, ctx.order));
    return r;
}

AlgebraElement AlgebraElement::generator(Context ctx, Var v) {
    AlgebraElement r(ctx);
    r.add_term(v == Var::q ? MonoExp{1, 0} : MonoExp{0, 1}, ScalarPoly(1, ctx.order));
    return r;
}

AlgebraElement AlgebraElement::hbar(Context ctx) {
    AlgebraElement r(ctx);
    r.add_term({0, 0}, ScalarPoly::monomial(1, {1, 0}, ctx.order));
    return r;
}

AlgebraElement AlgebraElement::t_param(Context ctx) {
    AlgebraElement r(ctx);
    r.add_term({0, 0}, ScalarPoly::monomial(1, {0, 1}, ctx.order));
    return r;
}

AlgebraElement AlgebraElement::monomial(Context ctx, MonoExp m, ScalarPoly c) {
    AlgebraElement r(ctx);
    r.add_term(m, std::move(c));
    return r;
}

ScalarPoly AlgebraElement::coefficient(MonoExp m) const {
    auto it = mono_.find(m);
    return it == mono_.end() ? ScalarPoly(ctx_.order) : it->second;
}

void AlgebraElement::add_term(MonoExp m, const ScalarPoly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = mono_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            mono_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(ctx_);
    for (const auto& [m, c] : mono_)
        r.mono_.emplace(m, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [m, c] : o.mono_)
        add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [m, c] : o.mono_)
        add_term(m, -c);
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return mul(a, b);
}

AlgebraElement& AlgebraElement::scale(const GaussianRational& c) {
    if (c.is_zero()) {
        mono_.clear();
        return *this;
    }
    for (auto& [m, v] : mono_)
        v.scale(c);
    return *this;
}

AlgebraElement AlgebraElement::shifted_params(unsigned dh, unsigned dt) const {
    AlgebraElement r(ctx_);
    for (const auto& [m, c] : mono_)
        r.add_term(m, c.shifted(dh, dt));
    return r;
}

unsigned AlgebraElement::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : mono_)
        d = std::max(d, m.q + m.p);
    return d;
}

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g) {
    require_same(f.context(), g.context());
    AlgebraElement r(f.context());
    auto acc = kernels::product(f.context().backend, f.terms(), g.terms());
    for (auto& [m, c] : acc)
        r.add_term(m, c);
    return r;
}

AlgebraElement dagger(const AlgebraElement& f) {
    AlgebraElement r(f.context());
    const bool heis = f.backend() == Backend::heisenberg;
    for (const auto& [m, c] : f.terms()) {
        ScalarPoly cc = c.conj();
        if (!heis || m.q == 0 || m.p == 0) {
            r.add_term(m, cc);
            continue;
        }
        // (q^a p^b)^dagger = p^b q^a, re-normal-ordered
        kernels::TermMap acc;
        ScalarPoly one(1, f.order());
        kernels::Term lhs{{0, m.p}, &one};
        kernels::Term rhs{{m.q, 0}, &one};
        kernels::accumulate_pair(Backend::heisenberg, lhs, rhs, acc);
        for (auto& [rm, rc] : acc)
            r.add_term(rm, rc * cc);
    }
    return r;
}

AlgebraElement partial(const AlgebraElement& f, Var v) {
    AlgebraElement r(f.context());
    for (const auto& [m, c] : f.terms()) {
        if (v == Var::q) {
            if (m.q == 0)
                continue;
            ScalarPoly s = c;
            s.scale(GaussianRational(static_cast<long>(m.q)));
            r.add_term({m.q - 1, m.p}, s);
        } else {
            if (m.p == 0)
                continue;
            ScalarPoly s = c;
            s.scale(GaussianRational(static_cast<long>(m.p)));
            r.add_term({m.q, m.p - 1}, s);
        }
    }
    return r;
}

AlgebraElement antiderivative(const AlgebraElement& f, Var v) {
    AlgebraElement r(f.context());
    for (const auto& [m, c] : f.terms()) {
        MonoExp up = v == Var::q ? MonoExp{m.q + 1, m.p} : MonoExp{m.q, m.p + 1};
        ScalarPoly s = c;
        s.scale(GaussianRational(make_rational(1, v == Var::q ? up.q : up.p)));
        r.add_term(up, s);
    }
    return r;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return mul(a, b) - mul(b, a);
}

AlgebraElement t_slice(const AlgebraElement& f, unsigned k) {
    AlgebraElement r(f.context());
    for (const auto& [m, c] : f.terms())
        r.add_term(m, c.t_slice(k));
    return r;
}

AlgebraElement hbar_zero(const AlgebraElement& f) {
    AlgebraElement r(f.context());
    for (const auto& [m, c] : f.terms())
        r.add_term(m, c.hbar_zero());
    return r;
}

bool is_antihermitian(const AlgebraElement& f) { return dagger(f) == -f; }

GeneratorSeries::GeneratorSeries(AlgebraElement x) : x_(std::move(x)) {
    if (!is_antihermitian(x_))
        throw Error(Errc::not_antihermitian, "generator is not anti-hermitean");
}

std::pair<AlgebraElement, AlgebraElement> exp_series(const GeneratorSeries& x) {
    const Context ctx = x.element().context();
    AlgebraElement u = AlgebraElement::one(ctx);
    AlgebraElement uinv = u;
    AlgebraElement power = AlgebraElement::one(ctx);
    mpz_class kfac(1);
    for (unsigned k = 1; k <= ctx.order; ++k) {
        power = mul(power, x.element());
        kfac *= k;
        AlgebraElement term = power.shifted_params(0, k);
        if (term.is_zero())
            break;
        term.scale(mpq_class(mpq_class(1) / mpq_class(kfac)));
        u += term;
        if (k % 2)
            uinv -= term;
        else
            uinv += term;
    }
    return {u, uinv};
}

} // namespace nc
