#include "nc/lax.hpp"

namespace nc {

LaxPair lax_pair(const GeneratorSeries& x, const GaussianRational& lambda) {
    const Context ctx = x.element().context();
    if (ctx.backend != Backend::heisenberg)
        throw Error(Errc::backend_mismatch, "Lax pair requires the Heisenberg backend");
    if (lambda * lambda == GaussianRational(1))
        throw Error(Errc::pole_at_unit_lambda, "lambda^2 = 1 is a pole of the Lax pair");

    auto [u, uinv] = exp_series(x);
    const AlgebraElement q = AlgebraElement::generator(ctx, Var::q);
    const AlgebraElement p = AlgebraElement::generator(ctx, Var::p);
    const AlgebraElement big_q = mul(mul(uinv, q), u);
    const AlgebraElement big_p = mul(mul(uinv, p), u);

    const GaussianRational pre = (GaussianRational(1) - lambda * lambda).inverse();
    const GaussianRational l2 = lambda * lambda;

    AlgebraElement l = q;
    {
        AlgebraElement term = p;
        term.scale(lambda);
        l -= term;
    }
    {
        AlgebraElement term = big_q;
        term.scale(l2);
        l -= term;
    }
    {
        AlgebraElement term = big_p;
        term.scale(lambda);
        l += term;
    }
    l.scale(pre);

    AlgebraElement m = p;
    {
        AlgebraElement term = q;
        term.scale(lambda);
        m -= term;
    }
    {
        AlgebraElement term = big_q;
        term.scale(lambda);
        m += term;
    }
    {
        AlgebraElement term = big_p;
        term.scale(l2);
        m -= term;
    }
    m.scale(pre);

    AlgebraElement residual = commutator(l, m);
    AlgebraElement ihbar = AlgebraElement::hbar(ctx);
    ihbar.scale(GaussianRational::i());
    residual -= ihbar;

    return {std::move(l), std::move(m), lambda, std::move(residual)};
}

} // namespace nc
