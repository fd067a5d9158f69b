#include "nc/random_gen.hpp"

namespace nc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

RandomSource RandomSource::for_trial(std::uint64_t seed, std::uint64_t trial) {
    return RandomSource(splitmix(seed ^ splitmix(trial + 1)));
}

mpq_class RandomSource::rational() {
    long num = static_cast<long>(below(7)) - 3; // [-3, 3]
    long den = 1 + static_cast<long>(below(3)); // {1, 2, 3}
    return make_rational(num, den);
}

GaussianRational RandomSource::coefficient() {
    for (int guard = 0; guard < 64; ++guard) {
        GaussianRational c(rational(), below(2) ? rational() : mpq_class(0));
        if (!c.is_zero())
            return c;
    }
    return {1};
}

ScalarPoly RandomSource::scalar(unsigned order, unsigned max_h, unsigned max_t) {
    ScalarPoly s(order);
    unsigned nterms = 1 + below(2);
    for (unsigned k = 0; k < nterms; ++k) {
        ParamExp e{below(max_h + 1), max_t ? below(std::min(max_t, order) + 1) : 0};
        s.add_term(e, coefficient());
    }
    if (s.is_zero())
        s.add_term({0, 0}, {1});
    return s;
}

AlgebraElement RandomSource::element(Context ctx, unsigned max_degree, unsigned max_h,
                                     unsigned max_t) {
    AlgebraElement f(ctx);
    unsigned nterms = 1 + below(4);
    for (unsigned k = 0; k < nterms; ++k) {
        unsigned a = below(max_degree + 1);
        unsigned b = below(max_degree + 1 - a);
        f.add_term({a, b}, scalar(ctx.order, max_h, max_t));
    }
    return f;
}

AlgebraElement RandomSource::antihermitian(Context ctx, unsigned max_degree) {
    AlgebraElement y = element(ctx, max_degree);
    return y - dagger(y);
}

AlgebraElement RandomSource::wave_solution(Context ctx, unsigned max_degree) {
    const AlgebraElement q = AlgebraElement::generator(ctx, Var::q);
    const AlgebraElement p = AlgebraElement::generator(ctx, Var::p);
    const AlgebraElement u = q + p;
    AlgebraElement v = q - p;
    AlgebraElement acc(ctx);
    AlgebraElement upow = AlgebraElement::one(ctx);
    AlgebraElement vpow = AlgebraElement::one(ctx);
    for (unsigned k = 0; k <= max_degree; ++k) {
        if (below(2)) {
            AlgebraElement term = upow;
            term.scale(coefficient());
            acc += term;
        }
        if (below(2)) {
            AlgebraElement term = vpow;
            term.scale(coefficient());
            acc += term;
        }
        upow = mul(upow, u);
        vpow = mul(vpow, v);
    }
    return acc;
}

AlgebraMatrix RandomSource::matrix(Context ctx, unsigned n, unsigned max_degree,
                                   unsigned max_h, unsigned max_t) {
    AlgebraMatrix m(ctx, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            m.at(i, j) = element(ctx, max_degree, max_h, max_t);
    return m;
}

Form RandomSource::one_form(Context ctx, unsigned n, unsigned max_degree) {
    return Form::one_form(matrix(ctx, n, max_degree), matrix(ctx, n, max_degree));
}

Form RandomSource::homogeneous_form(Context ctx, unsigned n, unsigned degree,
                                    unsigned max_degree) {
    Form w(ctx, n);
    if (degree == 0)
        w[FormBasis::one] = matrix(ctx, n, max_degree);
    else if (degree == 1)
        return one_form(ctx, n, max_degree);
    else
        w[FormBasis::dqdp] = matrix(ctx, n, max_degree);
    return w;
}

} // namespace nc
