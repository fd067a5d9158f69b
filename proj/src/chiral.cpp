#include "nc/chiral.hpp"

#include "nc/print.hpp"

namespace nc {

namespace {

mpz_class binom(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

using TermMap = std::map<MonoExp, ScalarPoly>;

void add_term(TermMap& acc, MonoExp m, const ScalarPoly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

// q^a p^b -> ((u+v)/2)^a ((u-v)/2)^b, exponents reinterpreted as (u, v)
TermMap to_lightcone(const AlgebraElement& f) {
    TermMap out;
    for (const auto& [m, c] : f.terms()) {
        mpq_class scale(1, 1);
        for (unsigned k = 0; k < m.q + m.p; ++k)
            scale /= 2;
        for (unsigned r = 0; r <= m.q; ++r)
            for (unsigned s = 0; s <= m.p; ++s) {
                mpq_class w = mpq_class(binom(m.q, r) * binom(m.p, s)) * scale;
                if ((m.p - s) % 2)
                    w = -w;
                ScalarPoly piece = c;
                piece.scale(GaussianRational(w));
                add_term(out, {r + s, (m.q - r) + (m.p - s)}, piece);
            }
    }
    return out;
}

// u^a v^b -> (q+p)^a (q-p)^b
void from_lightcone_term(TermMap& out, MonoExp m, const ScalarPoly& c) {
    for (unsigned r = 0; r <= m.q; ++r)
        for (unsigned s = 0; s <= m.p; ++s) {
            mpq_class w(binom(m.q, r) * binom(m.p, s));
            if ((m.p - s) % 2)
                w = -w;
            ScalarPoly piece = c;
            piece.scale(GaussianRational(w));
            add_term(out, {r + s, (m.q - r) + (m.p - s)}, piece);
        }
}

} // namespace

AlgebraElement wave_operator(const AlgebraElement& f) {
    return partial(partial(f, Var::q), Var::q) - partial(partial(f, Var::p), Var::p);
}

AlgebraMatrix wave_operator(const AlgebraMatrix& m) {
    return m.map([](const AlgebraElement& e) { return wave_operator(e); });
}

AlgebraElement wave_inverse(const AlgebraElement& f) {
    TermMap lc = to_lightcone(f);
    TermMap out;
    for (const auto& [m, c] : lc) {
        // 4 du dv (u^{a+1} v^{b+1} / (4 (a+1)(b+1))) = u^a v^b
        ScalarPoly piece = c;
        piece.scale(GaussianRational(mpq_class(1, 4 * long(m.q + 1) * long(m.p + 1))));
        from_lightcone_term(out, {m.q + 1, m.p + 1}, piece);
    }
    AlgebraElement r(f.context());
    for (const auto& [m, c] : out)
        r.add_term(m, c);
    return r;
}

AlgebraMatrix wave_inverse(const AlgebraMatrix& m) {
    return m.map([](const AlgebraElement& e) { return wave_inverse(e); });
}

Form chiral_residual(const AlgebraMatrix& phi) {
    AlgebraMatrix dq = partial(phi, Var::q);
    AlgebraMatrix dp = partial(phi, Var::p);
    AlgebraMatrix r = wave_operator(phi) - dq * dp + dp * dq;
    return Form::from_deg2(r);
}

namespace {

bool t_free(const AlgebraMatrix& m) {
    for (unsigned i = 0; i < m.size(); ++i)
        for (unsigned j = 0; j < m.size(); ++j)
            for (const auto& [mono, c] : m.at(i, j).terms())
                for (const auto& [pe, g] : c.terms())
                    if (pe.t != 0)
                        return false;
    return true;
}

} // namespace

AlgebraMatrix solve_chiral_perturbative(const AlgebraMatrix& phi1, unsigned depth) {
    const Context ctx = phi1.context();
    if (depth > ctx.order)
        throw Error(Errc::truncation_mismatch,
                    "solver depth exceeds the context truncation order");
    if (!t_free(phi1))
        throw Error(Errc::bad_model, "seed must not contain t");
    AlgebraMatrix box = wave_operator(phi1);
    if (!box.is_zero())
        throw Error(Errc::seed_not_harmonic,
                    "seed does not solve the wave equation; box(phi_1) = " + to_string(box),
                    to_string(box));

    const unsigned n = phi1.size();
    std::vector<AlgebraMatrix> orders; // phi_1 .. phi_K, t-free
    orders.push_back(phi1);
    for (unsigned k = 2; k <= depth; ++k) {
        AlgebraMatrix source(ctx, n);
        for (unsigned i = 1; i + 1 <= k && k - i >= 1; ++i) {
            if (i > orders.size() || k - i > orders.size())
                continue;
            const AlgebraMatrix& fi = orders[i - 1];
            const AlgebraMatrix& fj = orders[k - i - 1];
            source += partial(fi, Var::q) * partial(fj, Var::p) -
                      partial(fi, Var::p) * partial(fj, Var::q);
        }
        orders.push_back(wave_inverse(source));
    }

    AlgebraMatrix phi(ctx, n);
    for (unsigned k = 1; k <= orders.size(); ++k)
        phi += orders[k - 1].map(
            [k](const AlgebraElement& e) { return e.shifted_params(0, k); });
    return phi;
}

SigmaSolution solve_sigma_perturbative(const AlgebraMatrix& x1, unsigned depth,
                                       const HodgeTable& table) {
    const Context ctx = x1.context();
    if (depth > ctx.order)
        throw Error(Errc::truncation_mismatch,
                    "solver depth exceeds the context truncation order");
    if (!t_free(x1))
        throw Error(Errc::bad_model, "seed must not contain t");
    if (!is_antihermitian(x1))
        throw Error(Errc::not_antihermitian, "seed generator is not anti-hermitean");
    AlgebraMatrix box = wave_operator(x1);
    if (!box.is_zero())
        throw Error(Errc::seed_not_harmonic,
                    "seed does not solve the wave equation; box(X_1) = " + to_string(box),
                    to_string(box));

    // X = X_1 + t X_2 + ...; each new order cancels the t^k part of the
    // harmonic residual computed from the orders below it.
    AlgebraMatrix gen = x1;
    for (unsigned k = 2; k <= depth; ++k) {
        GaugeField field = pure_gauge(unitary_pair(gen));
        Form res = harmonic_residual(field, table);
        AlgebraMatrix source = t_slice(res[FormBasis::dqdp], k);
        if (source.is_zero())
            continue;
        AlgebraMatrix xk = wave_inverse(source);
        if (!is_antihermitian(xk))
            throw Error(Errc::obstruction_nonintegrable,
                        "order " + std::to_string(k) +
                            " source breaks the anti-hermiticity pattern",
                        to_string(source), static_cast<int>(k));
        gen += xk.map([k](const AlgebraElement& e) {
            return e.shifted_params(0, k - 1);
        });
    }

    GeneralizedInversePair pair = unitary_pair(gen);
    GaugeField field = pure_gauge(pair);
    return {std::move(gen), std::move(pair), std::move(field)};
}

} // namespace nc
