#pragma once

// Test-only oracles, deliberately independent of the closed-form product
// kernels they check.

#include <map>
#include <vector>

#include "nc/algebra.hpp"

namespace nc::test {

// --- Heisenberg: exhaustive word rewriting --------------------------------
// Words over {q, p} with ScalarPoly coefficients; the single rewrite rule
// p q -> q p - i hbar is applied until every word is normal-ordered.

using Word = std::vector<Var>;

struct WordPoly {
    std::map<Word, ScalarPoly> terms;
    unsigned order;

    explicit WordPoly(unsigned k) : order(k) {}

    void add(const Word& w, const ScalarPoly& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }
};

inline bool normal_ordered(const Word& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k - 1] == Var::p && w[k] == Var::q)
            return false;
    return true;
}

inline WordPoly normal_order(WordPoly in) {
    WordPoly out(in.order);
    std::vector<std::pair<Word, ScalarPoly>> work(in.terms.begin(), in.terms.end());
    while (!work.empty()) {
        auto [w, c] = work.back();
        work.pop_back();
        std::size_t k = 1;
        for (; k < w.size(); ++k)
            if (w[k - 1] == Var::p && w[k] == Var::q)
                break;
        if (k == w.size()) {
            out.add(w, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[k - 1], swapped[k]);
        work.emplace_back(std::move(swapped), c);
        Word dropped = w;
        dropped.erase(dropped.begin() + static_cast<long>(k - 1),
                      dropped.begin() + static_cast<long>(k + 1));
        ScalarPoly minus_ihbar = c.shifted(1, 0);
        minus_ihbar.scale(GaussianRational(0, -1));
        work.emplace_back(std::move(dropped), minus_ihbar);
    }
    return out;
}

inline Word word_of(MonoExp m) {
    Word w;
    for (unsigned k = 0; k < m.q; ++k)
        w.push_back(Var::q);
    for (unsigned k = 0; k < m.p; ++k)
        w.push_back(Var::p);
    return w;
}

inline AlgebraElement to_element(const WordPoly& wp, Context ctx) {
    AlgebraElement out(ctx);
    for (const auto& [w, c] : wp.terms) {
        MonoExp m{0, 0};
        for (Var v : w)
            (v == Var::q ? m.q : m.p)++;
        out.add_term(m, c);
    }
    return out;
}

/// Heisenberg product by concatenation + exhaustive rewriting.
inline AlgebraElement oracle_heisenberg_mul(const AlgebraElement& f, const AlgebraElement& g) {
    WordPoly acc(f.order());
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) {
            Word w = word_of(mf);
            Word tail = word_of(mg);
            w.insert(w.end(), tail.begin(), tail.end());
            acc.add(w, cf * cg);
        }
    return to_element(normal_order(acc), f.context());
}

// --- Moyal: iterated tensor ladder -----------------------------------------
// Applies P = dq (x) dp - dp (x) dq one level at a time to a list of tensor
// pairs and multiplies pointwise, instead of the closed-form coefficient sum.

inline AlgebraElement pointwise_mul(const AlgebraElement& f, const AlgebraElement& g) {
    AlgebraElement out(f.context());
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms())
            out.add_term({mf.q + mg.q, mf.p + mg.p}, cf * cg);
    return out;
}

inline AlgebraElement oracle_moyal_mul(const AlgebraElement& f, const AlgebraElement& g) {
    const Context ctx = f.context();
    AlgebraElement out(ctx);
    std::vector<std::pair<AlgebraElement, AlgebraElement>> level{{f, g}};
    mpz_class kfac(1);
    for (unsigned k = 0;; ++k) {
        if (k > 0)
            kfac *= k;
        AlgebraElement sum(ctx);
        bool live = false;
        for (const auto& [a, b] : level) {
            if (a.is_zero() || b.is_zero())
                continue;
            live = true;
            sum += pointwise_mul(a, b);
        }
        if (!live)
            break;
        // (i/2)^k / k! hbar^k
        GaussianRational w = i_pow(k);
        mpz_class den = kfac;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
        mpq_class mag(1, 1);
        mag /= mpq_class(den);
        w *= GaussianRational(mag);
        AlgebraElement term = sum.shifted_params(k, 0);
        term.scale(w);
        out += term;

        std::vector<std::pair<AlgebraElement, AlgebraElement>> next;
        for (const auto& [a, b] : level) {
            next.emplace_back(partial(a, Var::q), partial(b, Var::p));
            AlgebraElement neg = -partial(a, Var::p);
            next.emplace_back(std::move(neg), partial(b, Var::q));
        }
        level = std::move(next);
        if (level.empty())
            break;
    }
    return out;
}

} // namespace nc::test
