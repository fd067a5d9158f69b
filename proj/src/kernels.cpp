#include "nc/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nc::kernels {

namespace {

mpz_class binom(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// n (n-1) ... (n-k+1)
mpz_class falling(unsigned n, unsigned k) {
    mpz_class r(1);
    for (unsigned j = 0; j < k; ++j)
        r *= n - j;
    return r;
}

void add_into(TermMap& acc, MonoExp m, ScalarPoly&& s) {
    if (s.is_zero())
        return;
    auto [it, inserted] = acc.try_emplace(m, std::move(s));
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

void merge_into(TermMap& acc, TermMap&& part) {
    if (acc.empty()) {
        acc = std::move(part);
        return;
    }
    for (auto& [m, s] : part)
        add_into(acc, m, std::move(s));
}

} // namespace

std::vector<Term> flatten(const TermMap& terms) {
    std::vector<Term> v;
    v.reserve(terms.size());
    for (const auto& [m, c] : terms)
        v.push_back({m, &c});
    return v;
}

void accumulate_pair(Backend backend, const Term& lhs, const Term& rhs, TermMap& acc) {
    const auto [a, b] = lhs.m;
    const auto [c, d] = rhs.m;
    ScalarPoly base = *lhs.c * *rhs.c;
    if (base.is_zero())
        return;

    if (backend == Backend::heisenberg) {
        const unsigned kmax = std::min(b, c);
        for (unsigned k = 0; k <= kmax; ++k) {
            // C(b,k) C(c,k) k! (-i)^k, with hbar^k absorbed as a shift
            mpq_class mag(binom(b, k) * binom(c, k) * factorial(k));
            GaussianRational g = i_pow(3 * k) * GaussianRational(mag); // (-i)^k = i^{3k}
            ScalarPoly contrib = base.shifted(k, 0);
            contrib.scale(g);
            add_into(acc, {a + c - k, b + d - k}, std::move(contrib));
        }
    } else {
        const unsigned kmax = std::min(a + b, c + d);
        for (unsigned k = 0; k <= kmax; ++k) {
            // sum_j (-1)^j C(k,j) a!/(a-(k-j))! b!/(b-j)! c!/(c-j)! d!/(d-(k-j))!
            const unsigned jlo = std::max(k > a ? k - a : 0u, k > d ? k - d : 0u);
            const unsigned jhi = std::min({k, b, c});
            if (jlo > jhi)
                continue;
            mpz_class inner(0);
            for (unsigned j = jlo; j <= jhi; ++j) {
                mpz_class w = binom(k, j) * falling(a, k - j) * falling(b, j) *
                              falling(c, j) * falling(d, k - j);
                if (j % 2)
                    inner -= w;
                else
                    inner += w;
            }
            if (inner == 0)
                continue;
            mpz_class den = factorial(k);
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k); // k! 2^k
            mpq_class mag(inner, den);
            mag.canonicalize();
            GaussianRational g = i_pow(k) * GaussianRational(mag); // (i/2)^k / k! * inner
            ScalarPoly contrib = base.shifted(k, 0);
            contrib.scale(g);
            add_into(acc, {a + c - k, b + d - k}, std::move(contrib));
        }
    }
}

TermMap product_serial(Backend backend, const std::vector<Term>& lhs,
                       const std::vector<Term>& rhs) {
    TermMap acc;
    for (const Term& l : lhs)
        for (const Term& r : rhs)
            accumulate_pair(backend, l, r, acc);
    return acc;
}

TermMap product_parallel(Backend backend, const std::vector<Term>& lhs,
                         const std::vector<Term>& rhs) {
#ifdef _OPENMP
    const int nthreads = std::max(1, omp_get_max_threads());
    std::vector<TermMap> parts(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
        TermMap& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lhs.size()); ++i)
            for (const Term& r : rhs)
                accumulate_pair(backend, lhs[static_cast<std::size_t>(i)], r, local);
    }
    TermMap acc;
    for (auto& part : parts)
        merge_into(acc, std::move(part));
    return acc;
#else
    return product_serial(backend, lhs, rhs);
#endif
}

TermMap product(Backend backend, const TermMap& lhs, const TermMap& rhs) {
    const auto l = flatten(lhs);
    const auto r = flatten(rhs);
#ifdef _OPENMP
    if (l.size() * r.size() >= parallel_pair_threshold && omp_get_max_threads() > 1)
        return product_parallel(backend, l, r);
#endif
    return product_serial(backend, l, r);
}

void parallel_for(std::size_t n, bool parallel, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    if (parallel && n > 1 && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i)
        fn(i);
}

} // namespace nc::kernels
