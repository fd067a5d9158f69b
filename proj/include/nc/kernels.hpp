#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "nc/scalar_poly.hpp"

// Product kernels for both coordinate algebras. The serial versions are the
// reference implementations; the parallel versions split the left term list
// across OpenMP threads and merge per-thread accumulators. Exact arithmetic
// makes the merge order irrelevant, so results are bit-identical.

namespace nc::kernels {

using TermMap = std::map<MonoExp, ScalarPoly>;

struct Term {
    MonoExp m;
    const ScalarPoly* c;
};

std::vector<Term> flatten(const TermMap& terms);

/// Accumulate the full product of one monomial pair into `acc`.
/// Heisenberg: q^a p^b * q^c p^d = sum_k C(b,k) C(c,k) k! (-i hbar)^k
/// q^{a+c-k} p^{b+d-k} (exhaustive rewriting of pq -> qp - i hbar).
/// Moyal: the finite expansion of m o e^{(i hbar/2) P}, which lands on the
/// same q^{a+c-k} p^{b+d-k} ladder with its own level-k coefficient.
void accumulate_pair(Backend backend, const Term& lhs, const Term& rhs, TermMap& acc);

TermMap product_serial(Backend backend, const std::vector<Term>& lhs,
                       const std::vector<Term>& rhs);
TermMap product_parallel(Backend backend, const std::vector<Term>& lhs,
                         const std::vector<Term>& rhs);

/// Dispatcher: parallel when the pair count is worth the thread overhead.
TermMap product(Backend backend, const TermMap& lhs, const TermMap& rhs);

inline constexpr std::size_t parallel_pair_threshold = 4096;

/// Iteration helper used by suites and grids: run fn(i) for i in [0, n),
/// OpenMP-parallel when `parallel` is set. fn must be safe to run
/// concurrently for distinct i.
void parallel_for(std::size_t n, bool parallel, const std::function<void(std::size_t)>& fn);

} // namespace nc::kernels
