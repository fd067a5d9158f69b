#pragma once

#include "nc/algebra.hpp"

namespace nc {

struct LaxPair {
    AlgebraElement l;
    AlgebraElement m;
    GaussianRational lambda;
    AlgebraElement commutator_residual; // [L, M] - i hbar
};

/// L = (1 - lambda^2)^{-1} (q - lambda p - lambda^2 Q + lambda P),
/// M = (1 - lambda^2)^{-1} (-lambda q + p + lambda Q - lambda^2 P)
/// with P = U^-1 p U, Q = U^-1 q U built from the truncated unitary.
/// Heisenberg backend only; lambda = +-1 is the pole of the prefactor.
LaxPair lax_pair(const GeneratorSeries& x, const GaussianRational& lambda);

} // namespace nc
