#pragma once

#include "nc/gauge.hpp"

namespace nc {

/// The wave operator partial_q^2 - partial_p^2 on formal exponents.
AlgebraElement wave_operator(const AlgebraElement& f);
AlgebraMatrix wave_operator(const AlgebraMatrix& m);

/// Exact particular inverse of the wave operator on polynomials, computed
/// in light-cone variables u = q+p, v = q-p where it reads 4 du dv: every
/// output monomial has positive degree in both u and v (zero homogeneous
/// part). wave_operator(wave_inverse(f)) == f for all polynomial f.
AlgebraElement wave_inverse(const AlgebraElement& f);
AlgebraMatrix wave_inverse(const AlgebraMatrix& m);

/// (wave(phi) - dq(phi) dp(phi) + dp(phi) dq(phi)) dq dp, products taken in
/// the backend algebra. Zero iff phi solves the deformed chiral model;
/// agrees with curvature(from_phi(phi)).
Form chiral_residual(const AlgebraMatrix& phi);

/// Order-by-order solution phi = sum_{k=1..K} t^k phi_k with the given
/// t-free seed phi_1 (which must solve the wave equation) and light-cone
/// particular solutions at orders >= 2.
AlgebraMatrix solve_chiral_perturbative(const AlgebraMatrix& phi1, unsigned depth);

struct SigmaSolution {
    AlgebraMatrix generator;     // X = X_1 + t X_2 + ... + t^{K-1} X_K
    GeneralizedInversePair pair; // exp(t X), exp(-t X)
    GaugeField field;            // S(a) d a
};

/// Anti-hermitean corrections X_2..X_K on top of the t-free seed X_1 so the
/// pure-gauge field of exp(t X) is harmonic through order t^K. Orders whose
/// light-cone solution fails anti-hermiticity abort with
/// obstruction_nonintegrable rather than being repaired.
SigmaSolution solve_sigma_perturbative(const AlgebraMatrix& x1, unsigned depth,
                                       const HodgeTable& table);

} // namespace nc
