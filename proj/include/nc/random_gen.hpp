#pragma once

#include <cstdint>
#include <random>

#include "nc/form.hpp"

namespace nc {

/// Deterministic generator for the randomized suites. Draws small
/// Gaussian-rational coefficients (numerators in [-3, 3], denominators in
/// {1, 2, 3}) and sparse polynomials up to a degree bound. Avoids
/// std::uniform_int_distribution so streams are implementation-independent.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    /// Independent stream for one trial: same (seed, trial) -> same draws
    /// no matter how trials are scheduled across threads.
    static RandomSource for_trial(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t bits() { return rng_(); }
    unsigned below(unsigned n) { return n == 0 ? 0 : static_cast<unsigned>(rng_() % n); }

    mpq_class rational();
    GaussianRational coefficient(); // nonzero
    ScalarPoly scalar(unsigned order, unsigned max_h, unsigned max_t);

    AlgebraElement element(Context ctx, unsigned max_degree, unsigned max_h = 1,
                           unsigned max_t = 0);
    AlgebraElement antihermitian(Context ctx, unsigned max_degree);
    /// f(q+p) + g(q-p) with algebra powers; solves the wave equation in
    /// both backends.
    AlgebraElement wave_solution(Context ctx, unsigned max_degree);

    AlgebraMatrix matrix(Context ctx, unsigned n, unsigned max_degree, unsigned max_h = 1,
                         unsigned max_t = 0);
    Form one_form(Context ctx, unsigned n, unsigned max_degree);
    Form homogeneous_form(Context ctx, unsigned n, unsigned degree, unsigned max_degree);

  private:
    std::mt19937_64 rng_;
};

} // namespace nc
