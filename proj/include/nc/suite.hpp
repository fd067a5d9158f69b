#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nc/form.hpp"

namespace nc {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::uint64_t failing_trial = ~0ULL;
    std::string detail; // first counterexample, verbatim
};

struct SuiteReport {
    unsigned trials = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

struct SuiteConfig {
    Context ctx;
    unsigned trials = 500;
    std::uint64_t seed = 12345;
    unsigned max_degree = 5;
    HodgeTable table = HodgeTable::standard();
    bool parallel = true;
};

/// Randomized verification of the algebra and calculus laws: product
/// associativity, defining commutator, dagger anti-homomorphism/involution,
/// derivation rules, truncated-unitary contracts, d^2 = 0, graded Leibniz,
/// star covariance, the involution/star/d compatibilities with their
/// consistency chains, star star = eps_r, the modified symmetry, and the
/// inner-product identities. Trials are deterministic per (seed, trial)
/// and safe to run in parallel; the lowest failing trial is reported.
SuiteReport run_axiom_suite(const SuiteConfig& config);

} // namespace nc
