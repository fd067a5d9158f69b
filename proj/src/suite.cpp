#include "nc/suite.hpp"

#include <mutex>

#include "nc/kernels.hpp"
#include "nc/print.hpp"
#include "nc/random_gen.hpp"

namespace nc {

namespace {

struct CheckState {
    std::string name;
    bool failed = false;
    std::uint64_t trial = ~0ULL;
    std::string detail;
};

class Recorder {
  public:
    explicit Recorder(std::vector<std::string> names) {
        for (auto& n : names)
            states_.push_back({std::move(n)});
    }

    void fail(std::size_t check, std::uint64_t trial, const std::string& detail) {
        std::lock_guard<std::mutex> lock(mu_);
        CheckState& s = states_[check];
        if (!s.failed || trial < s.trial) {
            s.failed = true;
            s.trial = trial;
            s.detail = detail;
        }
    }

    std::vector<CheckResult> results(bool vacuous) const {
        std::vector<CheckResult> out;
        for (const auto& s : states_) {
            CheckResult r{s.name, !s.failed, s.trial, s.detail};
            if (vacuous && r.pass)
                r.detail = "vacuous (0 trials)";
            out.push_back(std::move(r));
        }
        return out;
    }

  private:
    std::vector<CheckState> states_;
    mutable std::mutex mu_;
};

enum CheckId : std::size_t {
    chk_static_commutator,
    chk_static_eps_relations,
    chk_static_star_basis,
    chk_mul_associative,
    chk_dagger_antihom,
    chk_dagger_involution,
    chk_partial_derivation,
    chk_partial_dagger,
    chk_antiderivative,
    chk_exp_unitary,
    chk_d_squared,
    chk_graded_leibniz,
    chk_star_covariance,
    chk_star_dagger,
    chk_star_dagger_chain,
    chk_d_dagger,
    chk_star_star_eps,
    chk_modified_symmetry,
    chk_modified_symmetry_chain,
    chk_inner_right,
    chk_inner_left,
    chk_inner_hermitian,
    chk_form_dagger_antihom,
    chk_count,
};

std::vector<std::string> check_names() {
    std::vector<std::string> n(chk_count);
    n[chk_static_commutator] = "defining-commutator";
    n[chk_static_eps_relations] = "eps-relations";
    n[chk_static_star_basis] = "star-star-eps-basis";
    n[chk_mul_associative] = "mul-associative";
    n[chk_dagger_antihom] = "dagger-antihomomorphism";
    n[chk_dagger_involution] = "dagger-involution";
    n[chk_partial_derivation] = "partial-derivation";
    n[chk_partial_dagger] = "partial-dagger-commute";
    n[chk_antiderivative] = "antiderivative-right-inverse";
    n[chk_exp_unitary] = "exp-series-unitary";
    n[chk_d_squared] = "d-squared-zero";
    n[chk_graded_leibniz] = "graded-leibniz";
    n[chk_star_covariance] = "star-covariance";
    n[chk_star_dagger] = "star-dagger-compatibility";
    n[chk_star_dagger_chain] = "star-dagger-chain";
    n[chk_d_dagger] = "d-dagger-sign";
    n[chk_star_star_eps] = "star-star-eps";
    n[chk_modified_symmetry] = "modified-symmetry";
    n[chk_modified_symmetry_chain] = "modified-symmetry-chain";
    n[chk_inner_right] = "inner-product-right-module";
    n[chk_inner_left] = "inner-product-left-module";
    n[chk_inner_hermitian] = "inner-product-hermitian";
    n[chk_form_dagger_antihom] = "form-dagger-antihomomorphism";
    return n;
}

void static_checks(const SuiteConfig& cfg, Recorder& rec) {
    const Context ctx = cfg.ctx;
    const auto q = AlgebraElement::generator(ctx, Var::q);
    const auto p = AlgebraElement::generator(ctx, Var::p);
    auto ihbar = AlgebraElement::hbar(ctx);
    ihbar.scale(GaussianRational::i());
    if (commutator(q, p) != ihbar)
        rec.fail(chk_static_commutator, 0, "q p - p q != i*h");

    const HodgeTable& tb = cfg.table;
    auto fail_eps = [&](const std::string& what) {
        rec.fail(chk_static_eps_relations, 0, what);
    };
    for (unsigned r = 0; r < 3; ++r) {
        if (tb.eps[r].is_zero()) {
            fail_eps("eps_" + std::to_string(r) + " = 0");
            continue;
        }
        if (tb.eps[2 - r] != tb.eps[r].conj())
            fail_eps("eps_{2-r} != conj(eps_r) at r = " + std::to_string(r));
        if (tb.eps[r].conj() != tb.eps[r].inverse())
            fail_eps("conj(eps_r) != eps_r^{-1} at r = " + std::to_string(r));
    }
    if (tb.eps[0] != -tb.eps[1])
        fail_eps("eps_0 != -eps_1");
    if (!tb.invertible())
        rec.fail(chk_static_star_basis, 0, "star table is not invertible");

    // star star = eps_r on each basis element
    for (unsigned b = 0; b < 4; ++b) {
        Form basis = Form::basis_element(ctx, 1, static_cast<FormBasis>(b));
        Form twice = star(star(basis, tb), tb);
        Form expect = basis;
        expect.scale(tb.eps[basis_degree(static_cast<FormBasis>(b))]);
        if (twice != expect)
            rec.fail(chk_static_star_basis, 0,
                     std::string("star star ") + basis_name(static_cast<FormBasis>(b)) +
                         " = " + to_string(twice));
    }
}

void trial_checks(const SuiteConfig& cfg, std::uint64_t trial, Recorder& rec) {
    RandomSource rng = RandomSource::for_trial(cfg.seed, trial);
    const Context ctx = cfg.ctx;
    const unsigned deg = cfg.max_degree;
    const HodgeTable& tb = cfg.table;

    const AlgebraElement f = rng.element(ctx, deg, 1, ctx.order ? 1 : 0);
    const AlgebraElement g = rng.element(ctx, deg, 1, ctx.order ? 1 : 0);
    const AlgebraElement h = rng.element(ctx, deg);

    auto ce = [&](const AlgebraElement& bad) {
        return "trial " + std::to_string(trial) + ": f = " + to_string(f) +
               "; g = " + to_string(g) + "; residual = " + to_string(bad);
    };

    if (AlgebraElement d = mul(mul(f, g), h) - mul(f, mul(g, h)); !d.is_zero())
        rec.fail(chk_mul_associative, trial, ce(d));
    if (AlgebraElement d = dagger(mul(f, g)) - mul(dagger(g), dagger(f)); !d.is_zero())
        rec.fail(chk_dagger_antihom, trial, ce(d));
    if (AlgebraElement d = dagger(dagger(f)) - f; !d.is_zero())
        rec.fail(chk_dagger_involution, trial, ce(d));
    for (Var v : {Var::q, Var::p}) {
        AlgebraElement lhs = partial(mul(f, g), v);
        AlgebraElement rhs = mul(partial(f, v), g) + mul(f, partial(g, v));
        if (AlgebraElement d = lhs - rhs; !d.is_zero())
            rec.fail(chk_partial_derivation, trial, ce(d));
        if (AlgebraElement d = dagger(partial(f, v)) - partial(dagger(f), v); !d.is_zero())
            rec.fail(chk_partial_dagger, trial, ce(d));
        if (AlgebraElement d = partial(antiderivative(f, v), v) - f; !d.is_zero())
            rec.fail(chk_antiderivative, trial, ce(d));
    }
    {
        GeneratorSeries x(rng.antihermitian(ctx, std::min(deg, 3u)));
        auto [u, uinv] = exp_series(x);
        AlgebraElement left = mul(u, uinv) - AlgebraElement::one(ctx);
        AlgebraElement right = mul(uinv, u) - AlgebraElement::one(ctx);
        AlgebraElement dg = dagger(u) - uinv;
        if (!left.is_zero() || !right.is_zero() || !dg.is_zero())
            rec.fail(chk_exp_unitary, trial,
                     "trial " + std::to_string(trial) + ": X = " + to_string(x.element()));
    }

    // calculus laws on scalar (1x1) forms
    const unsigned n = 1;
    const unsigned r = rng.below(3);
    const Form w = rng.homogeneous_form(ctx, n, r, deg);
    const unsigned s_deg = rng.below(3);
    const Form eta = rng.homogeneous_form(ctx, n, s_deg, deg);
    const AlgebraMatrix fm = AlgebraMatrix::scalar(ctx, n, f);

    auto cf = [&](const Form& bad) {
        return "trial " + std::to_string(trial) + ": w = " + to_string(w) +
               "; residual = " + to_string(bad);
    };

    if (Form d = exterior_d(exterior_d(w)); !d.is_zero())
        rec.fail(chk_d_squared, trial, cf(d));
    {
        Form lhs = exterior_d(wedge(w, eta));
        Form rhs = wedge(exterior_d(w), eta);
        Form second = wedge(w, exterior_d(eta));
        if (r % 2)
            rhs -= second;
        else
            rhs += second;
        if (Form d = lhs - rhs; !d.is_zero())
            rec.fail(chk_graded_leibniz, trial, cf(d));
    }
    try {
        if (Form d = star(wedge(w, fm), tb) - wedge(dagger(fm), star(w, tb)); !d.is_zero())
            rec.fail(chk_star_covariance, trial, cf(d));
        if (Form d = dagger_form(star(w, tb)) - star_inverse(dagger_form(w), tb);
            !d.is_zero())
            rec.fail(chk_star_dagger, trial, cf(d));
        {
            // (star(w f))~ = star^{-1}(w~) f = star^{-1}((w f)~)
            Form lhs = dagger_form(star(wedge(w, fm), tb));
            Form mid = wedge(star_inverse(dagger_form(w), tb), fm);
            Form rhs = star_inverse(dagger_form(wedge(w, fm)), tb);
            if (Form d = lhs - mid; !d.is_zero())
                rec.fail(chk_star_dagger_chain, trial, cf(d));
            else if (Form d2 = mid - rhs; !d2.is_zero())
                rec.fail(chk_star_dagger_chain, trial, cf(d2));
        }
        {
            Form lhs = dagger_form(exterior_d(w));
            Form rhs = exterior_d(dagger_form(w));
            if (r % 2 == 0)
                rhs = -rhs; // (-1)^{r+1}
            if (Form d = lhs - rhs; !d.is_zero())
                rec.fail(chk_d_dagger, trial, cf(d));
        }
        {
            Form twice = star(star(w, tb), tb);
            Form expect = w;
            expect.scale(tb.eps[r]);
            if (Form d = twice - expect; !d.is_zero())
                rec.fail(chk_star_star_eps, trial, cf(d));
        }
        {
            const Form alpha = rng.one_form(ctx, n, deg);
            const Form beta = rng.one_form(ctx, n, deg);
            Form lhs = dagger_form(wedge(alpha, star(beta, tb)));
            Form rhs = wedge(beta, star(alpha, tb));
            rhs.scale(tb.eps[0]);
            if (Form d = lhs - rhs; !d.is_zero())
                rec.fail(chk_modified_symmetry, trial, cf(d));

            Form betaf = wedge(beta, fm);
            Form chain_lhs = dagger_form(wedge(alpha, star(betaf, tb)));
            Form chain_rhs = wedge(betaf, star(alpha, tb));
            chain_rhs.scale(tb.eps[0]);
            if (Form d = chain_lhs - chain_rhs; !d.is_zero())
                rec.fail(chk_modified_symmetry_chain, trial, cf(d));

            AlgebraMatrix ip_right = inner_product(alpha, betaf, tb);
            AlgebraMatrix ip_right_moved =
                inner_product(wedge(alpha, dagger(fm)), beta, tb);
            if (ip_right != ip_right_moved)
                rec.fail(chk_inner_right, trial,
                         "trial " + std::to_string(trial) + ": f = " + to_string(f));
            AlgebraMatrix ip_left = inner_product(wedge(fm, alpha), beta, tb);
            AlgebraMatrix ip_left_expect = inner_product(alpha, beta, tb) * dagger(fm);
            if (ip_left != ip_left_expect)
                rec.fail(chk_inner_left, trial,
                         "trial " + std::to_string(trial) + ": f = " + to_string(f));
            if (dagger(inner_product(alpha, beta, tb)) != inner_product(beta, alpha, tb))
                rec.fail(chk_inner_hermitian, trial, "trial " + std::to_string(trial));
        }
        if (Form d = dagger_form(wedge(w, eta)) - wedge(dagger_form(eta), dagger_form(w));
            !d.is_zero())
            rec.fail(chk_form_dagger_antihom, trial, cf(d));
    } catch (const Error& e) {
        rec.fail(chk_star_star_eps, trial,
                 "trial " + std::to_string(trial) + ": " + e.what());
    }
}

} // namespace

SuiteReport run_axiom_suite(const SuiteConfig& config) {
    Recorder rec(check_names());
    static_checks(config, rec);
    kernels::parallel_for(config.trials, config.parallel, [&](std::size_t trial) {
        trial_checks(config, trial, rec);
    });
    SuiteReport report;
    report.trials = config.trials;
    report.seed = config.seed;
    report.checks = rec.results(config.trials == 0);
    return report;
}

} // namespace nc
