#include <doctest.h>

#include "nc/form.hpp"
#include "nc/parse.hpp"
#include "nc/print.hpp"
#include "nc/random_gen.hpp"

using namespace nc;

namespace {

const Context heis{Backend::heisenberg, 3};
const Context moyal{Backend::moyal, 3};
const HodgeTable table = HodgeTable::standard();

AlgebraMatrix m1(Context ctx, const char* expr) {
    AlgebraMatrix m(ctx, 1);
    m.at(0, 0) = parse_expression(expr, ctx);
    return m;
}

Form basis(Context ctx, FormBasis b) { return Form::basis_element(ctx, 1, b); }

} // namespace

TEST_CASE("exterior derivative basics") {
    Form dq2 = exterior_d(m1(heis, "q^2"));
    CHECK(dq2[FormBasis::dq] == m1(heis, "2*q"));
    CHECK(dq2[FormBasis::dp].is_zero());
    CHECK(exterior_d(m1(heis, "1")).is_zero());

    Form p_dq(heis, 1);
    p_dq[FormBasis::dq] = m1(heis, "p");
    Form d = exterior_d(p_dq);
    CHECK(d[FormBasis::dqdp] == m1(heis, "-1"));
}

TEST_CASE("d squared vanishes on random forms of every degree") {
    for (Context ctx : {heis, moyal})
        for (unsigned n : {1u, 2u})
            for (std::uint64_t trial = 0; trial < 20; ++trial) {
                auto rng = RandomSource::for_trial(8202, trial);
                for (unsigned deg = 0; deg < 3; ++deg) {
                    Form w = rng.homogeneous_form(ctx, n, deg, 4);
                    CHECK(exterior_d(exterior_d(w)).is_zero());
                }
            }
}

TEST_CASE("wedge basis relations") {
    Form dq = basis(heis, FormBasis::dq);
    Form dp = basis(heis, FormBasis::dp);
    CHECK(wedge(dq, dp) == basis(heis, FormBasis::dqdp));
    CHECK(wedge(dp, dq) == -basis(heis, FormBasis::dqdp));
    CHECK(wedge(dq, dq).is_zero());

    // (f dq) ^ (g dq) = 0
    Form f_dq(heis, 1);
    f_dq[FormBasis::dq] = m1(heis, "q^2 + p");
    Form g_dq(heis, 1);
    g_dq[FormBasis::dq] = m1(heis, "p^3");
    CHECK(wedge(f_dq, g_dq).is_zero());

    // (q dq) ^ (p dp) = qp dq dp with the backend product
    Form q_dq(heis, 1);
    q_dq[FormBasis::dq] = m1(heis, "q");
    Form p_dp(heis, 1);
    p_dp[FormBasis::dp] = m1(heis, "p");
    CHECK(wedge(q_dq, p_dp)[FormBasis::dqdp] == m1(heis, "q*p"));
}

TEST_CASE("graded leibniz rule") {
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            auto rng = RandomSource::for_trial(8203, trial);
            for (unsigned r = 0; r < 3; ++r) {
                Form w = rng.homogeneous_form(ctx, 2, r, 4);
                Form eta = rng.homogeneous_form(ctx, 2, rng.below(3), 4);
                Form rhs = wedge(exterior_d(w), eta);
                Form second = wedge(w, exterior_d(eta));
                if (r % 2)
                    rhs -= second;
                else
                    rhs += second;
                CHECK(exterior_d(wedge(w, eta)) == rhs);
            }
        }
}

TEST_CASE("star on the basis and on coefficients") {
    CHECK(star(basis(heis, FormBasis::dq), table) == basis(heis, FormBasis::dp));
    CHECK(star(basis(heis, FormBasis::dp), table) == basis(heis, FormBasis::dq));
    CHECK(star(basis(heis, FormBasis::one), table) == basis(heis, FormBasis::dqdp));
    CHECK(star(basis(heis, FormBasis::dqdp), table) == -basis(heis, FormBasis::one));

    Form q_dq(heis, 1);
    q_dq[FormBasis::dq] = m1(heis, "q");
    Form expect(heis, 1);
    expect[FormBasis::dp] = m1(heis, "q");
    CHECK(star(q_dq, table) == expect);

    Form f_dq(heis, 1);
    f_dq[FormBasis::dq] = m1(heis, "q*p + i*h");
    CHECK(star(star(f_dq, table), table) == f_dq); // eps_1 = 1
}

TEST_CASE("star covariance and dagger compatibility") {
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 25; ++trial) {
            auto rng = RandomSource::for_trial(8204, trial);
            unsigned r = rng.below(3);
            Form w = rng.homogeneous_form(ctx, 1, r, 4);
            AlgebraMatrix f = AlgebraMatrix::scalar(ctx, 1, rng.element(ctx, 4, 1, 1));
            CHECK(star(wedge(w, f), table) == wedge(dagger(f), star(w, table)));
            CHECK(dagger_form(star(w, table)) == star_inverse(dagger_form(w), table));
            // the consistency chain closes
            Form lhs = dagger_form(star(wedge(w, f), table));
            Form mid = wedge(star_inverse(dagger_form(w), table), f);
            Form rhs = star_inverse(dagger_form(wedge(w, f)), table);
            CHECK(lhs == mid);
            CHECK(mid == rhs);
            // d-dagger sign
            Form dd = dagger_form(exterior_d(w));
            Form expect = exterior_d(dagger_form(w));
            if (r % 2 == 0)
                expect = -expect;
            CHECK(dd == expect);
            // star star = eps_r
            Form twice = star(star(w, table), table);
            Form scaled = w;
            scaled.scale(table.eps[r]);
            CHECK(twice == scaled);
        }
}

TEST_CASE("dagger on form basis") {
    CHECK(dagger_form(basis(heis, FormBasis::dq)) == -basis(heis, FormBasis::dq));
    CHECK(dagger_form(basis(heis, FormBasis::dqdp)) == -basis(heis, FormBasis::dqdp));
    Form w(heis, 1);
    w[FormBasis::dq] = m1(heis, "q*p");
    w[FormBasis::dp] = m1(heis, "i*q");
    Form expect(heis, 1);
    expect[FormBasis::dq] = -dagger(m1(heis, "q*p"));
    expect[FormBasis::dp] = -dagger(m1(heis, "i*q"));
    CHECK(dagger_form(w) == expect);
}

TEST_CASE("modified symmetry and its chain") {
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 25; ++trial) {
            auto rng = RandomSource::for_trial(8205, trial);
            Form alpha = rng.one_form(ctx, 1, 4);
            Form beta = rng.one_form(ctx, 1, 4);
            Form rhs = wedge(beta, star(alpha, table));
            rhs.scale(table.eps[0]);
            CHECK(dagger_form(wedge(alpha, star(beta, table))) == rhs);

            AlgebraMatrix f = AlgebraMatrix::scalar(ctx, 1, rng.element(ctx, 3));
            Form betaf = wedge(beta, f);
            Form chain = wedge(betaf, star(alpha, table));
            chain.scale(table.eps[0]);
            CHECK(dagger_form(wedge(alpha, star(betaf, table))) == chain);
        }
}

TEST_CASE("inner product") {
    Form dq = basis(heis, FormBasis::dq);
    Form dp = basis(heis, FormBasis::dp);
    CHECK(inner_product(dq, dq, table) == AlgebraMatrix::identity(heis, 1));
    CHECK(inner_product(dq, dp, table).is_zero());
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        auto rng = RandomSource::for_trial(8206, trial);
        AlgebraMatrix f = AlgebraMatrix::scalar(heis, 1, rng.element(heis, 4, 1, 1));
        CHECK(inner_product(dq, wedge(dp, f), table) ==
              inner_product(wedge(dq, dagger(f)), dp, table));
        Form alpha = rng.one_form(heis, 1, 4);
        Form beta = rng.one_form(heis, 1, 4);
        CHECK(dagger(inner_product(alpha, beta, table)) ==
              inner_product(beta, alpha, table));
        CHECK(inner_product(wedge(f, alpha), beta, table) ==
              inner_product(alpha, beta, table) * dagger(f));
    }
    CHECK_THROWS_AS(inner_product(basis(heis, FormBasis::one), dq, table), Error);
}

TEST_CASE("form involution is an anti-homomorphism") {
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            auto rng = RandomSource::for_trial(8207, trial);
            Form w = rng.homogeneous_form(ctx, 2, rng.below(3), 4);
            Form eta = rng.homogeneous_form(ctx, 2, rng.below(3), 4);
            CHECK(dagger_form(wedge(w, eta)) ==
                  wedge(dagger_form(eta), dagger_form(w)));
        }
}

TEST_CASE("corrupted star table is detected") {
    HodgeTable bad = table;
    bad.target[static_cast<unsigned>(FormBasis::dq)] = FormBasis::dq; // star dq = dq
    CHECK(!bad.invertible());
    CHECK_THROWS_AS(bad.inverse(), Error);
    Form dp = basis(heis, FormBasis::dp);
    Form twice = star(star(dp, bad), bad);
    Form expect = dp;
    expect.scale(bad.eps[1]);
    CHECK(twice != expect); // eq. star star = eps_1 fails
}
