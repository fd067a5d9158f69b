#include <doctest.h>

#include "nc/print.hpp"
#include "nc/random_gen.hpp"
#include "oracles.hpp"

using namespace nc;

namespace {

const Context heis{Backend::heisenberg, 3};
const Context moyal{Backend::moyal, 3};

AlgebraElement Q(Context ctx) { return AlgebraElement::generator(ctx, Var::q); }
AlgebraElement P(Context ctx) { return AlgebraElement::generator(ctx, Var::p); }

AlgebraElement ihbar(Context ctx) {
    auto e = AlgebraElement::hbar(ctx);
    e.scale(GaussianRational::i());
    return e;
}

} // namespace

TEST_CASE("heisenberg defining relation") {
    auto q = Q(heis), p = P(heis);
    CHECK(mul(p, q) == mul(q, p) - ihbar(heis));
    CHECK(commutator(q, p) == ihbar(heis));
}

TEST_CASE("heisenberg p^2 q matches the rewriting oracle") {
    auto q = Q(heis), p = P(heis);
    auto lhs = mul(mul(p, p), q);
    // q p^2 - 2 i hbar p, worked out by hand
    auto expected = mul(q, mul(p, p));
    auto corr = p.shifted_params(1, 0);
    corr.scale(GaussianRational(0, -2));
    expected += corr;
    CHECK(lhs == expected);
    CHECK(lhs == test::oracle_heisenberg_mul(mul(p, p), q));
}

TEST_CASE("heisenberg product equals word-rewriting oracle on random inputs") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        auto rng = RandomSource::for_trial(7001, trial);
        auto f = rng.element(heis, 5, 1, 1);
        auto g = rng.element(heis, 5, 1, 1);
        CHECK(mul(f, g) == test::oracle_heisenberg_mul(f, g));
    }
}

TEST_CASE("moyal first-order products") {
    auto q = Q(moyal), p = P(moyal);
    auto qp = test::pointwise_mul(q, p);
    auto half_ihbar = AlgebraElement::hbar(moyal);
    half_ihbar.scale(GaussianRational(0, make_rational(1, 2)));
    CHECK(mul(q, p) == qp + half_ihbar);
    CHECK(mul(p, q) == qp - half_ihbar);
    CHECK(commutator(q, p) == ihbar(moyal));
}

TEST_CASE("moyal q^2 * p^2 expansion") {
    auto q = Q(moyal), p = P(moyal);
    auto q2 = mul(q, q), p2 = mul(p, p);
    // q^2 p^2 + 2 i hbar q p - hbar^2 / 2
    AlgebraElement expected(moyal);
    expected.add_term({2, 2}, ScalarPoly(1, 3));
    expected.add_term({1, 1}, ScalarPoly::monomial(GaussianRational(0, 2), {1, 0}, 3));
    expected.add_term({0, 0},
                      ScalarPoly::monomial(GaussianRational(make_rational(-1, 2)), {2, 0}, 3));
    CHECK(mul(q2, p2) == expected);
    CHECK(test::oracle_moyal_mul(q2, p2) == expected);
}

TEST_CASE("moyal product equals tensor-ladder oracle on random inputs") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        auto rng = RandomSource::for_trial(7002, trial);
        auto f = rng.element(moyal, 5, 1, 1);
        auto g = rng.element(moyal, 5, 1, 1);
        CHECK(mul(f, g) == test::oracle_moyal_mul(f, g));
    }
}

TEST_CASE("associativity on random triples") {
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 30; ++trial) {
            auto rng = RandomSource::for_trial(7003, trial);
            auto f = rng.element(ctx, 6);
            auto g = rng.element(ctx, 6);
            auto h = rng.element(ctx, 6);
            CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
        }
}

TEST_CASE("dagger examples") {
    auto q = Q(heis), p = P(heis);
    CHECK(dagger(mul(q, p)) == mul(q, p) - ihbar(heis)); // (qp)^dag = pq
    auto iq = Q(heis);
    iq.scale(GaussianRational::i());
    CHECK(dagger(iq) == -iq);
    // Moyal dagger is the identity on real-coefficient symbols
    AlgebraElement real_sym(moyal);
    real_sym.add_term({2, 1}, ScalarPoly(GaussianRational(make_rational(3, 2)), 3));
    real_sym.add_term({0, 3}, ScalarPoly(GaussianRational(-2), 3));
    CHECK(dagger(real_sym) == real_sym);
}

TEST_CASE("dagger is an anti-homomorphism and involution") {
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 30; ++trial) {
            auto rng = RandomSource::for_trial(7004, trial);
            auto f = rng.element(ctx, 5, 1, 1);
            auto g = rng.element(ctx, 5, 1, 1);
            CHECK(dagger(mul(f, g)) == mul(dagger(g), dagger(f)));
            CHECK(dagger(dagger(f)) == f);
        }
}

TEST_CASE("partial derivative examples and commutator route") {
    auto q = Q(heis), p = P(heis);
    CHECK(partial(mul(q, p), Var::q) == p);
    CHECK(partial(q, Var::p) == AlgebraElement::zero(heis));
    auto q2 = mul(q, q);
    auto two_q = q;
    two_q.scale(GaussianRational(2));
    CHECK(partial(q2, Var::q) == two_q);

    // [p, f] = -i hbar dq f and [q, f] = i hbar dp f
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 25; ++trial) {
            auto rng = RandomSource::for_trial(7005, trial);
            auto f = rng.element(ctx, 5, 1, 1);
            auto dq_route = partial(f, Var::q).shifted_params(1, 0);
            dq_route.scale(GaussianRational(0, -1));
            CHECK(commutator(P(ctx), f) == dq_route);
            auto dp_route = partial(f, Var::p).shifted_params(1, 0);
            dp_route.scale(GaussianRational::i());
            CHECK(commutator(Q(ctx), f) == dp_route);
        }
}

TEST_CASE("derivation rule") {
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 25; ++trial) {
            auto rng = RandomSource::for_trial(7006, trial);
            auto f = rng.element(ctx, 5);
            auto g = rng.element(ctx, 5);
            for (Var v : {Var::q, Var::p})
                CHECK(partial(mul(f, g), v) ==
                      mul(partial(f, v), g) + mul(f, partial(g, v)));
        }
}

TEST_CASE("antiderivative examples and right-inverse property") {
    auto q = Q(heis), p = P(heis);
    CHECK(antiderivative(p, Var::q) == mul(q, p));
    CHECK(antiderivative(AlgebraElement::zero(heis), Var::p) == AlgebraElement::zero(heis));
    auto two_q = q;
    two_q.scale(GaussianRational(2));
    CHECK(antiderivative(two_q, Var::q) == mul(q, q));
    for (Context ctx : {heis, moyal})
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            auto rng = RandomSource::for_trial(7007, trial);
            auto f = rng.element(ctx, 5, 1, 1);
            for (Var v : {Var::q, Var::p}) {
                auto g = antiderivative(f, v);
                CHECK(partial(g, v) == f);
                // no constant-in-direction part
                for (const auto& [m, c] : g.terms())
                    CHECK((v == Var::q ? m.q : m.p) > 0);
            }
        }
}

TEST_CASE("exp series") {
    CHECK(exp_series(GeneratorSeries(AlgebraElement::zero(heis))).first ==
          AlgebraElement::one(heis));

    Context k2{Backend::heisenberg, 2};
    auto iq = Q(k2);
    iq.scale(GaussianRational::i());
    auto [u, uinv] = exp_series(GeneratorSeries(iq));
    AlgebraElement expected(k2); // 1 + i t q - t^2 q^2 / 2
    expected.add_term({0, 0}, ScalarPoly(1, 2));
    expected.add_term({1, 0}, ScalarPoly::monomial(GaussianRational::i(), {0, 1}, 2));
    expected.add_term({2, 0},
                      ScalarPoly::monomial(GaussianRational(make_rational(-1, 2)), {0, 2}, 2));
    CHECK(u == expected);
    CHECK(dagger(u) == uinv);

    Context k4{Backend::heisenberg, 4};
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        auto rng = RandomSource::for_trial(7008, trial);
        GeneratorSeries x(rng.antihermitian(k4, 3));
        auto [uu, vv] = exp_series(x);
        CHECK(mul(uu, vv) == AlgebraElement::one(k4));
        CHECK(mul(vv, uu) == AlgebraElement::one(k4));
        CHECK(dagger(uu) == vv);
    }

    auto not_ah = Q(heis); // q is hermitean, not anti-hermitean
    CHECK_THROWS_AS(GeneratorSeries{not_ah}, Error);
}

TEST_CASE("context mixing is rejected") {
    Context other{Backend::heisenberg, 4};
    CHECK_THROWS_AS(mul(Q(heis), Q(moyal)), Error);
    CHECK_THROWS_AS(mul(Q(heis), Q(other)), Error);
    CHECK_THROWS_AS(Q(heis) + Q(other), Error);
}

TEST_CASE("moyal product terminates at min total degree") {
    auto rng = RandomSource(31);
    auto f = rng.element(moyal, 6);
    auto g = rng.element(moyal, 6);
    auto prod = mul(f, g);
    CHECK(prod.total_degree() <= f.total_degree() + g.total_degree());
}

TEST_CASE("t truncation is enforced by context") {
    Context k1{Backend::moyal, 1};
    auto t = AlgebraElement::t_param(k1);
    CHECK(mul(t, t).is_zero());
    auto q = AlgebraElement::generator(k1, Var::q);
    auto tq = mul(t, q);
    CHECK(mul(tq, t).is_zero());
}
