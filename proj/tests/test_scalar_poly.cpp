#include <doctest.h>

#include "nc/print.hpp"
#include "nc/scalar_poly.hpp"

using namespace nc;

TEST_CASE("scalar poly stores no zeros and truncates t") {
    ScalarPoly s(2);
    s.add_term({0, 0}, {1});
    s.add_term({0, 0}, {-1});
    CHECK(s.is_zero());
    s.add_term({0, 3}, {5}); // beyond K = 2
    CHECK(s.is_zero());
    s.add_term({4, 2}, {5}); // hbar is never truncated
    CHECK(!s.is_zero());
}

TEST_CASE("product truncates in t and is exact") {
    ScalarPoly t = ScalarPoly::monomial(1, {0, 1}, 2);
    ScalarPoly h = ScalarPoly::monomial(1, {1, 0}, 2);
    CHECK((t * t * t).is_zero());
    CHECK(!(h * h * h * h).is_zero());
    ScalarPoly a = ScalarPoly(GaussianRational(make_rational(1, 3)), 2) + t;
    ScalarPoly b = ScalarPoly(GaussianRational(3), 2) + t;
    ScalarPoly prod = a * b;
    CHECK(prod.coefficient({0, 0}) == GaussianRational(1));
    CHECK(prod.coefficient({0, 1}) == GaussianRational(make_rational(10, 3)));
    CHECK(prod.coefficient({0, 2}) == GaussianRational(1));
}

TEST_CASE("conj is an involution; t and hbar are real") {
    ScalarPoly s = ScalarPoly::monomial(GaussianRational(1, 2), {1, 1}, 3);
    CHECK(s.conj().conj() == s);
    CHECK(s.conj() == ScalarPoly::monomial(GaussianRational(1, -2), {1, 1}, 3));
}

TEST_CASE("slices and evaluation") {
    ScalarPoly s(3);
    s.add_term({1, 2}, {2});
    s.add_term({0, 1}, GaussianRational(0, 1));
    s.add_term({2, 0}, {-1});
    CHECK(s.t_slice(2) == ScalarPoly::monomial(2, {1, 0}, 3));
    CHECK(s.hbar_zero() == ScalarPoly::monomial(GaussianRational(0, 1), {0, 1}, 3));
    // at hbar = 1/2, t = 2: 2*(1/2)*4 + i*2 - 1*(1/4) = 15/4 + 2i
    CHECK(s.eval(make_rational(1, 2), 2) ==
          GaussianRational(make_rational(15, 4), 2));
}

TEST_CASE("order mixing throws") {
    ScalarPoly a(2), b(3);
    a.add_term({0, 0}, {1});
    b.add_term({0, 0}, {1});
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
}
