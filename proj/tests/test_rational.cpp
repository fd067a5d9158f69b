#include <doctest.h>

#include "nc/random_gen.hpp"
#include "nc/rational.hpp"

using namespace nc;

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(make_rational(1, 2), make_rational(3, 1));
    GaussianRational b(2, -1);
    CHECK((a + b) == GaussianRational(make_rational(5, 2), 2));
    CHECK((a * b) == GaussianRational(4, make_rational(11, 2)));
    CHECK(a.conj() == GaussianRational(make_rational(1, 2), -3));
    CHECK(a.conj().conj() == a);
    CHECK((a / a) == GaussianRational(1));
    CHECK((GaussianRational::i() * GaussianRational::i()) == GaussianRational(-1));
    CHECK_THROWS_AS(a / GaussianRational(), Error);
}

TEST_CASE("i powers") {
    CHECK(i_pow(0) == GaussianRational(1));
    CHECK(i_pow(1) == GaussianRational::i());
    CHECK(i_pow(2) == GaussianRational(-1));
    CHECK(i_pow(3) == -GaussianRational::i());
    CHECK(i_pow(7) == i_pow(3));
}

TEST_CASE("field laws on random samples") {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto rng = RandomSource::for_trial(411, trial);
        GaussianRational a = rng.coefficient();
        GaussianRational b = rng.coefficient();
        GaussianRational c = rng.coefficient();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a * a.inverse() == GaussianRational(1));
    }
}
