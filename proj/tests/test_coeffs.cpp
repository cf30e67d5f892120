#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl3skein/coeffs.hpp"

#include <random>

using sl3::CoeffPoly;

namespace {

CoeffPoly q(long long n) { return CoeffPoly::q_pow(n); }

CoeffPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-12, 12), coef(-5, 5);
    CoeffPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += CoeffPoly::omega_half_pow(exp(rng), coef(rng));
    return p;
}

} // namespace

TEST_CASE("additive identities and cancellation") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        CoeffPoly x = random_poly(rng);
        CHECK(CoeffPoly() + x == x);
        CHECK((x - x).is_zero());
    }
    CHECK((q(1) + (-q(1))).is_zero());
    CHECK(CoeffPoly::q_pow_frac(-2, 3) + CoeffPoly::q_pow_frac(1, 3, 0) ==
          CoeffPoly::q_pow_frac(-2, 3));
}

TEST_CASE("products") {
    CHECK(CoeffPoly::omega_half_pow(3) * CoeffPoly::omega_half_pow(-3) == CoeffPoly(1));
    CHECK((q(1) - q(-1)) * CoeffPoly::quantum_integer(2) == q(2) - q(-2));
    // omega^{-21/2} * omega^{-24/2} = omega^{-45/2} = q^{-5/2}
    CHECK(CoeffPoly::q_pow_frac(-7, 6, -1) * CoeffPoly::q_pow_frac(-4, 3, -1) ==
          CoeffPoly::q_pow_frac(-5, 2));
}

TEST_CASE("quantum integers") {
    CHECK(CoeffPoly::quantum_integer(1) == CoeffPoly(1));
    CHECK(CoeffPoly::quantum_integer(2) == q(1) + q(-1));
    CHECK(CoeffPoly::quantum_integer(3) == q(2) + CoeffPoly(1) + q(-2));
    // (q^n - q^-n) = [n]_q (q - q^-1)
    for (int n = 1; n <= 6; ++n)
        CHECK(CoeffPoly::quantum_integer(n) * (q(1) - q(-1)) == q(n) - q(-n));
}

TEST_CASE("star involution and homomorphism") {
    CHECK(CoeffPoly(1).star() == CoeffPoly(1));
    CHECK(CoeffPoly::omega_half_pow(3).star() == CoeffPoly::omega_half_pow(-3));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        CoeffPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.star().star() == a);
        CHECK((a + b).star() == a.star() + b.star());
        CHECK((a * b).star() == a.star() * b.star());
    }
}

TEST_CASE("evaluation") {
    CHECK(CoeffPoly::quantum_integer(3).eval(1.0) == doctest::Approx(3.0));
    CHECK(CoeffPoly::omega_half_pow(3).eval(1.0) == doctest::Approx(1.0));
    double w = 1.17;
    CHECK(q(1).eval(w) == doctest::Approx(std::pow(w, 18)));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        CoeffPoly a = random_poly(rng), b = random_poly(rng);
        for (double x : {0.5, 1.0, 1.3}) {
            CHECK((a * b).eval(x) == doctest::Approx(a.eval(x) * b.eval(x)));
            CHECK((a + b).eval(x) == doctest::Approx(a.eval(x) + b.eval(x)));
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        CoeffPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("text form and parsing") {
    CHECK(CoeffPoly().str() == "0");
    CHECK((q(2) + CoeffPoly(1) + q(-2)).str() == "q^{-2} + 1 + q^2");
    CHECK(CoeffPoly::q_pow_frac(-7, 6, -1).str() == "-q^{-7/6}");
    CHECK(CoeffPoly::parse("q^{-2} + 1 + q^2").value() == q(-2) + CoeffPoly(1) + q(2));
    CHECK(CoeffPoly::parse("w^{3/2}").value() == CoeffPoly::omega_half_pow(3));
    CHECK(CoeffPoly::parse("w^3").value() == CoeffPoly::omega_half_pow(6));
    CHECK(CoeffPoly::parse("-2*q^{1/3} + q").value() ==
          CoeffPoly::q_pow_frac(1, 3, -2) + q(1));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        CoeffPoly a = random_poly(rng);
        auto back = CoeffPoly::parse(a.str());
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
}
