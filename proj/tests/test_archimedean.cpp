#include <doctest.h>

#include <cmath>

#include "qeis/archimedean.hpp"

using namespace qeis;

TEST_CASE("bessel K") {
    CHECK(bessel_k(0, 2.0) == doctest::Approx(0.113893872750).epsilon(1e-10));
    CHECK(bessel_k(1, 2.0) == doctest::Approx(0.139865881817).epsilon(1e-10));
    // K_{v+1} = K_{v-1} + (2v/x) K_v
    for (double x : {0.01, 0.5, 3.7, 50.0, 600.0})
        for (int v = 1; v < 40; ++v) {
            double lhs = bessel_k(v + 1, x), rhs = bessel_k(v - 1, x) + 2.0 * v / x * bessel_k(v, x);
            CHECK(std::fabs(lhs - rhs) <= 1e-11 * lhs);
        }
    CHECK_THROWS_AS(bessel_k(-1, 1.0), ValidationError);
    CHECK_THROWS_AS(bessel_k(0, 1e-5), ValidationError);
    CHECK_THROWS_AS(bessel_k(41, 1.0), ValidationError);
}

TEST_CASE("whittaker vector at the identity") {
    FieldE F(3);
    GlobalVector T{{1, 0}, {1, 0}};
    auto b = beta_at_identity(T, F);
    CHECK(std::abs(b) == doctest::Approx(8 * M_PI));
    WhittakerEval w = whittaker_at(T, 3, F);
    CHECK(w.components.size() == 7);
    CHECK(std::abs(w.phase) == doctest::Approx(1.0));
    CHECK(std::abs(w.at(0)) == doctest::Approx(bessel_k(0, 8 * M_PI)).epsilon(1e-12));
    for (int v = 1; v <= 3; ++v) CHECK(std::abs(w.at(v)) == doctest::Approx(std::abs(w.at(-v))).epsilon(1e-12));
    GlobalVector S{{2, 1}, {-1, 3}};
    CHECK(std::abs(whittaker_at(S, 4, F).phase) == doctest::Approx(1.0));
}

TEST_CASE("archimedean constant") {
    CHECK(arch_constant(2, 3) == PiRational{BigRational(64, 135), 6});
    PiRational c = arch_constant(6, 7);
    CHECK(c.piPower == 10);
    CHECK(c.rational == make_rational(ipow(2, 23), factorial(7) * factorial(7) * factorial(9)));
}

TEST_CASE("center integral") {
    CHECK(gamma_integral_closed(1.0, 1.0, 0, 1) == doctest::Approx(M_PI));
    CHECK(gamma_integral_check(0.5, 2.0, 2, 4).pass);
    CHECK(gamma_integral_check(2.5, 0.3, 1, 3).pass);
    CHECK(gamma_integral_check(1.7, 1.1, 3, 5).pass);
}

TEST_CASE("polynomial identity") {
    CHECK(comb_lhs(1) == std::vector<BigRational>{16, -24});
    CHECK(comb_lhs(1) == comb_rhs(1));
    for (int l = 0; l <= 8; ++l) CHECK(comb_identity_check(l).pass);
}

TEST_CASE("F_0 two ways") {
    for (int l = 0; l <= 6; ++l)
        for (double A : {0.0, 0.7, 2.5})
            for (double B : {0.2, 1.0, 3.0})
                CHECK(f0_closed(A, B, l) == doctest::Approx(f0_double_sum(A, B, l)).epsilon(1e-12));
}

TEST_CASE("bessel sums") {
    // l = 1, C = 1: K_1(2) - K_2(2) = -K_0(2)
    CHECK(bessel_k(1, 2.0) - bessel_k(2, 2.0) == doctest::Approx(-0.1138938727).epsilon(1e-9));
    for (int l = 0; l <= 6; ++l)
        for (double C : {0.25, 1.0, 3.0}) CHECK(bessel_sum_check(l, C).pass);
}

TEST_CASE("rank one vanishing") {
    CHECK(rank1_alternating_sum(1) == 0);
    CHECK(planar_integral_closed(2, 1) == PiRational{BigRational(1, 12), 1});
    for (int l = 1; l <= 10; ++l) {
        CHECK(rank1_alternating_sum(l) == 0);
        for (int j = 0; j <= l; ++j) CHECK(rank1_vanishing_check(l, j).pass);
    }
}
