#include <doctest.h>

#include <cmath>
#include <random>

#include "qeis/fourier_global.hpp"
#include "qeis/sk_lift.hpp"

using namespace qeis;

TEST_CASE("ramanujan tau") {
    auto t = delta_tau(7);
    std::vector<long> want{1, -24, 252, -1472, 4830, -6048, -16744};
    for (int i = 1; i <= 7; ++i) CHECK(t[i] == want[i - 1]);
    EigenformData h = delta_eigenform();
    CHECK(h.weight == 12);
    CHECK(h.ap.at(47) == delta_tau(47)[47]);
}

TEST_CASE("satake parameters") {
    SatakeParam s = satake_from_eigenvalue(-24, 12, 2);
    CHECK(std::abs(std::abs(s.alpha) - 1.0) < 1e-12);
    CHECK(s.trace == doctest::Approx(-24.0 / std::pow(2.0, 5.5)));
    CHECK((s.alpha + 1.0 / s.alpha).real() == doctest::Approx(s.trace));
    SatakeParam z = satake_from_eigenvalue(0, 12, 5);
    CHECK(std::abs(z.alpha * z.alpha + 1.0) < 1e-12);
}

TEST_CASE("eigenvalue json") {
    auto h = eigenform_from_json(nlohmann::json::parse(R"({"weight": 12, "ap": {"2": -24, "3": 252}})"));
    CHECK(h.ap.at(3) == 252);
    CHECK_THROWS_AS(eigenform_from_json(nlohmann::json::parse(R"({"ap": {"2": -24}})")), ValidationError);
}

TEST_CASE("lift of Delta") {
    FieldE F(3);
    Params P{2, 6};
    EigenformData h = delta_eigenform();
    LiftValue v = lift_coefficient({{1, 0}, {1, 0}}, h, P, F);
    REQUIRE(v.exact);
    CHECK(v.rational == -24);
    CHECK(v.numeric.real() == doctest::Approx(-24.0));
    CHECK(lift_coefficient({{1, 0}, {0, 1}}, h, P, F).rational == 1);
    CHECK_THROWS_AS(lift_coefficient({{1, 0}, {1, 0}}, h, Params{2, 5}, F), ValidationError);
    EigenformData missing;
    missing.weight = 12;
    CHECK_THROWS_AS(lift_coefficient({{1, 0}, {1, 0}}, missing, P, F), ValidationError);
}

TEST_CASE("specializing to the Eisenstein eigenvalues recovers the coefficients") {
    FieldE F(3);
    for (int l : {3, 4, 5}) {
        Params P{2, l};
        EigenformData e;
        e.weight = 2 * l;
        for (long p = 2; p < 40; ++p)
            if (is_prime(p)) e.ap[p] = 1 + ipow(p, 2 * l - 1);
        ExpansionTable t = full_expansion(P, F, 12);
        for (const auto& c : t.entries) {
            if (c.rank != 2) continue;
            LiftValue v = lift_coefficient(c.T, e, P, F);
            CHECK(v.exact);
            CHECK(v.rational * t.D_nl == c.rational);
        }
    }
}

TEST_CASE("inverting Satake parameters") {
    FieldE F(3);
    Params P{2, 4};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> th(0, 2 * M_PI);
    auto el = elements_of_norm_at_most(F, 7);
    for (int trial = 0; trial < 5; ++trial) {
        std::map<long, std::complex<double>> a, ainv;
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            a[p] = std::polar(1.0, th(rng));
            ainv[p] = 1.0 / a[p];
        }
        for (size_t i = 0; i < el.size(); i += 4)
            for (size_t j = 0; j < el.size(); j += 7) {
                GlobalVector T{el[i], el[j]};
                if (norm(T, F) <= 0) continue;
                auto x = lift_coefficient_numeric(T, a, P, F), y = lift_coefficient_numeric(T, ainv, P, F);
                CHECK(std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x)));
            }
    }
}

TEST_CASE("palindromic laurent polynomials") {
    CHECK(laurent_palindromic(SqrtPPoly{2, {1, 0, 1}}));
    CHECK(laurent_palindromic(SqrtPPoly{3, {1, 1, 1}}));
    CHECK_FALSE(laurent_palindromic(SqrtPPoly{3, {1, 2, 3}}));
}

TEST_CASE("euler factors") {
    FieldE F(3);
    Params P{2, 6};
    EigenformData h = delta_eigenform();
    EulerFactor s = standard_L_factors(7, h, P, F), i = standard_L_factors(2, h, P, F),
                r = standard_L_factors(3, h, P, F);
    CHECK(s.kind == SplitClass::Split);
    CHECK(s.degree() == 8);
    CHECK(i.degree() == 8);
    CHECK(r.degree() == 4);
    auto poly = r.polynomial();
    REQUIRE(poly.size() == 5);
    CHECK(std::abs(poly[0] - 1.0) < 1e-14);
    CHECK(std::abs(poly[4] - 1.0) < 1e-12);
    for (const auto& g : s.bc_roots) CHECK(std::abs(std::abs(g) - 1.0) < 1e-12);
}
