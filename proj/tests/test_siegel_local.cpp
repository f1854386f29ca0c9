#include <doctest.h>

#include "qeis/siegel_local.hpp"
#include "qeis/verify.hpp"

using namespace qeis;

namespace {
std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("terms against the oracle, small cases") {
    QuadShape s{3, 2, QuadForm::SplitHyperbolic};
    CHECK(term_unramified(1, {3, 0, 3, 0}, s) == term_oracle(1, {3, 0, 3, 0}, s));
    CHECK(term_unramified(1, {1, 0, 0, 0}, s) == term_oracle(1, {1, 0, 0, 0}, s));
    QuadShape r{3, 1, QuadForm::RamifiedNormal};
    for (const auto& eta : sample_etas(r, 6, 2, 11))
        for (int k = 0; k <= 2; ++k) CHECK(term_ramified(k, eta, r) == term_oracle(k, eta, r));
}

TEST_CASE("oracle budget") {
    QuadShape s{5, 2, QuadForm::SplitHyperbolic};
    OracleOptions o;
    o.budget = 100;
    CHECK_THROWS_AS(term_oracle(2, {1, 0, 5, 0}, s, o), ResourceError);
    OracleOptions d;
    CHECK(effective_budget(d) > 0);
}

TEST_CASE("sampled etas have the requested valuation") {
    QuadShape s{5, 2, QuadForm::SplitHyperbolic};
    auto v = sample_etas(s, 12, 3, 1);
    REQUIRE(v.size() == 12);
    for (size_t i = 0; i < v.size(); ++i) CHECK(vp(quad_value(v[i], s), 5) == static_cast<int>(i % 4));
}

TEST_CASE("P and R extraction") {
    QuadShape s{3, 2, QuadForm::SplitHyperbolic};
    for (const auto& eta : sample_etas(s, 8, 3, 5)) {
        int k = vp(quad_value(eta, s), 3);
        IntPoly P = extract_P(term_series(eta, s, k + 1, TermSource::ClosedForm), 2, 3);
        CHECK(P.degree() == k);
        CHECK(P.satisfies_reflection(k));
    }
    QuadShape r{5, 1, QuadForm::RamifiedNormal};
    for (const auto& eta : sample_etas(r, 8, 3, 5)) {
        auto inv = ramified_invariants(eta, r);
        IntPoly R = extract_R(term_series(eta, r, inv.k + 1, TermSource::ClosedForm), inv.k1, inv.k2, 1, 5);
        CHECK(R == R_closed_form(inv.k1, inv.k2, inv.k, 1, 5));
        CHECK(R.satisfies_reflection(inv.k + 1));
    }
}

TEST_CASE("literal R reading is not integral-consistent") {
    // At least one small shape separates the literal numerator from the extracted polynomial.
    bool differs = false;
    for (int k = 0; k <= 3 && !differs; ++k)
        for (int k1 = 0; k1 <= k && !differs; ++k1)
            for (int k2 : {k1, k1 + 1}) {
                if (k2 > k) continue;
                SeriesPoly a = R_closed_form_rational(k1, k2, k, 1, 3, RReading::Adopted);
                SeriesPoly l = R_closed_form_rational(k1, k2, k, 1, 3, RReading::Literal);
                if (!(a == l)) differs = true;
            }
    CHECK(differs);
}

TEST_CASE("local polynomials of the n = 2 model") {
    FieldE F(3);
    Params P{2, 3};
    QOptions o;
    o.oracle = true;
    SqrtPPoly q = q_poly(local_quadratic_data({{1, 0}, {1, 0}}, F, 2, P), o);
    CHECK(q.d == ints({1, 0, 1}));
    CHECK(sqrtp_eval_halfint(q, 2 * P.ell - 1) == 33);
    SqrtPPoly r = q_poly(local_quadratic_data({{3, 0}, {1, 0}}, F, 3, P), o);
    CHECK(r.satisfies_reflection());
    CHECK(r.is_monic());
    CHECK(r.degree() == 2);
    SqrtPPoly u = q_poly(local_quadratic_data({{1, 0}, {0, 1}}, F, 2, P));
    CHECK(u.d == ints({1}));
}

TEST_CASE("unit norm series") {
    FieldE F(7);
    Params P{2, 3};
    GlobalVector T{{1, 0}, {0, 1}};
    REQUIRE(norm(T, F) == 1);
    for (long p : {2L, 3L, 7L}) {
        auto d = local_quadratic_data(T, F, p, P);
        SeriesPoly want;
        want.add_term(0, 1);
        if (d.kind == SplitClass::Ramified)
            want.add_term(1, -rpow(p, 1));
        else
            want.add_term(2, -rpow(p, 2));
        CHECK(assemble_series(d) == want);
        CHECK(assemble_series(d, TermSource::Oracle) == want);
    }
}

TEST_CASE("hand-supplied local data for n = 6") {
    QuadVec eta(12, BigRational(0));
    eta[0] = 3;
    eta[6] = 3;
    auto d = local_data_from_coords(3, SplitClass::Inert, 6, eta);
    CHECK(d.k == 2);
    SqrtPPoly q = q_poly(d);
    CHECK(q.is_monic());
    CHECK(q.degree() == 4);
    CHECK(q.satisfies_reflection());
}
