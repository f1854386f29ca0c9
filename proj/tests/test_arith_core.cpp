#include <doctest.h>

#include "qeis/arith_core.hpp"

using namespace qeis;

TEST_CASE("valuations and powers") {
    CHECK(vp(BigInt(48), 2) == 4);
    CHECK(vp(BigRational(9, 8), 3) == 2);
    CHECK(vp(BigRational(9, 8), 2) == -3);
    CHECK(vp(BigInt(0), 5) == kInfVal);
    CHECK(rpow(3, -2) == BigRational(1, 9));
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(6) == 720);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(6) == BigRational(1, 42));
    CHECK(bernoulli(8) == BigRational(-1, 30));
    CHECK(bernoulli(12) == BigRational(-691, 2730));
    CHECK(bernoulli(7) == 0);
}

TEST_CASE("ramanujan sums") {
    CHECK(ramanujan_sum(3, 1, 0) == 2);
    CHECK(ramanujan_sum(3, 1, 1) == -1);
    CHECK(ramanujan_sum(2, 2, 2) == -2);
    CHECK(ramanujan_sum(5, 2, 1) == 0);
}

TEST_CASE("discriminants and splitting") {
    CHECK_NOTHROW(validate_discriminant(3));
    CHECK_NOTHROW(validate_discriminant(7));
    CHECK_THROWS_AS(validate_discriminant(4), ValidationError);
    CHECK_THROWS_AS(validate_discriminant(5), ValidationError);
    CHECK_THROWS_AS(validate_discriminant(27), ValidationError);
    CHECK(splitting_class(3, 3) == SplitClass::Ramified);
    CHECK(splitting_class(3, 2) == SplitClass::Inert);
    CHECK(splitting_class(3, 7) == SplitClass::Split);
    CHECK(splitting_class(3, 5) == SplitClass::Inert);
    CHECK(splitting_class(7, 2) == SplitClass::Split);
    CHECK(splitting_class(7, 3) == SplitClass::Inert);
    CHECK(splitting_class(11, 3) == SplitClass::Split);
}

TEST_CASE("factorization") {
    auto f = factorize(BigInt(-360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<long, int>{2, 3});
    CHECK(f[1] == std::pair<long, int>{3, 2});
    CHECK(f[2] == std::pair<long, int>{5, 1});
    CHECK(is_squarefree(15));
    CHECK_FALSE(is_squarefree(12));
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_reduce(-1, 7) == 6);
}

TEST_CASE("terminating hypergeometric") {
    // 2F1(-2, 1; 1; z) = (1-z)^2
    CHECK(hyp2f1_terminating(2, 1, 1, BigRational(1, 3)) == BigRational(4, 9));
    // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    BigRational b(7, 2), c(1);
    CHECK(hyp2f1_terminating(3, b, c, 1) == pochhammer(c - b, 3) / pochhammer(c, 3));
}

TEST_CASE("series division") {
    SeriesPoly s({1, 0, -9});
    SeriesPoly q = s.divide_one_minus(3, 1);
    CHECK(q == SeriesPoly({1, 3}));
    CHECK_THROWS_AS(SeriesPoly({1, 1}).divide_one_minus(1, 1), ConsistencyError);
    CHECK(SeriesPoly({1, 1}).scale_variable(2) == SeriesPoly({1, 2}));
}

TEST_CASE("int poly reflection") {
    IntPoly P({1, 3, 1});
    CHECK(P.satisfies_reflection(2));
    CHECK_FALSE(IntPoly({1, 2}).satisfies_reflection(1));
    CHECK(P.is_monic());
}

TEST_CASE("sqrt-p polynomials") {
    SqrtPPoly q{2, {1, 0, 1}};
    CHECK(q.is_monic());
    CHECK(q.satisfies_reflection());
    CHECK(sqrtp_eval_halfint(q, 5) == 33);
    SqrtPPoly r{3, {1, 1, 1}};  // 1 + sqrt3 X + X^2
    CHECK(r.satisfies_reflection());
    CHECK(sqrtp_eval_halfint(r, 5) == 1 + 27 + 243);
    CHECK(sqrtp_eval_halfint_rat(r, -1) == BigRational(7, 3));
}
