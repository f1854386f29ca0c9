#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qeis/errors.hpp"

namespace qeis {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Valuation returned for zero.
inline constexpr int kInfVal = 1 << 28;

int vp(const BigInt& x, long p);
int vp(const BigRational& x, long p);
BigInt ipow(const BigInt& b, unsigned long e);
BigInt ipow(long b, unsigned long e);
BigRational rpow(long b, long e);  // b^e for any integer e
BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);   // 0 outside 0 <= k <= n
BigRational make_rational(const BigInt& num, const BigInt& den);
bool is_integer(const BigRational& x);
BigInt to_integer(const BigRational& x);  // throws ConsistencyError if not integral
std::string to_string(const BigRational& x);  // "num/den", or "num" when den = 1
std::string to_string(const BigInt& x);

bool is_prime(long p);
bool is_squarefree(long d);
// prime factorization of |x|, x != 0, ascending primes
std::vector<std::pair<long, int>> factorize(const BigInt& x);
BigInt mod_inverse(const BigInt& a, const BigInt& m);
BigInt mod_reduce(const BigInt& a, const BigInt& m);  // representative in [0, m)

// B_k with B_1 = -1/2.
BigRational bernoulli(unsigned k);

// Sum over units c mod p^s of exp(2 pi i c t / p^s).
BigInt ramanujan_sum(long p, int s, const BigInt& t);

enum class SplitClass { Split, Inert, Ramified };
const char* to_string(SplitClass c);

// Throws ValidationError unless D is squarefree, positive and D = 3 mod 4.
void validate_discriminant(long D);
SplitClass splitting_class(long D, long p);

// sum_{j=0}^{negA} (-negA)_j (b)_j / ((c)_j j!) z^j
BigRational hyp2f1_terminating(unsigned negA, const BigRational& b, const BigRational& c,
                               const BigRational& z);
BigRational pochhammer(const BigRational& a, unsigned n);

struct IntPoly {
    std::vector<BigInt> c;  // index = degree

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    void normalize();
    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }
    bool is_monic() const;
    BigInt coeff(int i) const;
    // X^s P(1/X) == P(X)
    bool satisfies_reflection(int s) const;
    bool operator==(const IntPoly& o) const { return c == o.c; }
    std::vector<BigInt> coefficients() const { return c; }
};

// Finite power series in t, rational coefficients.
struct SeriesPoly {
    std::vector<BigRational> c;

    SeriesPoly() = default;
    explicit SeriesPoly(std::vector<BigRational> coeffs);
    void normalize();
    int degree() const;
    BigRational coeff(int i) const;
    void add_term(int i, const BigRational& v);
    SeriesPoly operator+(const SeriesPoly& o) const;
    SeriesPoly operator-(const SeriesPoly& o) const;
    SeriesPoly operator*(const SeriesPoly& o) const;
    bool operator==(const SeriesPoly& o) const { return c == o.c; }
    // Exact quotient by (1 - a t^d); throws ConsistencyError on nonzero remainder.
    SeriesPoly divide_one_minus(const BigRational& a, int d) const;
    // f(t) -> f(lambda t)
    SeriesPoly scale_variable(const BigRational& lambda) const;
};

// Coefficient of X^i is d_i * p^{(i mod 2)/2}.
struct SqrtPPoly {
    long p = 2;
    std::vector<BigInt> d;
    bool zero_marker = false;  // vector outside the local lattice

    void normalize();
    int degree() const;
    bool is_monic() const;
    // X^{2k} Q(1/X) == Q(X) with 2k = degree
    bool satisfies_reflection() const;
    bool operator==(const SqrtPPoly& o) const {
        return p == o.p && d == o.d && zero_marker == o.zero_marker;
    }
};

// Exact value of q at X = p^{twoE/2}; twoE odd and positive.
BigInt sqrtp_eval_halfint(const SqrtPPoly& q, long twoE);
// Same for any odd twoE (possibly negative); rational result.
BigRational sqrtp_eval_halfint_rat(const SqrtPPoly& q, long twoE);

}  // namespace qeis
