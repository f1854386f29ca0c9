#pragma once

#include <array>
#include <string>
#include <vector>

#include "qeis/arith_core.hpp"

namespace qeis {

// x + y*omega, omega = (1 + sqrt(-D))/2
struct QuadInt {
    BigInt x, y;
    bool operator==(const QuadInt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }
    bool is_zero() const { return x == 0 && y == 0; }
};

struct FieldE {
    long D;
    explicit FieldE(long D_);

    BigInt c() const { return BigInt((1 + D) / 4); }  // omega^2 = omega - c
    QuadInt add(const QuadInt& a, const QuadInt& b) const;
    QuadInt sub(const QuadInt& a, const QuadInt& b) const;
    QuadInt neg(const QuadInt& a) const;
    QuadInt mul(const QuadInt& a, const QuadInt& b) const;
    static QuadInt conj(const QuadInt& a);
    static BigInt trace(const QuadInt& a);
    BigInt norm(const QuadInt& a) const;
    std::vector<QuadInt> units() const;
    SplitClass split_class(long p) const { return splitting_class(D, p); }
    // sqrt(-D) = 2*omega - 1
    static QuadInt sqrt_minus_D() { return {BigInt(-1), BigInt(2)}; }
};

struct Params {
    int n = 2;
    int ell = 3;
    void validate() const;  // n = 2 mod 4, ell > n
};

// T = a c1 + b c2 in the hyperbolic plane over o_E, <c1,c2> = 1.
struct GlobalVector {
    QuadInt a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool operator==(const GlobalVector& o) const { return a == o.a && b == o.b; }
};

// Tr(a * conj(b))
BigInt norm(const GlobalVector& T, const FieldE& F);

struct PrimeIdealVal {
    long q;  // residue field size
    int v;
};
// One entry per prime ideal over p: split -> 2, inert/ramified -> 1.
std::vector<PrimeIdealVal> prime_ideal_valuation(const GlobalVector& T, const FieldE& F, long p);

// Coordinates (a_1..a_h, b_1..b_h) of a vector in a quadratic Z_p-lattice.
using QuadVec = std::vector<BigRational>;

struct LocalVectorData {
    long p = 2;
    SplitClass kind = SplitClass::Inert;
    int n = 2;
    int k = 0;
    int k1 = 0;
    int k2 = 0;
    bool in_lattice = true;
    // split: (T1 | T2) in the rank-2n hyperbolic lattice; inert: T in the rank-2n hyperbolic
    // lattice; ramified: T in the rank-2n normal form sum x_i y_i + p sum x_{i+m} y_{i+m}.
    QuadVec eta;
    QuadVec eta_div;  // ramified only: T / uniformizer
};

// Root of X^2 - X + (1+D)/4 modulo p^N for split p.
BigInt omega_root(long D, long p, int N);
BigInt sqrt_mod_prime(const BigInt& a, long p);

// Gram of the trace form Tr<,> in the basis c1, w c1, c2, w c2.
std::array<std::array<long, 4>, 4> natural_gram(const FieldE& F);
// Matrix A with normal coordinates = A * natural coordinates, for each splitting type.
// Split entries are integers modulo p^N; inert/ramified entries are exact rationals.
std::array<std::array<BigRational, 4>, 4> natural_to_normal(const FieldE& F, long p, int N);
// Gram of the normal form (split/inert: hyperbolic; ramified: diag(1,p) blocks), rank 4.
std::array<std::array<long, 4>, 4> normal_gram(SplitClass kind, long p);

// Natural coordinates (x_a, y_a, x_b, y_b).
std::array<BigInt, 4> natural_coords(const GlobalVector& T);
// Integer vector of Tr<T, b_j> (twisted = false) or omega-coefficient of <T, b_j> (twisted = true).
std::array<BigInt, 4> natural_character(const GlobalVector& T, const FieldE& F, bool twisted);

LocalVectorData local_quadratic_data(const GlobalVector& T, const FieldE& F, long p,
                                     const Params& P);

// Normal-form coordinates of T / w where w^2 = p*u, tr(w) = 0.
QuadVec divide_by_uniformizer(const QuadVec& eta, long p, const BigRational& u);

// Builds local data from hand-supplied normal-form coordinates (any even n).
// For ramified p, u fixes the uniformizer; the series only depend on valuations.
LocalVectorData local_data_from_coords(long p, SplitClass kind, int n, const QuadVec& eta,
                                       const BigRational& u = 1);

// QuadInt / GlobalVector serialization: [x,y] and [[ax,ay],[bx,by]]
std::string to_string(const QuadInt& z);
std::string to_string(const GlobalVector& T);

}  // namespace qeis
