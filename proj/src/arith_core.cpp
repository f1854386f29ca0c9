#include "qeis/arith_core.hpp"

#include <algorithm>
#include <cstdlib>

namespace qeis {

int vp(const BigInt& x, long p) {
    if (x == 0) return kInfVal;
    BigInt y = abs(x);
    int v = 0;
    BigInt q, r;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) break;
        y = q;
        ++v;
    }
    return v;
}

int vp(const BigRational& x, long p) {
    if (x == 0) return kInfVal;
    return vp(BigInt(x.get_num()), p) - vp(BigInt(x.get_den()), p);
}

BigInt ipow(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

BigInt ipow(long b, unsigned long e) { return ipow(BigInt(b), e); }

BigRational rpow(long b, long e) {
    if (e >= 0) return BigRational(ipow(b, static_cast<unsigned long>(e)));
    return make_rational(1, ipow(b, static_cast<unsigned long>(-e)));
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

BigInt to_integer(const BigRational& x) {
    if (!is_integer(x)) throw ConsistencyError("expected an integer, got " + to_string(x));
    return x.get_num();
}

std::string to_string(const BigRational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

bool is_prime(long p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) > 0;
}

bool is_squarefree(long d) {
    if (d <= 0) return false;
    for (long q = 2; q * q <= d; ++q) {
        if (d % (q * q) == 0) return false;
    }
    return true;
}

std::vector<std::pair<long, int>> factorize(const BigInt& x) {
    if (x == 0) throw ValidationError("cannot factor zero");
    BigInt y = abs(x);
    std::vector<std::pair<long, int>> out;
    for (long q = 2; BigInt(q) * q <= y; ++q) {
        if (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(q))) {
            int e = 0;
            while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(q))) {
                y /= q;
                ++e;
            }
            out.emplace_back(q, e);
        }
        if (q > 100000000) throw ResourceError("factorization bound exceeded");
    }
    if (y > 1) {
        if (!y.fits_slong_p()) throw ResourceError("prime factor too large");
        out.emplace_back(y.get_si(), 1);
    }
    return out;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw ValidationError("element not invertible modulo " + m.get_str());
    return r;
}

BigInt mod_reduce(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigRational bernoulli(unsigned k) {
    std::vector<BigRational> B(k + 1);
    B[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        BigRational s = 0;
        for (unsigned j = 0; j < m; ++j) s += BigRational(binomial(m + 1, j)) * B[j];
        B[m] = -s / BigRational(m + 1);
        B[m].canonicalize();
    }
    return B[k];
}

BigInt ramanujan_sum(long p, int s, const BigInt& t) {
    if (s < 0) throw ValidationError("negative exponent in Ramanujan sum");
    if (s == 0) return 1;
    BigInt ps = ipow(p, s), ps1 = ipow(p, s - 1);
    int v = vp(t, p);
    if (v >= s) return ps - ps1;
    if (v == s - 1) return -ps1;
    return 0;
}

const char* to_string(SplitClass c) {
    switch (c) {
        case SplitClass::Split: return "split";
        case SplitClass::Inert: return "inert";
        case SplitClass::Ramified: return "ramified";
    }
    return "?";
}

void validate_discriminant(long D) {
    if (D <= 0 || D % 4 != 3 || !is_squarefree(D))
        throw ValidationError("D must be a squarefree positive integer with D = 3 mod 4, got " +
                              std::to_string(D));
}

SplitClass splitting_class(long D, long p) {
    validate_discriminant(D);
    if (!is_prime(p)) throw ValidationError("not a prime: " + std::to_string(p));
    if (D % p == 0) return SplitClass::Ramified;
    if (p == 2) {
        long r = ((-D) % 8 + 8) % 8;
        return r == 1 ? SplitClass::Split : SplitClass::Inert;
    }
    int leg = mpz_legendre(BigInt(-D).get_mpz_t(), BigInt(p).get_mpz_t());
    return leg == 1 ? SplitClass::Split : SplitClass::Inert;
}

BigRational pochhammer(const BigRational& a, unsigned n) {
    BigRational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= a + BigRational(i);
    return r;
}

BigRational hyp2f1_terminating(unsigned negA, const BigRational& b, const BigRational& c,
                               const BigRational& z) {
    BigRational sum = 0, term = 1;
    BigRational a = -BigRational(negA);
    for (unsigned j = 0; j <= negA; ++j) {
        sum += term;
        if (j == negA) break;
        BigRational den = (c + BigRational(j)) * BigRational(j + 1);
        if (den == 0) throw ValidationError("Pochhammer pole in terminating 2F1");
        term *= (a + BigRational(j)) * (b + BigRational(j)) * z / den;
    }
    return sum;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int IntPoly::degree() const { return static_cast<int>(c.size()) - 1; }

bool IntPoly::is_monic() const { return !c.empty() && c.back() == 1; }

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
}

bool IntPoly::satisfies_reflection(int s) const {
    if (degree() > s) return false;
    for (int i = 0; i <= s; ++i)
        if (coeff(i) != coeff(s - i)) return false;
    return true;
}

// ---------------------------------------------------------------- SeriesPoly

SeriesPoly::SeriesPoly(std::vector<BigRational> coeffs) : c(std::move(coeffs)) { normalize(); }

void SeriesPoly::normalize() {
    for (auto& x : c) x.canonicalize();
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int SeriesPoly::degree() const { return static_cast<int>(c.size()) - 1; }

BigRational SeriesPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
}

void SeriesPoly::add_term(int i, const BigRational& v) {
    if (i < 0) throw ConsistencyError("negative series index");
    if (static_cast<int>(c.size()) <= i) c.resize(i + 1, BigRational(0));
    c[i] += v;
    c[i].canonicalize();
}

SeriesPoly SeriesPoly::operator+(const SeriesPoly& o) const {
    SeriesPoly r = *this;
    for (int i = 0; i <= o.degree(); ++i) r.add_term(i, o.c[i]);
    r.normalize();
    return r;
}

SeriesPoly SeriesPoly::operator-(const SeriesPoly& o) const {
    SeriesPoly r = *this;
    for (int i = 0; i <= o.degree(); ++i) r.add_term(i, -o.c[i]);
    r.normalize();
    return r;
}

SeriesPoly SeriesPoly::operator*(const SeriesPoly& o) const {
    if (c.empty() || o.c.empty()) return {};
    std::vector<BigRational> r(c.size() + o.c.size() - 1, BigRational(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return SeriesPoly(std::move(r));
}

SeriesPoly SeriesPoly::divide_one_minus(const BigRational& a, int d) const {
    if (d <= 0) throw ValidationError("divisor degree must be positive");
    int n = degree();
    if (n < 0) return {};
    int qdeg = n - d;
    if (qdeg < 0) throw ConsistencyError("series not divisible: degree too small");
    std::vector<BigRational> q(qdeg + 1, BigRational(0));
    for (int i = 0; i <= qdeg; ++i) {
        q[i] = coeff(i);
        if (i >= d) q[i] += a * q[i - d];
        q[i].canonicalize();
    }
    SeriesPoly quot(q);
    SeriesPoly div;
    div.add_term(0, 1);
    div.add_term(d, -a);
    if (!(quot * div == *this)) throw ConsistencyError("series division left a nonzero remainder");
    return quot;
}

SeriesPoly SeriesPoly::scale_variable(const BigRational& lambda) const {
    SeriesPoly r = *this;
    BigRational f = 1;
    for (auto& x : r.c) {
        x *= f;
        f *= lambda;
    }
    r.normalize();
    return r;
}

// ---------------------------------------------------------------- SqrtPPoly

void SqrtPPoly::normalize() {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

int SqrtPPoly::degree() const { return static_cast<int>(d.size()) - 1; }

bool SqrtPPoly::is_monic() const { return !d.empty() && d.back() == 1; }

bool SqrtPPoly::satisfies_reflection() const {
    int n = degree();
    if (n < 0) return true;
    if (n % 2 != 0) return false;
    for (int i = 0; i <= n; ++i)
        if (d[i] != d[n - i]) return false;
    return true;
}

BigRational sqrtp_eval_halfint_rat(const SqrtPPoly& q, long twoE) {
    if (twoE % 2 == 0) throw ValidationError("evaluation exponent must be odd");
    BigRational sum = 0;
    for (int i = 0; i < static_cast<int>(q.d.size()); ++i) {
        if (q.d[i] == 0) continue;
        long num = static_cast<long>(i) * twoE + (i % 2);  // always even
        sum += BigRational(q.d[i]) * rpow(q.p, num / 2);
    }
    sum.canonicalize();
    return sum;
}

BigInt sqrtp_eval_halfint(const SqrtPPoly& q, long twoE) {
    if (twoE <= 0) throw ValidationError("evaluation exponent must be positive");
    BigRational v = sqrtp_eval_halfint_rat(q, twoE);
    if (!is_integer(v)) throw ConsistencyError("non-integral value of a local polynomial");
    return v.get_num();
}

}  // namespace qeis
