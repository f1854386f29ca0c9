#include "qeis/hermitian_model.hpp"

#include <algorithm>

namespace qeis {

FieldE::FieldE(long D_) : D(D_) { validate_discriminant(D); }

QuadInt FieldE::add(const QuadInt& a, const QuadInt& b) const { return {a.x + b.x, a.y + b.y}; }
QuadInt FieldE::sub(const QuadInt& a, const QuadInt& b) const { return {a.x - b.x, a.y - b.y}; }
QuadInt FieldE::neg(const QuadInt& a) const { return {-a.x, -a.y}; }

QuadInt FieldE::mul(const QuadInt& a, const QuadInt& b) const {
    BigInt yy = a.y * b.y;
    return {a.x * b.x - c() * yy, a.x * b.y + a.y * b.x + yy};
}

QuadInt FieldE::conj(const QuadInt& a) { return {a.x + a.y, -a.y}; }

BigInt FieldE::trace(const QuadInt& a) { return 2 * a.x + a.y; }

BigInt FieldE::norm(const QuadInt& a) const { return a.x * a.x + a.x * a.y + c() * a.y * a.y; }

std::vector<QuadInt> FieldE::units() const {
    std::vector<QuadInt> u{{1, 0}, {-1, 0}};
    if (D == 3) {
        u.push_back({0, 1});
        u.push_back({0, -1});
        u.push_back({-1, 1});
        u.push_back({1, -1});
    }
    return u;
}

void Params::validate() const {
    if (n <= 0 || n % 4 != 2) throw ValidationError("n must be positive and = 2 mod 4");
    if (ell <= n) throw ValidationError("ell must exceed n");
}

BigInt norm(const GlobalVector& T, const FieldE& F) {
    return FieldE::trace(F.mul(T.a, FieldE::conj(T.b)));
}

BigInt sqrt_mod_prime(const BigInt& a_in, long p) {
    BigInt P(p);
    BigInt a = mod_reduce(a_in, P);
    if (a == 0) return 0;
    if (p == 2) return a;
    if (mpz_legendre(a.get_mpz_t(), P.get_mpz_t()) != 1)
        throw ValidationError("no square root modulo " + std::to_string(p));
    // Tonelli-Shanks
    BigInt Q = P - 1;
    long S = 0;
    while (mpz_even_p(Q.get_mpz_t())) {
        Q /= 2;
        ++S;
    }
    BigInt z = 2;
    while (mpz_legendre(z.get_mpz_t(), P.get_mpz_t()) != -1) ++z;
    BigInt M = S, c, t, R, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), Q.get_mpz_t(), P.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), Q.get_mpz_t(), P.get_mpz_t());
    e = (Q + 1) / 2;
    mpz_powm(R.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
    while (t != 1) {
        long i = 0;
        BigInt tt = t;
        while (tt != 1) {
            tt = tt * tt % P;
            ++i;
        }
        BigInt b = c;
        for (long j = 0; j < M.get_si() - i - 1; ++j) b = b * b % P;
        M = i;
        c = b * b % P;
        t = t * c % P;
        R = R * b % P;
    }
    return R;
}

BigInt omega_root(long D, long p, int N) {
    if (splitting_class(D, p) != SplitClass::Split) throw ValidationError("prime is not split");
    BigInt c((1 + D) / 4);
    BigInt P(p);
    BigInt rho;
    if (p == 2) {
        rho = 0;  // X^2 - X + c with c even: roots 0, 1 mod 2
    } else {
        BigInt s = sqrt_mod_prime(BigInt(-D), p);
        rho = mod_reduce((1 + s) * mod_inverse(2, P), P);
    }
    BigInt mod = ipow(p, static_cast<unsigned long>(N));
    // Newton iteration; f'(rho) = 2 rho - 1 is a unit since p does not divide D
    for (int it = 0; it < 2 * N + 4; ++it) {
        BigInt f = mod_reduce(rho * rho - rho + c, mod);
        if (f == 0) break;
        rho = mod_reduce(rho - f * mod_inverse(2 * rho - 1, mod), mod);
    }
    if (mod_reduce(rho * rho - rho + c, mod) != 0) throw ConsistencyError("Hensel lift failed");
    return rho;
}

namespace {

int vp_quadint(const QuadInt& z, const FieldE& F, long p, SplitClass kind, int which) {
    if (z.is_zero()) return kInfVal;
    BigInt N = F.norm(z);
    int vn = vp(N, p);
    switch (kind) {
        case SplitClass::Inert: return vn / 2;
        case SplitClass::Ramified: return vn;
        case SplitClass::Split: {
            BigInt rho = omega_root(F.D, p, vn + 2);
            if (which == 1) rho = 1 - rho;
            return std::min(vp(BigInt(z.x + z.y * rho), p), vn);
        }
    }
    return 0;
}

int vec_val(const QuadVec& v, long p, size_t from, size_t to) {
    int m = kInfVal;
    for (size_t i = from; i < to; ++i) m = std::min(m, vp(v[i], p));
    return m;
}

BigRational normal_q(const QuadVec& eta, SplitClass kind, long p) {
    size_t h = eta.size() / 2;
    BigRational q = 0;
    for (size_t i = 0; i < h; ++i) {
        BigRational term = eta[i] * eta[h + i];
        if (kind == SplitClass::Ramified && i >= h / 2) term *= p;
        q += term;
    }
    return q;
}

}  // namespace

std::vector<PrimeIdealVal> prime_ideal_valuation(const GlobalVector& T, const FieldE& F, long p) {
    if (T.is_zero()) throw ValidationError("zero vector has no valuation");
    SplitClass kind = F.split_class(p);
    if (kind == SplitClass::Split) {
        std::vector<PrimeIdealVal> out;
        for (int w = 0; w < 2; ++w) {
            int v = std::min(vp_quadint(T.a, F, p, kind, w), vp_quadint(T.b, F, p, kind, w));
            out.push_back({p, v});
        }
        return out;
    }
    int v = std::min(vp_quadint(T.a, F, p, kind, 0), vp_quadint(T.b, F, p, kind, 0));
    long q = kind == SplitClass::Inert ? p * p : p;
    return {{q, v}};
}

std::array<std::array<long, 4>, 4> natural_gram(const FieldE& F) {
    long c2 = (1 + F.D) / 2;
    return {{{0, 0, 2, 1}, {0, 0, 1, c2}, {2, 1, 0, 0}, {1, c2, 0, 0}}};
}

std::array<std::array<long, 4>, 4> normal_gram(SplitClass kind, long p) {
    long s = kind == SplitClass::Ramified ? p : 1;
    return {{{0, 0, 1, 0}, {0, 0, 0, s}, {1, 0, 0, 0}, {0, s, 0, 0}}};
}

std::array<std::array<BigRational, 4>, 4> natural_to_normal(const FieldE& F, long p, int N) {
    SplitClass kind = F.split_class(p);
    std::array<std::array<BigRational, 4>, 4> A;
    for (auto& row : A) row.fill(BigRational(0));
    switch (kind) {
        case SplitClass::Inert: {
            A[0][0] = 1;
            A[1][1] = 1;
            A[2][2] = 2;
            A[2][3] = 1;
            A[3][2] = 1;
            A[3][3] = BigRational(2 * F.c());
            break;
        }
        case SplitClass::Split: {
            BigInt rho = omega_root(F.D, p, N);
            BigInt mod = ipow(p, static_cast<unsigned long>(N));
            BigInt rho2 = mod_reduce(1 - rho, mod);
            // (a1, b1 | b2, a2)
            A[0][0] = 1;
            A[0][1] = BigRational(rho);
            A[1][2] = 1;
            A[1][3] = BigRational(rho);
            A[2][2] = 1;
            A[2][3] = BigRational(rho2);
            A[3][0] = 1;
            A[3][1] = BigRational(rho2);
            break;
        }
        case SplitClass::Ramified: {
            BigRational u = make_rational(-F.D, p);
            A[0][0] = 1;
            A[0][1] = make_rational(1, 2);
            A[1][1] = make_rational(1, 2);
            A[2][2] = 2;
            A[2][3] = 1;
            A[3][3] = -u;
            break;
        }
    }
    return A;
}

std::array<BigInt, 4> natural_coords(const GlobalVector& T) { return {T.a.x, T.a.y, T.b.x, T.b.y}; }

std::array<BigInt, 4> natural_character(const GlobalVector& T, const FieldE& F, bool twisted) {
    QuadInt one{1, 0}, om{0, 1};
    // <T, w c1> = b conj(w), <T, w c2> = a conj(w)
    std::array<QuadInt, 4> z = {F.mul(T.b, FieldE::conj(one)), F.mul(T.b, FieldE::conj(om)),
                                F.mul(T.a, FieldE::conj(one)), F.mul(T.a, FieldE::conj(om))};
    std::array<BigInt, 4> out;
    for (int j = 0; j < 4; ++j) out[j] = twisted ? z[j].y : FieldE::trace(z[j]);
    return out;
}

QuadVec divide_by_uniformizer(const QuadVec& eta, long p, const BigRational& u) {
    size_t h = eta.size() / 2;
    if (eta.size() % 4 != 0) throw ValidationError("ramified normal form needs rank divisible by 4");
    size_t m = h / 2;
    QuadVec out(eta.size());
    BigRational pu = BigRational(p) * u;
    for (size_t i = 0; i < m; ++i) {
        out[i] = eta[i + m];
        out[i + m] = eta[i] / pu;
        out[h + i] = -eta[h + i + m] / u;
        out[h + i + m] = -eta[h + i] / BigRational(p);
    }
    for (auto& x : out) x.canonicalize();
    return out;
}

LocalVectorData local_data_from_coords(long p, SplitClass kind, int n, const QuadVec& eta,
                                       const BigRational& u) {
    if (!is_prime(p)) throw ValidationError("not a prime");
    if (n <= 0 || n % 2 != 0) throw ValidationError("n must be even");
    if (static_cast<int>(eta.size()) != 2 * n) throw ValidationError("expected 2n coordinates");
    LocalVectorData d;
    d.p = p;
    d.kind = kind;
    d.n = n;
    d.eta = eta;
    for (auto& x : d.eta) x.canonicalize();
    BigRational q = normal_q(d.eta, kind, p);
    if (q == 0) throw ValidationError("vector is isotropic");
    d.k = vp(q, p);
    size_t h = eta.size() / 2;
    switch (kind) {
        case SplitClass::Inert:
            d.k1 = d.k2 = vec_val(d.eta, p, 0, eta.size());
            d.in_lattice = d.k1 >= 0;
            break;
        case SplitClass::Split: {
            d.k1 = vec_val(d.eta, p, 0, h);
            d.k2 = vec_val(d.eta, p, h, eta.size());
            d.in_lattice = d.k1 >= 0 && d.k2 >= 0;
            break;
        }
        case SplitClass::Ramified: {
            if (n % 2 != 0 || eta.size() % 4 != 0) throw ValidationError("ramified case needs n even");
            size_t m = h / 2;
            QuadVec e1, e2;
            for (size_t i = 0; i < m; ++i) {
                e1.push_back(d.eta[i]);
                e2.push_back(d.eta[i + m]);
            }
            for (size_t i = 0; i < m; ++i) {
                e1.push_back(d.eta[h + i]);
                e2.push_back(d.eta[h + i + m]);
            }
            int v1 = vec_val(e1, p, 0, e1.size()), v2 = vec_val(e2, p, 0, e2.size());
            d.k1 = std::min(v1, v2);
            d.k2 = std::min(v1, v2 == kInfVal ? kInfVal : v2 + 1);
            d.in_lattice = d.k1 >= 0;
            d.eta_div = divide_by_uniformizer(d.eta, p, u);
            break;
        }
    }
    return d;
}

LocalVectorData local_quadratic_data(const GlobalVector& T, const FieldE& F, long p,
                                     const Params& P) {
    if (P.n != 2) throw ValidationError("the global lattice model is only available for n = 2");
    BigInt nm = norm(T, F);
    if (nm == 0) throw ValidationError("local data requires a non-isotropic vector");
    int k = vp(nm, p);
    int N = 2 * k + 6;
    SplitClass kind = F.split_class(p);
    auto A = natural_to_normal(F, p, N);
    auto x = natural_coords(T);
    QuadVec eta(4);
    BigInt mod = ipow(p, static_cast<unsigned long>(N));
    for (int i = 0; i < 4; ++i) {
        BigRational s = 0;
        for (int j = 0; j < 4; ++j) s += A[i][j] * BigRational(x[j]);
        s.canonicalize();
        if (kind == SplitClass::Split) s = BigRational(mod_reduce(s.get_num(), mod));
        eta[i] = s;
    }
    BigRational u = kind == SplitClass::Ramified ? make_rational(-F.D, p) : BigRational(1);
    LocalVectorData d = local_data_from_coords(p, kind, 2, eta, u);
    if (d.k != k) throw ConsistencyError("local norm valuation disagrees with the global norm");
    if (kind == SplitClass::Ramified && !(d.k2 == d.k1 || d.k2 == d.k1 + 1))
        throw ConsistencyError("ramified invariants out of range");
    return d;
}

std::string to_string(const QuadInt& z) { return "[" + z.x.get_str() + "," + z.y.get_str() + "]"; }

std::string to_string(const GlobalVector& T) {
    return "[" + to_string(T.a) + "," + to_string(T.b) + "]";
}

}  // namespace qeis
