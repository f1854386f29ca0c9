#include "qeis/archimedean.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <sstream>

namespace qeis {

namespace {

constexpr double kPi = 3.14159265358979323846;

double to_double(const BigRational& q) { return q.get_d(); }

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

CheckResult rel_compare(double got, double want, double rtol, const std::string& what) {
    CheckResult r;
    double err = std::fabs(got - want);
    double scale = std::fabs(want);
    r.pass = err <= rtol * scale;
    r.detail = what + ": " + fmt_double(got) + " vs " + fmt_double(want);
    return r;
}

}  // namespace

double PiRational::value() const { return to_double(rational) * std::pow(kPi, piPower); }

double bessel_k(int v, double x) {
    if (v < 0 || v > 40) throw ValidationError("bessel_k: order must lie in [0, 40]");
    if (!(x >= 1e-3 && x <= 1e3)) throw ValidationError("bessel_k: argument must lie in [1e-3, 1e3]");
    return boost::math::cyl_bessel_k(v, x);
}

std::complex<double> beta_at_identity(const GlobalVector& T, const FieldE& F) {
    QuadInt s = F.add(T.a, T.b);
    // conj(a + b) under omega -> (1 + i sqrt D)/2; <u2, T> = conj(a+b)/sqrt2
    double re = s.x.get_d() + s.y.get_d() / 2;
    double im = -s.y.get_d() * std::sqrt(static_cast<double>(F.D)) / 2;
    return 4.0 * kPi * std::complex<double>(re, im);
}

WhittakerEval whittaker_at(const GlobalVector& T, int ell, const FieldE& F) {
    if (ell < 0) throw ValidationError("negative weight");
    std::complex<double> beta = beta_at_identity(T, F);
    double b = std::abs(beta);
    if (b == 0) throw ValidationError("Whittaker function degenerate: <u2,T> = 0");
    WhittakerEval w;
    w.ell = ell;
    w.beta_abs = b;
    w.phase = b / beta;
    for (int v = -ell; v <= ell; ++v)
        w.components.push_back(std::pow(w.phase, v) * bessel_k(std::abs(v), b));
    return w;
}

PiRational arch_constant(int n, int ell) {
    if (ell <= n) throw ValidationError("arch_constant needs ell > n");
    BigInt num = ipow(2, 2 * ell + n + 3);
    BigInt f = factorial(ell);
    BigInt den = f * f * factorial(2 * ell - n + 1);
    return {make_rational(num, den), 2 * ell - n + 2};
}

// ---------------------------------------------------------------- gamma integral

double gamma_integral_closed(double C, double Dv, int m, int nn) {
    if (!(Dv > 0)) throw ValidationError("gamma integral needs D > 0");
    if (m < 0 || m >= nn) throw ValidationError("gamma integral needs 0 <= m < n");
    using boost::math::tgamma;
    double s = 0;
    for (int k = 0; k <= m; ++k)
        s += binomial(m, k).get_d() * std::pow(C / Dv, m - k) * tgamma(k + 0.5) *
             tgamma(nn - k - 0.5);
    return std::pow(Dv, m - nn + 0.5) / tgamma(static_cast<double>(nn)) * s;
}

double gamma_integral_numeric(double C, double Dv, int m, int nn) {
    if (!(Dv > 0)) throw ValidationError("gamma integral needs D > 0");
    if (m < 0 || m >= nn) throw ValidationError("gamma integral needs 0 <= m < n");
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [&](double x) {
        double q = x * x + Dv;
        return std::pow((x * x + C) / q, m) / std::pow(q, nn - m);
    };
    double err = 0;
    double v = integrator.integrate(f, 1e-15, &err);
    if (!std::isfinite(v)) throw NumericError("gamma integral quadrature did not converge");
    return 2 * v;
}

CheckResult gamma_integral_check(double C, double Dv, int m, int nn, double rtol) {
    return rel_compare(gamma_integral_numeric(C, Dv, m, nn), gamma_integral_closed(C, Dv, m, nn),
                       rtol, "gamma integral");
}

// ---------------------------------------------------------------- combinatorics

namespace {

BigRational cjk(int ell, int j, int k) {
    BigInt b = binomial(ell, k);
    BigInt num = b * b * binomial(k, j) * factorial(2 * j) * factorial(4 * ell - 2 * j);
    BigInt den = factorial(j) * factorial(2 * ell - j);
    return make_rational(num, den);
}

}  // namespace

std::vector<BigRational> comb_lhs(int ell) {
    if (ell < 0) throw ValidationError("negative weight");
    std::vector<BigRational> out(ell + 1, BigRational(0));
    for (int k = 0; k <= ell; ++k) {
        for (int j = 0; j <= k; ++j) {
            BigRational c = cjk(ell, j, k);
            // (-z)^{l-k} (1-z)^{k-j}
            for (int i = 0; i <= k - j; ++i) {
                int deg = ell - k + i;
                BigRational t = c * BigRational(binomial(k - j, i));
                if ((ell - k + i) % 2) t = -t;
                out[deg] += t;
            }
        }
    }
    for (auto& x : out) x.canonicalize();
    return out;
}

std::vector<BigRational> comb_rhs(int ell) {
    if (ell < 0) throw ValidationError("negative weight");
    std::vector<BigRational> out;
    for (int r = 0; r <= ell; ++r) {
        BigInt fr = factorial(r);
        BigInt num = ipow(2, 2 * ell - 2 * r) * factorial(2 * ell) * factorial(2 * ell + 2 * r);
        BigInt den = fr * fr * factorial(ell + r) * factorial(ell - r);
        BigRational v = make_rational(num, den);
        out.push_back(r % 2 ? -v : v);
    }
    return out;
}

CheckResult comb_identity_check(int ell) {
    CheckResult res;
    auto L = comb_lhs(ell), R = comb_rhs(ell);
    for (int r = 0; r <= ell; ++r) {
        if (L[r] != R[r]) {
            res.pass = false;
            res.detail = "z^" + std::to_string(r) + ": " + to_string(L[r]) + " vs " + to_string(R[r]);
            return res;
        }
    }
    // sum_{i=a}^{b} C(b,i) C(b-a,b-i) = C(2b-a,b)
    for (int b = 0; b <= 2 * ell; ++b) {
        for (int a = 0; a <= b; ++a) {
            BigInt s = 0;
            for (int i = a; i <= b; ++i) s += binomial(b, i) * binomial(b - a, b - i);
            if (s != binomial(2 * b - a, b)) {
                res.pass = false;
                res.detail = "Vandermonde (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
                return res;
            }
        }
    }
    const BigRational half = make_rational(1, 2);
    for (int r = 0; r <= ell; ++r) {
        BigRational s = 0;
        for (int i = 0; i <= ell - r; ++i)
            s += make_rational(binomial(2 * ell, i) * binomial(ell - r, i), binomial(4 * ell, 2 * i));
        BigRational want = make_rational(ipow(2, 2 * ell - 2 * r) * binomial(2 * ell + 2 * r, ell + r),
                                         binomial(4 * ell, 2 * ell));
        BigRational hyp = hyp2f1_terminating(ell - r, half, BigRational(-2 * ell) + half, 1);
        BigRational chu = pochhammer(BigRational(-2 * ell), ell - r) /
                          pochhammer(BigRational(-2 * ell) + half, ell - r);
        if (s != want || hyp != want || chu != want) {
            res.pass = false;
            res.detail = "binomial ratio sum at r=" + std::to_string(r) + ": " + to_string(s) +
                         " / " + to_string(hyp) + " / " + to_string(chu) + " vs " + to_string(want);
            return res;
        }
    }
    if (ell >= 1 && hyp2f1_terminating(ell, BigRational(ell), 1, 1) != 0) {
        res.pass = false;
        res.detail = "2F1(l,-l;1;1) nonzero";
        return res;
    }
    res.detail = "ok";
    return res;
}

// ---------------------------------------------------------------- F_0

double f0_closed(double A, double B, int ell) {
    if (!(A >= 0 && B >= 0 && A + B > 0)) throw ValidationError("f0 needs A, B >= 0, A + B > 0");
    long double z = B / (static_cast<long double>(A) + B);
    long double hyp = 0, term = 1;
    for (int r = 0; r <= ell; ++r) {
        hyp += term;
        term *= (r - ell) * (ell + 0.5L + r) * z / ((r + 1.0L) * (r + 1.0L));
    }
    long double f = static_cast<long double>(factorial(ell).get_d());
    long double pref = std::pow(2.0L, -2 * ell) * factorial(2 * ell).get_d() *
                       std::pow(static_cast<long double>(kPi), -2 * ell) / (f * f);
    return static_cast<double>(pref * std::pow(static_cast<long double>(A) + B, -ell - 0.5L) * hyp);
}

double f0_double_sum(double A, double B, int ell) {
    if (!(A >= 0 && B >= 0 && A + B > 0)) throw ValidationError("f0 needs A, B >= 0, A + B > 0");
    long double z = B / (static_cast<long double>(A) + B);
    long double s = 0;
    for (int k = 0; k <= ell; ++k)
        for (int j = 0; j <= k; ++j)
            s += static_cast<long double>(cjk(ell, j, k).get_d()) * std::pow(-z, ell - k) *
                 std::pow(1 - z, k - j);
    long double pref = std::pow(2.0L, -4 * ell) / factorial(2 * ell).get_d() *
                       std::pow(static_cast<long double>(kPi), -2 * ell);
    return static_cast<double>(pref * std::pow(static_cast<long double>(A) + B, -ell - 0.5L) * s);
}

// ---------------------------------------------------------------- Bessel sum

CheckResult bessel_sum_check(int ell, double C, double rtol) {
    if (ell < 0) throw ValidationError("negative weight");
    if (!(C >= 0.1 && C <= 10)) throw ValidationError("bessel_sum_check needs C in [0.1, 10]");
    using Real = boost::multiprecision::cpp_bin_float_50;
    Real c(C);
    Real s = 0;
    for (int k = 0; k <= ell; ++k) {
        Real fk(factorial(k).get_str()), fl(factorial(ell - k).get_str());
        Real t = pow(c, ell + k) * boost::math::cyl_bessel_k(ell + k, 2 * c) / (fk * fk * fl);
        s += (k % 2) ? Real(-t) : t;
    }
    Real fl(factorial(ell).get_str());
    Real rhs = pow(c, 2 * ell) * boost::math::cyl_bessel_k(0, 2 * c) / (fl * fl);
    if (ell % 2) rhs = -rhs;
    CheckResult r;
    r.pass = abs(s - rhs) <= Real(rtol) * abs(rhs);
    r.detail = "Bessel sum: " + s.str(20) + " vs " + rhs.str(20);
    return r;
}

// ---------------------------------------------------------------- rank-1 vanishing

BigInt rank1_alternating_sum(int ell) {
    if (ell < 1) throw ValidationError("needs ell >= 1");
    BigInt s = 0;
    for (int j = 0; j <= ell; ++j) {
        BigInt b = binomial(ell, j);
        BigInt t = b * b * factorial(ell - j) * factorial(ell + j - 1);
        s += (j % 2) ? BigInt(-t) : t;
    }
    return s;
}

PiRational planar_integral_closed(int ell, int j) {
    if (ell < 1 || j < 0 || j > ell) throw ValidationError("needs 0 <= j <= ell, ell >= 1");
    return {make_rational(factorial(ell - j) * factorial(ell + j - 1), factorial(2 * ell)), 1};
}

double planar_integral_numeric(int ell, int j) {
    if (ell < 1 || j < 0 || j > ell) throw ValidationError("needs 0 <= j <= ell, ell >= 1");
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [&](double r) {
        double q = 1 + r * r;
        return std::pow(r * r / q, ell - j) * r / std::pow(q, ell + j + 1);
    };
    double err = 0;
    double v = integrator.integrate(f, 1e-15, &err);
    if (!std::isfinite(v)) throw NumericError("planar integral quadrature did not converge");
    return 2 * kPi * v;
}

CheckResult rank1_vanishing_check(int ell, int j, double rtol) {
    CheckResult r = rel_compare(planar_integral_numeric(ell, j), planar_integral_closed(ell, j).value(),
                                rtol, "planar integral");
    BigInt s = rank1_alternating_sum(ell);
    if (s != 0) {
        r.pass = false;
        r.detail += "; alternating sum " + s.get_str();
    }
    return r;
}

// ---------------------------------------------------------------- Fourier integral

namespace {

// int_{s0}^{1} (1-s^2)^{m-1} ds with t0 = 1 - s0, expanded in t0 to avoid cancellation.
long double pm_integral(int m, long double t0) {
    long double s = 0;
    for (int i = 0; i < m; ++i) {
        long double c = binomial(m - 1, i).get_d() * std::pow(2.0L, m - 1 - i) / (m + i);
        s += ((i % 2) ? -c : c) * std::pow(t0, m + i);
    }
    return s;
}

// Integral of F_0 over the negative-definite line at |<v,u2>| = r, in closed form:
// the radial variable becomes u = 1 - <v,v>/2 and each term is an elementary integral.
long double radial_profile(int ell, long double r) {
    long double B = 2 * r * r;
    long double u0 = 1 - r * r / 2;
    long double R = std::sqrt(u0 * u0 + B);
    long double t0 = u0 > 0 ? B / (R * (R + u0)) : 1 - u0 / R;
    long double f = factorial(ell).get_d();
    long double pref = std::pow(2.0L, -2 * ell) * factorial(2 * ell).get_d() *
                       std::pow(static_cast<long double>(kPi), -2 * ell) / (f * f);
    long double s = 0, a = 1;
    for (int q = 0; q <= ell; ++q) {
        s += a * pm_integral(ell + q, t0);
        a *= (q - ell) * (ell + 0.5L + q) / ((q + 1.0L) * (q + 1.0L));
    }
    return pref * std::pow(B, -ell) * s;
}

}  // namespace

FourierIntegralResult fourier_integral_I0(const GlobalVector& T, int ell, const FieldE& F) {
    if (ell < 1) throw ValidationError("needs ell >= 1");
    if (T.a != T.b) throw ValidationError("Fourier integral implemented for T = a(c1 + c2) only");
    // Lebesgue measure on V0 in the orthonormal coordinates (u2, v1).
    // e^{-2 pi i (T,v)} = e^{-4 pi i Re(<T,u2> conj w)}: frequency 4 pi |<u2,T>| = |beta|/sqrt2
    double kappa = std::abs(beta_at_identity(T, F)) / std::sqrt(2.0);
    if (kappa == 0) throw ValidationError("T = 0");
    boost::math::quadrature::gauss_kronrod<double, 61> gk;
    auto g = [&](double r) {
        return static_cast<double>(radial_profile(ell, r)) * boost::math::cyl_bessel_j(0, kappa * r) * r;
    };
    double h = kPi / kappa;
    double total = 0, err = 0;
    const double rmax = 200;
    for (double lo = 0; lo < rmax; lo += h) {
        double e = 0;
        total += gk.integrate(g, lo, lo + h, 0, 0.0, &e);
        err += e;
    }
    // tail: |profile| decays like r^{-2l}, |J0| <= sqrt(2/(pi kappa r))
    double tail = std::fabs(static_cast<double>(radial_profile(ell, rmax))) * rmax *
                  std::sqrt(2 / (kPi * kappa * rmax)) * rmax / (2 * ell - 2);
    double c = 4 * kPi * kPi;
    return {c * total, c * (err + tail)};
}

}  // namespace qeis
