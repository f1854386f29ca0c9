#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qeis/arith_core.hpp"
#include "qeis/hermitian_model.hpp"

namespace qeis {

// r * pi^e
struct PiRational {
    BigRational rational;
    int piPower = 0;
    double value() const;
    bool operator==(const PiRational& o) const {
        return rational == o.rational && piPower == o.piPower;
    }
};

// K_v(x) for integer v >= 0, 1e-3 <= x <= 1e3, v <= 40.
double bessel_k(int v, double x);

struct WhittakerEval {
    int ell = 0;
    double beta_abs = 0;
    std::complex<double> phase{1, 0};
    std::vector<std::complex<double>> components;  // v = -ell..ell
    std::complex<double> at(int v) const { return components.at(v + ell); }
};

// beta_T(1) = 4 sqrt2 pi <u2, T>; omega embedded as (1 + i sqrt D)/2.
std::complex<double> beta_at_identity(const GlobalVector& T, const FieldE& F);
WhittakerEval whittaker_at(const GlobalVector& T, int ell, const FieldE& F);

// 2^{2l+n+3} / ((l!)^2 (2l-n+1)!) * pi^{2l-n+2}
PiRational arch_constant(int n, int ell);

struct CheckResult {
    bool pass = true;
    std::string detail;
};

// int_R (x^2+C)^m / (x^2+Dv)^nn dx
double gamma_integral_closed(double C, double Dv, int m, int nn);
double gamma_integral_numeric(double C, double Dv, int m, int nn);
CheckResult gamma_integral_check(double C, double Dv, int m, int nn, double rtol = 1e-9);

// Coefficients in z, lowest degree first, of the double sum and of its closed form.
std::vector<BigRational> comb_lhs(int ell);
std::vector<BigRational> comb_rhs(int ell);
// Exact: the polynomial identity, both Vandermonde-type sums for every r <= ell, and the
// terminating 2F1 at z = 1 form of the second sum.
CheckResult comb_identity_check(int ell);

// F_0 via the terminating 2F1 and via the double sum over c_{j,k}.
double f0_closed(double A, double B, int ell);
double f0_double_sum(double A, double B, int ell);

// sum_k (-1)^k C^{l+k} K_{l+k}(2C) / ((k!)^2 (l-k)!) against (-1)^l C^{2l} K_0(2C) / (l!)^2.
// Evaluated in 50-digit arithmetic; the sum cancels heavily for small C.
CheckResult bessel_sum_check(int ell, double C, double rtol = 1e-10);

// sum_j (-1)^j C(l,j)^2 (l-j)! (l+j-1)!
BigInt rank1_alternating_sum(int ell);
// int_C |w|^{2l-2j} / (1+|w|^2)^{2l+1} dA
double planar_integral_numeric(int ell, int j);
PiRational planar_integral_closed(int ell, int j);
CheckResult rank1_vanishing_check(int ell, int j, double rtol = 1e-9);

// Slow: the [u1^l][u2^l] coefficient of the archimedean integral at T (n = 2 model),
// by quadrature of F_0 against the character, angular parts done as Bessel J_0.
struct FourierIntegralResult {
    double value = 0;
    double error_estimate = 0;
};
FourierIntegralResult fourier_integral_I0(const GlobalVector& T, int ell, const FieldE& F);

}  // namespace qeis
