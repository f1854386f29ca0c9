#pragma once

#include <json.hpp>

#include <complex>
#include <map>
#include <vector>

#include "qeis/arith_core.hpp"
#include "qeis/hermitian_model.hpp"
#include "qeis/siegel_local.hpp"

namespace qeis {

struct EigenformData {
    int weight = 12;
    std::map<long, BigInt> ap;
};
// {"weight": w, "ap": {"2": -24, ...}}
EigenformData eigenform_from_json(const nlohmann::json& j);

// tau(1..N) from q prod (1 - q^k)^24; index 0 unused.
std::vector<BigInt> delta_tau(long N);
EigenformData delta_eigenform(long pmax = 50);

struct SatakeParam {
    long p = 2;
    std::complex<double> alpha;
    double trace = 0;  // alpha + 1/alpha = a_p p^{-(w-1)/2}
};
SatakeParam satake_from_eigenvalue(const BigInt& ap, int weight, long p);

struct LiftValue {
    bool exact = false;
    BigRational rational;  // valid when exact
    std::complex<double> numeric;
};

// norm^{l-(n-1)/2} prod_{p | norm} X^{-k} Q_{T,p}(X) at X = alpha_p; weight must be 2l-n+2.
LiftValue lift_coefficient(const GlobalVector& T, const EigenformData& h, const Params& P, const FieldE& F);
// Same with the Satake parameters given directly.
std::complex<double> lift_coefficient_numeric(const GlobalVector& T,
                                              const std::map<long, std::complex<double>>& alpha,
                                              const Params& P, const FieldE& F);

// X^{-k} Q(X) as a Laurent polynomial is invariant under X -> 1/X.
bool laurent_palindromic(const SqrtPPoly& q);

// Local factor of L(s, BC(pi_h)) prod_{i<n} zeta_E(s + (n-1)/2 - i) as reciprocal roots in X = p^{-s}.
struct EulerFactor {
    long p = 2;
    SplitClass kind = SplitClass::Split;
    std::vector<std::complex<double>> bc_roots;
    std::vector<std::complex<double>> zeta_roots;
    int degree() const { return static_cast<int>(bc_roots.size() + zeta_roots.size()); }
    // coefficients of prod (1 - gamma X), lowest degree first
    std::vector<std::complex<double>> polynomial() const;
};
EulerFactor standard_L_factors(long p, const EigenformData& h, const Params& P, const FieldE& F);

}  // namespace qeis
