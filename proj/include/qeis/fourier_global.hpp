#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qeis/archimedean.hpp"
#include "qeis/arith_core.hpp"
#include "qeis/hermitian_model.hpp"
#include "qeis/siegel_local.hpp"

namespace qeis {

struct FourierCoefficient {
    GlobalVector T;
    BigInt norm;
    int rank = 2;
    BigRational rational;
    BigInt sigma;                          // rank 1 only
    std::map<long, SqrtPPoly> localPolys;  // rank 2 only
    std::optional<WhittakerEval> whittaker;
};

struct ConstantTerm {
    BigRational rational{1};
    std::string symbolic = "zetaE(l+1)/pi^(2l+1)";
    double numeric = 0;
    std::string basis = "[u1^l][u2^l]";
};

struct ExpansionTable {
    Params params;
    long D = 3;
    long bound = 1;
    long region = 1;  // N(a), N(b) <= region
    ConstantTerm constant;
    BigRational C_ell, D_nl;
    std::vector<FourierCoefficient> entries;
};

// Product over prime ideals of sum_{i <= v} q^{i l}.
BigInt sigma_E(const GlobalVector& T, int ell, const FieldE& F);

// (-1)^l 2^{2l+1} / (l!)^2
BigRational C_ell(int ell);
// (2l-n+2) 2^{2n+2} D^{l+1-n/2} / ((l!)^2 |B_{2l-n+2}| sigma_{l+1-n/2}(D))
BigRational D_nl(int n, int ell, long D);
// (l!)^2 |B_{2l-n+2}| sigma_{l+1-n/2}(D)
BigRational denominator_bound(int n, int ell, long D);
BigInt divisor_sigma(long k, long x);

FourierCoefficient rank1_coefficient(const GlobalVector& T, const Params& P, const FieldE& F);

struct Rank2Options {
    QOptions q;
    // |nu(m)|_{A_E} for m in M(A_f); T is then the transformed vector zT.h
    BigRational nu_abs{1};
    bool whittaker = false;
};
FourierCoefficient rank2_coefficient(const GlobalVector& T, const Params& P, const FieldE& F,
                                     const Rank2Options& opt = {});

// Lattice-preserving elements of M: T -> z T for a unit z, the swap (a,b) -> (b,a), and
// (a,b) -> (a, b + j sqrt(-D) a), which is unitary since j sqrt(-D) is trace-free.
GlobalVector scale_by_unit(const GlobalVector& T, const QuadInt& z, const FieldE& F);
GlobalVector swap_lines(const GlobalVector& T);
GlobalVector transvection(const GlobalVector& T, long j, const FieldE& F);

// zeta(s) L(s, chi_{-D}) with tail <= 1e-12.
double zeta_E(long D, int s);
ConstantTerm constant_term(const Params& P, const FieldE& F);

// Elements x of o_E with N(x) <= X, sorted by (x.x, x.y).
std::vector<QuadInt> elements_of_norm_at_most(const FieldE& F, long X);

struct ExpansionOptions {
    int workers = 0;
    long long budget = 0;  // 0: QEIS_BUDGET or 1e8 (shared with the oracle)
    bool oracle = false;
};
ExpansionTable full_expansion(const Params& P, const FieldE& F, long bound,
                              const ExpansionOptions& opt = {});

CheckResult denominator_bound_check(const ExpansionTable& table);

nlohmann::ordered_json to_json(const SqrtPPoly& q);
nlohmann::ordered_json to_json(const FourierCoefficient& c);
nlohmann::ordered_json to_json(const ExpansionTable& t);
std::string to_csv(const ExpansionTable& t);

}  // namespace qeis
