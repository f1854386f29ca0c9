#pragma once

#include <vector>

#include "qeis/arith_core.hpp"
#include "qeis/hermitian_model.hpp"

namespace qeis {

enum class QuadForm { SplitHyperbolic, RamifiedNormal };

struct QuadShape {
    long p = 3;
    int m = 1;
    QuadForm form = QuadForm::SplitHyperbolic;
    int rank() const { return form == QuadForm::SplitHyperbolic ? 2 * m : 4 * m; }
    std::vector<std::vector<long>> gram() const;  // Gram of the polarization (eta, x)
};

BigRational quad_value(const QuadVec& eta, const QuadShape& shape);

struct RamifiedInvariants {
    int k1, k2, k;
};
RamifiedInvariants ramified_invariants(const QuadVec& eta, const QuadShape& shape);

struct OracleOptions {
    long long budget = 0;  // 0: QEIS_BUDGET or 1e8
    int workers = 0;       // 0: hardware concurrency
};
long long effective_budget(const OracleOptions& opt);

// Sum over y mod p^r with q(y) = 0 mod p^r of exp(2 pi i (lambda . y) / p^r), q(y) = y^T G y / 2.
BigInt exp_sum_oracle(const std::vector<std::vector<long>>& gram, const std::vector<BigInt>& lambda,
                      long p, int r, const OracleOptions& opt = {});

// Split-case building block on (Z/p^r1)^n x (Z/p^r2)^n, see assemble_series.
BigInt split_pair_oracle(const std::vector<BigInt>& T1, const std::vector<BigInt>& T2, long p,
                         int r1, int r2, const OracleOptions& opt = {});

BigRational term_unramified(int r, const QuadVec& eta, const QuadShape& shape);
BigRational term_ramified(int r, const QuadVec& eta, const QuadShape& shape);
BigRational term_oracle(int r, const QuadVec& eta, const QuadShape& shape,
                        const OracleOptions& opt = {});

// Sum_r B_r t^r (or C_r) over r <= rmax using the given term source.
enum class TermSource { ClosedForm, Oracle };
SeriesPoly term_series(const QuadVec& eta, const QuadShape& shape, int rmax, TermSource src,
                       const OracleOptions& opt = {});

// Unitary local series in t = p^{-s}.
SeriesPoly assemble_series(const LocalVectorData& data, TermSource src = TermSource::ClosedForm,
                           const OracleOptions& opt = {});

// Independent oracle in the natural o_E-coordinates of the n = 2 model (inert and ramified p).
SeriesPoly natural_oracle_series(const GlobalVector& T, const FieldE& F, long p,
                                 const OracleOptions& opt = {});

// S(t) = (1 - p^{m-1} t) P(p^m t)
IntPoly extract_P(const SeriesPoly& series, int m, long p);
// S(t) - sum_{r<=k2} p^{r(4m-1)} t^r + p^{3m-1} t sum_{r<=k1} p^{r(4m-1)} t^r = (1 - p^{2m-1} t) R(p^{2m} t)
IntPoly extract_R(const SeriesPoly& series, int k1, int k2, int m, long p);

enum class RReading { Adopted, Literal };
// Rational coefficients so that the literal reading can be inspected.
SeriesPoly R_closed_form_rational(int k1, int k2, int k, int m, long p,
                                  RReading reading = RReading::Adopted);
IntPoly R_closed_form(int k1, int k2, int k, int m, long p);

// Unitary series divided by its normalizing factor: d-vector of Q.
SqrtPPoly q_from_series(const SeriesPoly& E, SplitClass kind, int n, long p);
// Closed-form assembly from P / R polynomials.
SqrtPPoly q_closed_form(const LocalVectorData& data);

struct QOptions {
    bool oracle = false;  // also assemble from the enumeration oracle and compare
    OracleOptions oracle_opt;
};
// Both paths, cross-asserted. Zero marker if T is outside the local lattice.
SqrtPPoly q_poly(const LocalVectorData& data, const QOptions& opt = {});

}  // namespace qeis
