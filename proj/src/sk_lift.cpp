#include "qeis/sk_lift.hpp"

#include <cmath>

namespace qeis {

EigenformData eigenform_from_json(const nlohmann::json& j) {
    EigenformData h;
    if (!j.is_object() || !j.contains("weight") || !j.contains("ap"))
        throw ValidationError("eigenvalue file needs \"weight\" and \"ap\"");
    h.weight = j.at("weight").get<int>();
    if (h.weight % 2 != 0 || h.weight <= 0) throw ValidationError("weight must be positive and even");
    for (const auto& [k, v] : j.at("ap").items()) {
        long p = std::stol(k);
        if (!is_prime(p)) throw ValidationError("eigenvalue key is not a prime: " + k);
        if (v.is_string())
            h.ap[p] = BigInt(v.get<std::string>());
        else
            h.ap[p] = BigInt(v.get<long>());
    }
    return h;
}

std::vector<BigInt> delta_tau(long N) {
    if (N < 1) throw ValidationError("N must be positive");
    // coefficients of prod (1 - q^k)^24 up to q^{N-1}
    std::vector<BigInt> c(N, BigInt(0));
    c[0] = 1;
    for (long k = 1; k < N; ++k)
        for (int rep = 0; rep < 24; ++rep)
            for (long i = N - 1; i >= k; --i) c[i] -= c[i - k];
    std::vector<BigInt> tau(N + 1, BigInt(0));
    for (long i = 1; i <= N; ++i) tau[i] = c[i - 1];
    return tau;
}

EigenformData delta_eigenform(long pmax) {
    EigenformData h;
    h.weight = 12;
    auto tau = delta_tau(pmax);
    for (long p = 2; p <= pmax; ++p)
        if (is_prime(p)) h.ap[p] = tau[p];
    return h;
}

SatakeParam satake_from_eigenvalue(const BigInt& ap, int weight, long p) {
    SatakeParam s;
    s.p = p;
    s.trace = ap.get_d() * std::pow(static_cast<double>(p), -(weight - 1) / 2.0);
    // X^2 - trace X + 1
    std::complex<double> disc = std::sqrt(std::complex<double>(s.trace * s.trace - 4, 0));
    s.alpha = (s.trace + disc) / 2.0;
    return s;
}

bool laurent_palindromic(const SqrtPPoly& q) { return q.zero_marker || q.satisfies_reflection(); }

namespace {

int check_weight(const EigenformData& h, const Params& P) {
    P.validate();
    int w = 2 * P.ell - P.n + 2;
    if (h.weight != w) throw ValidationError("eigenform weight must equal 2l-n+2 = " + std::to_string(w));
    return w;
}

// V_j(Y) = alpha^j + alpha^{-j} with Y = alpha + 1/alpha; V_0 = 2 is never used.
std::vector<std::vector<BigInt>> chebyshev_like(int kmax) {
    std::vector<std::vector<BigInt>> V(kmax + 2);
    V[0] = {BigInt(2)};
    V[1] = {BigInt(0), BigInt(1)};
    for (int j = 2; j <= kmax; ++j) {
        V[j].assign(j + 1, BigInt(0));
        for (size_t i = 0; i < V[j - 1].size(); ++i) V[j][i + 1] += V[j - 1][i];
        for (size_t i = 0; i < V[j - 2].size(); ++i) V[j][i] -= V[j - 2][i];
    }
    return V;
}

}  // namespace

LiftValue lift_coefficient(const GlobalVector& T, const EigenformData& h, const Params& P, const FieldE& F) {
    int w = check_weight(h, P);
    BigInt nm = norm(T, F);
    if (nm <= 0) throw ValidationError("lift coefficient needs positive norm");
    // value = sqrt(prod p^{e_p}) * rational, tracked through the exponent parities
    int twoE = 2 * P.ell - P.n + 1;
    BigRational rat = 1;
    std::map<long, int> half;  // exponent of p in units of 1/2
    std::map<long, std::complex<double>> alpha;
    for (auto [p, v] : factorize(nm)) {
        auto it = h.ap.find(p);
        if (it == h.ap.end()) throw ValidationError("missing eigenvalue for p = " + std::to_string(p));
        alpha[p] = satake_from_eigenvalue(it->second, w, p).alpha;
        SqrtPPoly q = q_poly(local_quadratic_data(T, F, p, P));
        if (q.zero_marker) return {true, BigRational(0), {0, 0}};
        if (!laurent_palindromic(q)) throw ConsistencyError("local Laurent polynomial not palindromic");
        int k = q.degree() / 2;
        auto V = chebyshev_like(k);
        // term d_{k+j} p^{((k+j)%2)/2} a^i p^{-i(w-1)/2} v_{j,i}; exponent of p (halves) = (k+j)%2 - i(w-1)
        BigRational local = 0;
        int base = k % 2;
        for (int j = 0; j <= k; ++j) {
            BigInt dj = q.d[k + j];
            if (dj == 0) continue;
            if (j == 0) {
                local += BigRational(dj) * rpow(p, ((k % 2) - base) / 2);
                continue;
            }
            for (size_t i = 0; i < V[j].size(); ++i) {
                if (V[j][i] == 0) continue;
                long ex = ((k + j) % 2) - static_cast<long>(i) * (w - 1) - base;
                if (ex % 2 != 0) throw ConsistencyError("unexpected half power in the lift");
                local += BigRational(dj * V[j][i] * ipow(it->second, i)) * rpow(p, ex / 2);
            }
        }
        rat *= local;
        half[p] += base + v * twoE;
    }
    LiftValue out;
    out.exact = true;
    for (auto [p, e] : half) {
        if (e % 2 != 0) out.exact = false;
        rat *= rpow(p, e / 2);
    }
    rat.canonicalize();
    if (out.exact) {
        out.rational = rat;
        out.numeric = {rat.get_d(), 0};
    } else {
        out.numeric = lift_coefficient_numeric(T, alpha, P, F);
    }
    return out;
}

std::complex<double> lift_coefficient_numeric(const GlobalVector& T,
                                              const std::map<long, std::complex<double>>& alpha,
                                              const Params& P, const FieldE& F) {
    P.validate();
    BigInt nm = norm(T, F);
    if (nm <= 0) throw ValidationError("lift coefficient needs positive norm");
    std::complex<double> val = std::pow(nm.get_d(), (2 * P.ell - P.n + 1) / 2.0);
    for (auto [p, v] : factorize(nm)) {
        (void)v;
        auto it = alpha.find(p);
        if (it == alpha.end()) throw ValidationError("missing Satake parameter for p = " + std::to_string(p));
        SqrtPPoly q = q_poly(local_quadratic_data(T, F, p, P));
        if (q.zero_marker) return 0;
        int k = q.degree() / 2;
        std::complex<double> s = 0;
        double rp = std::sqrt(static_cast<double>(p));
        for (int i = 0; i <= q.degree(); ++i)
            s += q.d[i].get_d() * (i % 2 ? rp : 1.0) * std::pow(it->second, i - k);
        val *= s;
    }
    return val;
}

std::vector<std::complex<double>> EulerFactor::polynomial() const {
    std::vector<std::complex<double>> c{1.0};
    auto mul = [&](std::complex<double> g) {
        c.push_back(0);
        for (size_t i = c.size() - 1; i >= 1; --i) c[i] -= g * c[i - 1];
    };
    for (auto g : bc_roots) mul(g);
    for (auto g : zeta_roots) mul(g);
    return c;
}

EulerFactor standard_L_factors(long p, const EigenformData& h, const Params& P, const FieldE& F) {
    int w = check_weight(h, P);
    auto it = h.ap.find(p);
    if (it == h.ap.end()) throw ValidationError("missing eigenvalue for p = " + std::to_string(p));
    std::complex<double> a = satake_from_eigenvalue(it->second, w, p).alpha;
    std::complex<double> ai = 1.0 / a;
    EulerFactor e;
    e.p = p;
    e.kind = F.split_class(p);
    double dp = static_cast<double>(p);
    switch (e.kind) {
        case SplitClass::Split:
            e.bc_roots = {a, ai, a, ai};
            break;
        case SplitClass::Inert:
            e.bc_roots = {a, -a, ai, -ai};  // (1 - a^2 X^2)(1 - a^{-2} X^2)
            break;
        case SplitClass::Ramified:
            e.bc_roots = {a, ai};
            break;
    }
    for (int i = 0; i < P.n; ++i) {
        double g = std::pow(dp, -((P.n - 1) / 2.0 - i));
        switch (e.kind) {
            case SplitClass::Split:
                e.zeta_roots.push_back(g);
                e.zeta_roots.push_back(g);
                break;
            case SplitClass::Inert:
                e.zeta_roots.push_back(g);
                e.zeta_roots.push_back(-g);
                break;
            case SplitClass::Ramified:
                e.zeta_roots.push_back(g);
                break;
        }
    }
    return e;
}

}  // namespace qeis
