#include "qeis/fourier_global.hpp"

#include <boost/math/special_functions/zeta.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>
#include <tuple>

namespace qeis {

BigInt divisor_sigma(long k, long x) {
    if (x <= 0) throw ValidationError("divisor sum needs a positive argument");
    BigInt s = 0;
    for (long d = 1; d <= x; ++d)
        if (x % d == 0) s += ipow(d, static_cast<unsigned long>(k));
    return s;
}

BigInt sigma_E(const GlobalVector& T, int ell, const FieldE& F) {
    if (T.is_zero()) throw ValidationError("sigma_E of the zero vector");
    BigInt g = gcd(F.norm(T.a), F.norm(T.b));
    BigInt s = 1;
    for (auto [p, e] : factorize(g)) {
        (void)e;
        for (const auto& pv : prime_ideal_valuation(T, F, p)) {
            if (pv.v < 0) return 0;
            BigInt t = 0;
            for (int i = 0; i <= pv.v; ++i) t += ipow(pv.q, static_cast<unsigned long>(i) * ell);
            s *= t;
        }
    }
    return s;
}

BigRational C_ell(int ell) {
    BigInt f = factorial(ell);
    BigRational c = make_rational(ipow(2, 2 * ell + 1), f * f);
    return ell % 2 ? BigRational(-c) : c;
}

BigRational denominator_bound(int n, int ell, long D) {
    BigInt f = factorial(ell);
    BigRational B = abs(bernoulli(2 * ell - n + 2));
    BigRational r = BigRational(f * f) * B * BigRational(divisor_sigma(ell + 1 - n / 2, D));
    r.canonicalize();
    return r;
}

BigRational D_nl(int n, int ell, long D) {
    BigInt num = BigInt(2 * ell - n + 2) * ipow(2, 2 * n + 2) * ipow(D, ell + 1 - n / 2);
    BigRational r = BigRational(num) / denominator_bound(n, ell, D);
    r.canonicalize();
    return r;
}

FourierCoefficient rank1_coefficient(const GlobalVector& T, const Params& P, const FieldE& F) {
    P.validate();
    if (T.is_zero()) throw ValidationError("rank-1 coefficient of the zero vector");
    FourierCoefficient c;
    c.T = T;
    c.norm = norm(T, F);
    if (c.norm != 0) throw ValidationError("rank-1 coefficient needs an isotropic vector");
    c.rank = 1;
    c.sigma = sigma_E(T, P.ell, F);
    c.rational = C_ell(P.ell) * BigRational(c.sigma);
    c.rational.canonicalize();
    return c;
}

FourierCoefficient rank2_coefficient(const GlobalVector& T, const Params& P, const FieldE& F,
                                     const Rank2Options& opt) {
    P.validate();
    FourierCoefficient c;
    c.T = T;
    c.norm = norm(T, F);
    if (c.norm <= 0) throw ValidationError("rank-2 coefficient needs positive norm");
    c.rank = 2;
    BigInt prod = 1;
    bool zero = false;
    for (auto [p, e] : factorize(c.norm)) {
        (void)e;
        SqrtPPoly q = q_poly(local_quadratic_data(T, F, p, P), opt.q);
        c.localPolys[p] = q;
        if (q.zero_marker) {
            zero = true;
            continue;
        }
        prod *= sqrtp_eval_halfint(q, 2 * P.ell - P.n + 1);
    }
    if (!zero && prod <= 0) throw ConsistencyError("local product is not a positive integer");
    c.rational = zero ? BigRational(0) : D_nl(P.n, P.ell, F.D) * BigRational(prod);
    if (opt.nu_abs != 1) {
        if (opt.nu_abs <= 0) throw ValidationError("|nu(m)| must be positive");
        BigRational f = 1;
        int e = P.n - P.ell;
        for (int i = 0; i < std::abs(e); ++i) f *= opt.nu_abs;
        if (e >= 0)
            c.rational *= f;
        else
            c.rational /= f;
    }
    c.rational.canonicalize();
    if (opt.whittaker) c.whittaker = whittaker_at(T, P.ell, F);
    return c;
}

GlobalVector scale_by_unit(const GlobalVector& T, const QuadInt& z, const FieldE& F) {
    if (F.norm(z) != 1) throw ValidationError("not a unit");
    return {F.mul(z, T.a), F.mul(z, T.b)};
}

GlobalVector swap_lines(const GlobalVector& T) { return {T.b, T.a}; }

GlobalVector transvection(const GlobalVector& T, long j, const FieldE& F) {
    QuadInt lam = F.mul({BigInt(j), BigInt(0)}, FieldE::sqrt_minus_D());
    return {T.a, F.add(T.b, F.mul(lam, T.a))};
}

double zeta_E(long D, int s) {
    if (s < 2) throw ValidationError("zeta_E evaluated only for s >= 2");
    // tail of sum n^{-s} beyond N is below N^{1-s}/(s-1)
    long N = static_cast<long>(std::ceil(std::pow(1e12 / (s - 1), 1.0 / (s - 1)))) + 1;
    double L = 0;
    BigInt disc(-D);
    for (long k = N; k >= 1; --k) {
        int chi = mpz_kronecker(disc.get_mpz_t(), BigInt(k).get_mpz_t());
        if (chi) L += chi * std::pow(static_cast<double>(k), -s);
    }
    return boost::math::zeta(static_cast<double>(s)) * L;
}

ConstantTerm constant_term(const Params& P, const FieldE& F) {
    P.validate();
    ConstantTerm c;
    c.numeric = zeta_E(F.D, P.ell + 1) / std::pow(3.14159265358979323846, 2 * P.ell + 1);
    return c;
}

std::vector<QuadInt> elements_of_norm_at_most(const FieldE& F, long X) {
    std::vector<QuadInt> out;
    if (X < 0) return out;
    // N(x + y w) = (x + y/2)^2 + D y^2 / 4
    long ymax = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(X) / F.D))) + 1;
    long xmax = static_cast<long>(std::floor(std::sqrt(static_cast<double>(X)))) + ymax + 1;
    for (long x = -xmax; x <= xmax; ++x)
        for (long y = -ymax; y <= ymax; ++y) {
            QuadInt z{BigInt(x), BigInt(y)};
            if (F.norm(z) <= X) out.push_back(z);
        }
    return out;
}

namespace {

auto sort_key(const FourierCoefficient& c) {
    return std::make_tuple(c.norm, c.T.a.x, c.T.a.y, c.T.b.x, c.T.b.y);
}

}  // namespace

ExpansionTable full_expansion(const Params& P, const FieldE& F, long bound,
                              const ExpansionOptions& opt) {
    P.validate();
    if (P.n != 2) throw ValidationError("the expansion table needs the n = 2 model");
    if (bound < 0) throw ValidationError("bound must be non-negative");
    ExpansionTable t;
    t.params = P;
    t.D = F.D;
    t.bound = bound;
    t.region = std::max(bound, 1L);
    t.constant = constant_term(P, F);
    t.C_ell = C_ell(P.ell);
    t.D_nl = D_nl(P.n, P.ell, F.D);

    auto elems = elements_of_norm_at_most(F, t.region);
    OracleOptions bo;
    bo.budget = opt.budget;
    long long budget = effective_budget(bo);
    long long count = static_cast<long long>(elems.size()) * static_cast<long long>(elems.size());
    if (count > budget) throw ResourceError("expansion enumeration exceeds the budget");

    std::vector<GlobalVector> todo;
    for (const auto& a : elems)
        for (const auto& b : elems) {
            GlobalVector T{a, b};
            if (T.is_zero()) continue;
            BigInt nm = norm(T, F);
            if (nm < 0 || nm > bound) continue;
            todo.push_back(T);
        }

    std::vector<FourierCoefficient> out(todo.size());
    std::vector<std::exception_ptr> errs(todo.size());
    std::atomic<size_t> next{0};
    Rank2Options r2;
    r2.q.oracle = opt.oracle;
    auto work = [&] {
        for (size_t i = next++; i < todo.size(); i = next++) {
            try {
                const GlobalVector& T = todo[i];
                out[i] = norm(T, F) == 0 ? rank1_coefficient(T, P, F) : rank2_coefficient(T, P, F, r2);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    int nw = opt.workers > 0 ? opt.workers : static_cast<int>(std::thread::hardware_concurrency());
    nw = std::max(1, std::min<int>(nw, static_cast<int>(todo.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < nw; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    std::sort(out.begin(), out.end(),
              [](const FourierCoefficient& x, const FourierCoefficient& y) { return sort_key(x) < sort_key(y); });
    t.entries = std::move(out);
    return t;
}

CheckResult denominator_bound_check(const ExpansionTable& table) {
    CheckResult r;
    BigRational den = denominator_bound(table.params.n, table.params.ell, table.D);
    for (const auto& e : table.entries) {
        if (e.rank != 2) continue;
        BigRational v = e.rational * den;
        v.canonicalize();
        if (!is_integer(v)) {
            r.pass = false;
            r.detail = "T=" + to_string(e.T) + " a_T=" + to_string(e.rational);
            return r;
        }
    }
    r.detail = "ok";
    return r;
}

nlohmann::ordered_json to_json(const SqrtPPoly& q) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& d : q.d) a.push_back(nlohmann::ordered_json::parse(d.get_str()));
    return a;
}

nlohmann::ordered_json to_json(const FourierCoefficient& c) {
    using J = nlohmann::ordered_json;
    J j;
    j["T"] = J::parse(to_string(c.T));
    j["norm"] = J::parse(c.norm.get_str());
    j["rank"] = c.rank;
    j["rational"] = to_string(c.rational);
    if (c.rank == 1) j["sigma"] = J::parse(c.sigma.get_str());
    if (c.rank == 2) {
        J lq = J::object();
        for (const auto& [p, q] : c.localPolys) lq[std::to_string(p)] = q.zero_marker ? J(nullptr) : to_json(q);
        j["localQ"] = lq;
    }
    return j;
}

nlohmann::ordered_json to_json(const ExpansionTable& t) {
    using J = nlohmann::ordered_json;
    J j;
    j["params"] = {{"D", t.D}, {"n", t.params.n}, {"ell", t.params.ell}};
    j["bound"] = t.bound;
    j["region"] = "T = a c1 + b c2 with N(a), N(b) <= " + std::to_string(t.region) +
                  "; isotropic vectors outside this box are not listed";
    j["constant_term"] = {{"rational", to_string(t.constant.rational)},
                          {"symbolic", t.constant.symbolic},
                          {"numeric", t.constant.numeric},
                          {"basis", t.constant.basis},
                          {"note", "coefficient of u1^l u2^l"}};
    j["C_ell"] = to_string(t.C_ell);
    j["D_nl"] = to_string(t.D_nl);
    J e = J::array();
    for (const auto& c : t.entries) e.push_back(to_json(c));
    j["entries"] = e;
    return j;
}

std::string to_csv(const ExpansionTable& t) {
    std::ostringstream os;
    os << "ax,ay,bx,by,norm,rank,rational\n";
    for (const auto& c : t.entries)
        os << c.T.a.x.get_str() << ',' << c.T.a.y.get_str() << ',' << c.T.b.x.get_str() << ','
           << c.T.b.y.get_str() << ',' << c.norm.get_str() << ',' << c.rank << ','
           << to_string(c.rational) << '\n';
    return os.str();
}

}  // namespace qeis
