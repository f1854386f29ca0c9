#include "qeis/siegel_local.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

namespace qeis {

std::vector<std::vector<long>> QuadShape::gram() const {
    int h = rank() / 2;
    std::vector<std::vector<long>> G(rank(), std::vector<long>(rank(), 0));
    for (int i = 0; i < h; ++i) {
        long s = (form == QuadForm::RamifiedNormal && i >= m) ? p : 1;
        G[i][h + i] = s;
        G[h + i][i] = s;
    }
    return G;
}

BigRational quad_value(const QuadVec& eta, const QuadShape& shape) {
    if (static_cast<int>(eta.size()) != shape.rank()) throw ValidationError("coordinate count mismatch");
    int h = shape.rank() / 2;
    BigRational q = 0;
    for (int i = 0; i < h; ++i) {
        BigRational t = eta[i] * eta[h + i];
        if (shape.form == QuadForm::RamifiedNormal && i >= shape.m) t *= shape.p;
        q += t;
    }
    q.canonicalize();
    return q;
}

namespace {

int min_val(const QuadVec& v, long p) {
    int m = kInfVal;
    for (const auto& x : v) m = std::min(m, vp(x, p));
    return m;
}

BigInt residue(const BigRational& x, const BigInt& mod) {
    BigInt den = x.get_den();
    return mod_reduce(x.get_num() * mod_inverse(den, mod), mod);
}

BigRational G_term(long p, int m, int r, int j) {
    long e = static_cast<long>(2 * r + 2 * j + 1) * m - j;
    return rpow(p, e) - rpow(p, e - 1);
}

// Reduces sum_a cnt[a] zeta^a (zeta a primitive M-th root, M = p^R) and returns its rational value.
BigInt reduce_cyclotomic(std::vector<long long>& cnt, long p, long M) {
    if (M == 1) return BigInt(static_cast<long>(cnt[0]));
    long step = M / p;
    long phi = M - step;
    for (long a = M - 1; a >= phi; --a) {
        long long v = cnt[a];
        if (v == 0) continue;
        for (long i = 0; i <= p - 2; ++i) cnt[a - phi + i * step] -= v;
        cnt[a] = 0;
    }
    for (long a = 1; a < phi; ++a)
        if (cnt[a] != 0) throw ConsistencyError("character sum is not rational");
    return BigInt(static_cast<long>(cnt[0]));
}

int worker_count(const OracleOptions& opt) {
    if (opt.workers > 0) return opt.workers;
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(std::min(h, 16u));
}

// Odometer over prod mods[i]; f(y) returns the phase in [0, M) or -1 to skip.
// Work is split on the first coordinate; per-worker counts are summed, so the result does not
// depend on the partition.
std::vector<long long> enumerate_phases(const std::vector<long>& mods, long M, int workers,
                                        const std::function<long(const std::vector<long>&)>& f) {
    std::vector<long long> total(M, 0);
    if (mods.empty()) {
        long a = f({});
        if (a >= 0) total[a] += 1;
        return total;
    }
    int W = std::max(1, std::min<int>(workers, static_cast<int>(mods[0])));
    std::vector<std::vector<long long>> parts(W, std::vector<long long>(M, 0));
    auto job = [&](int w) {
        std::vector<long> y(mods.size(), 0);
        auto& cnt = parts[w];
        for (long y0 = w; y0 < mods[0]; y0 += W) {
            std::fill(y.begin(), y.end(), 0);
            y[0] = y0;
            while (true) {
                long a = f(y);
                if (a >= 0) ++cnt[a];
                size_t i = 1;
                while (i < y.size()) {
                    if (++y[i] < mods[i]) break;
                    y[i] = 0;
                    ++i;
                }
                if (i >= y.size()) break;
            }
        }
    };
    if (W == 1) {
        job(0);
    } else {
        std::vector<std::thread> th;
        for (int w = 0; w < W; ++w) th.emplace_back(job, w);
        for (auto& t : th) t.join();
    }
    for (auto& part : parts)
        for (long a = 0; a < M; ++a) total[a] += part[a];
    return total;
}

void check_budget(long p, int exponent, const OracleOptions& opt) {
    long double pts = 1;
    for (int i = 0; i < exponent; ++i) pts *= p;
    if (pts > static_cast<long double>(effective_budget(opt)))
        throw ResourceError("enumeration of " + std::to_string(p) + "^" + std::to_string(exponent) +
                            " points exceeds the budget");
}

}  // namespace

RamifiedInvariants ramified_invariants(const QuadVec& eta, const QuadShape& shape) {
    if (shape.form != QuadForm::RamifiedNormal) throw ValidationError("expected ramified normal form");
    int h = shape.rank() / 2, m = shape.m;
    QuadVec e1, e2;
    for (int i = 0; i < m; ++i) {
        e1.push_back(eta[i]);
        e2.push_back(eta[m + i]);
        e1.push_back(eta[h + i]);
        e2.push_back(eta[h + m + i]);
    }
    int v1 = min_val(e1, shape.p), v2 = min_val(e2, shape.p);
    RamifiedInvariants inv;
    inv.k1 = std::min(v1, v2);
    inv.k2 = std::min(v1, v2 >= kInfVal ? kInfVal : v2 + 1);
    inv.k = vp(quad_value(eta, shape), shape.p);
    return inv;
}

long long effective_budget(const OracleOptions& opt) {
    if (opt.budget > 0) return opt.budget;
    if (const char* env = std::getenv("QEIS_BUDGET")) {
        long long b = std::atoll(env);
        if (b > 0) return b;
    }
    return 100000000LL;
}

BigInt exp_sum_oracle(const std::vector<std::vector<long>>& gram, const std::vector<BigInt>& lambda,
                      long p, int r, const OracleOptions& opt) {
    size_t n = gram.size();
    if (lambda.size() != n) throw ValidationError("character vector size mismatch");
    if (r == 0) return 1;
    check_budget(p, static_cast<int>(n) * r, opt);
    long M = ipow(p, r).get_si();
    std::vector<long> half(n), lam(n);
    std::vector<std::vector<long>> off(n, std::vector<long>(n, 0));
    BigInt BM(M);
    for (size_t i = 0; i < n; ++i) {
        if (gram[i][i] % 2 != 0) throw ValidationError("Gram diagonal must be even");
        half[i] = ((gram[i][i] / 2) % M + M) % M;
        lam[i] = mod_reduce(lambda[i], BM).get_si();
        for (size_t j = i + 1; j < n; ++j) off[i][j] = ((gram[i][j] % M) + M) % M;
    }
    std::vector<long> mods(n, M);
    auto f = [&](const std::vector<long>& y) -> long {
        long long q = 0, a = 0;
        for (size_t i = 0; i < n; ++i) {
            if (y[i] == 0) continue;
            long long yi = y[i];
            long long row = half[i] * yi % M;
            for (size_t j = i + 1; j < n; ++j) row = (row + off[i][j] * y[j]) % M;
            q = (q + row * yi) % M;
            a = (a + static_cast<long long>(lam[i]) * yi) % M;
        }
        return q == 0 ? static_cast<long>(a) : -1;
    };
    auto cnt = enumerate_phases(mods, M, worker_count(opt), f);
    return reduce_cyclotomic(cnt, p, M);
}

BigInt split_pair_oracle(const std::vector<BigInt>& T1, const std::vector<BigInt>& T2, long p,
                         int r1, int r2, const OracleOptions& opt) {
    size_t n = T1.size();
    if (T2.size() != n) throw ValidationError("split components differ in length");
    int R = std::max(r1, r2), mn = std::min(r1, r2);
    if (R == 0) return 1;
    check_budget(p, static_cast<int>(n) * (r1 + r2), opt);
    long M = ipow(p, R).get_si();
    long M1 = ipow(p, r1).get_si(), M2 = ipow(p, r2).get_si(), Mmin = ipow(p, mn).get_si();
    long s1 = M / M1, s2 = M / M2;
    BigInt BM(M);
    std::vector<long> t1(n), t2(n);
    for (size_t i = 0; i < n; ++i) {
        t1[i] = mod_reduce(T1[i], BM).get_si();
        t2[i] = mod_reduce(T2[i], BM).get_si();
    }
    std::vector<long> mods;
    for (size_t i = 0; i < n; ++i) mods.push_back(M1);
    for (size_t i = 0; i < n; ++i) mods.push_back(M2);
    auto f = [&](const std::vector<long>& y) -> long {
        long long dot = 0, a1 = 0, a2 = 0;
        for (size_t i = 0; i < n; ++i) {
            dot = (dot + static_cast<long long>(y[i]) * y[n + i]) % Mmin;
            a1 = (a1 + static_cast<long long>(y[i]) * t2[i]) % M;
            a2 = (a2 + static_cast<long long>(y[n + i]) * t1[i]) % M;
        }
        if (dot != 0) return -1;
        return static_cast<long>((a1 * s1 + a2 * s2) % M);
    };
    auto cnt = enumerate_phases(mods, M, worker_count(opt), f);
    return reduce_cyclotomic(cnt, p, M);
}

BigRational term_unramified(int r, const QuadVec& eta, const QuadShape& shape) {
    if (shape.form != QuadForm::SplitHyperbolic) throw ValidationError("expected split hyperbolic form");
    if (r < 0) throw ValidationError("negative index");
    long p = shape.p;
    int m = shape.m;
    int v = min_val(eta, p);
    if (v < 0) return 0;
    if (r == 0) return 1;
    BigRational q = quad_value(eta, shape);
    int vq = vp(q, p);
    BigRational sum = 0;
    if (v >= r) sum += rpow(p, 2L * m * r);
    int jmax = std::min(r - 1, v);
    for (int j = 0; j <= jmax; ++j) {
        BigInt t = (vq >= kInfVal) ? BigInt(0) : ipow(p, static_cast<unsigned long>(vq - 2 * j));
        sum += rpow(p, static_cast<long>(m) * (r + j)) * BigRational(ramanujan_sum(p, r - j, t));
    }
    sum /= rpow(p, r);
    sum.canonicalize();
    return sum;
}

BigRational term_ramified(int r, const QuadVec& eta, const QuadShape& shape) {
    if (r < 0) throw ValidationError("negative index");
    long p = shape.p;
    int m = shape.m;
    if (quad_value(eta, shape) == 0) throw ValidationError("closed form requires q(eta) != 0");
    auto inv = ramified_invariants(eta, shape);
    int k1 = inv.k1, k2 = inv.k2, k = inv.k;
    if (k2 < 0) return 0;
    if (k1 < 0) return r == 0 ? 1 : 0;
    int kp = k - k1 - k2;
    BigRational c = 0;
    if (r <= k2) {
        c = rpow(p, static_cast<long>(r) * (4 * m - 1));
        for (int j = 0; j < r; ++j) c += G_term(p, m, r, j);
    } else if (r <= k2 + kp) {
        for (int j = 0; j <= k1; ++j) c += G_term(p, m, r, j);
    } else if (r <= k + 1) {
        for (int j = 0; j <= k - r; ++j) c += G_term(p, m, r, j);
        c -= rpow(p, static_cast<long>(2 * k + 3) * m + r - k - 2);
    }
    c.canonicalize();
    return c;
}

BigRational term_oracle(int r, const QuadVec& eta, const QuadShape& shape, const OracleOptions& opt) {
    auto G = shape.gram();
    int n = shape.rank();
    if (static_cast<int>(eta.size()) != n) throw ValidationError("coordinate count mismatch");
    std::vector<BigRational> lam(n, BigRational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (G[i][j] != 0) lam[i] += BigRational(G[i][j]) * eta[j];
    for (auto& x : lam) {
        x.canonicalize();
        if (vp(x, shape.p) < 0) return 0;  // character nontrivial on the lattice
    }
    if (r == 0) return 1;
    BigInt mod = ipow(shape.p, static_cast<unsigned long>(r));
    std::vector<BigInt> li;
    for (auto& x : lam) li.push_back(residue(x, mod));
    return BigRational(exp_sum_oracle(G, li, shape.p, r, opt));
}

SeriesPoly term_series(const QuadVec& eta, const QuadShape& shape, int rmax, TermSource src,
                       const OracleOptions& opt) {
    SeriesPoly s;
    for (int r = 0; r <= rmax; ++r) {
        BigRational c;
        if (src == TermSource::Oracle)
            c = term_oracle(r, eta, shape, opt);
        else if (shape.form == QuadForm::SplitHyperbolic)
            c = term_unramified(r, eta, shape);
        else
            c = term_ramified(r, eta, shape);
        if (c != 0) s.add_term(r, c);
    }
    s.normalize();
    return s;
}

namespace {

QuadVec shift_part(const QuadVec& eta, size_t from, size_t to, long p, int i) {
    QuadVec out = eta;
    BigRational f = rpow(p, -i);
    for (size_t j = from; j < to; ++j) {
        out[j] *= f;
        out[j].canonicalize();
    }
    return out;
}

std::vector<BigInt> integer_part(const QuadVec& eta, size_t from, size_t to, const BigInt& mod) {
    std::vector<BigInt> v;
    for (size_t j = from; j < to; ++j) v.push_back(residue(eta[j], mod));
    return v;
}

}  // namespace

SeriesPoly assemble_series(const LocalVectorData& d, TermSource src, const OracleOptions& opt) {
    if (!d.in_lattice) return {};
    long p = d.p;
    int n = d.n;
    SeriesPoly E;
    switch (d.kind) {
        case SplitClass::Split: {
            size_t h = static_cast<size_t>(n);
            if (src == TermSource::Oracle) {
                int top = 2 * d.k + 2;
                BigInt mod = ipow(p, static_cast<unsigned long>(top + 1));
                auto T1 = integer_part(d.eta, 0, h, mod), T2 = integer_part(d.eta, h, 2 * h, mod);
                for (int r1 = 0; r1 <= top; ++r1)
                    for (int r2 = 0; r1 + r2 <= top; ++r2) {
                        BigInt s = split_pair_oracle(T1, T2, p, r1, r2, opt);
                        if (s != 0)
                            E.add_term(r1 + r2, rpow(p, std::min(r1, r2)) * BigRational(s));
                    }
                break;
            }
            QuadShape shape{p, n, QuadForm::SplitHyperbolic};
            for (int i = -d.k2; i <= d.k1; ++i) {
                QuadVec eta = i >= 0 ? shift_part(d.eta, 0, h, p, i) : shift_part(d.eta, h, 2 * h, p, -i);
                int ai = std::abs(i);
                int keta = d.k - ai;
                for (int r = 0; r <= keta + 1; ++r) {
                    BigRational b = term_unramified(r, eta, shape);
                    if (b != 0) E.add_term(2 * r + ai, rpow(p, r + static_cast<long>(n) * ai) * b);
                }
            }
            break;
        }
        case SplitClass::Inert: {
            QuadShape shape{p, n, QuadForm::SplitHyperbolic};
            for (int r = 0; r <= d.k + 1; ++r) {
                BigRational b = src == TermSource::Oracle ? term_oracle(r, d.eta, shape, opt)
                                                          : term_unramified(r, d.eta, shape);
                if (b != 0) E.add_term(2 * r, rpow(p, r) * b);
            }
            break;
        }
        case SplitClass::Ramified: {
            if (n % 2 != 0) throw ValidationError("ramified case requires even n");
            QuadShape shape{p, n / 2, QuadForm::RamifiedNormal};
            auto term = [&](int r, const QuadVec& eta) {
                return src == TermSource::Oracle ? term_oracle(r, eta, shape, opt)
                                                 : term_ramified(r, eta, shape);
            };
            for (int r = 0; r <= d.k; ++r) {
                BigRational c = term(r, d.eta_div);
                if (c != 0) E.add_term(2 * r, rpow(p, r) * c);
            }
            for (int r = 1; r <= d.k + 1; ++r) {
                BigRational c = term(r, d.eta);
                if (c != 0) E.add_term(2 * r - 1, rpow(p, r - n) * c);
            }
            break;
        }
    }
    E.normalize();
    return E;
}

SeriesPoly natural_oracle_series(const GlobalVector& T, const FieldE& F, long p,
                                 const OracleOptions& opt) {
    BigInt nm = norm(T, F);
    if (nm == 0) throw ValidationError("isotropic vector");
    SplitClass kind = F.split_class(p);
    if (kind == SplitClass::Split)
        return assemble_series(local_quadratic_data(T, F, p, Params{2, 3}), TermSource::Oracle, opt);
    int k = vp(nm, p);
    auto G4 = natural_gram(F);
    std::vector<std::vector<long>> G(4, std::vector<long>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G[i][j] = G4[i][j];
    auto lam = natural_character(T, F, false);
    std::vector<BigInt> l(lam.begin(), lam.end());
    SeriesPoly E;
    if (kind == SplitClass::Inert) {
        for (int r = 0; r <= k + 1; ++r) {
            BigInt b = exp_sum_oracle(G, l, p, r, opt);
            if (b != 0) E.add_term(2 * r, rpow(p, r) * BigRational(b));
        }
    } else {
        auto lt = natural_character(T, F, true);
        std::vector<BigInt> l2(lt.begin(), lt.end());
        for (int r = 0; r <= k; ++r) {
            BigInt c = exp_sum_oracle(G, l2, p, r, opt);
            if (c != 0) E.add_term(2 * r, rpow(p, r) * BigRational(c));
        }
        for (int r = 1; r <= k + 1; ++r) {
            BigInt c = exp_sum_oracle(G, l, p, r, opt);
            if (c != 0) E.add_term(2 * r - 1, rpow(p, r - 2) * BigRational(c));
        }
    }
    E.normalize();
    return E;
}

IntPoly extract_P(const SeriesPoly& series, int m, long p) {
    SeriesPoly F = series.divide_one_minus(rpow(p, m - 1), 1);
    std::vector<BigInt> c;
    for (int j = 0; j <= F.degree(); ++j) c.push_back(to_integer(F.coeff(j) / rpow(p, static_cast<long>(m) * j)));
    IntPoly P(c);
    if (!P.is_monic()) throw ConsistencyError("extracted P is not monic");
    return P;
}

IntPoly extract_R(const SeriesPoly& series, int k1, int k2, int m, long p) {
    SeriesPoly S = series;
    for (int r = 0; r <= k2; ++r) S.add_term(r, -rpow(p, static_cast<long>(r) * (4 * m - 1)));
    for (int r = 0; r <= k1; ++r)
        S.add_term(r + 1, rpow(p, 3L * m - 1 + static_cast<long>(r) * (4 * m - 1)));
    S.normalize();
    if (S.degree() < 0) return IntPoly();
    SeriesPoly F = S.divide_one_minus(rpow(p, 2 * m - 1), 1);
    std::vector<BigInt> c;
    for (int j = 0; j <= F.degree(); ++j)
        c.push_back(to_integer(F.coeff(j) / rpow(p, 2L * m * j)));
    return IntPoly(c);
}

SeriesPoly R_closed_form_rational(int k1, int k2, int k, int m, long p, RReading reading) {
    if (k1 < 0 || !(k2 == k1 || k2 == k1 + 1) || k - k1 - k2 < 0 || m < 1)
        throw ValidationError("inconsistent invariants (k1, k2, k)");
    int kp = k - k1 - k2;
    BigRational den = rpow(p, 2 * m - 1) - 1;
    BigRational pm = rpow(p, m);
    SeriesPoly R;
    for (int r = 1; r <= k2; ++r) {
        BigRational num = reading == RReading::Adopted
                              ? rpow(p, static_cast<long>(r) * (2 * m - 1)) - 1
                              : rpow(p, static_cast<long>(r) * (2 * m - 1) - 1);
        R.add_term(r, pm * num / den);
    }
    BigRational mid = (rpow(p, static_cast<long>(k1 + 1) * (2 * m - 1)) - 1) / den;
    for (int r = k2 + 1; r <= k2 + kp; ++r) R.add_term(r, pm * mid);
    for (int r = k2 + kp + 1; r <= k; ++r)
        R.add_term(r, pm * (rpow(p, static_cast<long>(k - r + 1) * (2 * m - 1)) - 1) / den);
    R.normalize();
    return R;
}

IntPoly R_closed_form(int k1, int k2, int k, int m, long p) {
    SeriesPoly R = R_closed_form_rational(k1, k2, k, m, p, RReading::Adopted);
    std::vector<BigInt> c;
    for (int j = 0; j <= R.degree(); ++j) c.push_back(to_integer(R.coeff(j)));
    return IntPoly(c);
}

SqrtPPoly q_from_series(const SeriesPoly& E, SplitClass kind, int n, long p) {
    SqrtPPoly q;
    q.p = p;
    if (E.degree() < 0) {
        q.zero_marker = true;
        return q;
    }
    SeriesPoly F = kind == SplitClass::Ramified ? E.divide_one_minus(rpow(p, n / 2), 1)
                                                 : E.divide_one_minus(rpow(p, n), 2);
    for (int i = 0; i <= F.degree(); ++i) {
        long e = static_cast<long>(i) * (n / 2) + (i + 1) / 2;
        q.d.push_back(to_integer(F.coeff(i) / rpow(p, e)));
    }
    q.normalize();
    return q;
}

SqrtPPoly q_closed_form(const LocalVectorData& d) {
    SqrtPPoly q;
    q.p = d.p;
    if (!d.in_lattice) {
        q.zero_marker = true;
        return q;
    }
    long p = d.p;
    int n = d.n, k = d.k;
    std::vector<BigRational> acc(2 * k + 1, BigRational(0));
    auto add = [&](int i, const BigRational& v) {
        if (i < 0 || i > 2 * k) {
            if (v != 0) throw ConsistencyError("closed-form term outside degree range");
            return;
        }
        acc[i] += v;
    };
    switch (d.kind) {
        case SplitClass::Inert: {
            QuadShape shape{p, n, QuadForm::SplitHyperbolic};
            IntPoly P = extract_P(term_series(d.eta, shape, k + 1, TermSource::ClosedForm), n, p);
            for (int j = 0; j <= P.degree(); ++j) add(2 * j, BigRational(P.c[j]));
            break;
        }
        case SplitClass::Split: {
            QuadShape shape{p, n, QuadForm::SplitHyperbolic};
            size_t h = static_cast<size_t>(n);
            for (int i = -d.k2; i <= d.k1; ++i) {
                int ai = std::abs(i);
                QuadVec eta = i >= 0 ? shift_part(d.eta, 0, h, p, i) : shift_part(d.eta, h, 2 * h, p, -i);
                IntPoly P = extract_P(term_series(eta, shape, k - ai + 1, TermSource::ClosedForm), n, p);
                BigRational f = rpow(p, (static_cast<long>(ai) * (n - 1)) / 2);
                for (int j = 0; j <= P.degree(); ++j) add(ai + 2 * j, f * BigRational(P.c[j]));
            }
            break;
        }
        case SplitClass::Ramified: {
            int m = n / 2;
            IntPoly R = R_closed_form(d.k1, d.k2, k, m, p);
            IntPoly Rd;
            if (d.k2 - 1 >= 0) Rd = R_closed_form(d.k2 - 1, d.k1, k - 1, m, p);
            BigRational pm = rpow(p, m);
            for (int j = 0; j <= Rd.degree(); ++j) {
                add(2 * j, BigRational(Rd.c[j]));
                add(2 * j + 1, BigRational(Rd.c[j]) / BigRational(p));
            }
            for (int j = 0; j <= R.degree(); ++j) {
                if (j == 0 && R.c[0] != 0) throw ConsistencyError("R has a constant term");
                add(2 * j - 1, BigRational(R.c[j]) / pm);
                add(2 * j, BigRational(R.c[j]) / pm);
            }
            for (int r = 0; r <= d.k1; ++r) add(2 * r, rpow(p, static_cast<long>(r) * (2 * m - 1)));
            for (int r = 0; r <= d.k2 - 1; ++r)
                add(2 * r + 1, rpow(p, static_cast<long>(r) * (2 * m - 1) + m - 1));
            break;
        }
    }
    for (auto& x : acc) {
        x.canonicalize();
        q.d.push_back(to_integer(x));
    }
    q.normalize();
    return q;
}

SqrtPPoly q_poly(const LocalVectorData& d, const QOptions& opt) {
    if (!d.in_lattice) {
        SqrtPPoly z;
        z.p = d.p;
        z.zero_marker = true;
        return z;
    }
    SqrtPPoly a = q_from_series(assemble_series(d), d.kind, d.n, d.p);
    SqrtPPoly b = q_closed_form(d);
    if (!(a == b)) throw ConsistencyError("local polynomial: closed form and series extraction disagree");
    if (opt.oracle) {
        SqrtPPoly c = q_from_series(assemble_series(d, TermSource::Oracle, opt.oracle_opt), d.kind, d.n, d.p);
        if (!(a == c)) throw ConsistencyError("local polynomial: enumeration oracle disagrees");
    }
    if (!a.is_monic() || a.degree() != 2 * d.k || !a.satisfies_reflection())
        throw ConsistencyError("local polynomial fails monicity, degree or functional equation");
    return a;
}

}  // namespace qeis
