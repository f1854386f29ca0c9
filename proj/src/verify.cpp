#include "qeis/verify.hpp"

#include <cmath>

#include "qeis/archimedean.hpp"
#include "qeis/fourier_global.hpp"

namespace qeis {

namespace {

struct Tally {
    NamedCheck c;
    long count = 0;
    explicit Tally(std::string name) { c.name = std::move(name); }
    void add(bool ok, const std::string& what) {
        ++count;
        if (!ok && c.pass) {
            c.pass = false;
            c.detail = what;
        }
    }
    NamedCheck done() {
        if (c.pass) c.detail = std::to_string(count) + " cases";
        return c;
    }
};

std::string eta_str(const QuadVec& eta) {
    std::string s = "(";
    for (size_t i = 0; i < eta.size(); ++i) s += (i ? "," : "") + to_string(eta[i]);
    return s + ")";
}

std::vector<long> primes_or_default(const SuiteOptions& opt) {
    return opt.primes.empty() ? std::vector<long>{3, 5} : opt.primes;
}

std::vector<QuadShape> rank4_shapes(long p) {
    std::vector<QuadShape> s{{p, 2, QuadForm::SplitHyperbolic}};
    if (p != 2) s.push_back({p, 1, QuadForm::RamifiedNormal});
    return s;
}

std::string shape_str(const QuadShape& s) {
    return std::string(s.form == QuadForm::SplitHyperbolic ? "split" : "ramified") + " p=" +
           std::to_string(s.p) + " m=" + std::to_string(s.m);
}

}  // namespace

std::vector<QuadVec> sample_etas(const QuadShape& shape, int count, int kmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long p = shape.p;
    long top = 1;
    for (int i = 0; i < kmax + 2; ++i) top *= p;
    std::uniform_int_distribution<long> coord(0, top - 1);
    std::vector<QuadVec> out;
    for (int idx = 0; idx < count; ++idx) {
        int k = idx % (kmax + 1);
        bool scale = k >= 2 && idx % 3 == 0;
        for (long tries = 0;; ++tries) {
            if (tries > 1000000) throw ResourceError("could not sample a vector of the requested valuation");
            QuadVec eta(shape.rank());
            for (auto& x : eta) x = BigRational(coord(rng) * (scale ? p : 1));
            BigRational q = quad_value(eta, shape);
            if (q == 0 || vp(q, p) != k) continue;
            out.push_back(eta);
            break;
        }
    }
    return out;
}

int oracle_rmax(long p) { return p <= 3 ? 3 : 2; }

std::vector<NamedCheck> suite_oracle(const SuiteOptions& opt) {
    std::vector<NamedCheck> out;
    for (long p : primes_or_default(opt)) {
        for (const auto& shape : rank4_shapes(p)) {
            Tally t("term closed form = oracle, " + shape_str(shape));
            int rmax = oracle_rmax(p);
            for (const auto& eta : sample_etas(shape, opt.per_shape, 3, 1000 + p)) {
                for (int r = 0; r <= rmax; ++r) {
                    BigRational a = shape.form == QuadForm::SplitHyperbolic ? term_unramified(r, eta, shape)
                                                                            : term_ramified(r, eta, shape);
                    BigRational b = term_oracle(r, eta, shape, opt.oracle);
                    t.add(a == b, "eta=" + eta_str(eta) + " r=" + std::to_string(r) + ": " + to_string(a) +
                                      " vs " + to_string(b));
                }
            }
            out.push_back(t.done());
        }
        Tally g("local polynomial = enumeration oracle, n=2 model, p=" + std::to_string(p));
        for (long D : {3L, 7L, 11L}) {
            FieldE F(D);
            auto el = elements_of_norm_at_most(F, 12);
            for (const auto& a : el)
                for (const auto& b : el) {
                    GlobalVector T{a, b};
                    BigInt nm = norm(T, F);
                    if (nm <= 0 || nm > 12 || nm % p != 0) continue;
                    LocalVectorData d = local_quadratic_data(T, F, p, Params{2, 3});
                    if (d.k > 2) continue;
                    QOptions qo;
                    qo.oracle = true;
                    qo.oracle_opt = opt.oracle;
                    std::string where = "D=" + std::to_string(D) + " T=" + to_string(T);
                    try {
                        SqrtPPoly q = q_poly(d, qo);
                        if (d.kind != SplitClass::Split) {
                            SqrtPPoly qn = q_from_series(natural_oracle_series(T, F, p, opt.oracle), d.kind, 2, p);
                            g.add(qn == q, where + " natural-coordinate oracle differs");
                        } else {
                            g.add(true, where);
                        }
                    } catch (const ConsistencyError& e) {
                        g.add(false, where + ": " + e.what());
                    }
                }
        }
        out.push_back(g.done());
    }
    return out;
}

std::vector<NamedCheck> suite_functional(const SuiteOptions& opt) {
    std::vector<NamedCheck> out;
    Tally tp("X^k P(1/X) = P(X)"), tr("X^{k+1} R(1/X) = R(X) and closed form = extraction");
    for (long p : primes_or_default(opt)) {
        for (const auto& shape : rank4_shapes(p)) {
            for (const auto& eta : sample_etas(shape, opt.per_shape, 3, 1000 + p)) {
                std::string where = shape_str(shape) + " eta=" + eta_str(eta);
                if (shape.form == QuadForm::SplitHyperbolic) {
                    int k = vp(quad_value(eta, shape), p);
                    IntPoly P = extract_P(term_series(eta, shape, k + 1, TermSource::ClosedForm), shape.m, p);
                    tp.add(P.degree() == k && P.satisfies_reflection(k), where);
                } else {
                    auto inv = ramified_invariants(eta, shape);
                    IntPoly R = extract_R(term_series(eta, shape, inv.k + 1, TermSource::ClosedForm), inv.k1,
                                          inv.k2, shape.m, p);
                    bool ok = R.satisfies_reflection(inv.k + 1) &&
                              R == R_closed_form(inv.k1, inv.k2, inv.k, shape.m, p);
                    tr.add(ok, where);
                }
            }
        }
    }
    out.push_back(tp.done());
    out.push_back(tr.done());

    Tally tq("X^{2k} Q(1/X) = Q(X), monic, closed form = series, n=2 model, norms <= 30");
    Tally tu("unit-norm series equal the normalizing factor");
    for (long D : {3L, 7L, 11L}) {
        FieldE F(D);
        auto el = elements_of_norm_at_most(F, 30);
        for (const auto& a : el)
            for (const auto& b : el) {
                GlobalVector T{a, b};
                BigInt nm = norm(T, F);
                if (nm <= 0 || nm > 30) continue;
                std::string where = "D=" + std::to_string(D) + " T=" + to_string(T);
                for (auto [p, e] : factorize(nm)) {
                    (void)e;
                    LocalVectorData d = local_quadratic_data(T, F, p, Params{2, 3});
                    try {
                        SqrtPPoly q = q_poly(d);
                        tq.add(q.is_monic() && q.degree() == 2 * d.k && q.satisfies_reflection(), where);
                    } catch (const ConsistencyError& ex) {
                        tq.add(false, where + ": " + ex.what());
                    }
                }
                for (long p : {2L, 3L, 5L, 7L, 11L}) {
                    if (nm % p == 0) continue;
                    LocalVectorData d = local_quadratic_data(T, F, p, Params{2, 3});
                    SeriesPoly want;
                    want.add_term(0, 1);
                    if (d.kind == SplitClass::Ramified)
                        want.add_term(1, -rpow(p, 1));
                    else
                        want.add_term(2, -rpow(p, 2));
                    tu.add(assemble_series(d) == want, where + " p=" + std::to_string(p));
                }
            }
    }
    out.push_back(tq.done());
    out.push_back(tu.done());
    return out;
}

std::vector<NamedCheck> suite_identities(const SuiteOptions&) {
    std::vector<NamedCheck> out;
    Tally tc("polynomial identity and Vandermonde sums, l <= 12");
    for (int l = 0; l <= 12; ++l) {
        auto r = comb_identity_check(l);
        tc.add(r.pass, "l=" + std::to_string(l) + ": " + r.detail);
    }
    out.push_back(tc.done());
    Tally tb("Bessel sum, l <= 6, C in {0.5, 1, 2}");
    for (int l = 0; l <= 6; ++l)
        for (double C : {0.5, 1.0, 2.0}) {
            auto r = bessel_sum_check(l, C);
            tb.add(r.pass, r.detail);
        }
    out.push_back(tb.done());
    Tally tg("center integral closed form, 20 random instances");
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    std::uniform_int_distribution<int> mi(0, 4), di(1, 4);
    for (int i = 0; i < 20; ++i) {
        double C = u(rng), Dv = u(rng);
        int m = mi(rng), nn = m + di(rng);
        auto r = gamma_integral_check(C, Dv, m, nn);
        tg.add(r.pass, r.detail);
    }
    out.push_back(tg.done());
    Tally tv("planar integrals and vanishing alternating sums, l <= 10");
    for (int l = 1; l <= 10; ++l)
        for (int j = 0; j <= l; ++j) {
            auto r = rank1_vanishing_check(l, j);
            tv.add(r.pass, "l=" + std::to_string(l) + " j=" + std::to_string(j) + ": " + r.detail);
        }
    out.push_back(tv.done());
    Tally tf("F_0 double sum = hypergeometric form, 100 random points");
    std::uniform_real_distribution<double> ab(0.0, 4.0);
    for (int i = 0; i < 100; ++i) {
        double A = ab(rng), B = ab(rng) + 1e-3;
        int l = i % 9;
        double x = f0_closed(A, B, l), y = f0_double_sum(A, B, l);
        tf.add(std::fabs(x - y) <= 1e-12 * std::fabs(x), "A=" + std::to_string(A) + " B=" + std::to_string(B));
    }
    out.push_back(tf.done());
    return out;
}

std::vector<NamedCheck> suite_denominators(const SuiteOptions&) {
    std::vector<NamedCheck> out;
    FieldE F(3);
    for (int l : {3, 4, 5}) {
        Params P{2, l};
        ExpansionTable t = full_expansion(P, F, 12);
        auto r = denominator_bound_check(t);
        NamedCheck c{"denominator bound, D=3 n=2 l=" + std::to_string(l) + " norms <= 12", r.pass, r.detail};
        out.push_back(c);
        Tally ti("local values are positive integers, l=" + std::to_string(l));
        for (const auto& e : t.entries) {
            if (e.rank != 2) continue;
            for (const auto& [p, q] : e.localPolys) {
                if (q.zero_marker) continue;
                BigRational v = sqrtp_eval_halfint_rat(q, 2 * l - 1);
                ti.add(is_integer(v) && v > 0, to_string(e.T) + " p=" + std::to_string(p));
            }
        }
        out.push_back(ti.done());
    }
    return out;
}

std::vector<NamedCheck> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "oracle") return suite_oracle(opt);
    if (name == "functional") return suite_functional(opt);
    if (name == "identities") return suite_identities(opt);
    if (name == "denominators") return suite_denominators(opt);
    if (name == "all") {
        std::vector<NamedCheck> out;
        for (const char* s : {"oracle", "functional", "identities", "denominators"}) {
            auto v = run_suite(s, opt);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }
    throw ValidationError("unknown suite: " + name);
}

}  // namespace qeis
