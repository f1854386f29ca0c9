#include "qeis/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "qeis/fourier_global.hpp"
#include "qeis/sk_lift.hpp"
#include "qeis/verify.hpp"

namespace qeis::cli {

namespace {

using J = nlohmann::ordered_json;

struct RunConfig {
    long D = 3;
    int n = 2;
    int ell = 3;
    std::string T;
    long p = 0;
    long bound = 1;
    std::string out;
    std::string format = "json";
    bool oracle = false;
    std::string suite = "all";
    std::string eigenvalues;
    int workers = 0;
    long long budget = 0;
};

GlobalVector parse_T(const std::string& s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            v.push_back(std::stol(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ValidationError("--T expects four integers ax,ay,bx,by");
        }
    }
    if (v.size() != 4) throw ValidationError("--T expects four integers ax,ay,bx,by");
    return {{BigInt(v[0]), BigInt(v[1])}, {BigInt(v[2]), BigInt(v[3])}};
}

OracleOptions oracle_options(const RunConfig& c) {
    OracleOptions o;
    o.budget = c.budget;
    o.workers = c.workers;
    return o;
}

void emit(const std::string& text, const RunConfig& c, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw ValidationError("cannot open output file " + c.out);
    f << text;
}

int cmd_local(const RunConfig& c, std::ostream& out) {
    if (c.T.empty()) throw ValidationError("local needs --T");
    if (c.p == 0) throw ValidationError("local needs --p");
    FieldE F(c.D);
    Params P{c.n, c.ell};
    P.validate();
    GlobalVector T = parse_T(c.T);
    LocalVectorData d = local_quadratic_data(T, F, c.p, P);
    QOptions qo;
    qo.oracle = c.oracle;
    qo.oracle_opt = oracle_options(c);
    SqrtPPoly q = q_poly(d, qo);
    J j;
    j["case"] = to_string(d.kind);
    j["k"] = d.k;
    if (d.kind == SplitClass::Ramified) {
        j["k1"] = d.k1;
        j["k2"] = d.k2;
    }
    j["Q"] = q.zero_marker ? J(nullptr) : to_json(q);
    if (c.oracle) j["oracle"] = "agree";
    if (c.format == "csv") {
        std::string s = "case,k,Q\n" + std::string(to_string(d.kind)) + "," + std::to_string(d.k) + ",\"";
        for (size_t i = 0; i < q.d.size(); ++i) s += (i ? " " : "") + q.d[i].get_str();
        emit(s + "\"\n", c, out);
    } else {
        emit(j.dump() + "\n", c, out);
    }
    return 0;
}

int cmd_expand(const RunConfig& c, std::ostream& out) {
    FieldE F(c.D);
    Params P{c.n, c.ell};
    ExpansionOptions eo;
    eo.workers = c.workers;
    eo.budget = c.budget;
    eo.oracle = c.oracle;
    ExpansionTable t = full_expansion(P, F, c.bound, eo);
    emit(c.format == "csv" ? to_csv(t) : to_json(t).dump(1) + "\n", c, out);
    return 0;
}

int cmd_lift(const RunConfig& c, std::ostream& out) {
    if (c.T.empty()) throw ValidationError("lift needs --T");
    FieldE F(c.D);
    Params P{c.n, c.ell};
    EigenformData h;
    if (c.eigenvalues.empty()) {
        h = delta_eigenform();
    } else {
        std::ifstream f(c.eigenvalues);
        if (!f) throw ValidationError("cannot open " + c.eigenvalues);
        nlohmann::json jj;
        try {
            f >> jj;
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("eigenvalue file: ") + e.what());
        }
        h = eigenform_from_json(jj);
    }
    GlobalVector T = parse_T(c.T);
    LiftValue v = lift_coefficient(T, h, P, F);
    J j;
    j["T"] = J::parse(to_string(T));
    j["weight"] = h.weight;
    j["exact"] = v.exact;
    if (v.exact) j["value"] = to_string(v.rational);
    j["numeric"] = {v.numeric.real(), v.numeric.imag()};
    J fac = J::object();
    for (auto [p, e] : factorize(norm(T, F))) {
        (void)e;
        EulerFactor ef = standard_L_factors(p, h, P, F);
        J roots = J::array();
        for (auto g : ef.bc_roots) roots.push_back({g.real(), g.imag()});
        for (auto g : ef.zeta_roots) roots.push_back({g.real(), g.imag()});
        fac[std::to_string(p)] = {{"case", to_string(ef.kind)}, {"degree", ef.degree()}, {"reciprocal_roots", roots}};
    }
    j["euler_factors"] = fac;
    emit(j.dump() + "\n", c, out);
    return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    SuiteOptions so;
    if (c.p != 0) {
        if (!is_prime(c.p)) throw ValidationError("not a prime: " + std::to_string(c.p));
        so.primes = {c.p};
    }
    so.oracle = oracle_options(c);
    auto checks = run_suite(c.suite, so);
    J j;
    j["suite"] = c.suite;
    bool all = true;
    J fails = J::array();
    for (const auto& k : checks) {
        if (!k.pass) {
            all = false;
            fails.push_back({{"check", k.name}, {"counterexample", k.detail}});
        }
    }
    j["pass"] = all;
    j["checks"] = checks.size();
    j["failures"] = fails;
    emit(j.dump() + "\n", c, out);
    return all ? 0 : 3;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"quaternionic Heisenberg Eisenstein series coefficients"};
    app.require_subcommand(1);
    RunConfig c;
    auto common = [&](CLI::App* s) {
        s->add_option("--D", c.D, "D, squarefree, D = 3 mod 4");
        s->add_option("--n", c.n, "n = 2 mod 4");
        s->add_option("--ell", c.ell, "weight l > n");
        s->add_option("--workers", c.workers, "worker threads (0: all cores)");
        s->add_option("--budget", c.budget, "enumeration budget");
        s->add_option("--out", c.out, "output file");
        s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto* local = app.add_subcommand("local", "local polynomial Q_{T,p}");
    common(local);
    local->add_option("--T", c.T, "ax,ay,bx,by")->required();
    local->add_option("--p", c.p, "prime")->required();
    local->add_flag("--oracle", c.oracle, "also compare against the enumeration oracle");

    auto* expand = app.add_subcommand("expand", "expansion table");
    common(expand);
    expand->add_option("--bound", c.bound, "largest norm listed");
    expand->add_flag("--oracle", c.oracle, "cross-check local polynomials by enumeration");

    auto* lift = app.add_subcommand("lift", "lift coefficient from Hecke eigenvalues");
    common(lift);
    lift->add_option("--T", c.T, "ax,ay,bx,by")->required();
    lift->add_option("--eigenvalues", c.eigenvalues, "JSON {\"weight\": w, \"ap\": {...}}; default Delta");

    auto* verify = app.add_subcommand("verify", "verification suites");
    common(verify);
    verify->add_option("--suite", c.suite, "oracle, functional, identities, denominators, all");
    verify->add_option("--p", c.p, "restrict oracle suites to one prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }
    try {
        if (*local) return cmd_local(c, out);
        if (*expand) return cmd_expand(c, out);
        if (*lift) return cmd_lift(c, out);
        if (*verify) return cmd_verify(c, out);
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 4;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}

}  // namespace qeis::cli
