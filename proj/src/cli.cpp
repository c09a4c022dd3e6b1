#include "swc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "swc/cycles.hpp"
#include "swc/monomial.hpp"
#include "swc/resolution.hpp"
#include "swc/suites.hpp"
#include "swc/weights.hpp"

namespace swc {

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split_csv(s)) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.empty()) throw ConfigError("bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

TType parse_ttype(const std::string& s, int f) {
    TType t;
    for (const auto& tok : split_csv(s)) {
        if (tok == "y") t.push_back(T::Y);
        else if (tok == "z") t.push_back(T::Z);
        else if (tok == "yz") t.push_back(T::YZ);
        else throw ConfigError("t entries are y, z or yz, got '" + tok + "'");
    }
    if (static_cast<int>(t.size()) != f) throw ConfigError("t must have f entries");
    return t;
}

std::string tstr(const TType& t) {
    std::string s;
    for (size_t j = 0; j < t.size(); ++j) s += (j ? "," : "") + std::string(t_name(t[j]));
    return s;
}

std::vector<std::string> gens_str(const MonomialIdeal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.gens()) out.push_back(mono_str(g));
    return out;
}

struct Opts {
    int f = 0;
    int p = 0;
    std::string jrho, r, suite, lambda, t, set = "p", out, format = "text";
    int i0 = -2;
    int n = 0;
    int max_degree = -1;
    int jobs = 1;
};

void emit(std::ostream& out, const Opts& o, const nlohmann::ordered_json& j, const std::string& text) {
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

int cmd_enumerate(const Opts& o, std::ostream& out) {
    const Subset jr = parse_subset(o.jrho, o.f);
    std::vector<Lambda> ls;
    if (o.set == "pss") ls = enumerate_pss(o.f);
    else if (o.set == "p") ls = enumerate_p(o.f, jr);
    else if (o.set == "dss") ls = enumerate_dss(o.f);
    else if (o.set == "d") ls = enumerate_d(o.f, jr);
    else throw ConfigError("--set must be one of pss, p, dss, d");
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::ostringstream os;
    for (const auto& l : ls) {
        nlohmann::ordered_json e{{"lambda", to_string(l)}, {"J", subset_str(j_set(l), o.f)}};
        os << to_string(l) << "  J=" << subset_str(j_set(l), o.f);
        if (in_p(l, jr)) {
            e["t"] = tstr(t_type(l, jr));
            os << "  t=" << tstr(t_type(l, jr));
        }
        os << "\n";
        arr.push_back(e);
    }
    os << ls.size() << " elements\n";
    emit(out, o, {{"set", o.set}, {"count", ls.size()}, {"elements", arr}}, os.str());
    return 0;
}

Lambda need_lambda(const Opts& o, Subset jr) {
    if (o.lambda.empty()) throw ConfigError("--lambda is required");
    const Lambda l = parse_lambda(o.lambda, o.f);
    if (!in_p(l, jr)) throw ConfigError("lambda is not in P for this j_rho");
    return l;
}

int cmd_ideal(const Opts& o, std::ostream& out) {
    const Subset jr = parse_subset(o.jrho, o.f);
    const Lambda l = need_lambda(o, jr);
    const MonomialIdeal a = ideal_a(l, jr);
    nlohmann::ordered_json j{{"lambda", to_string(l)}, {"a", gens_str(a)}};
    std::ostringstream os;
    os << "a(lambda) = " << a.str() << "\n";
    if (o.i0 != -2) {
        const MonomialIdeal a1 = ideal_a1(l, o.i0, jr);
        j["i0"] = o.i0;
        j["a1"] = gens_str(a1);
        os << "a1^" << o.i0 << "(lambda) = " << a1.str() << "\n";
    }
    emit(out, o, j, os.str());
    return 0;
}

int cmd_cycle(const Opts& o, std::ostream& out) {
    const Subset jr = parse_subset(o.jrho, o.f);
    const Lambda l = need_lambda(o, jr);
    const MonomialIdeal I = o.i0 == -2 ? ideal_a(l, jr) : ideal_a1(l, o.i0, jr);
    const CycleVector c = cycle_of(I);
    nlohmann::ordered_json j{{"lambda", to_string(l)}, {"cycle", c}, {"multiplicity", total_mult(c)}};
    std::ostringstream os;
    os << "Z = (";
    for (size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ")  m = " << total_mult(c) << "\n";
    if (o.i0 != -2) {
        const MultAdd ma = mult_add(l, o.i0, jr);
        j["mult_add"] = {{"a1", ma.lhs_a1}, {"star", ma.lhs_star}, {"a", ma.rhs}, {"ok", ma.ok()}};
        os << "m(a1) + m(a1 of star) = " << ma.lhs_a1 << " + " << ma.lhs_star << ", m(a) = " << ma.rhs
           << (ma.ok() ? "  ok" : "  MISMATCH") << "\n";
    }
    emit(out, o, j, os.str());
    return 0;
}

int cmd_hilbert(const Opts& o, std::ostream& out) {
    const Subset jr = parse_subset(o.jrho, o.f);
    const Lambda l = need_lambda(o, jr);
    MonomialIdeal I = o.i0 == -2 ? ideal_a(l, jr) : ideal_a1(l, o.i0, jr);
    if (o.n > 0) I = ideal_sum(I, ideal_In(o.f, o.n));
    const int D = o.max_degree >= 0 ? o.max_degree : 2 * o.f + 2;
    const auto h = hilbert_function(I, D);
    std::ostringstream os;
    for (int d = 0; d <= D; ++d) os << "H(" << d << ") = " << h[d] << "\n";
    emit(out, o, {{"lambda", to_string(l)}, {"ideal", gens_str(I)}, {"hilbert", h}}, os.str());
    return 0;
}

int cmd_tor(const Opts& o, std::ostream& out) {
    TType t;
    if (!o.t.empty()) {
        t = parse_ttype(o.t, o.f);
    } else {
        const Subset jr = parse_subset(o.jrho, o.f);
        t = t_type(need_lambda(o, jr), jr);
    }
    const int imax = 2 * o.f;
    const int D = o.max_degree >= 0 ? o.max_degree : 4 * o.f + 2;
    const unsigned q = o.p > D ? static_cast<unsigned>(o.p) : 32003u;
    const Resolution r = resolve(CyclicModule{t, o.n}, imax, D, q, o.jobs);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& row : r.terms) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& e : row) a.push_back({{"shift", e.shift}, {"wt", e.wt}});
        terms.push_back(a);
    }
    nlohmann::ordered_json j{{"t", tstr(t)}, {"n", o.n},       {"window", D},
                             {"terms", terms}, {"complete", r.complete},
                             {"verified", r.minimal && r.complex_ok && r.exact_ok}};
    std::ostringstream os;
    os << "t=" << tstr(t) << (o.n ? " with I^(" + std::to_string(o.n) + ")" : "") << ", window " << D
       << (r.complete ? "" : " (incomplete)") << "\n"
       << betti_str(r.terms);
    emit(out, o, j, os.str());
    return 0;
}

int cmd_verify(const Opts& o, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    cfg.P.f = o.f;
    cfg.P.p = o.p;
    cfg.P.j_rho = parse_subset(o.jrho, o.f);
    cfg.P.r = parse_ints(o.r);
    cfg.max_degree = o.max_degree;
    cfg.jobs = o.jobs;
    for (const auto& s : split_csv(o.suite)) {
        if (s == "all")
            for (const auto& k : known_suites()) cfg.suites.push_back(k);
        else
            cfg.suites.push_back(s);
    }
    // keep the requested order, drop repeats
    std::vector<std::string> uniq;
    for (const auto& s : cfg.suites)
        if (std::find(uniq.begin(), uniq.end(), s) == uniq.end()) uniq.push_back(s);
    cfg.suites = uniq;

    const auto results = run(cfg);
    const std::string json = report_json(cfg, results);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            err << "error: cannot write " << o.out << "\n";
            return 2;
        }
        f << json;
    }
    out << (o.format == "json" ? json : report_text(cfg, results));
    return exit_code(summarize(results));
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"swc: Serre weight combinatorics and the homological checks built on it"};
    app.require_subcommand(1);
    Opts o;

    auto common = [&](CLI::App* sc) {
        sc->add_option("--f", o.f, "residue degree f")->required()->check(CLI::Range(1, 16));
        sc->add_option("--jrho", o.jrho, "j_rho as comma-separated indices; empty for the empty set");
        sc->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sc->add_option("--p", o.p, "prime p");
        sc->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        sc->add_option("--max-degree", o.max_degree, "degree window override");
    };
    auto lam = [&](CLI::App* sc) {
        sc->add_option("--lambda", o.lambda, "tuple of symbols, e.g. x,p-1-x");
        sc->add_option("--i0", o.i0, "lattice coordinate in [-1, f]");
    };

    auto* en = app.add_subcommand("enumerate", "list P^ss, P, D^ss or D");
    common(en);
    en->add_option("--set", o.set, "pss, p, dss or d");
    auto* id = app.add_subcommand("ideal", "a(lambda) and a1^{i0}(lambda)");
    common(id);
    lam(id);
    auto* cy = app.add_subcommand("cycle", "characteristic cycle of Rbar/a(lambda) or Rbar/a1^{i0}(lambda)");
    common(cy);
    lam(cy);
    auto* hi = app.add_subcommand("hilbert", "Hilbert function of a quotient of Rbar");
    common(hi);
    lam(hi);
    hi->add_option("--n", o.n, "also divide by I^(n)");
    auto* to = app.add_subcommand("tor", "minimal resolution of gr(Lambda)/(t, h) [+ I^(n)]");
    common(to);
    lam(to);
    to->add_option("--t", o.t, "t-type, e.g. y,yz");
    to->add_option("--n", o.n, "also divide by I^(n)");
    auto* ve = app.add_subcommand("verify", "run check suites and write a report");
    common(ve);
    ve->get_option("--p")->required();
    ve->get_option("--jrho")->required();
    ve->add_option("--r", o.r, "r_0,...,r_{f-1}")->required();
    ve->add_option("--suite", o.suite, "suite names, comma-separated, or all")->required();
    ve->add_option("--out", o.out, "report path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (o.jrho == "none") o.jrho.clear();
        if (*en) return cmd_enumerate(o, out);
        if (*id) return cmd_ideal(o, out);
        if (*cy) return cmd_cycle(o, out);
        if (*hi) return cmd_hilbert(o, out);
        if (*to) return cmd_tor(o, out);
        if (*ve) return cmd_verify(o, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotRealizable& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace swc
