// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact;
// the only tolerances are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "swc/characters.hpp"
#include "swc/cycles.hpp"
#include "swc/repmodel.hpp"
#include "swc/suites.hpp"

using namespace swc;

namespace {

constexpr double kBudget[9] = {0, 1.0, 30.0, 30.0, 120.0, 300.0, 30.0, 30.0, 120.0};
constexpr int kPrime = 61;
constexpr int kR = 20;

Params params(int f, Subset jr) { return Params{f, kPrime, jr, std::vector<int>(f, kR)}; }

std::vector<TType> ttypes(int f) {
    std::vector<TType> out{{}};
    for (int j = 0; j < f; ++j) {
        std::vector<TType> next;
        for (const auto& t : out)
            for (T x : {T::Y, T::Z, T::YZ}) {
                next.push_back(t);
                next.back().push_back(x);
            }
        out.swap(next);
    }
    return out;
}

// every check of the named suite must pass; returns a failure note or ""
std::string suite_clean(const std::string& name, const Params& P, const std::vector<std::string>& tags = {}) {
    RunConfig c;
    c.P = P;
    c.suites = {name};
    const SuiteResult r = run_suite(name, c);
    size_t seen = 0;
    for (const auto& ch : r.checks) {
        bool wanted = tags.empty();
        for (const auto& t : tags) wanted |= ch.id.find("." + t + ".") != std::string::npos;
        if (!wanted) continue;
        ++seen;
        if (ch.status != Status::pass)
            return ch.id + " " + status_name(ch.status) + (ch.details.empty() ? "" : " (" + ch.details + ")");
    }
    if (seen == 0) return name + ": no matching checks";
    return "";
}

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
    void require_clean(const std::string& n) { require(n.empty(), n); }
};

Outcome c1() {
    Outcome o;
    for (int f = 1; f <= 5; ++f) {
        o.require(enumerate_dss(f).size() == (size_t{1} << f), "|D^ss| != 2^f at f=" + std::to_string(f));
        o.require(dss_tags_cover(f), "J-bijection fails at f=" + std::to_string(f));
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            o.require(enumerate_d(f, jr).size() == (size_t{1} << popcount(jr)),
                      "|D| != 2^|j_rho| at f=" + std::to_string(f) + " j_rho=" + subset_str(jr, f));
    }
    o.require(enumerate_pss_bruteforce(1).size() == 4 && enumerate_pss(1) == enumerate_pss_bruteforce(1), "f=1 P^ss");
    o.require(enumerate_pss_bruteforce(2).size() == 10 && enumerate_pss(2) == enumerate_pss_bruteforce(2), "f=2 P^ss");
    return o;
}

Outcome c2() {
    Outcome o;
    for (int f = 1; f <= 3; ++f)
        for (int p : {29, 61})
            o.require(digit_unique_search(f, p, 3).empty(),
                      "digit uniqueness counterexample at f=" + std::to_string(f) + " p=" + std::to_string(p));
    for (int f = 1; f <= 2; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            for (int m = 1; m <= 4; ++m) {
                const Params P = params(f, jr);
                o.require(P.generic(m + 1), "parameters not (m+1)-generic");
                const auto pset = enumerate_p(f, jr);
                const CollisionReport rep = collision_scan(pset, m, P);
                const std::string at = " at f=" + std::to_string(f) + " j_rho=" + subset_str(jr, f) + " m=" + std::to_string(m);
                o.require(rep.violations.empty(), "unclassified collision" + at);
                o.require(rep.missing_shifts.empty(), "shift pair not found" + at);
            }
    return o;
}

Outcome c3() {
    Outcome o;
    for (int f = 1; f <= 4; ++f) {
        for (Subset J1 = 0; J1 <= full_set(f); ++J1)
            for (Subset J2 = 0; J2 <= full_set(f); ++J2) {
                if (J1 & J2) continue;
                for (const auto& t : ttypes(f)) {
                    bool fits = true;
                    for (int j = 0; j < f; ++j)
                        if (has(J1 | J2, j) && t[j] != T::YZ) fits = false;
                    if (!fits) continue;
                    for (int d = 0; d <= popcount(J1 | J2) + 1; ++d)
                        o.require(total_mult(cycle_of(ideal_ijdt(f, J1, J2, d, t))) == total_mult_formula(f, J1, J2, d, t),
                                  "multiplicity formula at f=" + std::to_string(f) + " J1=" + subset_str(J1, f) +
                                      " J2=" + subset_str(J2, f) + " d=" + std::to_string(d));
                }
            }
        for (Subset jr = 0; jr <= full_set(f); ++jr) {
            const MultAddSweep s = mult_add_sweep(f, jr, 1);
            o.require(s.failures.empty(), "mult-add fails at f=" + std::to_string(f) + " j_rho=" + subset_str(jr, f));
            o.require(s.checked == static_cast<long long>(enumerate_p(f, jr).size()) * (f + 2), "mult-add sweep size");
            for (const auto& l : enumerate_p(f, jr))
                for (int i0 = -1; i0 <= f; ++i0)
                    o.require(cycle_additivity_check(ideal_a1(l, i0, jr), ideal_a(l, jr)),
                              "cycle additivity at " + to_string(l) + " i0=" + std::to_string(i0));
        }
    }
    return o;
}

Outcome c4() {
    Outcome o;
    for (int f = 1; f <= 3; ++f) o.require_clean(suite_clean("cm", params(f, full_set(f))));
    return o;
}

Outcome c5() {
    Outcome o;
    for (int f = 1; f <= 2; ++f) {
        o.require_clean(suite_clean("resolutions", params(f, full_set(f))));
        for (Subset jr = 0; jr <= full_set(f); ++jr) o.require_clean(suite_clean("tor", params(f, jr)));
    }
    return o;
}

Outcome c6() {
    Outcome o;
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr) {
            const Params P = params(f, jr);
            o.require(P.generic(2 * (f + 1) - 1), "parameters not generic enough for n = f+1");
            for (const auto& l : enumerate_p(f, jr)) {
                long long s = 0, c = 0;
                for (T x : t_type(l, jr)) (x == T::YZ ? c : s) += 1;
                for (int n = 1; n <= f + 1; ++n) {
                    long long want = 1;
                    for (int k = 0; k < s; ++k) want *= n;
                    for (int k = 0; k < c; ++k) want *= 2 * n - 1;
                    o.require(finite_length(ideal_a(l, jr), n) == want, "tau dimension at " + to_string(l));
                }
            }
            o.require_clean(suite_clean("characters", P, {"tau-dim", "tau-multfree"}));
        }
    return o;
}

Outcome c7() {
    Outcome o;
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr) {
            const Params P = params(f, jr);
            for (int a = -1; a <= f; ++a)
                for (int b = a + 1; b <= f; ++b)
                    o.require(subquot_char_identity(P, a, b).ok(), "subquotient identity at f=" + std::to_string(f) +
                                                                       " j_rho=" + subset_str(jr, f) + " (" +
                                                                       std::to_string(a) + ", " + std::to_string(b) + ")");
            long long cum = 0;
            for (int i0 = -1; i0 <= f; ++i0) {
                if (i0 >= 0) cum += binomial(f, i0);
                o.require(nonsplit_lattice(P, i0).dxi_dim == cum, "D_xi dimension");
            }
            o.require(cum == (1LL << f), "D_xi endpoint");
            std::vector<int> chain;
            for (int i = -1; i <= f; ++i) chain.push_back(i);
            const ChainVerdict v = chain_model(P, chain);
            o.require(v.ok() && v.length == f + 1, "maximal chain: " + v.detail);
        }
    for (int f = 1; f <= 5; ++f)
        for (Layers s = 0; s < (1u << (f + 1)); ++s)
            o.require(sigma_dual(sigma_dual(s, f), f) == s, "Sigma duality is not an involution");
    return o;
}

Outcome c8() {
    Outcome o;
    for (Subset jr : {Subset{0}, Subset{1}, Subset{3}}) {
        RunConfig c;
        c.P = params(2, jr);
        c.suites = known_suites();
        c.jobs = 1;
        const std::string a = report_json(c, run(c), false);
        c.jobs = 8;
        const std::string b = report_json(c, run(c), false);
        o.require(a == b, "reports differ between 1 and 8 jobs at j_rho=" + subset_str(jr, 2));
    }
    return o;
}

}  // namespace

int main() {
    const std::function<Outcome()> crit[] = {c1, c2, c3, c4, c5, c6, c7, c8};
    const char* names[] = {"enumeration",          "character engine",      "cycles",
                           "commutative CM",       "noncommutative Tor",    "tau dimensions",
                           "structural predictions", "determinism"};
    int failed = 0;
    for (int k = 0; k < 8; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = crit[k]();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > kBudget[k + 1]) {
            o.ok = false;
            o.note = "over the " + std::to_string(kBudget[k + 1]) + " s budget";
        }
        std::printf("%s criterion %d (%s) %.2fs%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, names[k], secs,
                    o.note.empty() ? "" : ": ", o.note.c_str());
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
