#include "swc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "swc/characters.hpp"
#include "swc/cycles.hpp"
#include "swc/monomial.hpp"
#include "swc/repmodel.hpp"
#include "swc/resolution.hpp"
#include "swc/taylor.hpp"

namespace swc {

namespace {

class Builder {
public:
    Builder(std::string suite, std::string module) : module_(std::move(module)) { res_.name = std::move(suite); }

    void set_module(std::string m) { module_ = std::move(m); }

    std::string next_id(const std::string& tag) { return module_ + "." + tag + "." + std::to_string(counter_[module_ + "." + tag]++); }

    void add(const std::string& tag, const std::string& anchor, Status s, std::string details) {
        res_.checks.push_back({next_id(tag), anchor, s, std::move(details)});
    }
    void add(const std::string& tag, const std::string& anchor, bool ok, std::string details) {
        add(tag, anchor, ok ? Status::pass : Status::fail, std::move(details));
    }
    // per-item checks computed in parallel, appended in item order
    template <class Fn>
    void add_parallel(const std::string& tag, const std::string& anchor, int n, int jobs, Fn fn) {
        std::vector<std::pair<Status, std::string>> slots(n);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
        for (int k = 0; k < n; ++k) slots[k] = fn(k);
        for (auto& [s, d] : slots) add(tag, anchor, s, std::move(d));
    }

    SuiteResult take() { return std::move(res_); }

private:
    std::string module_;
    SuiteResult res_;
    std::map<std::string, int> counter_;
};

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
    return s;
}

std::string tstr(const TType& t) {
    std::string s;
    for (size_t j = 0; j < t.size(); ++j) s += (j ? "," : "") + std::string(t_name(t[j]));
    return s;
}

std::vector<TType> all_ttypes(int f) {
    std::vector<TType> out{{}};
    for (int j = 0; j < f; ++j) {
        std::vector<TType> next;
        for (const auto& t : out)
            for (T x : {T::Y, T::Z, T::YZ}) {
                TType u = t;
                u.push_back(x);
                next.push_back(u);
            }
        out.swap(next);
    }
    return out;
}

// PBW coefficients involve k! and binomials up to the window; below that the
// configured prime would kill them
unsigned pbw_prime(const Params& P, int Dmax) { return P.p > Dmax ? static_cast<unsigned>(P.p) : 32003u; }

std::string prime_note(const Params& P, unsigned q) {
    return static_cast<int>(q) == P.p ? "" : " (over F_32003: p is not above the degree window)";
}

// ---------------------------------------------------------------- enumeration

SuiteResult suite_enumeration(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("enumeration", "weights");

    const auto pss = enumerate_pss(f);
    if (f <= 6) {
        const auto brute = enumerate_pss_bruteforce(f);
        b.add("pss-bruteforce", "P^ss membership by the successor rule", pss == brute,
              "|P^ss| = " + std::to_string(pss.size()) + ", brute force " + std::to_string(brute.size()));
    }
    if (f == 1 || f == 2) {
        const size_t want = f == 1 ? 4 : 10;
        b.add("pss-count", "P^ss size for small f", pss.size() == want,
              "|P^ss| = " + std::to_string(pss.size()) + ", expected " + std::to_string(want));
    }
    const auto dss = enumerate_dss(f);
    b.add("dss-count", "|D^ss| = 2^f", dss.size() == (size_t{1} << f),
          "|D^ss| = " + std::to_string(dss.size()));
    b.add("dss-bijection", "D^ss bijects with subsets via J", dss_tags_cover(f),
          "every subset is the J-set of exactly one element");
    const auto d = enumerate_d(f, P.j_rho);
    b.add("d-count", "|W(rho)| = 2^{|j_rho|}", d.size() == (size_t{1} << popcount(P.j_rho)),
          "|D| = " + std::to_string(d.size()) + " for j_rho = " + subset_str(P.j_rho, f));

    std::vector<long long> layer(f + 1, 0), dlayer(f + 1, 0);
    for (const auto& l : pss) ++layer[ell(l)];
    for (const auto& l : dss) ++dlayer[ell(l)];
    long long tot = 0;
    bool binom_ok = true;
    for (int i = 0; i <= f; ++i) {
        tot += layer[i];
        binom_ok &= dlayer[i] == binomial(f, i);
    }
    b.add("layers", "layer counts of P^ss and D^ss", tot == static_cast<long long>(pss.size()) && binom_ok,
          "P^ss layers sum to " + std::to_string(tot) + "; D^ss layer sizes are binomial: " + (binom_ok ? "yes" : "no"));

    const auto pset = enumerate_p(f, P.j_rho);
    bool sub = true;
    for (const auto& l : pset) sub &= in_pss(l);
    b.add("p-filter", "P is cut out of P^ss by j_rho", sub, "|P| = " + std::to_string(pset.size()));

    for (StarRule rule : {StarRule::side_flip, StarRule::pointwise_fix}) {
        const StarContract c = verify_star_contract(f, P.j_rho, rule);
        const bool must = rule == StarRule::side_flip;
        std::string det = std::string(star_rule_name(rule)) + ": " + (c.ok ? "involution on P preserving cycles" : c.failures.front());
        if (must)
            b.add("star", "star involution on P", c.ok, det);
        else
            b.add("star", "star involution on P", Status::pass, det + (c.ok ? "" : " (rule not used)"));
    }

    b.set_module("repmodel");
    bool xyz = true;
    std::string bad;
    for (const auto& mu : pset) {
        const TType t = t_type(mu, P.j_rho);
        const ParamSets ps = param_sets(mu, P.j_rho);
        for (int j = 0; j < f; ++j) {
            const bool ok = has(ps.Y, j) == (t[j] != T::Y) && has(ps.Z, j) == (t[j] != T::Z);
            if (!ok && bad.empty()) bad = to_string(mu);
            xyz &= ok;
        }
    }
    b.add("param-sets", "Y(mu), Z(mu) read off the t-type", xyz,
          xyz ? "checked " + std::to_string(pset.size()) + " elements of P" : "mismatch at " + bad);
    bool xp = true;
    for (const auto& l : pss)
        if (!projection_x_property(l, P.j_rho)) {
            xp = false;
            bad = to_string(l);
            break;
        }
    b.add("x-projection", "X(mu) n J1 empty and X(mu) u J1 in X^ss(lambda) u J2", xp,
          xp ? "checked " + std::to_string(pss.size()) + " elements of P^ss" : "fails at " + bad);

    bool jh = true;
    for (Subset Jt = 0; Jt <= full_set(f) && f <= 8; ++Jt) {
        const Subset Js = Jt & P.j_rho;
        const auto tags = jh_I_sigma_tau(Js, Jt);
        int maxes = 0;
        for (const auto& w : tags) maxes += w.ell() == popcount(Jt) ? 1 : 0;
        jh &= tags.size() == (size_t{1} << popcount(Jt & ~Js)) && maxes == 1 &&
              std::find(tags.begin(), tags.end(), WeightTag{Jt}) != tags.end();
    }
    b.add("jh-interval", "JH interval between J_sigma and J_tau", jh,
          "sizes 2^{|J_tau - J_sigma|}, unique longest element tau");
    return b.take();
}

// ---------------------------------------------------------------- characters

SuiteResult suite_characters(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("characters", "characters");
    const Modulus M(f, P.p);

    if (f <= 4) {
        const auto bad = digit_unique_search(f, P.p, 3);
        b.add("digit-unique", "uniqueness of p-adic digit expansions", bad.empty(),
              bad.empty() ? "no counterexample with weight <= 3" : std::to_string(bad.size()) + " counterexamples");
    }

    const auto pss = enumerate_pss(f);
    std::vector<Char> chis;
    for (const auto& l : pss) chis.push_back(chi_lambda(M, l));
    const Distinctness dd = distinctness(M, chis, P.r);
    b.add("chi-distinct", "chi_lambda distinct on P^ss", dd.formal_dups == 0,
          std::to_string(dd.formal_dups) + " formal coincidences, " + std::to_string(dd.evaluated_dups) +
              " evaluated-only at the configured r");

    const auto pset = enumerate_p(f, P.j_rho);
    const int m = std::min(4, P.genericity() - 1);
    const CollisionReport cr = collision_scan(pset, m, P, cfg.jobs);
    b.add("collision-classified", "twisted characters collide only through shifts", cr.violations.empty(),
          std::to_string(cr.hits.size()) + " formal hits with |i_j| <= " + std::to_string(m) + ", " +
              std::to_string(cr.violations.size()) + " unclassified, " + std::to_string(cr.evaluated_only.size()) +
              " evaluated-only");
    b.add("collision-shifts", "every shift pair is a collision", cr.missing_shifts.empty(),
          std::to_string(cr.missing_shifts.size()) + " shift pairs not found");

    // finite quotients tau^(n) of N
    b.set_module("monomial");
    const int g = P.genericity();
    for (int n = 1; n <= f + 1; ++n) {
        if (2 * n - 1 > g) break;
        bool dims = true;
        std::vector<Char> all;
        for (const auto& l : pset) {
            const TType t = t_type(l, P.j_rho);
            long long s = 0, c = 0;
            for (T x : t) (x == T::YZ ? c : s) += 1;
            long long want = 1;
            for (int k = 0; k < s; ++k) want *= n;
            for (int k = 0; k < c; ++k) want *= 2 * n - 1;
            const MonomialIdeal a = ideal_a(l, P.j_rho);
            dims &= finite_length(a, n) == want;
            const auto gc = graded_characters(M, l, ideal_sum(a, ideal_In(f, n)), n - 1);
            for (const auto& layer : gc) all.insert(all.end(), layer.begin(), layer.end());
        }
        b.add("tau-dim", "dim of Rbar/(I^(n) + a(lambda)) = n^s (2n-1)^c", dims, "n = " + std::to_string(n));
        const Distinctness dn = distinctness(M, all, P.r);
        b.add("tau-multfree", "degree < n characters of N/I^(n)N are multiplicity free", dn.formal_dups == 0,
              "n = " + std::to_string(n) + ": " + std::to_string(all.size()) + " characters, " +
                  std::to_string(dn.formal_dups) + " formal repeats, " + std::to_string(dn.evaluated_dups) +
                  " evaluated-only");
    }
    return b.take();
}

// ---------------------------------------------------------------- cycles

SuiteResult suite_cycles(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("cycles", "cycles");

    // the multiplicity formula against localization, one check per d
    if (f <= 6) {
        for (int d = 0; d <= f + 1; ++d) {
            long long cases = 0;
            std::string bad;
            for (Subset J1 = 0; J1 <= full_set(f); ++J1)
                for (Subset J2 = 0; J2 <= full_set(f); ++J2) {
                    if (J1 & J2) continue;
                    for (const auto& t : all_ttypes(f)) {
                        bool fits = true;
                        for (int j = 0; j < f; ++j)
                            if (has(J1 | J2, j) && t[j] != T::YZ) fits = false;
                        if (!fits) continue;
                        ++cases;
                        const long long want = total_mult_formula(f, J1, J2, d, t);
                        const long long got = total_mult(cycle_of(ideal_ijdt(f, J1, J2, d, t)));
                        if (want != got && bad.empty())
                            bad = "J1=" + subset_str(J1, f) + " J2=" + subset_str(J2, f) + " t=" + tstr(t);
                    }
                }
            b.add("mult-formula", "total multiplicity of Rbar/I(J1,J2,d,t)", bad.empty(),
                  "d = " + std::to_string(d) + ", " + std::to_string(cases) + " cases" + (bad.empty() ? "" : ", fails at " + bad));
        }
    }

    const auto pset = enumerate_p(f, P.j_rho);
    std::vector<std::pair<Lambda, int>> items;
    for (const auto& l : pset)
        for (int i0 = -1; i0 <= f; ++i0) items.emplace_back(l, i0);
    b.add_parallel("mult-add", "m(a1^{i0}(l)) + m(a1^{f-1-i0}(l*)) = m(a(l))", static_cast<int>(items.size()), cfg.jobs,
                   [&](int k) {
                       const auto& [l, i0] = items[k];
                       const MultAdd ma = mult_add(l, i0, P.j_rho);
                       const bool add = cycle_additivity_check(ideal_a1(l, i0, P.j_rho), ideal_a(l, P.j_rho));
                       std::string det = "lambda=(" + to_string(l) + ") i0=" + std::to_string(i0) + ": " +
                                         std::to_string(ma.lhs_a1) + " + " + std::to_string(ma.lhs_star) + " vs " +
                                         std::to_string(ma.rhs) + (add ? "" : "; cycle additivity fails");
                       return std::make_pair(ma.ok() && add ? Status::pass : Status::fail, det);
                   });
    return b.take();
}

// ---------------------------------------------------------------- cm

Status cm_status(const CmResult& r, int grade, std::string& det) {
    det = std::string(cm_verdict_name(r.verdict)) + ", grade " + std::to_string(r.grade) + ", " +
          std::to_string(r.ext.chambers) + " chambers";
    if (r.verdict == CmVerdict::inconclusive) return Status::inconclusive;
    return r.verdict == CmVerdict::cm && r.grade == grade && r.ext.euler_ok ? Status::pass : Status::fail;
}

SuiteResult suite_cm(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("cm", "homology");
    const unsigned q = static_cast<unsigned>(P.p);
    const int window = cfg.max_degree;

    // engineered failure: two disjoint edges
    {
        std::vector<Mono> g{mono_mul(mono_y(2, 0), mono_z(2, 1)), mono_mul(mono_z(2, 0), mono_y(2, 1))};
        const CmResult r = is_cm(MonomialIdeal(2, g), -1, q);
        b.add("negative-control", "a disconnected complex is not Cohen-Macaulay", r.verdict == CmVerdict::not_cm,
              std::string("Rbar/(y0 z1, z0 y1) with f = 2: ") + cm_verdict_name(r.verdict));
    }

    for (Subset J1 = 0; J1 <= full_set(f) && f <= 6; ++J1)
        for (Subset J2 = 0; J2 <= full_set(f); ++J2) {
            if (J1 & J2) continue;
            for (int d = 2; d <= popcount(J1 | J2) + 1; ++d) {
                const Shelling sh = shellability_check(f, J1, J2, d);
                b.add("shelling", "facet order by |J(x)| is a shelling", sh.shellable,
                      "J1=" + subset_str(J1, f) + " J2=" + subset_str(J2, f) + " d=" + std::to_string(d) +
                          (sh.shellable ? "" : ": " + sh.failure));
            }
        }

    if (f > 3) {
        b.add("ext-range", "Ext certification range", Status::inconclusive,
              "Taylor certification is run for f <= 3 only");
        return b.take();
    }

    struct Item {
        std::string tag, anchor, name;
        MonomialIdeal I;
    };
    std::vector<Item> items;
    for (const auto& t : all_ttypes(f))
        items.push_back({"basic-cm", "Rbar/(t) is Cohen-Macaulay of grade f", "t=" + tstr(t), ideal_t(t)});
    for (int d = 1; d <= f; ++d)
        items.push_back({"id-cm", "Rbar/I_d is Cohen-Macaulay of grade f", "d=" + std::to_string(d),
                         ideal_ijd(f, 0, full_set(f), d)});
    for (Subset J1 = 0; J1 <= full_set(f); ++J1)
        for (Subset J2 = 0; J2 <= full_set(f); ++J2) {
            if ((J1 & J2) || !(J1 | J2)) continue;
            for (const auto& t : all_ttypes(f)) {
                bool fits = true;
                for (int j = 0; j < f; ++j)
                    if (has(J1 | J2, j) && t[j] != T::YZ) fits = false;
                if (!fits) continue;
                for (int d = 1; d <= popcount(J1 | J2); ++d)
                    items.push_back({"kunneth-cm", "Rbar/I(J1,J2,d,t) is Cohen-Macaulay of grade f",
                                     "J1=" + subset_str(J1, f) + " J2=" + subset_str(J2, f) + " d=" + std::to_string(d) +
                                         " t=" + tstr(t),
                                     ideal_ijdt(f, J1, J2, d, t)});
            }
        }
    std::vector<std::pair<Status, std::string>> slots(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.jobs))
    for (int k = 0; k < static_cast<int>(items.size()); ++k) {
        std::string det;
        const Status s = cm_status(is_cm(items[k].I, window, q), f, det);
        slots[k] = {s, items[k].name + ": " + det};
    }
    for (size_t k = 0; k < items.size(); ++k) b.add(items[k].tag, items[k].anchor, slots[k].first, slots[k].second);
    return b.take();
}

// ---------------------------------------------------------------- resolutions

SuiteResult suite_resolutions(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("resolutions", "homology");

    {
        const unsigned q = pbw_prime(P, 8);
        for (T t : {T::Y, T::Z, T::YZ})
            for (bool full : {false, true}) {
                const TableCheck c = resolution_tables(t, full, 3, q);
                const Resolution& r = c.computed;
                const bool verified = r.minimal && r.complex_ok && r.exact_ok;
                Status s = c.match && verified ? Status::pass : Status::fail;
                if (s == Status::fail && !r.complete) s = Status::inconclusive;
                b.add("table", "single-factor minimal resolution term lists", s,
                      std::string("t=") + t_name(t) + (full ? " with I^(3)" : " boxed") +
                          (c.match ? "" : ": " + c.diff) + prime_note(P, q));
            }
    }

    if (f > 2) {
        b.add("products", "Kunneth products of the single-factor tables", Status::inconclusive,
              "noncommutative resolutions are computed for f <= 2 only");
        return b.take();
    }
    const int imax = 2 * f;
    const int Dmax = cfg.max_degree >= 0 ? cfg.max_degree : 4 * f + 2;
    const unsigned q = pbw_prime(P, Dmax);
    for (const auto& t : all_ttypes(f))
        for (bool full : {false, true}) {
            const TableCheck c = resolution_tables(t, full, imax, Dmax, q, cfg.jobs);
            const Resolution& r = c.computed;
            Status s = c.match && r.minimal && r.complex_ok && r.exact_ok ? Status::pass : Status::fail;
            if (!r.complete) s = s == Status::pass ? Status::inconclusive : s;
            b.add("products", "Kunneth products of the single-factor tables", s,
                  "t=" + tstr(t) + (full ? " with I^(3)" : " boxed") + ", window " + std::to_string(Dmax) +
                      (c.match ? "" : ": " + c.diff) + prime_note(P, q));
        }
    for (const auto& t : all_ttypes(f)) {
        const DualBound db = dual_degree_bound_check(t, q, cfg.jobs);
        Status s = db.ok ? Status::pass : (db.complete ? Status::fail : Status::inconclusive);
        b.add("dual-bound", "top term shift 3(f-d)+4d lies in [3f, 4f]", s,
              "t=" + tstr(t) + ": top shift " + std::to_string(db.top_shift) + ", predicted " + std::to_string(db.predicted));
    }
    return b.take();
}

// ---------------------------------------------------------------- tor

std::vector<BettiEntry> wedge(const std::vector<BettiEntry>& t1, int i, int f) {
    std::vector<BettiEntry> out;
    const int n = static_cast<int>(t1.size());
    for (unsigned S = 0; S < (1u << n); ++S) {
        if (popcount(S) != i) continue;
        BettiEntry e{0, std::vector<int>(f, 0)};
        for (int k = 0; k < n; ++k)
            if ((S >> k) & 1u) {
                e.shift += t1[k].shift;
                for (int j = 0; j < f; ++j) e.wt[j] += t1[k].wt[j];
            }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SuiteResult suite_tor(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("tor", "homology");
    if (f > 2) {
        b.add("tor-dims", "dim Tor_i(F, N) = C(2f, i) |P|", Status::inconclusive,
              "noncommutative Tor is computed for f <= 2 only");
        return b.take();
    }
    const Modulus M(f, P.p);
    const int imax = 2 * f;
    const int Dmax = cfg.max_degree >= 0 ? cfg.max_degree : 4 * f + 2;
    const unsigned q = pbw_prime(P, Dmax);
    const auto pset = enumerate_p(f, P.j_rho);
    const TorData tn = tor_grlambda(P, pset, 0, imax, Dmax, q, cfg.jobs);
    const TorData tq = tor_grlambda(P, pset, 3, imax, Dmax, q, cfg.jobs);
    const bool sound = tn.verified && tq.verified;
    auto st = [&](bool ok, bool complete) {
        if (!sound) return Status::fail;
        if (!complete) return ok ? Status::inconclusive : Status::fail;
        return ok ? Status::pass : Status::fail;
    };

    for (int i = 0; i <= imax; ++i) {
        const auto& row = tn.by_i[i];
        const long long want = binomial(2 * f, i) * static_cast<long long>(pset.size());
        b.add("tor-dims", "dim Tor_i(F, N) = C(2f, i) |P|", st(static_cast<long long>(row.size()) == want, tn.complete),
              "i = " + std::to_string(i) + ": " + std::to_string(row.size()) + " vs " + std::to_string(want) + prime_note(P, q));

        std::vector<Char> got, exp;
        bool support = true;
        for (const auto& e : row) {
            got.push_back(e.chi);
            support &= e.deg >= i && e.deg <= 2 * i;
        }
        for (const auto& l : pset)
            for (long long k = 0; k < binomial(2 * f, i); ++k) exp.push_back(char_inv(M, chi_lambda(M, l)));
        std::sort(got.begin(), got.end());
        std::sort(exp.begin(), exp.end());
        b.add("tor-chars", "Tor_i(F, N) = sum over P of (chi^{-1})^{C(2f,i)}", st(got == exp, tn.complete),
              "i = " + std::to_string(i));
        b.add("tor-support", "Tor_i(F, N) lives in degrees [-2i, -i]", st(support && tn.support_ok, tn.complete),
              "i = " + std::to_string(i));

        // Tor_i(N) inside Tor_i(N/I^(3)N), degree by degree
        std::multiset<std::pair<int, Char>> big;
        for (const auto& e : tq.by_i[i]) big.insert({e.deg, e.chi});
        bool inc = true;
        for (const auto& e : row) {
            auto it = big.find({e.deg, e.chi});
            if (it == big.end()) {
                inc = false;
                break;
            }
            big.erase(it);
        }
        b.add("tor-inclusion", "Tor_i(F, N) embeds in Tor_i(F, N/I^(3)N)", st(inc, tn.complete && tq.complete),
              "i = " + std::to_string(i) + ": " + std::to_string(row.size()) + " into " + std::to_string(tq.by_i[i].size()));
    }

    std::set<TType> types;
    for (const auto& l : pset) types.insert(t_type(l, P.j_rho));
    for (const auto& t : types) {
        const Resolution r = resolve(CyclicModule{t, 0}, imax, Dmax, q, cfg.jobs);
        bool ok = r.minimal && r.complex_ok && r.exact_ok;
        for (int i = 0; i <= imax && ok; ++i) {
            auto got = r.terms[i];
            std::sort(got.begin(), got.end());
            ok = got == wedge(r.terms[1], i, f);
        }
        b.add("tor-wedge", "Tor_i = exterior power of Tor_1", r.complete ? (ok ? Status::pass : Status::fail) : Status::inconclusive,
              "t=" + tstr(t));
    }
    return b.take();
}

// ---------------------------------------------------------------- lattice

SuiteResult suite_lattice(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("lattice", "repmodel");
    const Modulus M(f, P.p);
    const auto pset = enumerate_p(f, P.j_rho);
    for (int i0 = -1; i0 <= f; ++i0) {
        const LatticeState st = nonsplit_lattice(P, i0);
        long long want = 0;
        for (int i = 0; i <= i0; ++i) want += binomial(f, i);
        const bool end_ok = i0 != f || st.dxi_dim == (1LL << f);
        b.add("dxi-dim", "dim D_xi = sum_{i <= i0} C(f, i)", st.dxi_dim == want && end_ok,
              "i0 = " + std::to_string(i0) + ": " + std::to_string(st.dxi_dim));
        std::vector<Char> common;
        std::set_intersection(st.characters.begin(), st.characters.end(), st.forbidden.begin(), st.forbidden.end(),
                              std::back_inserter(common));
        b.add("forbidden-disjoint", "forbidden characters avoid the I1-invariants", common.empty(),
              "i0 = " + std::to_string(i0) + ": " + std::to_string(st.characters.size()) + " characters, " +
                  std::to_string(st.forbidden.size()) + " forbidden");

        const std::set<Char> chars(st.characters.begin(), st.characters.end());
        const std::set<Char> forb(st.forbidden.begin(), st.forbidden.end());
        b.add_parallel("lambda-i0", "gr(pi_1) summand for (lambda, i0)", static_cast<int>(pset.size()), cfg.jobs,
                       [&](int k) {
                           const Lambda& l = pset[k];
                           const MonomialIdeal& A = st.gr_ideals[k].second;
                           const bool nonzero = !A.is_unit();
                           const bool listed = chars.count(chi_lambda(M, l)) > 0;
                           bool clean = true;
                           const auto gc = graded_characters(M, l, A, f);
                           for (const auto& layer : gc)
                               for (const auto& c : layer) clean &= !forb.count(char_inv(M, c));
                           const bool ok = nonzero == (ell(l) <= i0) && listed == nonzero && clean;
                           std::string det = "lambda=(" + to_string(l) + ") i0=" + std::to_string(i0) + ": " +
                                             (nonzero ? "present" : "absent") + (clean ? "" : ", meets a forbidden character");
                           return std::make_pair(ok ? Status::pass : Status::fail, det);
                       });
    }
    return b.take();
}

// ---------------------------------------------------------------- split

SuiteResult suite_split(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("split", "repmodel");
    bool inv = true;
    for (Layers s = 0; s < (1u << (f + 1)); ++s) inv &= sigma_dual(sigma_dual(s, f), f) == s;
    b.add("sigma-involution", "Sigma'' = Sigma", inv, "all subsets of {0,...," + std::to_string(f) + "}");

    if (P.j_rho != full_set(f)) {
        bool refused = false;
        try {
            split_sigma_model(P, 1u);
        } catch (const PreconditionError&) {
            refused = true;
        }
        b.add("split-refusal", "split model needs j_rho = everything", refused,
              "j_rho = " + subset_str(P.j_rho, f) + ": model " + (refused ? "refused" : "accepted"));
        return b.take();
    }
    const int n = 1 << (f + 1);
    b.add_parallel("split-model", "Sigma model of the split case", n, cfg.jobs, [&](int k) {
        const SplitModel sm = split_sigma_model(P, static_cast<Layers>(k));
        std::ostringstream os;
        os << "Sigma mask " << k << ": m(N1) + m(N2) = " << sm.m_N1 << " + " << sm.m_N2 << " = " << sm.m_N
           << ", dual mask " << sm.sigma_dual << " m = " << sm.m_dual << ", dim D_xi " << sm.dxi_dim << " vs "
           << sm.dxi_formula << (sm.star_matches_dual ? "" : ", star image differs from the dual layers");
        return std::make_pair(sm.ok() ? Status::pass : Status::fail, os.str());
    });
    return b.take();
}

// ---------------------------------------------------------------- chain

SuiteResult suite_chain(const RunConfig& cfg) {
    const Params& P = cfg.P;
    const int f = P.f;
    Builder b("chain", "repmodel");
    std::vector<std::pair<int, int>> pairs;
    for (int a = -1; a <= f; ++a)
        for (int c = a + 1; c <= f; ++c) pairs.emplace_back(a, c);
    b.add_parallel("subquot", "characters of F (x) gr(pi_1'/pi_1)", static_cast<int>(pairs.size()), cfg.jobs, [&](int k) {
        const auto [a, c] = pairs[k];
        const SubquotIdentity s = subquot_char_identity(P, a, c);
        std::string det = "(" + std::to_string(a) + ", " + std::to_string(c) + "): " + std::to_string(s.lhs.size()) +
                          " vs " + std::to_string(s.rhs.size()) + " characters" +
                          (s.counts_match_hilbert ? "" : ", Hilbert count mismatch") +
                          (s.relabel_ok ? "" : ", relabeling leaves P^ss - P");
        return std::make_pair(s.ok() ? Status::pass : Status::fail, det);
    });

    // every chain from -1 to f
    const int inner = f;
    b.add_parallel("chain", "uniserial of length <= f+1 with disjoint step characters", 1 << inner, cfg.jobs, [&](int k) {
        std::vector<int> ch{-1};
        for (int i = 0; i < inner; ++i)
            if ((k >> i) & 1) ch.push_back(i);
        ch.push_back(f);
        const ChainVerdict v = chain_model(P, ch);
        std::string det = "chain";
        for (int i : ch) det += " " + std::to_string(i);
        det += ": length " + std::to_string(v.length) + (v.ok() ? "" : ", " + v.detail);
        return std::make_pair(v.ok() ? Status::pass : Status::fail, det);
    });
    const ChainVerdict bad = chain_model(P, {-1, 0, 0, f});
    b.add("chain-reject", "non-increasing chains are rejected", !bad.ok(), "chain -1 0 0 f");
    return b.take();
}

}  // namespace

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s{"enumeration", "characters", "cycles", "cm", "resolutions",
                                            "tor", "lattice", "split", "chain"};
    return s;
}

int suite_genericity(const std::string& suite, int f) {
    const int high = std::max(9, 2 * f + 1);
    if (suite == "characters") return 2;
    if (suite == "tor") return 1;
    if (suite == "cycles" || suite == "lattice" || suite == "split" || suite == "chain") return high;
    return 0;
}

void gate_suites(const RunConfig& cfg) {
    validate(cfg.P);
    if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
    if (cfg.suites.empty()) throw ConfigError("no suite requested; known suites: " + join(known_suites()));
    for (const auto& s : cfg.suites) {
        const auto& ks = known_suites();
        if (std::find(ks.begin(), ks.end(), s) == ks.end())
            throw ConfigError("unknown suite '" + s + "'; known suites: " + join(ks) + ", all");
        const int need = suite_genericity(s, cfg.P.f);
        if (!cfg.P.generic(need))
            throw ConfigError("suite " + s + " requires " + std::to_string(need) + "-generic parameters (" +
                              std::to_string(need) + " <= r_j <= p-3-" + std::to_string(need) + ")");
    }
}

SuiteResult run_suite(const std::string& suite, const RunConfig& cfg) {
    if (suite == "enumeration") return suite_enumeration(cfg);
    if (suite == "characters") return suite_characters(cfg);
    if (suite == "cycles") return suite_cycles(cfg);
    if (suite == "cm") return suite_cm(cfg);
    if (suite == "resolutions") return suite_resolutions(cfg);
    if (suite == "tor") return suite_tor(cfg);
    if (suite == "lattice") return suite_lattice(cfg);
    if (suite == "split") return suite_split(cfg);
    if (suite == "chain") return suite_chain(cfg);
    throw ConfigError("unknown suite '" + suite + "'; known suites: " + join(known_suites()));
}

std::vector<SuiteResult> run(const RunConfig& cfg) {
    gate_suites(cfg);
    std::vector<SuiteResult> out;
    for (const auto& s : cfg.suites) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteResult r = run_suite(s, cfg);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

Summary summarize(const std::vector<SuiteResult>& results) {
    Summary s;
    for (const auto& r : results)
        for (const auto& c : r.checks) {
            if (c.status == Status::pass) ++s.pass;
            if (c.status == Status::fail) ++s.fail;
            if (c.status == Status::inconclusive) ++s.inconclusive;
        }
    return s;
}

int exit_code(const Summary& s) {
    if (s.fail) return 1;
    if (s.inconclusive) return 3;
    return 0;
}

std::string report_json(const RunConfig& cfg, const std::vector<SuiteResult>& results, bool with_timing) {
    using nlohmann::ordered_json;
    ordered_json j;
    ordered_json c;
    c["f"] = cfg.P.f;
    c["p"] = cfg.P.p;
    std::vector<int> jr;
    for (int k = 0; k < cfg.P.f; ++k)
        if (has(cfg.P.j_rho, k)) jr.push_back(k);
    c["j_rho"] = jr;
    c["r"] = cfg.P.r;
    c["suites"] = cfg.suites;
    c["max_degree"] = cfg.max_degree;
    j["config"] = c;
    ordered_json suites = ordered_json::object();
    for (const auto& r : results) {
        ordered_json arr = ordered_json::array();
        for (const auto& ch : r.checks)
            arr.push_back({{"id", ch.id}, {"anchor", ch.anchor}, {"status", status_name(ch.status)}, {"details", ch.details}});
        suites[r.name] = arr;
    }
    j["suites"] = suites;
    const Summary s = summarize(results);
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}, {"exit_code", exit_code(s)}};
    if (with_timing) {
        ordered_json t;
        t["jobs"] = cfg.jobs;
        double total = 0;
        ordered_json per = ordered_json::object();
        for (const auto& r : results) {
            per[r.name] = r.seconds;
            total += r.seconds;
        }
        t["suites"] = per;
        t["total_seconds"] = total;
        j["timing"] = t;
    }
    return j.dump(2) + "\n";
}

std::string report_text(const RunConfig& cfg, const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    os << "f=" << cfg.P.f << " p=" << cfg.P.p << " j_rho=" << subset_str(cfg.P.j_rho, cfg.P.f) << " r=(";
    for (size_t k = 0; k < cfg.P.r.size(); ++k) os << (k ? "," : "") << cfg.P.r[k];
    os << ")\n";
    for (const auto& r : results) {
        const Summary s = summarize({r});
        os << "== " << r.name << ": " << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive
           << " inconclusive\n";
        for (const auto& c : r.checks)
            if (c.status != Status::pass) os << "  [" << status_name(c.status) << "] " << c.id << "  " << c.details << "\n";
    }
    const Summary s = summarize(results);
    os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive << " inconclusive\n";
    return os.str();
}

}  // namespace swc
