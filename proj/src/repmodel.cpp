#include "swc/repmodel.hpp"

#include <algorithm>
#include <set>

#include "swc/cycles.hpp"

namespace swc {

namespace {

bool is(Sym s, std::initializer_list<Sym> opts) {
    return std::find(opts.begin(), opts.end(), s) != opts.end();
}

CycleVector cycle_sum(const std::vector<Lambda>& ls, Subset j_rho, int f) {
    CycleVector c(size_t{1} << f, 0);
    for (const auto& l : ls) c = cycle_add(c, cycle_of(ideal_a(l, j_rho)));
    return c;
}

}  // namespace

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Subset x_ss(const Lambda& l) {
    Subset s = 0;
    for (size_t j = 0; j < l.size(); ++j)
        if (is(l[j], {Sym::x, Sym::x1, Sym::p2, Sym::p3})) s |= 1u << j;
    return s;
}

Subset x_set(const Lambda& mu, Subset j_rho) {
    Subset s = 0;
    for (size_t j = 0; j < mu.size(); ++j) {
        const int jj = static_cast<int>(j);
        if (is(mu[j], {Sym::x, Sym::p2, Sym::p3}) || (mu[j] == Sym::x1 && has(j_rho, jj))) s |= 1u << j;
    }
    return s;
}

Subset y_set(const Lambda& mu, Subset j_rho) {
    const int f = static_cast<int>(mu.size());
    Subset s = full_set(f) & ~j_rho;
    for (int j = 0; j < f; ++j)
        if (is(mu[j], {Sym::x, Sym::x1, Sym::p2, Sym::p3})) s |= 1u << j;
    return s;
}

Subset z_set(const Lambda& mu, Subset j_rho) {
    const int f = static_cast<int>(mu.size());
    Subset s = full_set(f) & ~j_rho;
    for (int j = 0; j < f; ++j)
        if (is(mu[j], {Sym::x1, Sym::x2, Sym::p1, Sym::p2})) s |= 1u << j;
    return s;
}

ParamSets param_sets(const Lambda& l, Subset j_rho) {
    ParamSets ps;
    if (in_pss(l)) ps.Xss = x_ss(l);
    if (in_p(l, j_rho)) {
        ps.X = x_set(l, j_rho);
        ps.Y = y_set(l, j_rho);
        ps.Z = z_set(l, j_rho);
    }
    return ps;
}

bool projection_x_property(const Lambda& l, Subset j_rho) {
    const Projection pr = pss_to_p_projection(l, j_rho);
    const Subset X = x_set(pr.mu, j_rho);
    if (X & pr.J1) return false;
    const Subset lhs = X | pr.J1, rhs = x_ss(l) | pr.J2;
    return (lhs & ~rhs) == 0;
}

std::vector<WeightTag> jh_I_sigma_tau(Subset Jsigma, Subset Jtau) {
    if (Jsigma & ~Jtau) throw PreconditionError("jh_I_sigma_tau: J_sigma is not inside J_tau");
    const Subset free = Jtau & ~Jsigma;
    std::vector<WeightTag> out;
    for (Subset s = 0;; s = (s - free) & free) {
        out.push_back({Jsigma | s});
        if (s == free) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool hw_predicate(Subset Ss, Subset St, Subset J1, Subset J2) {
    if (Ss & J1) return false;
    return ((Ss | J1) & ~(St | J2)) == 0;
}

bool k1_predicate(Subset Ss, Subset St, Subset J2) { return (J2 & ~Ss) == 0 && (St & J2) == 0; }

bool dss_tags_cover(int f) {
    std::vector<int> hits(size_t{1} << f, 0);
    for (const auto& l : enumerate_dss(f)) ++hits[j_set(l)];
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

LatticeState nonsplit_lattice(const Params& P, int i0) {
    if (i0 < -1 || i0 > P.f) throw PreconditionError("nonsplit_lattice: i0 must lie in [-1, f]");
    const Modulus M(P.f, P.p);
    LatticeState st;
    st.i0 = i0;
    for (const auto& l : enumerate_p(P.f, P.j_rho)) {
        if (ell(l) <= i0) {
            st.i1_params.push_back(l);
            st.characters.push_back(chi_lambda(M, l));
        }
        st.gr_ideals.emplace_back(l, ideal_a1(l, i0, P.j_rho));
    }
    for (const auto& l : enumerate_d(P.f, P.j_rho))
        if (ell(l) <= i0) st.socle.push_back(l);
    for (int i = 0; i <= i0; ++i) st.dxi_dim += binomial(P.f, i);
    for (const auto& l : enumerate_pss(P.f))
        if (!in_p(l, P.j_rho) && ell(l) == i0 + 1) st.forbidden.push_back(chi_lambda(M, l));
    std::sort(st.characters.begin(), st.characters.end());
    std::sort(st.forbidden.begin(), st.forbidden.end());
    return st;
}

SubquotIdentity subquot_char_identity(const Params& P, int i0, int i0p) {
    if (!(-1 <= i0 && i0 < i0p && i0p <= P.f))
        throw PreconditionError("subquot_char_identity: need -1 <= i0 < i0' <= f");
    const int f = P.f;
    const Modulus M(f, P.p);
    SubquotIdentity out;
    for (const auto& l : enumerate_p(f, P.j_rho)) {
        const MonomialIdeal A = ideal_a1(l, i0, P.j_rho);
        const MonomialIdeal Ap = ideal_a1(l, i0p, P.j_rho);
        long long count = 0;
        for (const auto& g : A.gens()) {
            if (Ap.contains(g)) continue;
            ++count;
            Subset J1p = 0, J2p = 0;
            for (int j = 0; j < f; ++j) {
                if (g[2 * j]) J1p |= 1u << j;
                if (g[2 * j + 1]) J2p |= 1u << j;
            }
            const Char c = char_inv(M, mono_char(M, l, g));
            if (ell(l) <= i0) {
                const Lambda lp = lift_to_pss(l, J1p, J2p);
                if (!in_pss(lp) || in_p(lp, P.j_rho) || ell(lp) != i0 + 1 || chi_lambda(M, lp) != c)
                    out.relabel_ok = false;
            }
            out.lhs.push_back(c);
        }
        out.per_lambda_count.push_back(count);

        // dim A / (m A + Ap), read off Hilbert functions
        std::vector<Mono> mg = Ap.gens();
        for (const auto& g : A.gens())
            for (int v = 0; v < 2 * f; ++v) {
                Mono h = g;
                ++h[v];
                mg.push_back(h);
            }
        const MonomialIdeal mA(f, mg);
        const int Dmax = f + 2;
        const auto hb = hilbert_function(mA, Dmax), ha = hilbert_function(A, Dmax);
        long long dim = 0;
        for (int d = 0; d <= Dmax; ++d) dim += hb[d] - ha[d];
        if (dim != count) out.counts_match_hilbert = false;
    }
    for (const auto& l : enumerate_pss(f)) {
        const int e = ell(l);
        if (e == i0 + 1 || (e >= i0 + 2 && e <= i0p && in_p(l, P.j_rho))) out.rhs.push_back(chi_lambda(M, l));
    }
    std::sort(out.lhs.begin(), out.lhs.end());
    std::sort(out.rhs.begin(), out.rhs.end());
    return out;
}

Layers sigma_dual(Layers sigma, int f) {
    Layers out = 0;
    for (int i = 0; i <= f; ++i)
        if (!((sigma >> i) & 1u)) out |= 1u << (f - i);
    return out;
}

SplitModel split_sigma_model(const Params& P, Layers sigma) {
    const int f = P.f;
    if (P.j_rho != full_set(f)) throw PreconditionError("split_sigma_model: needs j_rho = {0,...,f-1}");
    if (sigma >> (f + 1)) throw PreconditionError("split_sigma_model: Sigma must lie in {0,...,f}");
    SplitModel sm;
    sm.sigma = sigma;
    sm.sigma_dual = sigma_dual(sigma, f);
    const auto all = enumerate_p(f, P.j_rho);
    std::vector<Lambda> dual;
    for (const auto& l : all) {
        ((sigma >> ell(l)) & 1u ? sm.P1 : sm.P2).push_back(l);
        if ((sm.sigma_dual >> ell(l)) & 1u) dual.push_back(l);
    }
    const CycleVector z1 = cycle_sum(sm.P1, P.j_rho, f), z2 = cycle_sum(sm.P2, P.j_rho, f),
                      z = cycle_sum(all, P.j_rho, f);
    sm.cycles_add = cycle_add(z1, z2) == z;
    sm.m_N1 = total_mult(z1);
    sm.m_N2 = total_mult(z2);
    sm.m_N = total_mult(z);

    std::vector<Lambda> starred;
    for (const auto& l : sm.P2) starred.push_back(star_involution(l, P.j_rho));
    std::sort(starred.begin(), starred.end());
    std::sort(dual.begin(), dual.end());
    sm.star_matches_dual = starred == dual;
    sm.m_dual = total_mult(cycle_sum(dual, P.j_rho, f));

    for (const auto& l : enumerate_d(f, P.j_rho))
        if ((sigma >> ell(l)) & 1u) ++sm.dxi_dim;
    for (int i = 0; i <= f; ++i)
        if ((sigma >> i) & 1u) sm.dxi_formula += binomial(f, i);
    return sm;
}

ChainVerdict chain_model(const Params& P, const std::vector<int>& i0s) {
    ChainVerdict v;
    v.in_range = !i0s.empty() && std::all_of(i0s.begin(), i0s.end(), [&](int i) { return i >= -1 && i <= P.f; });
    v.strictly_increasing = std::adjacent_find(i0s.begin(), i0s.end(), std::greater_equal<int>()) == i0s.end();
    v.length = i0s.empty() ? 0 : static_cast<int>(i0s.size()) - 1;
    v.length_ok = v.length <= P.f + 1;
    if (!v.in_range || !v.strictly_increasing) {
        v.detail = "chain is not a strictly increasing sequence in [-1, f]";
        return v;
    }
    v.identities_ok = true;
    v.steps_disjoint = true;
    std::set<Char> seen;
    for (size_t k = 0; k + 1 < i0s.size(); ++k) {
        const SubquotIdentity s = subquot_char_identity(P, i0s[k], i0s[k + 1]);
        if (!s.ok()) {
            v.identities_ok = false;
            v.detail = "step " + std::to_string(k) + " fails the subquotient identity";
        }
        for (const auto& c : s.lhs)
            if (!seen.insert(c).second) {
                v.steps_disjoint = false;
                v.detail = "character repeated at step " + std::to_string(k);
            }
    }
    return v;
}

}  // namespace swc
