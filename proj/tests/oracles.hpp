#pragma once

// Independent reference computations used by the unit tests. None of them
// goes through the engine they are compared with.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "swc/linalg.hpp"
#include "swc/monomial.hpp"
#include "swc/weights.hpp"

namespace oracle {

// P^ss by filtering all 6^f tuples through the successor table, written out by name
inline std::vector<swc::Lambda> pss_by_filter(int f) {
    static const std::map<std::string, std::set<std::string>> next = {
        {"x", {"x", "x+2", "p-2-x"}},         {"x+1", {"x", "x+2", "p-2-x"}},
        {"x+2", {"x", "x+2", "p-2-x"}},       {"p-3-x", {"x+1", "p-3-x", "p-1-x"}},
        {"p-2-x", {"x+1", "p-3-x", "p-1-x"}}, {"p-1-x", {"x+1", "p-3-x", "p-1-x"}},
    };
    std::vector<swc::Lambda> out;
    long long total = 1;
    for (int j = 0; j < f; ++j) total *= 6;
    for (long long code = 0; code < total; ++code) {
        swc::Lambda l(f);
        long long c = code;
        for (int j = f - 1; j >= 0; --j) {
            l[j] = static_cast<swc::Sym>(c % 6);
            c /= 6;
        }
        bool ok = true;
        for (int j = 0; j < f && ok; ++j) {
            const std::string a = swc::sym_name(l[j]), b = swc::sym_name(l[(j + 1) % f]);
            ok = next.at(a).count(b) > 0;
        }
        if (ok) out.push_back(l);
    }
    return out;
}

// e(Rbar/I) from the Hilbert function: the (f-1)-st difference is eventually
// the multiplicity when Rbar/I has dimension f, and 0 below that
inline long long mult_by_hilbert(const swc::MonomialIdeal& I) {
    const int f = I.f();
    const int D = 4 * f + 6;
    std::vector<long long> h = swc::hilbert_function(I, D);
    for (int k = 0; k < f - 1; ++k)
        for (int d = D; d > 0; --d) h[d] -= h[d - 1];
    return h[D];
}

// Chevalley-Eilenberg homology H_i(g, M) for g = f copies of the Heisenberg
// algebra (y_j, z_j, h_j; [y_j, z_j] = h_j) and M = U(g)/U(g)(t_j, h_j [, y_j^n, z_j^n]).
// Per factor M_j is spanned by y^a and z^b (a, b >= 0 sharing the unit); y and z
// act by raising their own exponent and kill the other branch except from 1;
// h acts by 0. For t = y only the z-branch survives, for t = z only the y-branch.
struct CeKey {
    int i, deg;
    std::vector<int> wt;
    bool operator<(const CeKey& o) const { return std::tie(i, deg, wt) < std::tie(o.i, o.deg, o.wt); }
    bool operator==(const CeKey& o) const { return std::tie(i, deg, wt) == std::tie(o.i, o.deg, o.wt); }
};

struct FactorBasis {
    // (a, b) with a * b == 0
    std::vector<std::pair<int, int>> elems;
};

inline FactorBasis factor_basis(swc::T t, int n, int Dmax) {
    FactorBasis fb;
    const int top = n > 0 ? n - 1 : Dmax;
    fb.elems.push_back({0, 0});
    for (int e = 1; e <= top; ++e) {
        if (t != swc::T::Z) fb.elems.push_back({0, e});  // z-branch survives unless t = z
        if (t != swc::T::Y) fb.elems.push_back({e, 0});
    }
    return fb;
}

inline std::map<CeKey, long long> ce_homology(const swc::TType& t, int n, int imax, int Dmax,
                                              unsigned prime = 32003) {
    using namespace swc;
    const int f = static_cast<int>(t.size());
    const Fp F{prime};
    // g basis: 3j = y_j, 3j+1 = z_j, 3j+2 = h_j
    const int gdim = 3 * f;
    auto gdeg = [](int x) { return x % 3 == 2 ? 2 : 1; };
    auto gwt = [&](int x) {
        std::vector<int> w(f, 0);
        if (x % 3 == 0) w[x / 3] = 1;
        if (x % 3 == 1) w[x / 3] = -1;
        return w;
    };

    std::vector<FactorBasis> fbs;
    for (int j = 0; j < f; ++j) fbs.push_back(factor_basis(t[j], n, Dmax));
    // module basis: one index per factor
    std::vector<std::vector<int>> mod;
    std::vector<int> cur(f, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == f) {
            mod.push_back(cur);
            return;
        }
        for (int k = 0; k < static_cast<int>(fbs[j].elems.size()); ++k) {
            cur[j] = k;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    auto mdeg = [&](const std::vector<int>& m) {
        int d = 0;
        for (int j = 0; j < f; ++j) d += fbs[j].elems[m[j]].first + fbs[j].elems[m[j]].second;
        return d;
    };
    auto mwt = [&](const std::vector<int>& m) {
        std::vector<int> w(f);
        for (int j = 0; j < f; ++j) w[j] = fbs[j].elems[m[j]].first - fbs[j].elems[m[j]].second;
        return w;
    };
    // x . m as (index or -1)
    auto act = [&](int x, const std::vector<int>& m) -> std::vector<int> {
        const int j = x / 3;
        if (x % 3 == 2) return {};
        auto [a, b] = fbs[j].elems[m[j]];
        std::pair<int, int> target;
        if (x % 3 == 0) {
            if (b > 0) return {};
            target = {a + 1, 0};
        } else {
            if (a > 0) return {};
            target = {0, b + 1};
        }
        auto it = std::find(fbs[j].elems.begin(), fbs[j].elems.end(), target);
        if (it == fbs[j].elems.end()) return {};
        std::vector<int> out = m;
        out[j] = static_cast<int>(it - fbs[j].elems.begin());
        return out;
    };

    // chains: (wedge mask, module element), grouped by (i, deg, wt)
    using Chain = std::pair<unsigned, std::vector<int>>;
    std::map<CeKey, std::vector<Chain>> cells;
    for (unsigned S = 0; S < (1u << gdim); ++S) {
        const int i = __builtin_popcount(S);
        if (i > imax + 1) continue;
        int d0 = 0;
        std::vector<int> w0(f, 0);
        for (int x = 0; x < gdim; ++x)
            if ((S >> x) & 1u) {
                d0 += gdeg(x);
                auto w = gwt(x);
                for (int j = 0; j < f; ++j) w0[j] += w[j];
            }
        for (const auto& m : mod) {
            const int d = d0 + mdeg(m);
            if (d > Dmax) continue;
            auto w = mwt(m);
            for (int j = 0; j < f; ++j) w[j] += w0[j];
            cells[{i, d, w}].push_back({S, m});
        }
    }
    auto boundary_rank = [&](const CeKey& src) -> int {
        if (src.i == 0 || !cells.count(src)) return 0;
        const CeKey dst{src.i - 1, src.deg, src.wt};
        if (!cells.count(dst)) return 0;
        const auto& from = cells.at(src);
        const auto& to = cells.at(dst);
        std::map<Chain, int> pos;
        for (size_t k = 0; k < to.size(); ++k) pos[to[k]] = static_cast<int>(k);
        Mat M(static_cast<int>(to.size()), static_cast<int>(from.size()));
        for (size_t c = 0; c < from.size(); ++c) {
            const auto& [S, m] = from[c];
            std::vector<int> xs;
            for (int x = 0; x < gdim; ++x)
                if ((S >> x) & 1u) xs.push_back(x);
            // right action m.x = -x.m
            for (size_t k = 0; k < xs.size(); ++k) {
                auto m2 = act(xs[k], m);
                if (m2.empty()) continue;
                const long long sign = (k % 2 ? -1 : 1) * -1;
                auto& e = M.at(pos.at({S & ~(1u << xs[k]), m2}), static_cast<int>(c));
                e = F.add(e, F.from_int(sign));
            }
            for (size_t k = 0; k < xs.size(); ++k)
                for (size_t l = k + 1; l < xs.size(); ++l) {
                    const int a = xs[k], b = xs[l];
                    if (a / 3 != b / 3 || a % 3 == 2 || b % 3 == 2) continue;
                    // [y_j, z_j] = h_j, with a < b so a is y_j
                    const int h = 3 * (a / 3) + 2;
                    const unsigned rest = S & ~(1u << a) & ~(1u << b);
                    if ((rest >> h) & 1u) continue;
                    // h placed in front, then moved to its sorted slot
                    int before = 0;
                    for (int x = 0; x < h; ++x)
                        if ((rest >> x) & 1u) ++before;
                    long long sign = ((k + l) % 2 ? -1 : 1) * (before % 2 ? -1 : 1);
                    auto& e = M.at(pos.at({rest | (1u << h), m}), static_cast<int>(c));
                    e = F.add(e, F.from_int(sign));
                }
        }
        return rank(F, M);
    };
    std::map<CeKey, long long> out;
    for (const auto& [key, chains] : cells) {
        if (key.i > imax) continue;
        const long long dim = static_cast<long long>(chains.size()) - boundary_rank(key) -
                              boundary_rank({key.i + 1, key.deg, key.wt});
        if (dim) out[key] = dim;
    }
    return out;
}

}  // namespace oracle
