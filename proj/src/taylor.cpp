#include "swc/taylor.hpp"

#include <algorithm>

#include "swc/linalg.hpp"

namespace swc {

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// number of non-negative integer vectors of length z summing to e
long long compositions(long long e, int z) {
    if (e < 0) return 0;
    if (z == 0) return e == 0 ? 1 : 0;
    return binom(e + z - 1, z - 1);
}

std::vector<Mono> minimalize(std::vector<Mono> g) {
    std::sort(g.begin(), g.end(), [](const Mono& a, const Mono& b) {
        const int da = mono_deg(a), db = mono_deg(b);
        return da != db ? da < db : a < b;
    });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Mono> out;
    for (const auto& m : g)
        if (std::none_of(out.begin(), out.end(), [&](const Mono& h) { return mono_divides(h, m); }))
            out.push_back(m);
    return out;
}

}  // namespace

std::vector<Mono> lift_to_r(const MonomialIdeal& I) {
    std::vector<Mono> g = I.gens();
    for (int j = 0; j < I.f(); ++j) {
        Mono m = mono_one(I.f());
        m[2 * j] = m[2 * j + 1] = 1;
        g.push_back(m);
    }
    return minimalize(std::move(g));
}

long long ExtData::rank_at(int i, int D) const {
    if (i < 0 || i >= static_cast<int>(rank.size()) || D < dlo || D > dhi) return 0;
    return rank[i][D - dlo];
}

ExtData taylor_ext_ranks(const std::vector<Mono>& gens_in, int nvars, int window, int dhi,
                         unsigned prime) {
    const std::vector<Mono> gens = minimalize(gens_in);
    const int n = static_cast<int>(gens.size());
    if (n > 20) throw PreconditionError("taylor_ext_ranks: too many generators for the Taylor complex");
    const Fp F{prime};
    const size_t nsub = size_t{1} << n;

    std::vector<Mono> lcm(nsub, Mono(nvars, 0));
    for (size_t S = 1; S < nsub; ++S) {
        const int low = __builtin_ctzll(S);
        lcm[S] = mono_lcm(lcm[S & (S - 1)], gens[low]);
    }
    Mono E(nvars, 0);
    if (n) E = lcm[nsub - 1];

    ExtData out;
    out.nvars = nvars;
    out.ngens = n;
    out.sufficient_window = mono_deg(E);
    out.window = window < 0 ? out.sufficient_window : window;
    out.complete = out.window >= out.sufficient_window;
    out.dlo = -out.sufficient_window;
    out.dhi = std::max(dhi, out.dlo);
    const int ndeg = out.dhi - out.dlo + 1;
    out.rank.assign(n + 1, std::vector<long long>(ndeg, 0));
    out.nonzero.assign(n + 1, false);

    // subsets grouped by size, with their index inside the group
    std::vector<std::vector<size_t>> by_size(n + 1);
    std::vector<int> pos(nsub);
    for (size_t S = 0; S < nsub; ++S) {
        const int s = __builtin_popcountll(S);
        pos[S] = static_cast<int>(by_size[s].size());
        by_size[s].push_back(S);
    }

    Mono b(nvars, 0);
    auto visit = [&](int depth) {
        ++out.chambers;
        std::vector<char> valid(nsub);
        for (size_t S = 0; S < nsub; ++S) {
            bool ok = true;
            for (int k = 0; k < nvars && ok; ++k) ok = lcm[S][k] >= -b[k];
            valid[S] = ok;
        }
        // index valid subsets of each size
        std::vector<std::vector<int>> idx(n + 1);
        std::vector<int> cnt(n + 1, 0);
        for (int s = 0; s <= n; ++s) {
            idx[s].assign(by_size[s].size(), -1);
            for (size_t t = 0; t < by_size[s].size(); ++t)
                if (valid[by_size[s][t]]) idx[s][t] = cnt[s]++;
        }
        std::vector<int> rk(n + 1, 0);
        for (int s = 0; s < n; ++s) {
            if (!cnt[s] || !cnt[s + 1]) continue;
            Mat m(cnt[s + 1], cnt[s]);
            for (size_t t = 0; t < by_size[s].size(); ++t) {
                const int col = idx[s][t];
                if (col < 0) continue;
                const size_t S = by_size[s][t];
                int below = 0;
                for (int k = 0; k < n; ++k) {
                    if ((S >> k) & 1) {
                        ++below;
                        continue;
                    }
                    const size_t T = S | (size_t{1} << k);
                    const int row = idx[s + 1][pos[T]];
                    m.at(row, col) = (below % 2) ? F.neg(1) : 1;
                }
            }
            rk[s] = rank(F, std::move(m));
        }
        int zeros = 0, neg = 0;
        for (int k = 0; k < nvars; ++k) {
            if (b[k] == 0) ++zeros;
            neg += b[k];
        }
        (void)depth;
        for (int s = 0; s <= n; ++s) {
            const long long e = cnt[s] - rk[s] - (s ? rk[s - 1] : 0);
            if (!e) continue;
            out.nonzero[s] = true;
            for (int D = out.dlo; D <= out.dhi; ++D)
                out.rank[s][D - out.dlo] += e * compositions(D - neg, zeros);
        }
    };
    auto rec = [&](auto&& self, int k, int depth) -> void {
        if (depth > out.window) return;
        if (k == nvars) {
            visit(depth);
            return;
        }
        for (int v = 0; v <= E[k]; ++v) {
            b[k] = -v;
            self(self, k + 1, depth + v);
        }
        b[k] = 0;
    };
    rec(rec, 0, 0);

    if (out.complete) {
        for (int D = out.dlo; D <= out.dhi; ++D) {
            long long lhs = 0, rhs = 0;
            for (int s = 0; s <= n; ++s) lhs += (s % 2 ? -1 : 1) * out.rank[s][D - out.dlo];
            for (size_t S = 0; S < nsub; ++S) {
                const long long c = compositions(D + mono_deg(lcm[S]), nvars);
                rhs += (__builtin_popcountll(S) % 2 ? -1 : 1) * c;
            }
            if (lhs != rhs) out.euler_ok = false;
        }
    }
    return out;
}

ExtData taylor_ext_ranks(const MonomialIdeal& I, int window, int dhi, unsigned prime) {
    return taylor_ext_ranks(lift_to_r(I), 2 * I.f(), window, dhi, prime);
}

std::vector<long long> taylor_euler_hilbert(const std::vector<Mono>& gens_in, int nvars, int Dmax) {
    const std::vector<Mono> gens = minimalize(gens_in);
    const int n = static_cast<int>(gens.size());
    std::vector<long long> h(Dmax + 1, 0);
    const size_t nsub = size_t{1} << n;
    std::vector<Mono> lcm(nsub, Mono(nvars, 0));
    for (size_t S = 1; S < nsub; ++S)
        lcm[S] = mono_lcm(lcm[S & (S - 1)], gens[__builtin_ctzll(S)]);
    for (size_t S = 0; S < nsub; ++S) {
        const int sign = __builtin_popcountll(S) % 2 ? -1 : 1;
        for (int D = 0; D <= Dmax; ++D) h[D] += sign * compositions(D - mono_deg(lcm[S]), nvars);
    }
    return h;
}

const char* cm_verdict_name(CmVerdict v) {
    switch (v) {
        case CmVerdict::cm: return "cohen-macaulay";
        case CmVerdict::not_cm: return "not cohen-macaulay";
        case CmVerdict::inconclusive: return "inconclusive";
        case CmVerdict::zero_module: return "zero module";
    }
    return "?";
}

CmResult is_cm(const MonomialIdeal& I, int window, unsigned prime) {
    CmResult res;
    if (I.is_unit()) {
        res.verdict = CmVerdict::zero_module;
        return res;
    }
    res.ext = taylor_ext_ranks(I, window, 2, prime);
    for (size_t i = 0; i < res.ext.nonzero.size(); ++i)
        if (res.ext.nonzero[i]) res.nonzero_indices.push_back(static_cast<int>(i));
    if (!res.nonzero_indices.empty()) res.grade = res.nonzero_indices.front();
    if (res.nonzero_indices.size() > 1)
        res.verdict = CmVerdict::not_cm;
    else if (res.ext.complete && res.nonzero_indices.size() == 1)
        res.verdict = CmVerdict::cm;
    else
        res.verdict = CmVerdict::inconclusive;
    return res;
}

Shelling shellability_check(int f, Subset J1, Subset J2, int d) {
    if (J1 & J2) throw PreconditionError("shellability_check: J1 and J2 overlap");
    const Subset J = J1 | J2;
    auto jset = [&](Subset x) { return (J1 & ~x) | (J2 & x); };
    std::vector<Subset> facets;
    for (Subset x = J;; x = (x - 1) & J) {
        if (popcount(jset(x)) < d) facets.push_back(x);
        if (x == 0) break;
    }
    std::sort(facets.begin(), facets.end(), [&](Subset a, Subset b) {
        const int ca = popcount(jset(a)), cb = popcount(jset(b));
        if (ca != cb) return ca < cb;
        // lexicographic on (x_0, x_1, ...) with y before z
        for (int j = 0; j < f; ++j)
            if (has(a, j) != has(b, j)) return !has(a, j);
        return false;
    });
    Shelling sh;
    sh.order = facets;
    sh.shellable = !facets.empty();
    // faces of a facet are subsets U of J (positions kept); U lies in an earlier
    // facet iff U is inside the agreement set of the two
    for (size_t i = 1; i < facets.size() && sh.shellable; ++i) {
        const Subset Ji = jset(facets[i]);
        if (Ji == 0) {
            sh.shellable = false;
            sh.failure = "facet " + std::to_string(i) + " has empty J(x) but is not first";
            break;
        }
        std::vector<Subset> agree;
        for (size_t k = 0; k < i; ++k) agree.push_back(J & ~(facets[i] ^ facets[k]));
        for (Subset A : agree)
            if ((A & Ji) == Ji) {
                sh.shellable = false;
                sh.failure = "facet " + std::to_string(i) + " meets an earlier facet outside the allowed faces";
            }
        for (int j = 0; j < f && sh.shellable; ++j) {
            if (!has(Ji, j)) continue;
            const Subset face = J & ~(1u << j);
            const bool covered = std::any_of(agree.begin(), agree.end(),
                                             [&](Subset A) { return (face & A) == face; });
            if (!covered) {
                sh.shellable = false;
                sh.failure = "facet " + std::to_string(i) + " misses the face dropping index " +
                             std::to_string(j);
            }
        }
    }
    return sh;
}

}  // namespace swc
