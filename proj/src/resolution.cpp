#include "swc/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "swc/linalg.hpp"

namespace swc {

std::vector<PbwElement> left_ideal_gens(const CyclicModule& M) {
    std::vector<PbwElement> g;
    const int f = static_cast<int>(M.t.size());
    for (int j = 0; j < f; ++j) {
        switch (M.t[j]) {
            case T::Y: g.push_back(pbw_single(pbw_y(j))); break;
            case T::Z: g.push_back(pbw_single(pbw_z(j))); break;
            case T::YZ: g.push_back(pbw_single(pbw_y(j) | pbw_z(j))); break;
        }
        g.push_back(pbw_single(pbw_h(j)));
        if (M.n > 0) {
            g.push_back(pbw_single(pbw_y(j, M.n)));
            g.push_back(pbw_single(pbw_z(j, M.n)));
        }
    }
    return g;
}

int module_top_degree(const CyclicModule& M) {
    return static_cast<int>(M.t.size()) * (M.n - 1);
}

int ce_degree_bound(const CyclicModule& M, int i) {
    const int f = static_cast<int>(M.t.size());
    const int hs = std::min(i, f);
    return 2 * hs + std::min(i - hs, 2 * f) + module_top_degree(M);
}

std::string betti_str(const BettiTable& b) {
    std::ostringstream os;
    for (size_t i = 0; i < b.size(); ++i) {
        os << "F" << i << ":";
        for (const auto& e : b[i]) {
            os << " (" << e.shift << ";";
            for (size_t j = 0; j < e.wt.size(); ++j) os << (j ? "," : "") << e.wt[j];
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// basis element of a free module: (generator index, coefficient monomial)
using Key = std::pair<int, PbwMono>;
using Sparse = std::map<Key, std::uint32_t>;

struct Gen {
    std::vector<int> D, w;
    int total = 0;
    Sparse img;
};

struct Cell {
    std::vector<int> D, w;
};

struct Engine {
    int f;
    Fp F;
    const CyclicModule& M;
    std::vector<PbwElement> L;
    std::vector<std::vector<Gen>> gens;  // gens[s] for s = 0..imax
    Resolution res;

    Engine(const CyclicModule& M_, int imax, int Dmax, unsigned prime)
        : f(static_cast<int>(M_.t.size())), F{prime}, M(M_), L(left_ideal_gens(M_)) {
        if (f < 1 || f > kPbwMaxF) throw PreconditionError("resolve: 1 <= f <= 3 required");
        if (static_cast<long long>(prime) <= Dmax)
            throw PreconditionError("resolve: the prime must exceed the degree window");
        res.f = f;
        res.imax = imax;
        res.Dmax = Dmax;
        gens.resize(imax + 1);
        gens[0].push_back(Gen{std::vector<int>(f, 0), std::vector<int>(f, 0), 0, {}});
    }

    std::vector<Key> basis(int s, const Cell& c) const {
        std::vector<Key> b;
        std::vector<int> D(f), w(f);
        for (int g = 0; g < static_cast<int>(gens[s].size()); ++g) {
            const Gen& G = gens[s][g];
            bool ok = true;
            for (int j = 0; j < f && ok; ++j) {
                D[j] = c.D[j] - G.D[j];
                w[j] = c.w[j] - G.w[j];
                ok = D[j] >= 0;
            }
            if (!ok) continue;
            for (PbwMono m : pbw_cell(f, D, w)) b.push_back({g, m});
        }
        return b;
    }

    // d_s(m * g) as an element of F_{s-1}
    Sparse apply_d(int s, const Key& k) const {
        Sparse out;
        PbwElement tmp;
        for (const auto& [key, c] : gens[s][k.first].img) {
            tmp.clear();
            pbw_mono_mul_acc(F, f, k.second, key.second, c, tmp);
            for (const auto& [m, v] : tmp) {
                std::uint32_t& slot = out[{key.first, m}];
                slot = F.add(slot, v);
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second ? std::next(it) : out.erase(it);
        return out;
    }

    static Vec to_vec(const Sparse& e, const std::map<Key, int>& index, bool& ok) {
        Vec v(index.size(), 0);
        for (const auto& [k, c] : e) {
            auto it = index.find(k);
            if (it == index.end()) {
                ok = false;
                continue;
            }
            v[it->second] = c;
        }
        return v;
    }

    static std::map<Key, int> make_index(const std::vector<Key>& b) {
        std::map<Key, int> idx;
        for (int i = 0; i < static_cast<int>(b.size()); ++i) idx[b[i]] = i;
        return idx;
    }

    // new generators of F_s in cell c, plus verification flags
    struct CellOut {
        std::vector<Gen> fresh;
        bool minimal = true, complex_ok = true, exact_ok = true;
    };

    CellOut process(int s, const Cell& c) const {
        CellOut out;
        const auto Bs1 = basis(s - 1, c);
        if (Bs1.empty()) return out;
        const auto idx1 = make_index(Bs1);
        std::vector<Vec> K;
        if (s == 1) {
            Echelon E(F, static_cast<int>(Bs1.size()));
            for (const auto& l : L) {
                const PbwMono lead = l.begin()->first;
                std::vector<int> D(f), w(f);
                bool ok = true;
                for (int j = 0; j < f && ok; ++j) {
                    D[j] = c.D[j] - pbw_deg(lead, j);
                    w[j] = c.w[j] - pbw_wt(lead, j);
                    ok = D[j] >= 0;
                }
                if (!ok) continue;
                for (PbwMono m : pbw_cell(f, D, w)) {
                    const PbwElement prod = pbw_multiply(F, f, pbw_single(m), l);
                    Sparse e;
                    for (const auto& [pm, pc] : prod) e[{0, pm}] = pc;
                    bool inside = true;
                    Vec v = to_vec(e, idx1, inside);
                    if (!inside) out.complex_ok = false;
                    if (E.insert(v)) K.push_back(std::move(v));
                }
            }
        } else {
            const auto Bs2 = basis(s - 2, c);
            const auto idx2 = make_index(Bs2);
            if (Bs2.empty()) {
                for (size_t i = 0; i < Bs1.size(); ++i) {
                    Vec v(Bs1.size(), 0);
                    v[i] = 1;
                    K.push_back(std::move(v));
                }
            } else {
                Mat m(static_cast<int>(Bs2.size()), static_cast<int>(Bs1.size()));
                for (int col = 0; col < static_cast<int>(Bs1.size()); ++col)
                    for (const auto& [k, v] : apply_d(s - 1, Bs1[col])) {
                        auto it = idx2.find(k);
                        if (it == idx2.end()) {
                            out.complex_ok = false;
                            continue;
                        }
                        m.at(it->second, col) = v;
                    }
                K = kernel(F, std::move(m));
            }
        }
        if (K.empty()) return out;

        Echelon img(F, static_cast<int>(Bs1.size()));
        if (s < static_cast<int>(gens.size())) {
            for (const auto& k : basis(s, c)) {
                bool inside = true;
                Vec v = to_vec(apply_d(s, k), idx1, inside);
                if (!inside) out.complex_ok = false;
                img.insert(std::move(v));
            }
        }
        for (const auto& v : K) {
            if (!img.insert(v)) continue;
            Gen g{c.D, c.w, 0, {}};
            for (int j = 0; j < f; ++j) g.total += c.D[j];
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i]) {
                    g.img[Bs1[i]] = v[i];
                    if (Bs1[i].second == 0) out.minimal = false;
                }
            out.fresh.push_back(std::move(g));
        }
        if (img.size() != static_cast<int>(K.size())) out.exact_ok = false;
        return out;
    }

    // d_{s-1}(d_s(g)) == 0
    bool dd_zero(int s, const Gen& g) const {
        if (s < 2) return true;
        Sparse acc;
        for (const auto& [k, c] : g.img)
            for (const auto& [k2, v] : apply_d(s - 1, k)) {
                std::uint32_t& slot = acc[k2];
                slot = F.add(slot, F.mul(c, v));
            }
        for (const auto& [k, v] : acc)
            if (v) return false;
        return true;
    }

    std::vector<Cell> cells_of_degree(int D) const {
        std::vector<Cell> out;
        Cell c{std::vector<int>(f), std::vector<int>(f)};
        auto recD = [&](auto&& self, int j, int left) -> void {
            if (j == f - 1) {
                c.D[j] = left;
                auto recW = [&](auto&& selfW, int k) -> void {
                    if (k == f) {
                        out.push_back(c);
                        return;
                    }
                    for (int w = -c.D[k]; w <= c.D[k]; w += 2) {
                        c.w[k] = w;
                        selfW(selfW, k + 1);
                    }
                };
                recW(recW, 0);
                return;
            }
            for (int d = 0; d <= left; ++d) {
                c.D[j] = d;
                self(self, j + 1, left - d);
            }
        };
        recD(recD, 0, D);
        return out;
    }

    template <bool Parallel>
    void run(int jobs) {
        const int imax = res.imax;
        for (int D = 1; D <= res.Dmax; ++D) {
            const auto cells = cells_of_degree(D);
            const int nc = static_cast<int>(cells.size());
            res.cells += nc;
            for (int s = 1; s <= imax; ++s) {
                std::vector<CellOut> outs(nc);
                if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
                    for (int k = 0; k < nc; ++k) outs[k] = process(s, cells[k]);
                } else {
                    for (int k = 0; k < nc; ++k) outs[k] = process(s, cells[k]);
                }
                for (auto& o : outs) {
                    res.minimal &= o.minimal;
                    res.complex_ok &= o.complex_ok;
                    res.exact_ok &= o.exact_ok;
                    for (auto& g : o.fresh) {
                        if (!dd_zero(s, g)) res.complex_ok = false;
                        gens[s].push_back(std::move(g));
                    }
                }
            }
        }
        res.terms.assign(imax + 1, {});
        for (int s = 0; s <= imax; ++s) {
            for (const auto& g : gens[s]) {
                res.terms[s].push_back({g.total, g.w});
                if (M.n == 0 && (g.total < s || g.total > 2 * s)) res.support_ok = false;
            }
            std::sort(res.terms[s].begin(), res.terms[s].end());
        }
        if (M.n == 0) {
            res.complete = res.Dmax >= 2 * imax;
        } else {
            res.complete = true;
            for (int i = 0; i <= imax; ++i)
                if (ce_degree_bound(M, i) > res.Dmax) res.complete = false;
        }
    }
};

}  // namespace

Resolution resolve(const CyclicModule& M, int imax, int Dmax, unsigned prime, int jobs) {
    Engine e(M, imax, Dmax, prime);
    e.run<true>(jobs);
    return e.res;
}

Resolution resolve_serial(const CyclicModule& M, int imax, int Dmax, unsigned prime) {
    Engine e(M, imax, Dmax, prime);
    e.run<false>(1);
    return e.res;
}

BettiTable expected_table(T t, bool with_In) {
    // written for t = y; t = z inverts every weight
    BettiTable b;
    if (t == T::YZ) {
        if (with_In)
            b = {{{0, {0}}},
                 {{2, {0}}, {2, {0}}, {3, {-3}}, {3, {3}}},
                 {{4, {-2}}, {4, {0}}, {4, {2}}, {5, {-3}}, {5, {3}}},
                 {{6, {-2}}, {6, {2}}}};
        else
            b = {{{0, {0}}}, {{2, {0}}, {2, {0}}}, {{4, {0}}}};
    } else {
        if (with_In)
            b = {{{0, {0}}},
                 {{1, {1}}, {2, {0}}, {3, {-3}}},
                 {{3, {1}}, {4, {-2}}, {5, {-3}}},
                 {{6, {-2}}}};
        else
            b = {{{0, {0}}}, {{1, {1}}, {2, {0}}}, {{3, {1}}}};
        if (t == T::Z)
            for (auto& row : b)
                for (auto& e : row) e.wt[0] = -e.wt[0];
    }
    for (auto& row : b) std::sort(row.begin(), row.end());
    return b;
}

BettiTable boxed_part(T t) { return expected_table(t, false); }

BettiTable tensor_tables(const std::vector<BettiTable>& factors, int imax) {
    BettiTable acc{{BettiEntry{0, {}}}};
    for (const auto& fac : factors) {
        BettiTable next(acc.size() + fac.size() - 1);
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t k = 0; k < fac.size(); ++k)
                for (const auto& a : acc[i])
                    for (const auto& b : fac[k]) {
                        BettiEntry e{a.shift + b.shift, a.wt};
                        e.wt.insert(e.wt.end(), b.wt.begin(), b.wt.end());
                        next[i + k].push_back(e);
                    }
        acc.swap(next);
    }
    acc.resize(imax + 1);
    for (auto& row : acc) std::sort(row.begin(), row.end());
    return acc;
}

namespace {

std::string table_diff(const BettiTable& got, const BettiTable& want) {
    std::string d;
    for (size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
        const auto g = i < got.size() ? got[i] : std::vector<BettiEntry>{};
        const auto w = i < want.size() ? want[i] : std::vector<BettiEntry>{};
        if (g == w) continue;
        d += "F" + std::to_string(i) + " differs; computed: " + betti_str({g}) +
             " expected: " + betti_str({w});
    }
    return d;
}

}  // namespace

TableCheck resolution_tables(T t, bool with_In, int n, unsigned prime) {
    TableCheck tc;
    CyclicModule M{{t}, with_In ? n : 0};
    // single factor: gr(Lambda)_j has global dimension 3
    const int imax = 3;
    int Dmax = 2 * imax + 2;
    if (with_In) Dmax = std::max(Dmax, ce_degree_bound(M, imax) + 1);
    tc.computed = resolve(M, imax, Dmax, prime);
    if (with_In && n == 3) {
        tc.expected = expected_table(t, true);
    } else if (!with_In) {
        tc.expected = expected_table(t, false);
    }
    tc.expected.resize(imax + 1);
    tc.match = tc.computed.terms == tc.expected;
    if (!tc.match) tc.diff = table_diff(tc.computed.terms, tc.expected);
    return tc;
}

TableCheck resolution_tables(const TType& t, bool with_In, int imax, int Dmax, unsigned prime, int jobs) {
    TableCheck tc;
    CyclicModule M{t, with_In ? 3 : 0};
    tc.computed = resolve(M, imax, Dmax, prime, jobs);
    std::vector<BettiTable> fac;
    for (T tj : t) fac.push_back(expected_table(tj, with_In));
    tc.expected = tensor_tables(fac, imax);
    tc.match = tc.computed.terms == tc.expected;
    if (!tc.match) tc.diff = table_diff(tc.computed.terms, tc.expected);
    return tc;
}

bool TorEntry::operator<(const TorEntry& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (chi != o.chi) return chi < o.chi;
    if (wt != o.wt) return wt < o.wt;
    return lambda < o.lambda;
}

TorData tor_grlambda(const Params& P, const std::vector<Lambda>& summands, int n, int imax, int Dmax,
                     unsigned prime, int jobs) {
    const Modulus Mod(P.f, P.p);
    TorData out;
    out.imax = imax;
    out.Dmax = Dmax;
    out.by_i.assign(imax + 1, {});
    // one resolution per t-type, shared by every summand carrying it
    std::map<TType, Resolution> cache;
    for (const auto& l : summands) {
        const TType t = t_type(l, P.j_rho);
        if (!cache.count(t)) cache.emplace(t, resolve(CyclicModule{t, n}, imax, Dmax, prime, jobs));
    }
    for (const auto& [t, r] : cache) {
        out.complete &= r.complete;
        out.verified &= r.minimal && r.complex_ok && r.exact_ok;
        if (n == 0) out.support_ok &= r.support_ok;
    }
    for (const auto& l : summands) {
        const Resolution& r = cache.at(t_type(l, P.j_rho));
        const Char base = char_inv(Mod, chi_lambda(Mod, l));
        for (int i = 0; i <= imax; ++i)
            for (const auto& e : r.terms[i])
                out.by_i[i].push_back({e.shift, char_twist(Mod, base, e.wt), e.wt, l});
    }
    for (auto& row : out.by_i) std::sort(row.begin(), row.end());
    return out;
}

DualBound dual_degree_bound_check(const TType& t, unsigned prime, int jobs) {
    const int f = static_cast<int>(t.size());
    DualBound db;
    int d = 0;
    for (T tj : t)
        if (tj == T::YZ) ++d;
    db.predicted = 3 * (f - d) + 4 * d;
    const Resolution r = resolve(CyclicModule{t, 0}, 2 * f, 4 * f + 2, prime, jobs);
    db.complete = r.complete;
    if (r.terms[2 * f].size() == 1) db.top_shift = r.terms[2 * f][0].shift;
    db.ok = r.terms[2 * f].size() == 1 && db.top_shift == db.predicted && db.top_shift <= 4 * f &&
            db.top_shift >= 3 * f && r.minimal && r.complex_ok && r.exact_ok;
    return db;
}

}  // namespace swc
