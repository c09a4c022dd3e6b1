#include "swc/characters.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <omp.h>

namespace swc {

Modulus::Modulus(int f_, int p_) : f(f_), p(p_) {
    pw.resize(f + 1);
    pw[0] = 1;
    for (int j = 1; j <= f; ++j) pw[j] = pw[j - 1] * p;
    q1 = pw[f] - 1;
}

BigInt Modulus::reduce(const BigInt& v) const {
    BigInt m = v % q1;
    if (m < 0) m += q1;
    return m;
}

Char char_one(const Modulus& M) { return Char{std::vector<int>(M.f, 0), 0}; }

Char char_mul(const Modulus& M, const Char& a, const Char& b) {
    Char c{std::vector<int>(M.f), M.reduce(a.cst + b.cst)};
    for (int j = 0; j < M.f; ++j) c.coef[j] = a.coef[j] + b.coef[j];
    return c;
}

Char char_inv(const Modulus& M, const Char& a) {
    Char c{a.coef, M.reduce(-a.cst)};
    for (int& v : c.coef) v = -v;
    return c;
}

Char char_twist(const Modulus& M, const Char& a, const std::vector<int>& k) {
    BigInt add = 0;
    for (int j = 0; j < M.f; ++j)
        if (k[j]) add += 2 * k[j] * M.pw[j];
    return Char{a.coef, M.reduce(a.cst + add)};
}

BigInt char_eval(const Modulus& M, const Char& a, const std::vector<int>& r) {
    BigInt v = a.cst;
    for (int j = 0; j < M.f; ++j)
        if (a.coef[j]) v += BigInt(a.coef[j]) * r[j] * M.pw[j];
    return M.reduce(v);
}

std::string char_str(const Char& a) {
    std::string s = "[";
    for (size_t j = 0; j < a.coef.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(a.coef[j]);
    }
    return s + "|" + a.cst.str() + "]";
}

Char chi_lambda(const Modulus& M, const Lambda& l) {
    Char c{std::vector<int>(M.f), 0};
    BigInt cst = 0;
    for (int j = 0; j < M.f; ++j) {
        c.coef[j] = sym_coef(l[j]);
        cst += sym_const(l[j], M.p) * M.pw[j];
    }
    c.cst = M.reduce(cst);
    return c;
}

Char alpha(const Modulus& M, int j) {
    Char c{std::vector<int>(M.f, 0), M.reduce(2 * M.pw[j])};
    return c;
}

BigInt diff_of_lambda(const Lambda& l, const Params& P) {
    const Modulus M(P.f, P.p);
    return char_eval(M, chi_lambda(M, l), P.r);
}

bool digit_unique(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.size() != b.size()) throw PreconditionError("digit_unique: length mismatch");
    if (p <= 3) throw PreconditionError("digit_unique: p must exceed 3");
    int wa = 0, wb = 0;
    for (int v : a) {
        if (v < -1 || v > 1) throw PreconditionError("digit_unique: a_j must lie in {-1,0,1}");
        wa += std::abs(v);
    }
    for (int v : b) wb += std::abs(v);
    if (wa < wb) throw PreconditionError("digit_unique: requires sum|a| >= sum|b|");
    const Modulus M(static_cast<int>(a.size()), p);
    BigInt sa = 0, sb = 0;
    for (int j = 0; j < M.f; ++j) {
        sa += a[j] * M.pw[j];
        sb += b[j] * M.pw[j];
    }
    const bool congruent = M.reduce(sa - sb) == 0;
    return !congruent || a == b;
}

namespace {

void vectors_with_weight_at_most(int f, int bound, int maxw, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(f, 0);
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == f) {
            out.push_back(cur);
            return;
        }
        for (int v = -std::min(bound, left); v <= std::min(bound, left); ++v) {
            cur[j] = v;
            self(self, j + 1, left - std::abs(v));
        }
        cur[j] = 0;
    };
    rec(rec, 0, maxw);
}

int weight(const std::vector<int>& v) {
    int w = 0;
    for (int x : v) w += std::abs(x);
    return w;
}

}  // namespace

std::vector<DigitCounterexample> digit_unique_search(int f, int p, int max_weight) {
    std::vector<std::vector<int>> as, bs;
    vectors_with_weight_at_most(f, 1, max_weight, as);
    vectors_with_weight_at_most(f, p - 1, max_weight, bs);
    std::vector<DigitCounterexample> bad;
    for (const auto& a : as)
        for (const auto& b : bs)
            if (weight(b) <= weight(a) && !digit_unique(a, b, p)) bad.push_back({a, b});
    return bad;
}

bool Collision::operator<(const Collision& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    if (mu != o.mu) return mu < o.mu;
    return i < o.i;
}

namespace {

bool classified(const Collision& c, Subset j_rho) {
    const TType t = t_type(c.lambda, j_rho);
    Subset S = 0;
    for (size_t j = 0; j < c.i.size(); ++j) {
        const int v = c.i[j];
        if (v == 0) continue;
        if (v > 1 || v < -1) return false;
        if (v == 1 && t[j] != T::Z) return false;
        if (v == -1 && t[j] != T::Y) return false;
        S |= 1u << j;
    }
    return shift_by_s(c.lambda, S, j_rho) == c.mu;
}

struct ScanCtx {
    const std::vector<Lambda>& Pset;
    const Params& P;
    Modulus M;
    std::vector<Char> chars;
    std::vector<BigInt> evals;
    std::map<Char, std::vector<size_t>> by_formal;
    std::map<BigInt, std::vector<size_t>> by_eval;
    std::vector<std::vector<int>> offsets;

    ScanCtx(const std::vector<Lambda>& S, int m, const Params& P_)
        : Pset(S), P(P_), M(P_.f, P_.p) {
        for (size_t k = 0; k < Pset.size(); ++k) {
            chars.push_back(chi_lambda(M, Pset[k]));
            evals.push_back(char_eval(M, chars.back(), P.r));
            by_formal[chars.back()].push_back(k);
            by_eval[evals.back()].push_back(k);
        }
        std::vector<int> cur(P.f);
        auto rec = [&](auto&& self, int j) -> void {
            if (j == P.f) {
                offsets.push_back(cur);
                return;
            }
            for (int v = -m; v <= m; ++v) {
                cur[j] = v;
                self(self, j + 1);
            }
        };
        rec(rec, 0);
    }

    void scan_one(size_t k, CollisionReport& out) const {
        for (const auto& i : offsets) {
            const Char c = char_twist(M, chars[k], i);
            const BigInt e = char_eval(M, c, P.r);
            std::set<size_t> formal;
            if (auto it = by_formal.find(c); it != by_formal.end()) {
                for (size_t u : it->second) {
                    formal.insert(u);
                    Collision hit{Pset[k], Pset[u], i};
                    out.hits.push_back(hit);
                    if (!classified(hit, P.j_rho)) out.violations.push_back(hit);
                }
            }
            if (auto it = by_eval.find(e); it != by_eval.end())
                for (size_t u : it->second)
                    if (!formal.count(u)) out.evaluated_only.push_back({Pset[k], Pset[u], i});
        }
    }
};

void finish(CollisionReport& r, const std::vector<Lambda>& Pset, int m, Subset j_rho) {
    std::sort(r.hits.begin(), r.hits.end());
    std::sort(r.violations.begin(), r.violations.end());
    std::sort(r.evaluated_only.begin(), r.evaluated_only.end());
    if (m < 1) return;
    for (const auto& l : Pset) {
        const TType t = t_type(l, j_rho);
        Subset free = 0;
        for (size_t j = 0; j < t.size(); ++j)
            if (t[j] != T::YZ) free |= 1u << j;
        for (Subset S = free;; S = (S - 1) & free) {
            std::vector<int> i(l.size(), 0);
            for (size_t j = 0; j < l.size(); ++j)
                if (has(S, j)) i[j] = t[j] == T::Z ? 1 : -1;
            Collision want{l, shift_by_s(l, S, j_rho), i};
            if (!std::binary_search(r.hits.begin(), r.hits.end(), want))
                r.missing_shifts.push_back(want);
            if (S == 0) break;
        }
    }
}

void check_generic(int m, const Params& P) {
    if (!P.generic(m + 1))
        throw PreconditionError("collision_scan: requires " + std::to_string(m + 1) +
                                "-generic parameters");
}

}  // namespace

CollisionReport collision_scan_serial(const std::vector<Lambda>& Pset, int m, const Params& P) {
    check_generic(m, P);
    ScanCtx ctx(Pset, m, P);
    CollisionReport out;
    for (size_t k = 0; k < Pset.size(); ++k) ctx.scan_one(k, out);
    finish(out, Pset, m, P.j_rho);
    return out;
}

CollisionReport collision_scan(const std::vector<Lambda>& Pset, int m, const Params& P, int jobs) {
    check_generic(m, P);
    ScanCtx ctx(Pset, m, P);
    const int n = static_cast<int>(Pset.size());
    std::vector<CollisionReport> part(n);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
    for (int k = 0; k < n; ++k) ctx.scan_one(k, part[k]);
    CollisionReport out;
    for (auto& r : part) {
        out.hits.insert(out.hits.end(), r.hits.begin(), r.hits.end());
        out.violations.insert(out.violations.end(), r.violations.begin(), r.violations.end());
        out.evaluated_only.insert(out.evaluated_only.end(), r.evaluated_only.begin(),
                                  r.evaluated_only.end());
    }
    finish(out, Pset, m, P.j_rho);
    return out;
}

size_t LayeredCharSet::size() const {
    size_t n = 0;
    for (const auto& l : layers) n += l.size();
    return n;
}

LayeredCharSet w_layers(const Modulus& M, const Char& base, Subset J1, Subset J2, int f) {
    if (J1 & J2) throw PreconditionError("w_layers: J1 and J2 overlap");
    LayeredCharSet out;
    out.k1_fixed = J2 == 0;
    const Subset J = J1 | J2;
    out.layers.resize(popcount(J) + 1);
    for (Subset S = J;; S = (S - 1) & J) {
        std::vector<int> k(f, 0);
        for (int j = 0; j < f; ++j)
            if (has(S, j)) k[j] = has(J1, j) ? -1 : 1;
        out.layers[popcount(S)].push_back(char_twist(M, base, k));
        if (S == 0) break;
    }
    for (auto& l : out.layers) std::sort(l.begin(), l.end());
    return out;
}

Distinctness distinctness(const Modulus& M, std::vector<Char> chars, const std::vector<int>& r) {
    Distinctness d;
    std::sort(chars.begin(), chars.end());
    for (size_t k = 1; k < chars.size(); ++k)
        if (chars[k] == chars[k - 1]) ++d.formal_dups;
    std::vector<BigInt> ev;
    ev.reserve(chars.size());
    for (const auto& c : chars) ev.push_back(char_eval(M, c, r));
    std::sort(ev.begin(), ev.end());
    for (size_t k = 1; k < ev.size(); ++k)
        if (ev[k] == ev[k - 1]) ++d.evaluated_dups;
    return d;
}

}  // namespace swc
