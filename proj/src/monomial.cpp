#include "swc/monomial.hpp"

#include <algorithm>

namespace swc {

Mono mono_one(int f) { return Mono(2 * f, 0); }

Mono mono_y(int f, int j, int e) {
    Mono m = mono_one(f);
    m[2 * j] = e;
    return m;
}

Mono mono_z(int f, int j, int e) {
    Mono m = mono_one(f);
    m[2 * j + 1] = e;
    return m;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono c(a.size());
    for (size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
    return c;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono c(a.size());
    for (size_t k = 0; k < a.size(); ++k) c[k] = std::max(a[k], b[k]);
    return c;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

int mono_deg(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool mono_rbar_zero(const Mono& m) {
    for (size_t j = 0; 2 * j < m.size(); ++j)
        if (m[2 * j] > 0 && m[2 * j + 1] > 0) return true;
    return false;
}

std::string mono_str(const Mono& m) {
    std::string s;
    for (size_t k = 0; k < m.size(); ++k) {
        if (!m[k]) continue;
        if (!s.empty()) s += "*";
        s += (k % 2 ? "z" : "y") + std::to_string(k / 2);
        if (m[k] > 1) s += "^" + std::to_string(m[k]);
    }
    return s.empty() ? "1" : s;
}

MonomialIdeal::MonomialIdeal(int f, std::vector<Mono> gens) : f_(f) {
    gens.erase(std::remove_if(gens.begin(), gens.end(), mono_rbar_zero), gens.end());
    std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) {
        const int da = mono_deg(a), db = mono_deg(b);
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens_)
            if (mono_divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) gens_.push_back(g);
    }
}

MonomialIdeal MonomialIdeal::unit(int f) { return MonomialIdeal(f, {mono_one(f)}); }

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && mono_deg(gens_[0]) == 0; }

bool MonomialIdeal::contains(const Mono& m) const {
    if (mono_rbar_zero(m)) return true;
    for (const auto& g : gens_)
        if (mono_divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::subset_of(const MonomialIdeal& o) const {
    for (const auto& g : gens_)
        if (!o.contains(g)) return false;
    return true;
}

std::string MonomialIdeal::str() const {
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (size_t k = 0; k < gens_.size(); ++k) {
        if (k) s += ", ";
        s += mono_str(gens_[k]);
    }
    return s + ")";
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Mono> g = a.gens();
    g.insert(g.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.f(), std::move(g));
}

MonomialIdeal ideal_t(const TType& t) {
    const int f = static_cast<int>(t.size());
    std::vector<Mono> g;
    for (int j = 0; j < f; ++j) {
        Mono m = mono_one(f);
        if (t[j] != T::Z) m[2 * j] = 1;
        if (t[j] != T::Y) m[2 * j + 1] = 1;
        g.push_back(m);
    }
    return MonomialIdeal(f, std::move(g));
}

MonomialIdeal ideal_a(const Lambda& l, Subset j_rho) { return ideal_t(t_type(l, j_rho)); }

MonomialIdeal ideal_ijd(int f, Subset J1, Subset J2, int d) {
    if (J1 & J2) throw PreconditionError("ideal_ijd: J1 and J2 overlap");
    if (d <= 0) return MonomialIdeal::unit(f);
    const Subset J = J1 | J2;
    std::vector<Mono> g;
    for (Subset S = J;; S = (S - 1) & J) {
        if (popcount(S) == d) {
            Mono m = mono_one(f);
            for (int j = 0; j < f; ++j)
                if (has(S, j)) m[2 * j + (has(J1, j) ? 0 : 1)] = 1;
            g.push_back(m);
        }
        if (S == 0) break;
    }
    return MonomialIdeal(f, std::move(g));
}

MonomialIdeal ideal_ijdt(int f, Subset J1, Subset J2, int d, const TType& t) {
    return ideal_sum(ideal_ijd(f, J1, J2, d), ideal_t(t));
}

MonomialIdeal ideal_In(int f, int n) {
    std::vector<Mono> g;
    for (int j = 0; j < f; ++j) {
        g.push_back(mono_y(f, j, n));
        g.push_back(mono_z(f, j, n));
    }
    return MonomialIdeal(f, std::move(g));
}

void a1_sets(const Lambda& l, Subset j_rho, Subset& J1, Subset& J2) {
    J1 = J2 = 0;
    for (size_t j = 0; j < l.size(); ++j) {
        if (has(j_rho, j)) continue;
        if (l[j] == Sym::p1) J1 |= 1u << j;
        if (l[j] == Sym::x) J2 |= 1u << j;
    }
}

MonomialIdeal ideal_a1(const Lambda& l, int i0, Subset j_rho) {
    const int f = static_cast<int>(l.size());
    if (i0 < -1 || i0 > f) throw PreconditionError("ideal_a1: i0 outside [-1, f]");
    Subset J1, J2;
    a1_sets(l, j_rho, J1, J2);
    return ideal_sum(ideal_ijd(f, J1, J2, i0 + 1 - ell(l)), ideal_a(l, j_rho));
}

namespace {

template <class Visit>
void rbar_walk(int f, int d, Mono& cur, int j, Visit&& visit) {
    if (j == f) {
        if (d == 0) visit(cur);
        return;
    }
    rbar_walk(f, d, cur, j + 1, visit);
    for (int e = 1; e <= d; ++e) {
        cur[2 * j] = e;
        rbar_walk(f, d - e, cur, j + 1, visit);
        cur[2 * j] = 0;
        cur[2 * j + 1] = e;
        rbar_walk(f, d - e, cur, j + 1, visit);
        cur[2 * j + 1] = 0;
    }
}

}  // namespace

std::vector<Mono> rbar_monomials(int f, int d) {
    std::vector<Mono> out;
    Mono cur = mono_one(f);
    rbar_walk(f, d, cur, 0, [&](const Mono& m) { out.push_back(m); });
    return out;
}

std::vector<Mono> rbar_box(int f, int n) {
    std::vector<Mono> out;
    Mono cur = mono_one(f);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == f) {
            out.push_back(cur);
            return;
        }
        self(self, j + 1);
        for (int e = 1; e < n; ++e) {
            cur[2 * j] = e;
            self(self, j + 1);
            cur[2 * j] = 0;
            cur[2 * j + 1] = e;
            self(self, j + 1);
            cur[2 * j + 1] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<long long> hilbert_function(const MonomialIdeal& I, int Dmax) {
    return hilbert_function(MonomialIdeal::unit(I.f()), I, Dmax);
}

std::vector<long long> hilbert_function(const MonomialIdeal& I, const MonomialIdeal& Ip, int Dmax) {
    if (Dmax < 0) throw PreconditionError("hilbert_function: Dmax must be >= 0");
    if (!Ip.subset_of(I)) throw PreconditionError("hilbert_function: ideals are not nested");
    std::vector<long long> h(Dmax + 1, 0);
    for (int d = 0; d <= Dmax; ++d)
        for (const auto& m : rbar_monomials(I.f(), d))
            if (I.contains(m) && !Ip.contains(m)) ++h[d];
    return h;
}

long long finite_length(const MonomialIdeal& I, int n) {
    long long c = 0;
    for (const auto& m : rbar_box(I.f(), n))
        if (!I.contains(m)) ++c;
    return c;
}

Char mono_char(const Modulus& M, const Lambda& l, const Mono& m) {
    std::vector<int> k(M.f);
    for (int j = 0; j < M.f; ++j) k[j] = m[2 * j] - m[2 * j + 1];
    return char_twist(M, char_inv(M, chi_lambda(M, l)), k);
}

GradedChars graded_characters(const Modulus& M, const Lambda& l, const MonomialIdeal& I,
                              const MonomialIdeal& Ip, int Dmax) {
    if (!Ip.subset_of(I)) throw PreconditionError("graded_characters: ideals are not nested");
    GradedChars out(Dmax + 1);
    for (int d = 0; d <= Dmax; ++d) {
        for (const auto& m : rbar_monomials(M.f, d))
            if (I.contains(m) && !Ip.contains(m)) out[d].push_back(mono_char(M, l, m));
        std::sort(out[d].begin(), out[d].end());
    }
    return out;
}

GradedChars graded_characters(const Modulus& M, const Lambda& l, const MonomialIdeal& I, int Dmax) {
    return graded_characters(M, l, MonomialIdeal::unit(M.f), I, Dmax);
}

}  // namespace swc
