#include "swc/cycles.hpp"

#include <algorithm>

namespace swc {

namespace {

// generator lies in the prime q, i.e. vanishes in the stalk
bool hits_prime(const Mono& g, Subset q, int f) {
    for (int j = 0; j < f; ++j)
        if (g[2 * j + (has(q, j) ? 1 : 0)] > 0) return true;
    return false;
}

// the stalk of I at q is everything iff some generator avoids q
bool stalk_full(const MonomialIdeal& I, Subset q) {
    for (const auto& g : I.gens())
        if (!hits_prime(g, q, I.f())) return true;
    return false;
}

}  // namespace

CycleVector cycle_of(const MonomialIdeal& I) {
    const int f = I.f();
    CycleVector c(size_t{1} << f, 0);
    for (Subset q = 0; q < (Subset{1} << f); ++q) c[q] = stalk_full(I, q) ? 0 : 1;
    return c;
}

CycleVector cycle_of(const MonomialIdeal& I, const MonomialIdeal& Ip) {
    if (!Ip.subset_of(I)) throw PreconditionError("cycle_of: ideals are not nested");
    const int f = I.f();
    CycleVector c(size_t{1} << f, 0);
    for (Subset q = 0; q < (Subset{1} << f); ++q)
        c[q] = stalk_full(I, q) && !stalk_full(Ip, q) ? 1 : 0;
    return c;
}

int total_mult(const CycleVector& c) {
    int s = 0;
    for (int v : c) s += v;
    return s;
}

CycleVector cycle_add(const CycleVector& a, const CycleVector& b) {
    CycleVector c(a.size());
    for (size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
    return c;
}

long long total_mult_formula(int f, Subset J1, Subset J2, int d, const TType& t) {
    if (J1 & J2) throw PreconditionError("total_mult_formula: J1 and J2 overlap");
    const Subset J = J1 | J2;
    int c = 0;
    for (int j = 0; j < f; ++j) {
        if (has(J, j) && t[j] != T::YZ)
            throw PreconditionError("total_mult_formula: t_j must be yz on J1 and J2");
        if (!has(J, j) && t[j] == T::YZ) ++c;
    }
    const int k = popcount(J);
    long long sum = 0, binom = 1;
    for (int i = 0; i < d && i <= k; ++i) {
        sum += binom;
        binom = binom * (k - i) / (i + 1);
    }
    return (1LL << c) * sum;
}

MultAdd mult_add(const Lambda& l, int i0, Subset j_rho, StarRule rule) {
    const int f = static_cast<int>(l.size());
    const Lambda s = star_involution(l, j_rho, rule);
    MultAdd m;
    m.lhs_a1 = total_mult(cycle_of(ideal_a1(l, i0, j_rho)));
    m.lhs_star = total_mult(cycle_of(ideal_a1(s, f - 1 - i0, j_rho)));
    m.rhs = total_mult(cycle_of(ideal_a(l, j_rho)));
    return m;
}

bool mult_add_check(const Lambda& l, int i0, Subset j_rho, StarRule rule) {
    return mult_add(l, i0, j_rho, rule).ok();
}

bool cycle_additivity_check(const MonomialIdeal& I, const MonomialIdeal& Ip) {
    return cycle_of(Ip) == cycle_add(cycle_of(I), cycle_of(I, Ip));
}

MultAddSweep mult_add_sweep_serial(int f, Subset j_rho, StarRule rule) {
    MultAddSweep out;
    for (const auto& l : enumerate_p(f, j_rho))
        for (int i0 = -1; i0 <= f; ++i0) {
            ++out.checked;
            if (!mult_add_check(l, i0, j_rho, rule)) out.failures.push_back({l, i0});
        }
    return out;
}

MultAddSweep mult_add_sweep(int f, Subset j_rho, int jobs, StarRule rule) {
    const auto P = enumerate_p(f, j_rho);
    // raise the contract failure once, outside the parallel region
    if (!P.empty()) star_involution(P.front(), j_rho, rule);
    const int n = static_cast<int>(P.size());
    std::vector<std::vector<int>> bad(n);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
    for (int k = 0; k < n; ++k)
        for (int i0 = -1; i0 <= f; ++i0)
            if (!mult_add_check(P[k], i0, j_rho, rule)) bad[k].push_back(i0);
    MultAddSweep out;
    out.checked = static_cast<long long>(n) * (f + 2);
    for (int k = 0; k < n; ++k)
        for (int i0 : bad[k]) out.failures.push_back({P[k], i0});
    return out;
}

}  // namespace swc
