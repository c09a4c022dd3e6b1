#include "doctest.h"
#include "oracles.hpp"
#include "swc/cycles.hpp"

using namespace swc;

namespace {
std::vector<TType> ttypes(int f) {
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
}

TEST_CASE("cycles of simple quotients") {
    for (int f = 1; f <= 3; ++f) {
        const CycleVector c = cycle_of(MonomialIdeal::zero(f));
        CHECK(total_mult(c) == (1 << f));
        CHECK(total_mult(cycle_of(MonomialIdeal::unit(f))) == 0);
    }
    const CycleVector z = cycle_of(MonomialIdeal(1, {mono_z(1, 0)}));
    CHECK(z == CycleVector{0, 1});
}

TEST_CASE("multiplicity formula against localization and the Hilbert oracle") {
    CHECK(total_mult_formula(2, 0, 3, 1, {T::YZ, T::YZ}) == 1);
    CHECK(total_mult_formula(2, 0, 3, 0, {T::YZ, T::YZ}) == 0);
    for (int f = 1; f <= 3; ++f)
        for (Subset J1 = 0; J1 <= full_set(f); ++J1)
            for (Subset J2 = 0; J2 <= full_set(f); ++J2) {
                if (J1 & J2) continue;
                for (const auto& t : ttypes(f)) {
                    bool fits = true;
                    for (int j = 0; j < f; ++j)
                        if (has(J1 | J2, j) && t[j] != T::YZ) fits = false;
                    if (!fits) continue;
                    for (int d = 0; d <= f + 1; ++d) {
                        const MonomialIdeal I = ideal_ijdt(f, J1, J2, d, t);
                        const CycleVector c = cycle_of(I);
                        for (int m : c) CHECK((m == 0 || m == 1));
                        CHECK(total_mult(c) == total_mult_formula(f, J1, J2, d, t));
                        CHECK(total_mult(c) == oracle::mult_by_hilbert(I));
                    }
                }
            }
}

TEST_CASE("m(Rbar/a(lambda)) = 2^{#yz core} 2^{|J|}") {
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            for (const auto& l : enumerate_p(f, jr)) {
                const int want = 1 << (popcount(yz_core(l)) + popcount(j_outside(l, jr)));
                CHECK(total_mult(cycle_of(ideal_a(l, jr))) == want);
            }
}

TEST_CASE("multiplicity additivity under star") {
    const Lambda x = parse_lambda("x", 1);
    const MultAdd m = mult_add(x, 0, 1);
    CHECK(m.lhs_a1 == 1);
    CHECK(m.lhs_star == 0);
    CHECK(m.rhs == 1);
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr) {
            const auto a = mult_add_sweep_serial(f, jr);
            const auto b = mult_add_sweep(f, jr, 4);
            CHECK(a.failures.empty());
            CHECK(a.checked == b.checked);
            CHECK(a.failures == b.failures);
        }
}

TEST_CASE("cycle additivity on nested pairs") {
    for (int f = 1; f <= 3; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            for (const auto& l : enumerate_p(f, jr))
                for (int i0 = -1; i0 <= f; ++i0) {
                    const MonomialIdeal I = ideal_a1(l, i0, jr);
                    CHECK(cycle_additivity_check(I, ideal_a(l, jr)));
                    CHECK(cycle_additivity_check(I, MonomialIdeal::zero(f)));
                    CHECK(cycle_additivity_check(I, I));
                }
}

TEST_CASE("star permutes the layers") {
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr) {
            std::vector<int> a(f + 1, 0), b(f + 1, 0);
            for (const auto& l : enumerate_p(f, jr)) {
                const int J = popcount(j_outside(l, jr));
                ++a[ell(l)];
                ++b[f - J - ell(star_involution(l, jr))];
            }
            CHECK(a == b);
        }
}
