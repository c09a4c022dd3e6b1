#include "doctest.h"
#include "swc/monomial.hpp"

using namespace swc;

namespace {
Lambda L(const std::string& s, int f) { return parse_lambda(s, f); }
std::vector<long long> seq(std::initializer_list<long long> v) { return v; }
}

TEST_CASE("the ideals a(lambda)") {
    CHECK(ideal_a(L("x", 1), 1) == MonomialIdeal(1, {mono_z(1, 0)}));
    CHECK(ideal_a(L("x", 1), 0).is_zero());
    CHECK(ideal_a(L("x+1,x+1", 2), 0).is_zero());
    CHECK(ideal_a(L("p-1-x", 1), 1) == MonomialIdeal(1, {mono_y(1, 0)}));
}

TEST_CASE("I(J1, J2, d)") {
    CHECK(ideal_ijd(2, 1, 2, 0).is_unit());
    CHECK(ideal_ijd(2, 0, 3, 1) == MonomialIdeal(2, {mono_z(2, 0), mono_z(2, 1)}));
    CHECK(ideal_ijd(2, 1, 2, 2) == MonomialIdeal(2, {mono_mul(mono_y(2, 0), mono_z(2, 1))}));
    CHECK(ideal_ijd(2, 1, 2, 3).is_zero());
}

TEST_CASE("the ideals a1^{i0}(lambda)") {
    CHECK(ideal_a1(L("x+2", 1), 0, 1).is_unit());
    CHECK(ideal_a1(L("p-1-x", 1), 0, 0) == MonomialIdeal(1, {mono_y(1, 0)}));
    CHECK_THROWS_AS(ideal_a1(L("x", 1), 2, 0), PreconditionError);
    for (int f = 1; f <= 3; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            for (const auto& l : enumerate_p(f, jr)) {
                CHECK(ideal_a1(l, f, jr) == ideal_a(l, jr));
                CHECK(ideal_a1(l, -1, jr).is_unit());
                for (int i = -1; i < f; ++i) CHECK(ideal_a1(l, i + 1, jr).subset_of(ideal_a1(l, i, jr)));
            }
}

TEST_CASE("minimal generators form an antichain") {
    const MonomialIdeal I(2, {mono_y(2, 0), mono_mul(mono_y(2, 0), mono_z(2, 1)), mono_z(2, 1, 2), mono_z(2, 1, 3),
                              mono_mul(mono_y(2, 0), mono_z(2, 0))});
    CHECK(I.gens().size() == 2);
    for (const auto& a : I.gens())
        for (const auto& b : I.gens())
            if (a != b) CHECK_FALSE(mono_divides(a, b));
}

TEST_CASE("Hilbert functions") {
    CHECK(hilbert_function(MonomialIdeal::zero(1), 4) == seq({1, 2, 2, 2, 2}));
    CHECK(hilbert_function(MonomialIdeal(1, {mono_z(1, 0)}), 4) == seq({1, 1, 1, 1, 1}));
    // additivity along a nested pair
    for (Subset jr = 0; jr < 4; ++jr)
        for (const auto& l : enumerate_p(2, jr))
            for (int i0 = -1; i0 <= 2; ++i0) {
                const MonomialIdeal I = ideal_a1(l, i0, jr), Ip = ideal_a(l, jr);
                const auto a = hilbert_function(I, 6), b = hilbert_function(I, Ip, 6), c = hilbert_function(Ip, 6);
                for (int d = 0; d <= 6; ++d) CHECK(a[d] + b[d] == c[d]);
            }
    CHECK_THROWS_AS(hilbert_function(MonomialIdeal(1, {mono_z(1, 0)}), MonomialIdeal(1, {mono_y(1, 0)}), 3),
                    PreconditionError);
}

TEST_CASE("dimension of N/I^(n) N summands") {
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            for (const auto& l : enumerate_p(f, jr)) {
                const TType t = t_type(l, jr);
                for (int n = 1; n <= f + 1; ++n) {
                    long long want = 1;
                    for (T x : t) want *= x == T::YZ ? 2 * n - 1 : n;
                    CHECK(finite_length(ideal_a(l, jr), n) == want);
                }
            }
}

TEST_CASE("graded characters") {
    const Modulus M(1, 29);
    const Lambda x = L("x", 1);
    const auto g = graded_characters(M, x, ideal_a(x, 1), 2);
    const Char base = char_inv(M, chi_lambda(M, x));
    CHECK(g[0] == std::vector<Char>{base});
    CHECK(g[1] == std::vector<Char>{char_mul(M, base, alpha(M, 0))});
}
