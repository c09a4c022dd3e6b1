#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "swc/weights.hpp"

using namespace swc;

namespace {
Lambda L(const std::string& s, int f) { return parse_lambda(s, f); }
}

TEST_CASE("pss matches the brute-force filter") {
    for (int f = 1; f <= 5; ++f) {
        auto a = enumerate_pss(f);
        auto b = oracle::pss_by_filter(f);
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        CHECK(enumerate_pss_bruteforce(f) == b);
    }
}

TEST_CASE("frozen sizes of P^ss and P") {
    const size_t pss[] = {4, 10, 28, 82, 244, 730};
    for (int f = 1; f <= 6; ++f) CHECK(enumerate_pss(f).size() == pss[f - 1]);
    CHECK(enumerate_p(1, 0).size() == 2);
    CHECK(enumerate_p(1, 1).size() == 4);
    CHECK(enumerate_p(2, 0).size() == 4);
    CHECK(enumerate_p(2, 1).size() == 6);
    CHECK(enumerate_p(2, 3).size() == 10);
    CHECK(enumerate_p(3, 0).size() == 8);
    CHECK(enumerate_p(3, 5).size() == 18);
}

TEST_CASE("f = 1 sets") {
    CHECK(enumerate_pss(1) == std::vector<Lambda>{L("x", 1), L("x+2", 1), L("p-3-x", 1), L("p-1-x", 1)});
    CHECK(enumerate_p(1, 0) == std::vector<Lambda>{L("x", 1), L("p-1-x", 1)});
    CHECK(enumerate_p(1, 1) == enumerate_pss(1));
}

TEST_CASE("D^ss and D") {
    for (int f = 1; f <= 5; ++f) {
        const auto dss = enumerate_dss(f);
        CHECK(dss.size() == (size_t{1} << f));
        std::vector<Subset> js;
        for (const auto& l : dss) js.push_back(j_set(l));
        std::sort(js.begin(), js.end());
        for (Subset s = 0; s <= full_set(f); ++s) CHECK(js[s] == s);
        for (Subset jr = 0; jr <= full_set(f); ++jr) CHECK(enumerate_d(f, jr).size() == (size_t{1} << popcount(jr)));
    }
}

TEST_CASE("j_set and t_type") {
    CHECK(j_set(L("x,x,x", 3)) == 0);
    CHECK(j_set(L("x+2", 1)) == 1u);
    CHECK(t_type(L("x", 1), 1) == TType{T::Z});
    CHECK(t_type(L("p-1-x", 1), 0) == TType{T::YZ});
    CHECK(t_type(L("x+1,p-2-x", 2), 0) == TType{T::YZ, T::YZ});
    CHECK_THROWS_AS(t_type(L("x+2", 1), 0), PreconditionError);
}

TEST_CASE("shift, delta and bracket") {
    CHECK(shift_by_s(L("x", 1), 1, 1) == L("x+2", 1));
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            for (const auto& l : enumerate_p(f, jr)) {
                const TType t = t_type(l, jr);
                Subset ok = 0;
                for (int j = 0; j < f; ++j)
                    if (t[j] != T::YZ) ok |= 1u << j;
                for (Subset S = ok;; S = (S - 1) & ok) {
                    const Lambda s = shift_by_s(l, S, jr);
                    CHECK(in_p(s, jr));
                    CHECK(shift_by_s(s, S, jr) == l);
                    if (!S) break;
                }
            }
    for (int f = 1; f <= 5; ++f)
        for (const auto& l : enumerate_pss(f)) {
            Lambda d = l;
            for (int k = 0; k < f; ++k) d = delta_shift(d);
            CHECK(d == l);
            CHECK(in_pss(bracket_s(l)));
            CHECK(bracket_s(bracket_s(l)) == l);
        }
    CHECK(bracket_s(L("x", 1)) == L("p-1-x", 1));
}

TEST_CASE("star involution contract") {
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr) {
            CHECK(verify_star_contract(f, jr, StarRule::side_flip).ok);
            for (const auto& l : enumerate_p(f, jr)) {
                const Lambda s = star_involution(l, jr);
                CHECK(star_involution(s, jr) == l);
                CHECK(ell(l) + ell(s) + popcount(j_outside(l, jr)) == f);
            }
        }
    // the pointwise rule breaks once j_rho mixes inside and outside indices
    CHECK_FALSE(verify_star_contract(2, 1, StarRule::pointwise_fix).ok);
    for (const auto& l : enumerate_p(1, 0)) {
        const Lambda s = star_involution(l, 0);
        CHECK(ell(s) == 0);
    }
}

TEST_CASE("projection to P and its lift") {
    CHECK(pss_to_p_projection(L("p-3-x", 1), 0).mu == L("p-1-x", 1));
    CHECK(pss_to_p_projection(L("p-3-x", 1), 0).J1 == 1u);
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            for (const auto& l : enumerate_pss(f)) {
                const Projection pr = pss_to_p_projection(l, jr);
                CHECK(in_p(pr.mu, jr));
                CHECK(lift_to_pss(pr.mu, pr.J1, pr.J2) == l);
                if (in_p(l, jr)) CHECK((pr.J1 | pr.J2) == 0);
            }
}

TEST_CASE("params validation and genericity") {
    Params P{1, 29, 1, {13}};
    CHECK_NOTHROW(validate(P));
    CHECK(P.genericity() == 13);
    CHECK(P.generic(13));
    CHECK_FALSE(P.generic(14));
    Params Q{1, 7, 0, {2}};
    CHECK(Q.genericity() == 2);
    CHECK_THROWS_AS(validate(Params{1, 9, 0, {2}}), ConfigError);
    CHECK_THROWS_AS(validate(Params{2, 29, 0, {2}}), ConfigError);
    CHECK_THROWS_AS(validate(Params{1, 29, 0, {27}}), ConfigError);
    CHECK_THROWS_AS(parse_subset("0,3", 2), ConfigError);
    CHECK(parse_subset("", 2) == 0);
}
