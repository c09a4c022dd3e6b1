#include <algorithm>

#include "doctest.h"
#include "swc/repmodel.hpp"

using namespace swc;

namespace {
Lambda L(const std::string& s, int f) { return parse_lambda(s, f); }
Params params(int f, Subset jr) { return Params{f, 61, jr, std::vector<int>(f, 20)}; }
}

TEST_CASE("parameter sets") {
    const ParamSets ps = param_sets(L("x", 1), 1);
    CHECK(ps.Xss == 1);
    CHECK(ps.X == 1);
    CHECK(ps.Y == 1);
    CHECK(ps.Z == 0);
    for (int f = 1; f <= 4; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr) {
            for (const auto& mu : enumerate_p(f, jr)) {
                const ParamSets q = param_sets(mu, jr);
                CHECK((q.X & ~q.Y) == 0);
                CHECK((full_set(f) & ~jr & ~(q.Y & q.Z)) == 0);
            }
            for (const auto& l : enumerate_pss(f)) CHECK(projection_x_property(l, jr));
        }
}

TEST_CASE("Jordan-Holder tags of an interval") {
    CHECK(jh_I_sigma_tau(0, 3).size() == 4);
    const auto tags = jh_I_sigma_tau(1, 7);
    CHECK(tags.size() == 4);
    for (const auto& t : tags) CHECK((t.J & 1) == 1);
    CHECK_THROWS_AS(jh_I_sigma_tau(2, 1), PreconditionError);
    for (int f = 1; f <= 5; ++f) CHECK(dss_tags_cover(f));
}

TEST_CASE("highest weight predicate") {
    for (Subset a = 0; a < 4; ++a)
        for (Subset b = 0; b < 4; ++b) CHECK(hw_predicate(a, b, 0, 0) == ((a & ~b) == 0));
    for (Subset J2 = 0; J2 < 8; ++J2) CHECK(hw_predicate(7, 7, 0, J2));
    CHECK(hw_predicate(2, 3, 1, 0));
    CHECK_FALSE(hw_predicate(1, 3, 1, 0));
}

TEST_CASE("nonsplit lattice endpoints") {
    for (int f = 1; f <= 3; ++f) {
        const Params P = params(f, full_set(f));
        const LatticeState lo = nonsplit_lattice(P, -1);
        CHECK(lo.i1_params.empty());
        CHECK(lo.socle.empty());
        CHECK(lo.dxi_dim == 0);
        const LatticeState hi = nonsplit_lattice(P, f);
        CHECK(hi.i1_params.size() == enumerate_p(f, P.j_rho).size());
        CHECK(hi.dxi_dim == (1 << f));
        CHECK(hi.socle.size() == enumerate_d(f, P.j_rho).size());
        CHECK(hi.forbidden.empty());
        for (int i0 = -1; i0 <= f; ++i0) {
            const LatticeState s = nonsplit_lattice(P, i0);
            std::vector<Char> both;
            std::set_intersection(s.characters.begin(), s.characters.end(), s.forbidden.begin(), s.forbidden.end(),
                                  std::back_inserter(both));
            CHECK(both.empty());
        }
        CHECK_THROWS_AS(nonsplit_lattice(P, f + 1), PreconditionError);
    }
    const LatticeState s = nonsplit_lattice(params(1, 1), 0);
    for (const auto& [l, I] : s.gr_ideals) {
        if (l == L("x", 1)) CHECK(I == MonomialIdeal(1, {mono_z(1, 0)}));
        if (l == L("p-1-x", 1)) CHECK(I == MonomialIdeal(1, {mono_y(1, 0)}));
    }
}

TEST_CASE("subquotient character identity") {
    const Params P = params(1, 1);
    const Modulus M(1, P.p);
    const SubquotIdentity s = subquot_char_identity(P, -1, 0);
    CHECK(s.ok());
    std::vector<Char> want{chi_lambda(M, L("x", 1)), chi_lambda(M, L("p-1-x", 1))};
    std::sort(want.begin(), want.end());
    CHECK(s.rhs == want);
    for (int f = 1; f <= 3; ++f)
        for (Subset jr = 0; jr <= full_set(f); ++jr)
            for (int a = -1; a <= f; ++a)
                for (int b = a + 1; b <= f; ++b) CHECK(subquot_char_identity(params(f, jr), a, b).ok());
    CHECK_THROWS_AS(subquot_char_identity(P, 0, 0), PreconditionError);
}

TEST_CASE("split models") {
    const SplitModel zero = split_sigma_model(params(2, 3), 0);
    CHECK(zero.P1.empty());
    CHECK(zero.m_N1 == 0);
    CHECK(zero.dxi_dim == 0);
    CHECK(sigma_dual(1, 2) == 3);
    for (int f = 1; f <= 5; ++f)
        for (Layers s = 0; s < (1u << (f + 1)); ++s) CHECK(sigma_dual(sigma_dual(s, f), f) == s);
    for (int f = 1; f <= 3; ++f)
        for (Layers s = 0; s < (1u << (f + 1)); ++s) CHECK(split_sigma_model(params(f, full_set(f)), s).ok());
    CHECK_THROWS_AS(split_sigma_model(params(2, 1), 1), PreconditionError);
}

TEST_CASE("chains") {
    for (int f = 1; f <= 3; ++f) {
        const Params P = params(f, full_set(f));
        const ChainVerdict one = chain_model(P, {-1, f});
        CHECK(one.ok());
        CHECK(one.length == 1);
        std::vector<int> maximal;
        for (int i = -1; i <= f; ++i) maximal.push_back(i);
        const ChainVerdict v = chain_model(P, maximal);
        CHECK(v.ok());
        CHECK(v.length == f + 1);
        CHECK_FALSE(chain_model(P, {-1, 0, 0, f}).ok());
        CHECK_FALSE(chain_model(P, {-2, 0}).ok());
    }
}
