#pragma once

#include <string>
#include <vector>

#include "swc/characters.hpp"
#include "swc/monomial.hpp"
#include "swc/weights.hpp"

namespace swc {

struct ParamSets {
    Subset Xss = 0;  // only for lambda in P^ss
    Subset X = 0, Y = 0, Z = 0;  // only for mu in P
};
Subset x_ss(const Lambda& l);
Subset x_set(const Lambda& mu, Subset j_rho);
Subset y_set(const Lambda& mu, Subset j_rho);
Subset z_set(const Lambda& mu, Subset j_rho);
// fills the fields whose precondition holds
ParamSets param_sets(const Lambda& l, Subset j_rho);

// X(mu) n J1 empty and X(mu) u J1 inside X^ss(lambda) u J2 for the projection of lambda
bool projection_x_property(const Lambda& l, Subset j_rho);

// A Serre weight named by its J-set.
struct WeightTag {
    Subset J = 0;
    int ell() const { return popcount(J); }
    bool operator<(const WeightTag& o) const { return J < o.J; }
    bool operator==(const WeightTag& o) const { return J == o.J; }
};
// {tau' : Jsigma c J_tau' c Jtau}; throws PreconditionError unless Jsigma c Jtau
std::vector<WeightTag> jh_I_sigma_tau(Subset Jsigma, Subset Jtau);

bool hw_predicate(Subset Ss, Subset St, Subset J1, Subset J2);
bool k1_predicate(Subset Ss, Subset St, Subset J2);

// every subset of {0..f-1} is the J-set of exactly one element of D^ss
bool dss_tags_cover(int f);

struct LatticeState {
    int i0 = -1;
    std::vector<Lambda> i1_params;  // lambda in P with |J_lambda| <= i0
    std::vector<Char> characters;   // chi_lambda over i1_params, sorted
    std::vector<Lambda> socle;      // lambda in D with |J_lambda| <= i0
    long long dxi_dim = 0;
    std::vector<Char> forbidden;    // chi_lambda, lambda in P^ss \ P with |J_lambda| = i0 + 1
    std::vector<std::pair<Lambda, MonomialIdeal>> gr_ideals;  // a1^{i0}(lambda), lambda in P
};
LatticeState nonsplit_lattice(const Params& P, int i0);

struct SubquotIdentity {
    std::vector<Char> lhs, rhs;  // multisets of chi_lambda', sorted
    std::vector<long long> per_lambda_count;  // LHS contributions per lambda in P order
    bool counts_match_hilbert = true;
    bool relabel_ok = true;  // each generator lifts to P^ss \ P with the right layer
    bool ok() const { return lhs == rhs && counts_match_hilbert && relabel_ok; }
};
SubquotIdentity subquot_char_identity(const Params& P, int i0, int i0p);

// Sigma as a bitmask over {0..f}
using Layers = std::uint32_t;
Layers sigma_dual(Layers sigma, int f);

struct SplitModel {
    Layers sigma = 0, sigma_dual = 0;
    std::vector<Lambda> P1, P2;
    int m_N1 = 0, m_N2 = 0, m_N = 0;
    bool cycles_add = false;       // Z(N1) + Z(N2) == Z(N)
    bool star_matches_dual = false;  // (P2)* == {lambda : |J_lambda| in Sigma'}
    int m_dual = 0;                // m of the Sigma' model
    long long dxi_dim = 0;         // ell(soc) = #{lambda in D : |J_lambda| in Sigma}
    long long dxi_formula = 0;     // sum_{i in Sigma} C(f, i)
    bool ok() const {
        return cycles_add && star_matches_dual && m_dual == m_N2 && dxi_dim == dxi_formula;
    }
};
// throws PreconditionError unless j_rho is everything
SplitModel split_sigma_model(const Params& P, Layers sigma);

struct ChainVerdict {
    bool strictly_increasing = false;
    bool in_range = false;
    int length = 0;
    bool length_ok = false;
    bool steps_disjoint = false;
    bool identities_ok = false;
    std::string detail;
    bool ok() const {
        return strictly_increasing && in_range && length_ok && steps_disjoint && identities_ok;
    }
};
ChainVerdict chain_model(const Params& P, const std::vector<int>& i0s);

long long binomial(int n, int k);

}  // namespace swc
