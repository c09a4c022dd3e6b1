#pragma once

#include <map>
#include <string>
#include <vector>

#include "swc/monomial.hpp"

namespace swc {

// Minimal generators in R = F[y_j, z_j] of the preimage of I, i.e. I plus (y_j z_j).
std::vector<Mono> lift_to_r(const MonomialIdeal& I);

struct ExtData {
    int nvars = 0;
    int ngens = 0;
    // rank[i][D] = dim Ext^i_R(R/I, R) in total degree D, D in [dlo, dhi]
    int dlo = 0, dhi = 0;
    std::vector<std::vector<long long>> rank;
    // Ext^i nonzero in some inspected multidegree
    std::vector<bool> nonzero;
    // every multidegree chamber was inspected
    bool complete = false;
    int window = 0;
    int sufficient_window = 0;
    long long chambers = 0;
    // per total degree: sum_i (-1)^i rank vs the Taylor alternating count
    bool euler_ok = true;
    long long rank_at(int i, int D) const;
};

// Ext of R/I for I given by minimal generators of R. Chambers with depth
// (minus the total degree of the representative) above window are skipped;
// window < 0 means the sufficient value deg lcm.
ExtData taylor_ext_ranks(const std::vector<Mono>& gens, int nvars, int window = -1, int dhi = 2,
                         unsigned prime = 32003);
ExtData taylor_ext_ranks(const MonomialIdeal& I, int window = -1, int dhi = 2,
                         unsigned prime = 32003);

// dimension of (R/I)_D from the alternating Taylor ranks
std::vector<long long> taylor_euler_hilbert(const std::vector<Mono>& gens, int nvars, int Dmax);

enum class CmVerdict { cm, not_cm, inconclusive, zero_module };
const char* cm_verdict_name(CmVerdict v);

struct CmResult {
    CmVerdict verdict = CmVerdict::inconclusive;
    int grade = -1;
    std::vector<int> nonzero_indices;
    ExtData ext;
};
CmResult is_cm(const MonomialIdeal& I, int window = -1, unsigned prime = 32003);

struct Shelling {
    // facets as bitmasks over J positions in increasing order of j: bit set means z_j
    std::vector<Subset> order;
    bool shellable = false;
    std::string failure;
};
// Complex on J1 u J2 with facets |J(x)| < d, J(x) = {j in J1 : x_j = y_j} u {j in J2 : x_j = z_j}.
Shelling shellability_check(int f, Subset J1, Subset J2, int d);

}  // namespace swc
