#pragma once

#include <vector>

#include "swc/monomial.hpp"

namespace swc {

// Multiplicities at the 2^f minimal primes of Rbar. Entry q: bit j of q set
// means the prime contains z_j, clear means it contains y_j.
using CycleVector = std::vector<int>;

CycleVector cycle_of(const MonomialIdeal& I);
// I/Ip, localized directly: nonzero at q iff I_q is the whole stalk and Ip_q is zero
CycleVector cycle_of(const MonomialIdeal& I, const MonomialIdeal& Ip);
int total_mult(const CycleVector& c);
CycleVector cycle_add(const CycleVector& a, const CycleVector& b);

// throws PreconditionError unless t_j = YZ on J1 and J2
long long total_mult_formula(int f, Subset J1, Subset J2, int d, const TType& t);

struct MultAdd {
    int lhs_a1 = 0;      // m(Rbar/a1^{i0}(lambda))
    int lhs_star = 0;    // m(Rbar/a1^{f-1-i0}(lambda*))
    int rhs = 0;         // m(Rbar/a(lambda))
    bool ok() const { return lhs_a1 + lhs_star == rhs; }
};
MultAdd mult_add(const Lambda& l, int i0, Subset j_rho, StarRule rule = StarRule::side_flip);
bool mult_add_check(const Lambda& l, int i0, Subset j_rho, StarRule rule = StarRule::side_flip);

// Z(Rbar/Ip) == Z(Rbar/I) + Z(I/Ip)
bool cycle_additivity_check(const MonomialIdeal& I, const MonomialIdeal& Ip);

// serial reference and parallel sweep of mult_add over all (lambda, i0)
struct MultAddSweep {
    long long checked = 0;
    std::vector<std::pair<Lambda, int>> failures;
};
MultAddSweep mult_add_sweep_serial(int f, Subset j_rho, StarRule rule = StarRule::side_flip);
MultAddSweep mult_add_sweep(int f, Subset j_rho, int jobs, StarRule rule = StarRule::side_flip);

}  // namespace swc
