#pragma once

#include <string>
#include <vector>

#include "swc/characters.hpp"
#include "swc/pbw.hpp"
#include "swc/weights.hpp"

namespace swc {

// gr(Lambda)/(t_j, h_j [, y_j^n, z_j^n] : all j); n == 0 leaves out the I^(n) part.
struct CyclicModule {
    TType t;
    int n = 0;
};
std::vector<PbwElement> left_ideal_gens(const CyclicModule& M);
// top internal degree of the module when n > 0
int module_top_degree(const CyclicModule& M);
// degree bound for Tor_i read off the Chevalley-Eilenberg complex (n > 0 only)
int ce_degree_bound(const CyclicModule& M, int i);

// One free summand gr(Lambda)(shift) twisted by alpha^wt.
struct BettiEntry {
    int shift = 0;
    std::vector<int> wt;
    bool operator<(const BettiEntry& o) const {
        return shift != o.shift ? shift < o.shift : wt < o.wt;
    }
    bool operator==(const BettiEntry& o) const { return shift == o.shift && wt == o.wt; }
};
using BettiTable = std::vector<std::vector<BettiEntry>>;
std::string betti_str(const BettiTable& b);

struct Resolution {
    int f = 0, imax = 0, Dmax = 0;
    BettiTable terms;
    bool minimal = true;     // no differential has a unit coefficient
    bool complex_ok = true;  // d o d = 0 on every generator
    bool exact_ok = true;    // image of F_{s} fills ker d_{s-1} in every inspected cell
    bool support_ok = true;  // Tor_i inside [i, 2i] (only meaningful for n == 0)
    bool complete = false;   // the window covers every degree where Tor_i (i <= imax) can live
    long long cells = 0;
};

// Minimal graded free resolution computed degreewise over F_p. Cells of fixed
// per-factor degree and weight are independent at each (D, s) and run in parallel.
Resolution resolve(const CyclicModule& M, int imax, int Dmax, unsigned prime = 32003, int jobs = 1);
Resolution resolve_serial(const CyclicModule& M, int imax, int Dmax, unsigned prime = 32003);

// The frozen single-factor tables of the splitting lemma: with_In selects the
// full complex for n = 3, otherwise the boxed subcomplex.
BettiTable expected_table(T t, bool with_In);
// the boxed entries inside the full n = 3 table
BettiTable boxed_part(T t);
// Kunneth product of single-factor tables, truncated at imax
BettiTable tensor_tables(const std::vector<BettiTable>& factors, int imax);

struct TableCheck {
    Resolution computed;
    BettiTable expected;
    bool match = false;
    std::string diff;
};
TableCheck resolution_tables(T t, bool with_In, int n = 3, unsigned prime = 32003);
// f = t.size() factors, resolution compared with the product of the per-factor tables
TableCheck resolution_tables(const TType& t, bool with_In, int imax, int Dmax, unsigned prime = 32003,
                             int jobs = 1);

struct TorEntry {
    int deg = 0;
    Char chi;
    std::vector<int> wt;
    Lambda lambda;
    bool operator<(const TorEntry& o) const;
};
struct TorData {
    int imax = 0, Dmax = 0;
    std::vector<std::vector<TorEntry>> by_i;
    bool complete = true;
    bool verified = true;
    bool support_ok = true;
};
// Tor of sum over summands of chi_lambda^{-1} (x) gr(Lambda)/b(lambda) [/ I^(n)]
TorData tor_grlambda(const Params& P, const std::vector<Lambda>& summands, int n, int imax, int Dmax,
                     unsigned prime, int jobs = 1);

struct DualBound {
    int top_shift = -1;
    int predicted = -1;
    bool ok = false;
    bool complete = false;
};
// from the computed resolution of gr(Lambda)/(t, h): top term at i = 2f
DualBound dual_degree_bound_check(const TType& t, unsigned prime = 32003, int jobs = 1);

}  // namespace swc
