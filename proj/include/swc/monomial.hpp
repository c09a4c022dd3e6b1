#pragma once

#include <string>
#include <vector>

#include "swc/characters.hpp"
#include "swc/weights.hpp"

namespace swc {

// Exponent vector of length 2f: e[2j] is the exponent of y_j, e[2j+1] of z_j.
// Degrees are stored non-negative; y_j, z_j have degree 1 and h_j degree 2.
using Mono = std::vector<int>;

Mono mono_one(int f);
Mono mono_y(int f, int j, int e = 1);
Mono mono_z(int f, int j, int e = 1);
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);
int mono_deg(const Mono& m);
// zero in Rbar: some y_j z_j divides it
bool mono_rbar_zero(const Mono& m);
std::string mono_str(const Mono& m);

// Monomial ideal of Rbar, kept as its minimal nonzero generators.
// Unit ideal: gens == {1}. Zero ideal: no gens.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(int f) : f_(f) {}
    MonomialIdeal(int f, std::vector<Mono> gens);

    static MonomialIdeal unit(int f);
    static MonomialIdeal zero(int f) { return MonomialIdeal(f); }

    int f() const { return f_; }
    const std::vector<Mono>& gens() const { return gens_; }
    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }
    bool contains(const Mono& m) const;
    // every generator of this lies in o
    bool subset_of(const MonomialIdeal& o) const;
    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
    std::string str() const;

private:
    int f_ = 0;
    std::vector<Mono> gens_;
};

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal ideal_a(const Lambda& l, Subset j_rho);
MonomialIdeal ideal_ijd(int f, Subset J1, Subset J2, int d);
// I(J1,J2,d) + (t_0,...,t_{f-1})
MonomialIdeal ideal_ijdt(int f, Subset J1, Subset J2, int d, const TType& t);
MonomialIdeal ideal_t(const TType& t);
// (y_j^n, z_j^n); h_j vanishes in Rbar
MonomialIdeal ideal_In(int f, int n);
// I(J1,J2,i0+1-|J_lambda|) + a(lambda)
MonomialIdeal ideal_a1(const Lambda& l, int i0, Subset j_rho);
// the sets J1 = {j outside j_rho : lambda_j = p-1-x}, J2 = {... = x}
void a1_sets(const Lambda& l, Subset j_rho, Subset& J1, Subset& J2);

// nonzero monomials of Rbar of degree d, in a fixed order
std::vector<Mono> rbar_monomials(int f, int d);
// monomials of Rbar with every exponent < n (the standard monomials of I^(n))
std::vector<Mono> rbar_box(int f, int n);

// dim of the degree-d slice of Rbar/I for d = 0..Dmax
std::vector<long long> hilbert_function(const MonomialIdeal& I, int Dmax);
// dim of the degree-d slice of I/Ip; throws PreconditionError unless Ip is inside I
std::vector<long long> hilbert_function(const MonomialIdeal& I, const MonomialIdeal& Ip, int Dmax);
// total dimension of Rbar/(I + I^(n)), counted in the box
long long finite_length(const MonomialIdeal& I, int n);

// chi_lambda^{-1} * prod alpha_j^{y_j - z_j}
Char mono_char(const Modulus& M, const Lambda& l, const Mono& m);
using GradedChars = std::vector<std::vector<Char>>;
// characters of chi_lambda^{-1} (x) I/Ip by degree, each degree sorted
GradedChars graded_characters(const Modulus& M, const Lambda& l, const MonomialIdeal& I,
                              const MonomialIdeal& Ip, int Dmax);
GradedChars graded_characters(const Modulus& M, const Lambda& l, const MonomialIdeal& I, int Dmax);

}  // namespace swc
