#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "swc/weights.hpp"

namespace swc {

using BigInt = boost::multiprecision::cpp_int;

// Ring Z/(q-1) with q = p^f, plus the powers p^j.
struct Modulus {
    int f = 0;
    int p = 0;
    BigInt q1;
    std::vector<BigInt> pw;

    Modulus() = default;
    Modulus(int f_, int p_);
    BigInt reduce(const BigInt& v) const;
};

// Difference exponent sum_j coef_j x_j p^j + cst, cst reduced mod q-1.
// Two characters are formally equal when both parts agree; evaluating at
// r gives the integer difference exponent mod q-1.
struct Char {
    std::vector<int> coef;
    BigInt cst;

    bool operator==(const Char& o) const { return coef == o.coef && cst == o.cst; }
    bool operator!=(const Char& o) const { return !(*this == o); }
    bool operator<(const Char& o) const {
        if (coef != o.coef) return coef < o.coef;
        return cst < o.cst;
    }
};

Char char_one(const Modulus& M);
Char char_mul(const Modulus& M, const Char& a, const Char& b);
Char char_inv(const Modulus& M, const Char& a);
// a * prod alpha_j^{k_j}
Char char_twist(const Modulus& M, const Char& a, const std::vector<int>& k);
BigInt char_eval(const Modulus& M, const Char& a, const std::vector<int>& r);
std::string char_str(const Char& a);

Char chi_lambda(const Modulus& M, const Lambda& l);
Char alpha(const Modulus& M, int j);
// evaluated sum_j lambda_j(r_j) p^j mod q-1
BigInt diff_of_lambda(const Lambda& l, const Params& P);

// Whether sum a_j p^j == sum b_j p^j mod p^f-1 forces a == b.
// Requires a_j in {-1,0,1}, sum|a| >= sum|b|, p > 3; throws PreconditionError.
bool digit_unique(const std::vector<int>& a, const std::vector<int>& b, int p);

struct DigitCounterexample {
    std::vector<int> a, b;
};
// all (a, b) with a_j in {-1,0,1}, |b_j| <= p-1, sum|b| <= sum|a| <= max_weight
std::vector<DigitCounterexample> digit_unique_search(int f, int p, int max_weight);

struct Collision {
    Lambda lambda, mu;
    std::vector<int> i;
    bool operator<(const Collision& o) const;
    bool operator==(const Collision& o) const {
        return lambda == o.lambda && mu == o.mu && i == o.i;
    }
};

struct CollisionReport {
    // formal hits chi_lambda alpha^{i} == chi_mu
    std::vector<Collision> hits;
    // hits breaking |i_j| <= 1, i_j = -1 => t_j = Y, i_j = +1 => t_j = Z, mu = shift
    std::vector<Collision> violations;
    // evaluated-only coincidences (formally distinct)
    std::vector<Collision> evaluated_only;
    // shift_by_s pairs that were not found among the hits
    std::vector<Collision> missing_shifts;
};

// throws PreconditionError unless params are (m+1)-generic
CollisionReport collision_scan(const std::vector<Lambda>& Pset, int m, const Params& P,
                               int jobs = 1);
CollisionReport collision_scan_serial(const std::vector<Lambda>& Pset, int m, const Params& P);

struct LayeredCharSet {
    std::vector<std::vector<Char>> layers;
    bool k1_fixed = false;
    size_t size() const;
};
LayeredCharSet w_layers(const Modulus& M, const Char& base, Subset J1, Subset J2, int f);

// count pairs that are equal formally / after evaluation among a list
struct Distinctness {
    size_t formal_dups = 0;
    size_t evaluated_dups = 0;
};
Distinctness distinctness(const Modulus& M, std::vector<Char> chars, const std::vector<int>& r);

}  // namespace swc
