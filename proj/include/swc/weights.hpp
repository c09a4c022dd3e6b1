#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swc {

// Subsets of {0,...,f-1} are bitmasks.
using Subset = std::uint32_t;

inline bool has(Subset s, int j) { return (s >> j) & 1u; }
inline int popcount(Subset s) { return __builtin_popcount(s); }
inline Subset full_set(int f) { return f >= 32 ? ~0u : ((1u << f) - 1u); }
std::string subset_str(Subset s, int f);
Subset parse_subset(const std::string& csv, int f);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotRealizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Params {
    int f = 0;
    int p = 0;
    Subset j_rho = 0;
    std::vector<int> r;

    // n <= r_j <= p-3-n for every j
    bool generic(int n) const;
    // largest n for which generic(n) holds, -1 if none
    int genericity() const;
};

bool is_prime(long long n);
// throws ConfigError
void validate(const Params& P);

// The six affine symbols, in their fixed order.
enum class Sym : std::uint8_t { x, x1, x2, p3, p2, p1 };
constexpr int kSymCount = 6;

const char* sym_name(Sym s);
bool parse_sym(const std::string& s, Sym& out);
// x, x+1, x+2 are the lower half
inline bool lower(Sym s) { return static_cast<int>(s) < 3; }
// coefficient of x_j and constant term of lambda_j(x_j)
int sym_coef(Sym s);
int sym_const(Sym s, int p);
int sym_eval(Sym s, int p, int r);
inline unsigned bit(Sym s) { return 1u << static_cast<int>(s); }

using Lambda = std::vector<Sym>;
std::string to_string(const Lambda& l);
Lambda parse_lambda(const std::string& csv, int f);

enum class T : std::uint8_t { Y, Z, YZ };
using TType = std::vector<T>;
const char* t_name(T t);

bool in_pss(const Lambda& l);
bool in_p(const Lambda& l, Subset j_rho);
bool in_dss(const Lambda& l);
bool in_d(const Lambda& l, Subset j_rho);

// Enumerations are returned in lexicographic order of the symbol tuple.
std::vector<Lambda> enumerate_pss(int f);
std::vector<Lambda> enumerate_p(int f, Subset j_rho);
std::vector<Lambda> enumerate_dss(int f);
std::vector<Lambda> enumerate_d(int f, Subset j_rho);
// reference: filter all 6^f tuples
std::vector<Lambda> enumerate_pss_bruteforce(int f);

Subset j_set(const Lambda& l);
inline int ell(const Lambda& l) { return popcount(j_set(l)); }
// {j not in j_rho : lambda_j in {x, p-1-x}}
Subset j_outside(const Lambda& l, Subset j_rho);
// {j : lambda_j in {x+1, p-2-x}}
Subset yz_core(const Lambda& l);

// throws PreconditionError on an index with lambda_j in {x+2,p-3-x} outside j_rho
TType t_type(const Lambda& l, Subset j_rho);

// t_j -> y_j z_j / t_j on S; S must avoid YZ indices
Lambda shift_by_s(const Lambda& l, Subset S, Subset j_rho);
Lambda delta_shift(const Lambda& l);
Lambda bracket_s(const Lambda& l);

// x <-> x+2 and p-3-x <-> p-1-x; other symbols have no partner
Sym plus2(Sym s);
Sym minus2(Sym s);

enum class StarRule {
    // swaps on Z, Y and {x+1,p-2-x} indices; J-indices held fixed
    pointwise_fix,
    // same swaps, but J-indices swap x <-> p-1-x (every side flips)
    side_flip,
};
const char* star_rule_name(StarRule r);

Lambda star_apply(const Lambda& l, Subset j_rho, StarRule rule);

struct StarContract {
    bool ok = true;
    std::vector<std::string> failures;
};
StarContract verify_star_contract(int f, Subset j_rho, StarRule rule);
// verified involution; throws NotRealizable if the contract fails
Lambda star_involution(const Lambda& l, Subset j_rho, StarRule rule = StarRule::side_flip);

struct Projection {
    Lambda mu;
    Subset J1 = 0;
    Subset J2 = 0;
};
Projection pss_to_p_projection(const Lambda& l, Subset j_rho);
// minus 2 on J1p, plus 2 on J2p
Lambda lift_to_pss(const Lambda& mu, Subset J1p, Subset J2p);

}  // namespace swc
