#include "swc/weights.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace swc {

namespace {

// lambda_j lower: lambda_{j+1} in {x, x+2, p-2-x}; upper: {x+1, p-3-x, p-1-x}
constexpr unsigned kAfterLower = (1u << 0) | (1u << 2) | (1u << 4);
constexpr unsigned kAfterUpper = (1u << 1) | (1u << 3) | (1u << 5);

constexpr unsigned kDss = (1u << 0) | (1u << 1) | (1u << 3) | (1u << 4);
constexpr unsigned kNeedRhoP = (1u << 2) | (1u << 3);
constexpr unsigned kNeedRhoD = (1u << 1) | (1u << 3);
constexpr unsigned kJ = (1u << 1) | (1u << 2) | (1u << 3);
constexpr unsigned kEnds = (1u << 0) | (1u << 5);
constexpr unsigned kMid = (1u << 1) | (1u << 4);

unsigned allowed_after(Sym s) { return lower(s) ? kAfterLower : kAfterUpper; }

}  // namespace

std::string subset_str(Subset s, int f) {
    std::string out = "{";
    bool first = true;
    for (int j = 0; j < f; ++j)
        if (has(s, j)) {
            if (!first) out += ",";
            out += std::to_string(j);
            first = false;
        }
    return out + "}";
}

Subset parse_subset(const std::string& csv, int f) {
    Subset s = 0;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int j = 0;
        try {
            size_t used = 0;
            j = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ConfigError("bad index in set: '" + tok + "'");
        }
        if (j < 0 || j >= f) throw ConfigError("index " + tok + " outside {0,...,f-1}");
        s |= 1u << j;
    }
    return s;
}

bool Params::generic(int n) const {
    for (int rj : r)
        if (rj < n || rj > p - 3 - n) return false;
    return true;
}

int Params::genericity() const {
    int best = -1;
    for (int n = 0; n <= p; ++n)
        if (generic(n)) best = n;
    return best;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void validate(const Params& P) {
    if (P.f < 1) throw ConfigError("f must be positive");
    if (P.f > 16) throw ConfigError("f > 16 is not supported");
    if (P.p < 5 || !is_prime(P.p)) throw ConfigError("p must be a prime >= 5");
    if (P.p > 1000003) throw ConfigError("p too large for the F_p linear algebra");
    if (P.j_rho & ~full_set(P.f)) throw ConfigError("j_rho must be a subset of {0,...,f-1}");
    if (static_cast<int>(P.r.size()) != P.f)
        throw ConfigError("r must have exactly f entries");
    if (!P.generic(0)) throw ConfigError("each r_j must satisfy 0 <= r_j <= p-3");
}

const char* sym_name(Sym s) {
    static const char* names[] = {"x", "x+1", "x+2", "p-3-x", "p-2-x", "p-1-x"};
    return names[static_cast<int>(s)];
}

bool parse_sym(const std::string& s, Sym& out) {
    for (int k = 0; k < kSymCount; ++k)
        if (s == sym_name(static_cast<Sym>(k))) {
            out = static_cast<Sym>(k);
            return true;
        }
    return false;
}

int sym_coef(Sym s) { return lower(s) ? 1 : -1; }

int sym_const(Sym s, int p) {
    switch (s) {
        case Sym::x: return 0;
        case Sym::x1: return 1;
        case Sym::x2: return 2;
        case Sym::p3: return p - 3;
        case Sym::p2: return p - 2;
        case Sym::p1: return p - 1;
    }
    return 0;
}

int sym_eval(Sym s, int p, int r) { return sym_coef(s) * r + sym_const(s, p); }

std::string to_string(const Lambda& l) {
    std::string out = "(";
    for (size_t j = 0; j < l.size(); ++j) {
        if (j) out += ", ";
        out += sym_name(l[j]);
    }
    return out + ")";
}

Lambda parse_lambda(const std::string& csv, int f) {
    Lambda l;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        Sym s;
        if (!parse_sym(tok, s)) throw ConfigError("unknown symbol '" + tok + "'");
        l.push_back(s);
    }
    if (static_cast<int>(l.size()) != f) throw ConfigError("lambda must have f entries");
    return l;
}

const char* t_name(T t) {
    switch (t) {
        case T::Y: return "y";
        case T::Z: return "z";
        case T::YZ: return "yz";
    }
    return "?";
}

bool in_pss(const Lambda& l) {
    const int f = static_cast<int>(l.size());
    for (int j = 0; j < f; ++j)
        if (!(allowed_after(l[j]) & bit(l[(j + 1) % f]))) return false;
    return true;
}

bool in_p(const Lambda& l, Subset j_rho) {
    if (!in_pss(l)) return false;
    for (size_t j = 0; j < l.size(); ++j)
        if ((bit(l[j]) & kNeedRhoP) && !has(j_rho, j)) return false;
    return true;
}

bool in_dss(const Lambda& l) {
    if (!in_pss(l)) return false;
    for (Sym s : l)
        if (!(bit(s) & kDss)) return false;
    return true;
}

bool in_d(const Lambda& l, Subset j_rho) {
    if (!in_dss(l)) return false;
    for (size_t j = 0; j < l.size(); ++j)
        if ((bit(l[j]) & kNeedRhoD) && !has(j_rho, j)) return false;
    return true;
}

namespace {

// depth-first over positions; allowed[j] restricts the symbol at j
void extend(Lambda& cur, int f, const std::vector<unsigned>& allowed, std::vector<Lambda>& out) {
    const int j = static_cast<int>(cur.size());
    if (j == f) {
        if (allowed_after(cur[f - 1]) & bit(cur[0])) out.push_back(cur);
        return;
    }
    unsigned mask = allowed[j];
    if (j > 0) mask &= allowed_after(cur[j - 1]);
    for (int k = 0; k < kSymCount; ++k) {
        if (!(mask & (1u << k))) continue;
        cur.push_back(static_cast<Sym>(k));
        extend(cur, f, allowed, out);
        cur.pop_back();
    }
}

std::vector<Lambda> enumerate_masked(const std::vector<unsigned>& allowed) {
    std::vector<Lambda> out;
    Lambda cur;
    extend(cur, static_cast<int>(allowed.size()), allowed, out);
    return out;
}

}  // namespace

std::vector<Lambda> enumerate_pss(int f) {
    return enumerate_masked(std::vector<unsigned>(f, 0x3f));
}

std::vector<Lambda> enumerate_p(int f, Subset j_rho) {
    std::vector<unsigned> allowed(f, 0x3f);
    for (int j = 0; j < f; ++j)
        if (!has(j_rho, j)) allowed[j] &= ~kNeedRhoP;
    return enumerate_masked(allowed);
}

std::vector<Lambda> enumerate_dss(int f) {
    return enumerate_masked(std::vector<unsigned>(f, kDss));
}

std::vector<Lambda> enumerate_d(int f, Subset j_rho) {
    std::vector<unsigned> allowed(f, kDss);
    for (int j = 0; j < f; ++j)
        if (!has(j_rho, j)) allowed[j] &= ~kNeedRhoD;
    return enumerate_masked(allowed);
}

std::vector<Lambda> enumerate_pss_bruteforce(int f) {
    std::vector<Lambda> out;
    long long total = 1;
    for (int j = 0; j < f; ++j) total *= kSymCount;
    for (long long code = 0; code < total; ++code) {
        Lambda l(f);
        long long c = code;
        for (int j = f - 1; j >= 0; --j) {
            l[j] = static_cast<Sym>(c % kSymCount);
            c /= kSymCount;
        }
        if (in_pss(l)) out.push_back(l);
    }
    return out;
}

Subset j_set(const Lambda& l) {
    Subset s = 0;
    for (size_t j = 0; j < l.size(); ++j)
        if (bit(l[j]) & kJ) s |= 1u << j;
    return s;
}

Subset j_outside(const Lambda& l, Subset j_rho) {
    Subset s = 0;
    for (size_t j = 0; j < l.size(); ++j)
        if (!has(j_rho, j) && (bit(l[j]) & kEnds)) s |= 1u << j;
    return s;
}

Subset yz_core(const Lambda& l) {
    Subset s = 0;
    for (size_t j = 0; j < l.size(); ++j)
        if (bit(l[j]) & kMid) s |= 1u << j;
    return s;
}

TType t_type(const Lambda& l, Subset j_rho) {
    TType t(l.size());
    for (size_t j = 0; j < l.size(); ++j) {
        const bool in = has(j_rho, j);
        switch (l[j]) {
            case Sym::x1:
            case Sym::p2: t[j] = T::YZ; break;
            case Sym::x: t[j] = in ? T::Z : T::YZ; break;
            case Sym::p1: t[j] = in ? T::Y : T::YZ; break;
            case Sym::p3:
            case Sym::x2:
                if (!in)
                    throw PreconditionError("t_type: index " + std::to_string(j) + " has " +
                                            sym_name(l[j]) + " outside j_rho");
                t[j] = l[j] == Sym::p3 ? T::Z : T::Y;
                break;
        }
    }
    return t;
}

Sym plus2(Sym s) {
    if (s == Sym::x) return Sym::x2;
    if (s == Sym::p3) return Sym::p1;
    throw PreconditionError(std::string("no +2 partner for ") + sym_name(s));
}

Sym minus2(Sym s) {
    if (s == Sym::x2) return Sym::x;
    if (s == Sym::p1) return Sym::p3;
    throw PreconditionError(std::string("no -2 partner for ") + sym_name(s));
}

Lambda shift_by_s(const Lambda& l, Subset S, Subset j_rho) {
    const TType t = t_type(l, j_rho);
    Lambda out = l;
    for (size_t j = 0; j < l.size(); ++j) {
        if (!has(S, j)) continue;
        if (t[j] == T::YZ)
            throw PreconditionError("shift_by_s: index " + std::to_string(j) + " has t = yz");
        out[j] = t[j] == T::Z ? plus2(l[j]) : minus2(l[j]);
    }
    return out;
}

Lambda delta_shift(const Lambda& l) {
    const size_t f = l.size();
    Lambda out(f);
    for (size_t j = 0; j < f; ++j) out[j] = l[(j + 1) % f];
    return out;
}

Lambda bracket_s(const Lambda& l) {
    Lambda out(l.size());
    for (size_t j = 0; j < l.size(); ++j) out[j] = static_cast<Sym>(5 - static_cast<int>(l[j]));
    return out;
}

const char* star_rule_name(StarRule r) {
    return r == StarRule::side_flip ? "side-flip" : "pointwise-fix";
}

Lambda star_apply(const Lambda& l, Subset j_rho, StarRule rule) {
    Lambda out = l;
    for (size_t j = 0; j < l.size(); ++j) {
        const bool in = has(j_rho, j);
        switch (l[j]) {
            case Sym::x1: out[j] = Sym::p2; break;
            case Sym::p2: out[j] = Sym::x1; break;
            case Sym::x:
                if (in) out[j] = Sym::p3;
                else if (rule == StarRule::side_flip) out[j] = Sym::p1;
                break;
            case Sym::p1:
                if (in) out[j] = Sym::x2;
                else if (rule == StarRule::side_flip) out[j] = Sym::x;
                break;
            case Sym::p3: out[j] = Sym::x; break;
            case Sym::x2: out[j] = Sym::p1; break;
        }
    }
    return out;
}

StarContract verify_star_contract(int f, Subset j_rho, StarRule rule) {
    StarContract res;
    auto fail = [&](const std::string& what, const Lambda& l) {
        res.ok = false;
        if (res.failures.size() < 16) res.failures.push_back(what + " at " + to_string(l));
    };
    const auto P = enumerate_p(f, j_rho);
    // (J-set, |J_lambda|) -> count, to test the layer bijection
    std::map<std::pair<Subset, int>, int> layer_src, layer_img;
    std::set<Lambda> images;
    for (const auto& l : P) {
        const Lambda s = star_apply(l, j_rho, rule);
        if (!in_p(s, j_rho)) {
            fail("image outside P", l);
            continue;
        }
        if (star_apply(s, j_rho, rule) != l) fail("not an involution", l);
        const Subset J = j_outside(l, j_rho);
        if (j_outside(s, j_rho) != J) fail("J not preserved", l);
        if (ell(l) + ell(s) + popcount(J) != f) fail("|J_l|+|J_l*|+|J| != f", l);
        if (yz_core(s) != yz_core(l)) fail("{x+1,p-2-x} indices not preserved", l);
        images.insert(s);
        layer_src[{J, ell(l)}]++;
        layer_img[{J, f - ell(s) - popcount(J)}]++;
    }
    if (res.ok && images.size() != P.size()) fail("not injective", P.front());
    if (res.ok && layer_src != layer_img) fail("layer counts differ", P.front());
    return res;
}

Lambda star_involution(const Lambda& l, Subset j_rho, StarRule rule) {
    const int f = static_cast<int>(l.size());
    if (!in_p(l, j_rho)) throw PreconditionError("star_involution: argument not in P");
    // the contract depends only on (f, j_rho, rule); remember verified triples
    static thread_local std::map<std::tuple<int, Subset, StarRule>, StarContract> cache;
    auto key = std::make_tuple(f, j_rho, rule);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, verify_star_contract(f, j_rho, rule)).first;
    if (!it->second.ok)
        throw NotRealizable(std::string("star rule '") + star_rule_name(rule) +
                            "' violates the involution contract: " + it->second.failures.front());
    return star_apply(l, j_rho, rule);
}

Projection pss_to_p_projection(const Lambda& l, Subset j_rho) {
    Projection pr;
    pr.mu = l;
    for (size_t j = 0; j < l.size(); ++j) {
        if (has(j_rho, j)) continue;
        if (l[j] == Sym::p3) {
            pr.J1 |= 1u << j;
            pr.mu[j] = Sym::p1;
        } else if (l[j] == Sym::x2) {
            pr.J2 |= 1u << j;
            pr.mu[j] = Sym::x;
        }
    }
    return pr;
}

Lambda lift_to_pss(const Lambda& mu, Subset J1p, Subset J2p) {
    if (J1p & J2p) throw PreconditionError("lift_to_pss: overlapping index sets");
    Lambda out = mu;
    for (size_t j = 0; j < mu.size(); ++j) {
        if (has(J1p, j)) out[j] = minus2(mu[j]);
        if (has(J2p, j)) out[j] = plus2(mu[j]);
    }
    return out;
}

}  // namespace swc
