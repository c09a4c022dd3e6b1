#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "swc/linalg.hpp"

namespace swc {

// Normal-form monomial prod_j y_j^a z_j^b h_j^c of gr(Lambda), packed 6 bits per
// exponent, 18 bits per factor. Supports f <= 3 and exponents <= 63.
using PbwMono = std::uint64_t;
constexpr int kPbwMaxF = 3;
constexpr int kPbwMaxExp = 63;

inline int pbw_a(PbwMono m, int j) { return static_cast<int>((m >> (18 * j)) & 63); }
inline int pbw_b(PbwMono m, int j) { return static_cast<int>((m >> (18 * j + 6)) & 63); }
inline int pbw_c(PbwMono m, int j) { return static_cast<int>((m >> (18 * j + 12)) & 63); }
PbwMono pbw_make(int f, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c);
PbwMono pbw_y(int j, int e = 1);
PbwMono pbw_z(int j, int e = 1);
PbwMono pbw_h(int j, int e = 1);
// y and z have degree 1, h has degree 2
int pbw_deg(PbwMono m, int j);
// y has weight +1, z weight -1, h weight 0
int pbw_wt(PbwMono m, int j);
std::string pbw_str(PbwMono m, int f);

using PbwElement = std::map<PbwMono, std::uint32_t>;

// acc += coeff * m1 * m2
void pbw_mono_mul_acc(const Fp& F, int f, PbwMono m1, PbwMono m2, std::uint32_t coeff, PbwElement& acc);
PbwElement pbw_multiply(const Fp& F, int f, const PbwElement& u, const PbwElement& v);
PbwElement pbw_single(PbwMono m, std::uint32_t c = 1);
std::string pbw_str(const PbwElement& e, int f);

// all normal-form monomials with per-factor degree D[j] and weight w[j]
std::vector<PbwMono> pbw_cell(int f, const std::vector<int>& D, const std::vector<int>& w);

}  // namespace swc
