#include "swc/pbw.hpp"

#include <stdexcept>

#include "swc/weights.hpp"

namespace swc {

namespace {

PbwMono put(int j, int slot, int e) {
    if (e < 0 || e > kPbwMaxExp) throw PreconditionError("pbw exponent out of range");
    return static_cast<PbwMono>(e) << (18 * j + 6 * slot);
}

std::uint32_t binom_mod(const Fp& F, int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint32_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num = F.mul(num, F.from_int(n - i));
        den = F.mul(den, F.from_int(i + 1));
    }
    return F.mul(num, F.inv(den));
}

}  // namespace

PbwMono pbw_make(int f, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
    if (f > kPbwMaxF) throw PreconditionError("pbw: at most 3 factors are supported");
    PbwMono m = 0;
    for (int j = 0; j < f; ++j) m |= put(j, 0, a[j]) | put(j, 1, b[j]) | put(j, 2, c[j]);
    return m;
}

PbwMono pbw_y(int j, int e) { return put(j, 0, e); }
PbwMono pbw_z(int j, int e) { return put(j, 1, e); }
PbwMono pbw_h(int j, int e) { return put(j, 2, e); }

int pbw_deg(PbwMono m, int j) { return pbw_a(m, j) + pbw_b(m, j) + 2 * pbw_c(m, j); }
int pbw_wt(PbwMono m, int j) { return pbw_a(m, j) - pbw_b(m, j); }

std::string pbw_str(PbwMono m, int f) {
    std::string s;
    auto term = [&](const char* v, int j, int e) {
        if (!e) return;
        if (!s.empty()) s += "*";
        s += v + std::to_string(j);
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (int j = 0; j < f; ++j) {
        term("y", j, pbw_a(m, j));
        term("z", j, pbw_b(m, j));
        term("h", j, pbw_c(m, j));
    }
    return s.empty() ? "1" : s;
}

// (y^a z^b h^c)(y^a' z^b' h^c') = sum_k (-1)^k k! C(b,k) C(a',k) y^{a+a'-k} z^{b+b'-k} h^{c+c'+k}
void pbw_mono_mul_acc(const Fp& F, int f, PbwMono m1, PbwMono m2, std::uint32_t coeff, PbwElement& acc) {
    std::vector<std::vector<std::pair<PbwMono, std::uint32_t>>> parts(f);
    for (int j = 0; j < f; ++j) {
        const int a = pbw_a(m1, j), b = pbw_b(m1, j), c = pbw_c(m1, j);
        const int a2 = pbw_a(m2, j), b2 = pbw_b(m2, j), c2 = pbw_c(m2, j);
        std::uint32_t fact = 1;
        for (int k = 0; k <= std::min(b, a2); ++k) {
            if (k) fact = F.mul(fact, F.from_int(k));
            std::uint32_t v = F.mul(fact, F.mul(binom_mod(F, b, k), binom_mod(F, a2, k)));
            if (k % 2) v = F.neg(v);
            if (!v) continue;
            parts[j].push_back(
                {put(j, 0, a + a2 - k) | put(j, 1, b + b2 - k) | put(j, 2, c + c2 + k), v});
        }
    }
    auto rec = [&](auto&& self, int j, PbwMono m, std::uint32_t c) -> void {
        if (j == f) {
            std::uint32_t& slot = acc[m];
            slot = F.add(slot, c);
            if (!slot) acc.erase(m);
            return;
        }
        for (const auto& [pm, pc] : parts[j]) self(self, j + 1, m | pm, F.mul(c, pc));
    };
    rec(rec, 0, 0, coeff);
}

PbwElement pbw_multiply(const Fp& F, int f, const PbwElement& u, const PbwElement& v) {
    PbwElement out;
    for (const auto& [m1, c1] : u)
        for (const auto& [m2, c2] : v) pbw_mono_mul_acc(F, f, m1, m2, F.mul(c1, c2), out);
    return out;
}

PbwElement pbw_single(PbwMono m, std::uint32_t c) {
    PbwElement e;
    if (c) e[m] = c;
    return e;
}

std::string pbw_str(const PbwElement& e, int f) {
    if (e.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : e) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "*" + pbw_str(m, f);
    }
    return s;
}

std::vector<PbwMono> pbw_cell(int f, const std::vector<int>& D, const std::vector<int>& w) {
    std::vector<std::vector<PbwMono>> per(f);
    for (int j = 0; j < f; ++j) {
        if (D[j] < 0 || (D[j] - w[j]) % 2 != 0) return {};
        for (int c = 0; 2 * c <= D[j]; ++c) {
            const int s = D[j] - 2 * c;
            if (s < std::abs(w[j])) continue;
            const int a = (s + w[j]) / 2, b = (s - w[j]) / 2;
            per[j].push_back(put(j, 0, a) | put(j, 1, b) | put(j, 2, c));
        }
        if (per[j].empty()) return {};
    }
    std::vector<PbwMono> out{0};
    for (int j = 0; j < f; ++j) {
        std::vector<PbwMono> next;
        for (PbwMono m : out)
            for (PbwMono q : per[j]) next.push_back(m | q);
        out.swap(next);
    }
    return out;
}

}  // namespace swc
