#include "swc/linalg.hpp"

#include <algorithm>

namespace swc {

std::uint32_t Fp::inv(std::uint32_t a) const {
    std::uint64_t r = 1, b = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

namespace {

// Gauss-Jordan in place; returns pivot columns.
std::vector<int> rref(const Fp& F, Mat& m) {
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < m.cols && row < m.rows; ++c) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, c)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int k = 0; k < m.cols; ++k) std::swap(m.at(sel, k), m.at(row, k));
        const std::uint32_t iv = F.inv(m.at(row, c));
        for (int k = c; k < m.cols; ++k) m.at(row, k) = F.mul(m.at(row, k), iv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || !m.at(i, c)) continue;
            const std::uint32_t s = m.at(i, c);
            for (int k = c; k < m.cols; ++k)
                if (m.at(row, k)) m.at(i, k) = F.sub(m.at(i, k), F.mul(s, m.at(row, k)));
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

}  // namespace

int rank(const Fp& F, Mat m) { return static_cast<int>(rref(F, m).size()); }

std::vector<Vec> kernel(const Fp& F, Mat m) {
    const auto piv = rref(F, m);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<Vec> out;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        Vec v(m.cols, 0);
        v[c] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(m.at(static_cast<int>(r), c));
        out.push_back(std::move(v));
    }
    return out;
}

Mat multiply(const Fp& F, const Mat& a, const Mat& b) {
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const std::uint32_t s = a.at(i, k);
            if (!s) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(k, j)) c.at(i, j) = F.add(c.at(i, j), F.mul(s, b.at(k, j)));
        }
    return c;
}

bool is_zero(const Mat& m) {
    return std::all_of(m.a.begin(), m.a.end(), [](std::uint32_t v) { return v == 0; });
}

bool Echelon::reduce(Vec& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const std::uint32_t s = v[pivot_[r]];
        if (!s) continue;
        const Vec& row = rows_[r];
        for (int k = pivot_[r]; k < n_; ++k)
            if (row[k]) v[k] = F_.sub(v[k], F_.mul(s, row[k]));
    }
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

bool Echelon::insert(Vec v) {
    if (reduce(v)) return false;
    int pc = 0;
    while (!v[pc]) ++pc;
    const std::uint32_t iv = F_.inv(v[pc]);
    for (int k = pc; k < n_; ++k) v[k] = F_.mul(v[k], iv);
    // keep the basis fully reduced so reduce() needs a single pass
    for (auto& row : rows_) {
        const std::uint32_t s = row[pc];
        if (!s) continue;
        for (int k = pc; k < n_; ++k)
            if (v[k]) row[k] = F_.sub(row[k], F_.mul(s, v[k]));
    }
    rows_.push_back(std::move(v));
    pivot_.push_back(pc);
    return true;
}

}  // namespace swc
