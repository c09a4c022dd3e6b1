#pragma once

#include <cstdint>
#include <vector>

namespace swc {

// Dense linear algebra over F_p, exact.
using Vec = std::vector<std::uint32_t>;

struct Fp {
    std::uint32_t p;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a ? p - a : 0; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        return static_cast<std::uint32_t>(m < 0 ? m + p : m);
    }
};

struct Mat {
    int rows = 0, cols = 0;
    std::vector<std::uint32_t> a;
    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    std::uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    std::uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

int rank(const Fp& F, Mat m);
// basis of {v : m v = 0}
std::vector<Vec> kernel(const Fp& F, Mat m);
Mat multiply(const Fp& F, const Mat& a, const Mat& b);
bool is_zero(const Mat& m);

// Incrementally maintained row-reduced basis of a subspace of F_p^n.
class Echelon {
public:
    Echelon(const Fp& F, int n) : F_(F), n_(n) {}
    // reduces v in place against the basis; returns true if it became zero
    bool reduce(Vec& v) const;
    bool contains(Vec v) const { return reduce(v); }
    // returns true if v was independent and got added
    bool insert(Vec v);
    int size() const { return static_cast<int>(rows_.size()); }
    int dim() const { return n_; }

private:
    Fp F_;
    int n_;
    std::vector<Vec> rows_;
    std::vector<int> pivot_;
};

}  // namespace swc
