#pragma once

// Dense small-matrix helpers over F_p. Matrices are row-major int spans with
// entries already reduced to 0..p-1.

#include <cstdint>
#include <span>
#include <vector>

namespace qh::modp {

inline std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// Saturating p^exp; returns limit + 1 once the power exceeds limit.
inline std::int64_t pow_capped(std::int64_t base, std::int64_t exp, std::int64_t limit) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (r > limit / base)
            return limit + 1;
        r *= base;
    }
    return r;
}

inline void decode(std::int64_t index, int p, std::span<int> digits) {
    for (auto& d : digits) {
        d = static_cast<int>(index % p);
        index /= p;
    }
}

inline std::int64_t encode(std::span<const int> digits, int p) {
    std::int64_t idx = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        idx = idx * p + *it;
    return idx;
}

// Advances base-p digits (first fastest); returns false on wrap-around.
inline bool increment(std::span<int> digits, int p) {
    for (auto& d : digits) {
        if (++d < p)
            return true;
        d = 0;
    }
    return false;
}

// out = a (r x k) * b (k x c), reduced mod p.
inline void matmul(std::span<const int> a, std::span<const int> b, int r, int k, int c, int p,
                   std::span<int> out) {
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            int s = 0;
            for (int t = 0; t < k; ++t)
                s += a[static_cast<std::size_t>(i * k + t)] * b[static_cast<std::size_t>(t * c + j)];
            out[static_cast<std::size_t>(i * c + j)] = s % p;
        }
}

// Rank of an r x c matrix; the argument is used as scratch.
inline int rank(std::vector<int>& m, int rows, int cols, int p, const std::vector<int>& inv) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r * cols + col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int c = 0; c < cols; ++c)
                std::swap(m[static_cast<std::size_t>(pivot * cols + c)],
                          m[static_cast<std::size_t>(rank * cols + c)]);
        const int f = inv[static_cast<std::size_t>(m[static_cast<std::size_t>(rank * cols + col)])];
        for (int c = 0; c < cols; ++c)
            m[static_cast<std::size_t>(rank * cols + c)] =
                m[static_cast<std::size_t>(rank * cols + c)] * f % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            const int g = m[static_cast<std::size_t>(r * cols + col)];
            if (g == 0)
                continue;
            for (int c = 0; c < cols; ++c) {
                auto& x = m[static_cast<std::size_t>(r * cols + c)];
                x = (x - g * m[static_cast<std::size_t>(rank * cols + c)] % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

// Basis of the null space of an r x c matrix (rows of length c).
inline std::vector<std::vector<int>> null_space(std::vector<int> m, int rows, int cols, int p,
                                                const std::vector<int>& inv) {
    std::vector<int> pivot_col;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r)
            if (m[static_cast<std::size_t>(r * cols + col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rk)
            for (int c = 0; c < cols; ++c)
                std::swap(m[static_cast<std::size_t>(pivot * cols + c)],
                          m[static_cast<std::size_t>(rk * cols + c)]);
        const int f = inv[static_cast<std::size_t>(m[static_cast<std::size_t>(rk * cols + col)])];
        for (int c = 0; c < cols; ++c)
            m[static_cast<std::size_t>(rk * cols + c)] = m[static_cast<std::size_t>(rk * cols + c)] * f % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rk)
                continue;
            const int g = m[static_cast<std::size_t>(r * cols + col)];
            if (g == 0)
                continue;
            for (int c = 0; c < cols; ++c) {
                auto& x = m[static_cast<std::size_t>(r * cols + c)];
                x = (x - g * m[static_cast<std::size_t>(rk * cols + c)] % p + p) % p;
            }
        }
        pivot_col.push_back(col);
        ++rk;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col)
        is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        std::vector<int> vec(static_cast<std::size_t>(cols), 0);
        vec[static_cast<std::size_t>(free)] = 1;
        for (int r = 0; r < rk; ++r) {
            const int x = m[static_cast<std::size_t>(r * cols + free)];
            vec[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = (p - x) % p;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

} // namespace qh::modp
