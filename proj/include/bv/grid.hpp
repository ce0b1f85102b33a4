// Uniform periodic grid on [0,1]^d with integer wavevectors.
//
// Mode index i in [0,n) along an axis maps to wavenumber k(i) = i for
// i <= n/2-1 and i-n otherwise, so k ranges over [-n/2, n/2). The physical
// wavenumber of mode k is 2*pi*k (domain side length 1); the smallest
// eigenvalue of -Laplace on mean-zero fields is (2*pi)^2.
#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "bv/common.hpp"

namespace bv {

struct Grid {
    int d = 2;            // dimension, 2 or 3
    int n = 64;           // modes per axis, even, >= 8
    int dealias_num = 2;  // dealias fraction as a rational, default 2/3
    int dealias_den = 3;

    void validate() const {
        if (d != 2 && d != 3)
            throw config_error("grid: d must be 2 or 3, got " + std::to_string(d));
        if (n < 8 || n % 2 != 0)
            throw config_error("grid: n must be even and >= 8, got " + std::to_string(n));
        if (dealias_num <= 0 || dealias_den <= 0 || dealias_num > dealias_den)
            throw config_error("grid: dealias fraction must be in (0,1]");
    }

    std::size_t size() const {
        std::size_t s = 1;
        for (int a = 0; a < d; ++a) s *= static_cast<std::size_t>(n);
        return s;
    }

    // Largest retained |k_i|: coefficients with any |k_i| > fraction*n/2 are
    // zeroed, i.e. keep |k_i| <= floor(fraction*n/2).
    int cutoff() const { return (dealias_num * (n / 2)) / dealias_den; }

    int wavenumber(int idx) const { return idx <= n / 2 - 1 ? idx : idx - n; }
    int index_of(int k) const { return k >= 0 ? k : k + n; }

    std::size_t flat(int i0, int i1, int i2 = 0) const {
        std::size_t f = static_cast<std::size_t>(i0) * n + i1;
        if (d == 3) f = f * n + i2;
        return f;
    }

    // Flat index of mode k (components beyond d ignored).
    std::size_t flat_mode(const std::array<int, 3>& k) const {
        return flat(index_of(k[0]), index_of(k[1]), d == 3 ? index_of(k[2]) : 0);
    }

    bool operator==(const Grid& o) const {
        return d == o.d && n == o.n && dealias_num == o.dealias_num &&
               dealias_den == o.dealias_den;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

// Visits every mode as f(flat_index, k0, k1, k2); k2 is 0 when d == 2.
template <class F>
inline void for_each_mode(const Grid& g, F&& f) {
    const int n = g.n;
    if (g.d == 2) {
        std::size_t idx = 0;
        for (int i0 = 0; i0 < n; ++i0) {
            const int k0 = g.wavenumber(i0);
            for (int i1 = 0; i1 < n; ++i1, ++idx) f(idx, k0, g.wavenumber(i1), 0);
        }
    } else {
        std::size_t idx = 0;
        for (int i0 = 0; i0 < n; ++i0) {
            const int k0 = g.wavenumber(i0);
            for (int i1 = 0; i1 < n; ++i1) {
                const int k1 = g.wavenumber(i1);
                for (int i2 = 0; i2 < n; ++i2, ++idx) f(idx, k0, k1, g.wavenumber(i2));
            }
        }
    }
}

// Visits every collocation point as f(flat_index, x0, x1, x2), x_j = i_j/n.
template <class F>
inline void for_each_point(const Grid& g, F&& f) {
    const int n = g.n;
    const double h = 1.0 / n;
    if (g.d == 2) {
        std::size_t idx = 0;
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1, ++idx) f(idx, i0 * h, i1 * h, 0.0);
    } else {
        std::size_t idx = 0;
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1)
                for (int i2 = 0; i2 < n; ++i2, ++idx) f(idx, i0 * h, i1 * h, i2 * h);
    }
}

}  // namespace bv
