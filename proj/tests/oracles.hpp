// Test-side oracles: direct DFT sums and dense-grid quadrature, independent
// of the library's FFT/pseudo-spectral path. Everything here is O(N^2) or
// worse and meant for small grids only.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "bv/field.hpp"
#include "bv/grid.hpp"

namespace oracle {

using bv::Complex;
using bv::Grid;
using bv::SpectralField;
using bv::VectorField;
using bv::kTwoPi;

// Direct evaluation of sum_k c_k exp(2 pi i k.x) on an M^d grid.
inline std::vector<double> eval_fine(const SpectralField& f, int M) {
    const Grid& g = f.grid();
    const int d = g.d;
    std::vector<double> out;
    const int Mz = d == 3 ? M : 1;
    out.reserve(static_cast<std::size_t>(M) * M * Mz);
    for (int i0 = 0; i0 < M; ++i0)
        for (int i1 = 0; i1 < M; ++i1)
            for (int i2 = 0; i2 < Mz; ++i2) {
                const double x0 = double(i0) / M, x1 = double(i1) / M, x2 = double(i2) / M;
                Complex acc{0.0, 0.0};
                bv::for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
                    const double ph = kTwoPi * (k0 * x0 + k1 * x1 + k2 * x2);
                    acc += f.coeffs()[idx] * Complex{std::cos(ph), std::sin(ph)};
                });
                out.push_back(acc.real());
            }
    return out;
}

// Direct projection of M^d samples onto the coefficient lattice of `g`:
// c_k = (1/M^d) sum_j f(x_j) exp(-2 pi i k.x_j). Exact for integrands
// band-limited below M/2.
inline SpectralField project_fine(const Grid& g, const std::vector<double>& fine, int M) {
    SpectralField out(g);
    const int d = g.d;
    const int Mz = d == 3 ? M : 1;
    bv::for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        Complex acc{0.0, 0.0};
        std::size_t j = 0;
        for (int i0 = 0; i0 < M; ++i0)
            for (int i1 = 0; i1 < M; ++i1)
                for (int i2 = 0; i2 < Mz; ++i2, ++j) {
                    const double ph = -kTwoPi * (k0 * double(i0) / M + k1 * double(i1) / M +
                                                 k2 * double(i2) / M);
                    acc += fine[j] * Complex{std::cos(ph), std::sin(ph)};
                }
        out.coeffs()[idx] = acc / double(static_cast<std::size_t>(M) * M * Mz);
    });
    out.zero_mean();
    return out;
}

// Direct variants of the diagonal operators (straight formulas, no shared
// loop machinery with the implementation).
inline SpectralField derivative(const SpectralField& f, int axis) {
    const Grid& g = f.grid();
    SpectralField out(g);
    bv::for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        const int ka = axis == 1 ? k0 : (axis == 2 ? k1 : k2);
        if (ka == -g.n / 2) return;
        out.coeffs()[idx] = Complex{0.0, kTwoPi * double(ka)} * f.coeffs()[idx];
    });
    return out;
}

inline SpectralField dealias_mask(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField out = f;
    const int c = g.cutoff();
    bv::for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        if (std::abs(k0) > c || std::abs(k1) > c || std::abs(k2) > c)
            out.coeffs()[idx] = Complex{0.0, 0.0};
    });
    out.zero_mean();
    return out;
}

inline VectorField leray(const VectorField& v) {
    const Grid& g = v.grid();
    VectorField out = v;
    bv::for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        const double kk[3] = {double(k0), double(k1), double(k2)};
        const double s = kk[0] * kk[0] + kk[1] * kk[1] + kk[2] * kk[2];
        if (s == 0.0) {
            for (int a = 0; a < g.d; ++a) out.comp[a].coeffs()[idx] = Complex{0, 0};
            return;
        }
        Complex kd{0.0, 0.0};
        for (int a = 0; a < g.d; ++a) kd += kk[a] * v.comp[a].coeffs()[idx];
        for (int a = 0; a < g.d; ++a) out.comp[a].coeffs()[idx] -= kk[a] * kd / s;
    });
    out.div_free = true;
    return out;
}

// Exact Galerkin transport sum_j d_j(a^j b) with products formed on a dense
// grid (M = 4n removes all aliasing for dealiased inputs), then masked.
inline SpectralField transport(const VectorField& a, const SpectralField& b) {
    const Grid& g = a.grid();
    const int M = 4 * g.n;
    const SpectralField bb = b;
    std::vector<std::vector<double>> afine;
    for (int j = 0; j < g.d; ++j) afine.push_back(eval_fine(a.comp[j], M));
    const std::vector<double> bfine = eval_fine(bb, M);
    SpectralField acc(g);
    for (int j = 0; j < g.d; ++j) {
        std::vector<double> prod(bfine.size());
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = afine[j][i] * bfine[i];
        const SpectralField ps = project_fine(g, prod, M);
        const SpectralField dps = derivative(ps, j + 1);
        for (std::size_t i = 0; i < acc.coeffs().size(); ++i)
            acc.coeffs()[i] += dps.coeffs()[i];
    }
    return dealias_mask(acc);
}

inline VectorField transport_vector(const VectorField& a, const VectorField& w) {
    VectorField out(a.grid());
    for (int i = 0; i < a.grid().d; ++i) out.comp[i] = transport(a, w.comp[i]);
    return out;
}

// Dense-grid L^p quadrature (M-point trapezoid = equal weights on the torus).
inline double lp_fine(const SpectralField& f, double p, int M) {
    const std::vector<double> fine = eval_fine(f, M);
    double acc = 0.0;
    for (double x : fine) acc += std::pow(std::abs(x), p);
    return std::pow(acc / double(fine.size()), 1.0 / p);
}

inline double max_coeff_diff(const SpectralField& a, const SpectralField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
    return m;
}

inline double max_coeff_diff(const VectorField& a, const VectorField& b) {
    double m = 0.0;
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, max_coeff_diff(a.comp[c], b.comp[c]));
    return m;
}

inline double max_coeff_abs(const SpectralField& a) { return a.max_abs_coeff(); }

inline double max_coeff_abs(const VectorField& a) {
    double m = 0.0;
    for (const auto& c : a.comp) m = std::max(m, c.max_abs_coeff());
    return m;
}

}  // namespace oracle
