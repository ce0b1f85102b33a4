// Deterministic band-limited random fields (corpus generation, random ICs).
// Modes are visited in a fixed lexicographic order with one engine, so a
// given seed reproduces the same field bit-for-bit.
#pragma once

#include <cstdint>
#include <random>

#include "bv/norms.hpp"

namespace bv {

// Random real field supported on 1 <= max|k_i| <= kmax with spectral decay
// |k|^-slope, scaled to the requested L^2 norm (if nonzero).
inline SpectralField random_band_field(const Grid& g, std::uint64_t seed, int kmax,
                                       double slope = 2.0, double amplitude = 1.0) {
    SpectralField f(g);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    kmax = std::min(kmax, g.cutoff());
    const int lo = -kmax;
    auto visit = [&](int k0, int k1, int k2) {
        // draw once per conjugate pair; the lexicographically positive member
        bool positive = k0 > 0 || (k0 == 0 && (k1 > 0 || (k1 == 0 && k2 > 0)));
        if (!positive) return;
        const double gr = normal(rng), gi = normal(rng);
        const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
        const double amp = std::pow(k2sum, -0.5 * slope);
        const Complex c{amp * gr, amp * gi};
        f.set_coeff(k0, k1, k2, c);
        f.set_coeff(-k0, -k1, -k2, std::conj(c));
    };
    if (g.d == 2) {
        for (int k0 = lo; k0 <= kmax; ++k0)
            for (int k1 = lo; k1 <= kmax; ++k1) visit(k0, k1, 0);
    } else {
        for (int k0 = lo; k0 <= kmax; ++k0)
            for (int k1 = lo; k1 <= kmax; ++k1)
                for (int k2 = lo; k2 <= kmax; ++k2) visit(k0, k1, k2);
    }
    f.zero_mean();
    if (amplitude > 0.0) {
        const double l2 = norm_l2(f);
        if (l2 > 0.0) {
            const double s = amplitude / l2;
            for (Complex& z : f.coeffs()) z *= s;
        }
    }
    return f;
}

// Random divergence-free vector field (componentwise random, then projected).
inline VectorField random_divfree_field(const Grid& g, std::uint64_t seed, int kmax,
                                        double slope = 2.0, double amplitude = 1.0) {
    VectorField v(g);
    for (int a = 0; a < g.d; ++a)
        v.comp[a] = random_band_field(g, seed * 1000003u + static_cast<std::uint64_t>(a),
                                      kmax, slope, 0.0);
    v = leray_project(v);
    if (amplitude > 0.0) {
        const double l2 = norm_l2(v);
        if (l2 > 0.0) {
            const double s = amplitude / l2;
            for (auto& f : v.comp)
                for (Complex& z : f.coeffs()) z *= s;
        }
    }
    return v;
}

}  // namespace bv
