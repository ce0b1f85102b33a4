// Norms and inner products.
//
// L^p norms use equal-weight quadrature on the collocation grid (exact for
// p = 2 on band-limited fields by Parseval); p = inf is the grid max-abs.
// Homogeneous Sobolev norms are mode sums with weight (2*pi*|k|)^(2s).
// Paper notation: |u| is the L^2 norm, ||u|| the V (= homogeneous H^1) norm.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "bv/operators.hpp"

namespace bv {

inline constexpr std::array<double, 6> kDefaultPGrid{2, 4, 8, 16, 32, 64};

// L^2 pairing (f, g) = integral of f*g over the torus.
inline double inner(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f.grid(), g.grid(), "inner");
    double s = 0.0;
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return s;
}

inline double inner(const VectorField& u, const VectorField& v) {
    double s = 0.0;
    for (int a = 0; a < u.dim(); ++a) s += inner(u.comp[a], v.comp[a]);
    return s;
}

// V pairing ((f, g)) = sum over modes of (2 pi |k|)^2 f g*.
inline double inner_h1(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f.grid(), g.grid(), "inner_h1");
    double s = 0.0;
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    for_each_mode(f.grid(), [&](std::size_t i, int k0, int k1, int k2) {
        const double w = kTwoPi * kTwoPi *
                         (double(k0) * k0 + double(k1) * k1 + double(k2) * k2);
        s += w * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
    });
    return s;
}

inline double inner_h1(const VectorField& u, const VectorField& v) {
    double s = 0.0;
    for (int a = 0; a < u.dim(); ++a) s += inner_h1(u.comp[a], v.comp[a]);
    return s;
}

inline double norm_hs(const SpectralField& f, int s) {
    static constexpr int kSupported[] = {-2, -1, 0, 1, 2, 3};
    if (std::find(std::begin(kSupported), std::end(kSupported), s) == std::end(kSupported))
        throw config_error("norm_hs: unsupported order s=" + std::to_string(s));
    double acc = 0.0;
    const auto& c = f.coeffs();
    for_each_mode(f.grid(), [&](std::size_t i, int k0, int k1, int k2) {
        const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
        if (k2sum == 0.0) return;  // mean mode carries no weight (it is zero)
        acc += std::pow(kTwoPi * kTwoPi * k2sum, s) * std::norm(c[i]);
    });
    return std::sqrt(acc);
}

inline double norm_hs(const VectorField& u, int s) {
    double acc = 0.0;
    for (const auto& f : u.comp) {
        const double x = norm_hs(f, s);
        acc += x * x;
    }
    return std::sqrt(acc);
}

inline double norm_l2(const SpectralField& f) { return norm_hs(f, 0); }
inline double norm_l2(const VectorField& u) { return norm_hs(u, 0); }
inline double norm_h1(const SpectralField& f) { return norm_hs(f, 1); }
inline double norm_h1(const VectorField& u) { return norm_hs(u, 1); }

inline double norm_linf_grid(const PhysicalField& p) {
    double m = 0.0;
    for (double x : p.v) m = std::max(m, std::abs(x));
    return m;
}

inline double norm_linf_grid(const SpectralField& f) {
    return norm_linf_grid(to_physical(f));
}

inline double norm_linf_grid(const VectorField& u) {
    double m = 0.0;
    const Grid& g = u.grid();
    std::vector<PhysicalField> p;
    for (const auto& f : u.comp) p.push_back(to_physical(f));
    for (std::size_t i = 0; i < g.size(); ++i) {
        double mag2 = 0.0;
        for (int a = 0; a < g.d; ++a) mag2 += p[a].v[i] * p[a].v[i];
        m = std::max(m, std::sqrt(mag2));
    }
    return m;
}

// Largest per-component grid value; the CFL estimate uses this.
inline double max_component_grid(const VectorField& u) {
    double m = 0.0;
    for (const auto& f : u.comp) m = std::max(m, norm_linf_grid(f));
    return m;
}

inline double norm_lp_grid(const PhysicalField& p, double pexp) {
    if (std::isinf(pexp)) return norm_linf_grid(p);
    if (pexp < 1.0) throw config_error("norm_lp: p must be >= 1");
    double acc = 0.0;
    for (double x : p.v) acc += std::pow(std::abs(x), pexp);
    acc /= static_cast<double>(p.v.size());
    return std::pow(acc, 1.0 / pexp);
}

inline double norm_lp(const SpectralField& f, double pexp) {
    return norm_lp_grid(to_physical(f), pexp);
}

// L^p of the pointwise Euclidean magnitude.
inline double norm_lp(const VectorField& u, double pexp) {
    const Grid& g = u.grid();
    std::vector<PhysicalField> p;
    for (const auto& f : u.comp) p.push_back(to_physical(f));
    PhysicalField mag(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        double m2 = 0.0;
        for (int a = 0; a < g.d; ++a) m2 += p[a].v[i] * p[a].v[i];
        mag.v[i] = std::sqrt(m2);
    }
    return norm_lp_grid(mag, pexp);
}

// sup over p >= 2 of ||f||_p / sqrt(p-1), approximated on a finite p-grid.
template <class PGrid = std::array<double, 6>>
inline double norm_sqrtL(const SpectralField& f, const PGrid& pgrid = kDefaultPGrid) {
    const PhysicalField p = to_physical(f);
    double m = 0.0;
    for (double pe : pgrid) m = std::max(m, norm_lp_grid(p, pe) / std::sqrt(pe - 1.0));
    return m;
}

// Scale-invariant divergence defect: max_k |div(u)^(k)| / ||u||_{H^1}.
inline double divergence_defect(const VectorField& u) {
    const double h1 = norm_h1(u);
    if (h1 == 0.0) return 0.0;
    return divergence(u).max_abs_coeff() / h1;
}

// Signed grid extrema (for the two-sided maximum principle).
inline std::pair<double, double> grid_min_max(const SpectralField& f) {
    const PhysicalField p = to_physical(f);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double x : p.v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return {lo, hi};
}

}  // namespace bv
