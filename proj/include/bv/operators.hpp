// Linear and bilinear spectral operators on the torus.
//
// Every nonlinear product is evaluated pseudo-spectrally (pointwise in
// physical space) and truncated by the 2/3-rule mask, which makes it the
// exact Galerkin product on the retained modes: aliased images of a
// quadratic product land at |k_i| >= n - 2*cutoff > cutoff and are zeroed.
// Outputs are always dealiased, mean-zero, and Hermitian.
#pragma once

#include "bv/fft.hpp"

namespace bv {

inline bool mode_in_band(const Grid& g, int k0, int k1, int k2) {
    const int c = g.cutoff();
    return std::abs(k0) <= c && std::abs(k1) <= c && std::abs(k2) <= c;
}

inline SpectralField dealias(const SpectralField& f) {
    SpectralField out = f;
    const Grid& g = f.grid();
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        if (!mode_in_band(g, k0, k1, k2)) out.coeffs()[idx] = Complex{0.0, 0.0};
    });
    out.zero_mean();
    return out;
}

inline VectorField dealias(const VectorField& v) {
    VectorField out = v;
    for (auto& f : out.comp) f = dealias(f);
    return out;
}

// d/dx_axis: multiplies mode k by 2*pi*i*k_axis. The unpaired Nyquist mode
// k_axis = -n/2 is zeroed to keep odd derivatives of real fields real
// (it is already zero for dealiased content).
inline SpectralField partial_derivative(const SpectralField& f, int axis) {
    const Grid& g = f.grid();
    if (axis < 1 || axis > g.d)
        throw config_error("partial_derivative: axis must be in 1..d");
    SpectralField out(g);
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        const int ka = axis == 1 ? k0 : (axis == 2 ? k1 : k2);
        if (ka == -g.n / 2) return;
        out.coeffs()[idx] = Complex{0.0, kTwoPi * ka} * f.coeffs()[idx];
    });
    return out;
}

inline SpectralField laplacian(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField out(g);
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
        out.coeffs()[idx] = -kTwoPi * kTwoPi * k2sum * f.coeffs()[idx];
    });
    return out;
}

// Solves laplacian(xi) = theta with mean-zero side condition.
inline SpectralField inverse_laplacian(const SpectralField& theta) {
    const Grid& g = theta.grid();
    if (std::abs(theta.coeffs()[0]) != 0.0)
        throw invariant_violation("inverse_laplacian: input has nonzero mean");
    SpectralField out(g);
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
        if (k2sum == 0.0) return;
        out.coeffs()[idx] = theta.coeffs()[idx] / (-kTwoPi * kTwoPi * k2sum);
    });
    return out;
}

inline SpectralField divergence(const VectorField& v) {
    const Grid& g = v.grid();
    SpectralField out(g);
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        const int kk[3] = {k0, k1, k2};
        Complex s{0.0, 0.0};
        for (int a = 0; a < g.d; ++a) {
            if (kk[a] == -g.n / 2) continue;
            s += Complex{0.0, kTwoPi * kk[a]} * v.comp[a].coeffs()[idx];
        }
        out.coeffs()[idx] = s;
    });
    return out;
}

inline VectorField gradient(const SpectralField& f) {
    VectorField out(f.grid());
    for (int a = 0; a < f.grid().d; ++a) out.comp[a] = partial_derivative(f, a + 1);
    return out;
}

// Leray-Helmholtz projection onto divergence-free mean-zero fields:
// u(k) <- u(k) - k (k.u(k)) / |k|^2. Idempotent, annihilates gradients.
inline VectorField leray_project(const VectorField& v) {
    const Grid& g = v.grid();
    VectorField out = v;
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        const double kk[3] = {double(k0), double(k1), double(k2)};
        const double k2sum = kk[0] * kk[0] + kk[1] * kk[1] + kk[2] * kk[2];
        if (k2sum == 0.0) {
            for (int a = 0; a < g.d; ++a) out.comp[a].coeffs()[idx] = Complex{0.0, 0.0};
            return;
        }
        Complex kdotu{0.0, 0.0};
        for (int a = 0; a < g.d; ++a) kdotu += kk[a] * v.comp[a].coeffs()[idx];
        kdotu /= k2sum;
        for (int a = 0; a < g.d; ++a) out.comp[a].coeffs()[idx] -= kk[a] * kdotu;
    });
    out.div_free = true;
    return out;
}

// Applies (I + alpha^2 A)^{-1}: divide mode k by 1 + alpha^2 (2 pi)^2 |k|^2.
inline VectorField helmholtz_invert(const VectorField& v, double alpha) {
    if (alpha < 0.0) throw config_error("helmholtz_invert: alpha must be >= 0");
    if (alpha == 0.0) return v;
    const Grid& g = v.grid();
    VectorField out = v;
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
        const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
        const double m = 1.0 / (1.0 + alpha * alpha * kTwoPi * kTwoPi * k2sum);
        for (int a = 0; a < g.d; ++a) out.comp[a].coeffs()[idx] *= m;
    });
    return out;  // diagonal real multiplier, divergence certificate carries over
}

// omega = d1 u^2 - d2 u^1 (2D only).
inline SpectralField curl2d(const VectorField& u) {
    if (u.grid().d != 2) throw unsupported_config("curl2d: requires d = 2");
    SpectralField a = partial_derivative(u.comp[1], 1);
    const SpectralField b = partial_derivative(u.comp[0], 2);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) a.coeffs()[i] -= b.coeffs()[i];
    return a;
}

// Unique mean-zero divergence-free u with curl2d(u) = omega:
// u = grad^perp(Laplace^{-1} omega), i.e.
// u(k) = 2*pi*i (k2, -k1) omega(k) / ((2 pi)^2 |k|^2).
inline VectorField biot_savart(const SpectralField& omega) {
    const Grid& g = omega.grid();
    if (g.d != 2) throw unsupported_config("biot_savart: requires d = 2");
    if (std::abs(omega.coeffs()[0]) != 0.0)
        throw invariant_violation("biot_savart: omega has nonzero mean");
    VectorField u(g);
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int) {
        const double k2sum = double(k0) * k0 + double(k1) * k1;
        if (k2sum == 0.0) return;
        const Complex w = omega.coeffs()[idx] / (kTwoPi * k2sum);
        u.comp[0].coeffs()[idx] = Complex{0.0, double(k1)} * w;
        u.comp[1].coeffs()[idx] = Complex{0.0, -double(k0)} * w;
    });
    u.div_free = true;
    return u;
}

namespace detail {

// sum_j d_j(a_phys[j] * b), dealiased. Shared core of both transport terms.
inline SpectralField conservative_transport(const std::vector<PhysicalField>& a_phys,
                                            const PhysicalField& b_phys, const Grid& g) {
    SpectralField acc(g);
    for (int j = 0; j < g.d; ++j) {
        PhysicalField prod(g);
        for (std::size_t i = 0; i < prod.v.size(); ++i)
            prod.v[i] = a_phys[static_cast<std::size_t>(j)].v[i] * b_phys.v[i];
        SpectralField ps = to_spectral(prod);
        for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
            const int kk[3] = {k0, k1, k2};
            if (kk[j] == -g.n / 2) return;
            acc.coeffs()[idx] += Complex{0.0, kTwoPi * kk[j]} * ps.coeffs()[idx];
        });
    }
    return dealias(acc);
}

inline std::vector<PhysicalField> components_to_physical(const VectorField& v) {
    std::vector<PhysicalField> out;
    out.reserve(v.comp.size());
    for (const auto& f : v.comp) out.push_back(to_physical(f));
    return out;
}

}  // namespace detail

// sum_j d_j(u^j w), dealiased but NOT Leray-projected (pressure recovery
// needs the raw term).
inline VectorField advect_velocity_raw(const VectorField& u, const VectorField& w) {
    const Grid& g = u.grid();
    require_same_grid(g, w.grid(), "advect_velocity");
    if (!u.div_free) throw invariant_violation("advect_velocity: u lacks div-free certificate");
    const auto u_phys = detail::components_to_physical(u);
    VectorField out(g);
    for (int i = 0; i < g.d; ++i) {
        const PhysicalField wi = to_physical(w.comp[i]);
        out.comp[i] = detail::conservative_transport(u_phys, wi, g);
    }
    return out;
}

// B(u, w) = P_sigma sum_j d_j(u^j w).
inline VectorField advect_velocity(const VectorField& u, const VectorField& w) {
    return leray_project(advect_velocity_raw(u, w));
}

// Transport of a scalar: sum_j d_j(u^j theta), dealiased, mean-zero.
inline SpectralField advect_scalar(const VectorField& u, const SpectralField& theta) {
    const Grid& g = u.grid();
    require_same_grid(g, theta.grid(), "advect_scalar");
    if (!u.div_free) throw invariant_violation("advect_scalar: u lacks div-free certificate");
    if (std::abs(theta.coeffs()[0]) != 0.0)
        throw invariant_violation("advect_scalar: theta has nonzero mean");
    const auto u_phys = detail::components_to_physical(u);
    const PhysicalField t_phys = to_physical(theta);
    return detail::conservative_transport(u_phys, t_phys, g);
}

}  // namespace bv
