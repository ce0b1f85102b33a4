// Right-hand sides for the Boussinesq family: isotropic or per-axis
// viscosity, diffusion kappa, and Voigt length alpha, in 2D and 3D.
//
// Momentum (after Leray projection and (I + alpha^2 A) inversion):
//   du/dt = (I + alpha^2 A)^{-1} [ -B(u,u) + P_sigma(theta e_d) ]
//           - sum_j nu_j (2 pi k_j)^2 / (1 + alpha^2 (2 pi |k|)^2) u
// Scalar:
//   dtheta/dt = -sum_j d_j(u^j theta) - kappa (2 pi |k|)^2 theta
//
// The diffusive parts are diagonal in Fourier space and exposed separately
// (linear_multiplier_*) so the integrating-factor stepper can treat them
// exactly. explicit + stiff reassembles the full tendency.
#pragma once

#include <optional>
#include <string>

#include "bv/norms.hpp"

namespace bv {

struct ModelParams {
    int d = 2;
    std::array<double, 3> nu{0.0, 0.0, 0.0};  // per-axis viscosities
    double kappa = 0.0;
    double alpha = 0.0;
    int buoyancy_axis = 2;  // theta forces along e_d

    bool isotropic() const {
        for (int a = 1; a < d; ++a)
            if (nu[a] != nu[0]) return false;
        return true;
    }

    // Returns a warning string for legal-but-unguaranteed parameter choices.
    std::optional<std::string> validate() const {
        if (d != 2 && d != 3) throw config_error("model: d must be 2 or 3");
        for (int a = 0; a < d; ++a)
            if (!(nu[a] >= 0.0) || !std::isfinite(nu[a]))
                throw config_error("model: viscosities must be finite and >= 0");
        if (!(kappa >= 0.0) || !std::isfinite(kappa))
            throw config_error("model: kappa must be finite and >= 0");
        if (!(alpha >= 0.0) || !std::isfinite(alpha))
            throw config_error("model: alpha must be finite and >= 0");
        if (buoyancy_axis != d)
            throw config_error("model: buoyancy_axis must equal d");
        if (d == 3 && alpha > 0.0 && kappa == 0.0)
            return "d=3 with alpha>0 and kappa=0: global regularity is not "
                   "guaranteed for this configuration (exploratory run)";
        return std::nullopt;
    }
};

struct SimState {
    VectorField u;
    SpectralField theta;
    double t = 0.0;

    SimState() = default;
    SimState(VectorField u_, SpectralField theta_, double t_ = 0.0)
        : u(std::move(u_)), theta(std::move(theta_)), t(t_) {}

    const Grid& grid() const { return theta.grid(); }

    void validate() const {
        require_same_grid(u.grid(), theta.grid(), "SimState");
        if (!u.div_free) throw invariant_violation("SimState: u lacks div-free certificate");
        if (std::abs(theta.coeffs()[0]) != 0.0)
            throw invariant_violation("SimState: theta has nonzero mean");
    }
};

// Per-mode decay rate of u: sum_j nu_j (2 pi k_j)^2, Voigt-rescaled.
inline double linear_multiplier_u(const ModelParams& p, int k0, int k1, int k2) {
    double s = 0.0;
    const int kk[3] = {k0, k1, k2};
    for (int a = 0; a < p.d; ++a) s += p.nu[a] * kTwoPi * kTwoPi * double(kk[a]) * kk[a];
    if (p.alpha > 0.0) {
        const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
        s /= 1.0 + p.alpha * p.alpha * kTwoPi * kTwoPi * k2sum;
    }
    return s;
}

// Per-mode decay rate of theta: kappa (2 pi |k|)^2.
inline double linear_multiplier_theta(const ModelParams& p, int k0, int k1, int k2) {
    return p.kappa * kTwoPi * kTwoPi *
           (double(k0) * k0 + double(k1) * k1 + double(k2) * k2);
}

struct Tendency {
    VectorField du_explicit;        // (I+a^2 A)^{-1}[-B(u,u) + P_sigma(theta e_d)]
    SpectralField dtheta_explicit;  // -sum_j d_j(u^j theta)
    VectorField du_stiff;           // -L_u u (Voigt-rescaled anisotropic diffusion)
    SpectralField dtheta_stiff;     // -L_theta theta

    VectorField du_total() const {
        VectorField out = du_explicit;
        for (int a = 0; a < out.dim(); ++a)
            for (std::size_t i = 0; i < out.comp[a].coeffs().size(); ++i)
                out.comp[a].coeffs()[i] += du_stiff.comp[a].coeffs()[i];
        out.div_free = du_explicit.div_free && du_stiff.div_free;
        return out;
    }
    SpectralField dtheta_total() const {
        SpectralField out = dtheta_explicit;
        for (std::size_t i = 0; i < out.coeffs().size(); ++i)
            out.coeffs()[i] += dtheta_stiff.coeffs()[i];
        return out;
    }
};

namespace detail {

inline VectorField buoyancy_term(const SpectralField& theta, const ModelParams& p) {
    VectorField f(theta.grid());
    f.comp[static_cast<std::size_t>(p.buoyancy_axis - 1)] = theta;
    return leray_project(f);
}

inline void check_finite(const SimState& s, const char* where) {
    if (!s.u.finite() || !s.theta.finite())
        throw numerical_fault(std::string(where) + ": non-finite field data", -1, s.t);
}

}  // namespace detail

inline Tendency rhs(const SimState& state, const ModelParams& params) {
    state.validate();
    params.validate();
    if (params.d != state.grid().d) throw config_error("rhs: params.d does not match grid");
    detail::check_finite(state, "rhs");

    const Grid& g = state.grid();
    Tendency out;

    VectorField expl = detail::buoyancy_term(state.theta, params);
    const VectorField adv = advect_velocity(state.u, state.u);
    for (int a = 0; a < g.d; ++a)
        for (std::size_t i = 0; i < expl.comp[a].coeffs().size(); ++i)
            expl.comp[a].coeffs()[i] -= adv.comp[a].coeffs()[i];
    out.du_explicit = helmholtz_invert(expl, params.alpha);

    out.dtheta_explicit = advect_scalar(state.u, state.theta);
    for (Complex& z : out.dtheta_explicit.coeffs()) z = -z;

    out.du_stiff = VectorField(g);
    out.du_stiff.div_free = state.u.div_free;
    out.dtheta_stiff = SpectralField(g);
    for_each_mode(g, [&](std::size_t i, int k0, int k1, int k2) {
        const double lu = linear_multiplier_u(params, k0, k1, k2);
        for (int a = 0; a < g.d; ++a)
            out.du_stiff.comp[a].coeffs()[i] = -lu * state.u.comp[a].coeffs()[i];
        out.dtheta_stiff.coeffs()[i] =
            -linear_multiplier_theta(params, k0, k1, k2) * state.theta.coeffs()[i];
    });
    return out;
}

// Vorticity form of the 2D anisotropic system:
//   domega/dt = -div(omega u) + nu1 d1^2 omega + nu2 d2^2 omega + d1 theta
// with u recovered from omega by Biot-Savart. Only defined for alpha = 0.
inline std::pair<SpectralField, SpectralField> rhs_vorticity(const SpectralField& omega,
                                                             const SpectralField& theta,
                                                             const ModelParams& params) {
    if (params.d != 2 || omega.grid().d != 2)
        throw unsupported_config("rhs_vorticity: requires d = 2");
    if (params.alpha > 0.0)
        throw unsupported_config("rhs_vorticity: vorticity form not defined for alpha > 0");
    require_same_grid(omega.grid(), theta.grid(), "rhs_vorticity");

    const Grid& g = omega.grid();
    const VectorField u = biot_savart(omega);

    SpectralField domega = advect_scalar(u, omega);
    for (Complex& z : domega.coeffs()) z = -z;
    const SpectralField d1theta = partial_derivative(theta, 1);
    for_each_mode(g, [&](std::size_t i, int k0, int k1, int) {
        const double diff = params.nu[0] * kTwoPi * kTwoPi * double(k0) * k0 +
                            params.nu[1] * kTwoPi * kTwoPi * double(k1) * k1;
        domega.coeffs()[i] += -diff * omega.coeffs()[i] + d1theta.coeffs()[i];
    });

    SpectralField dtheta = advect_scalar(u, theta);
    for_each_mode(g, [&](std::size_t i, int k0, int k1, int k2) {
        dtheta.coeffs()[i] = -dtheta.coeffs()[i] -
                             linear_multiplier_theta(params, k0, k1, k2) * theta.coeffs()[i];
    });
    return {std::move(domega), std::move(dtheta)};
}

// Diagnostic pressure for the alpha = 0 family, from
//   -Laplace p = div(sum_j d_j(u^j u)) - d_d theta.
inline SpectralField recover_pressure(const SimState& state, const ModelParams& params) {
    if (params.alpha > 0.0)
        throw unsupported_config(
            "recover_pressure: pressure of the Voigt system is not recovered (alpha > 0)");
    state.validate();
    const VectorField adv = advect_velocity_raw(state.u, state.u);
    SpectralField q = divergence(adv);
    const SpectralField ddth = partial_derivative(state.theta, params.buoyancy_axis);
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) q.coeffs()[i] -= ddth.coeffs()[i];
    // -Lap p = q  =>  p = -Lap^{-1} q
    SpectralField p = inverse_laplacian(q);
    for (Complex& z : p.coeffs()) z = -z;
    return p;
}

}  // namespace bv
