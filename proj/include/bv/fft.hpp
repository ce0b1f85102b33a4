// FFTW-backed transforms between coefficient and collocation space.
//
// Convention: f(x_j) = sum_k c_k exp(+2*pi*i k.x_j), so the forward
// (physical -> spectral) transform is FFTW_FORWARD scaled by 1/N and the
// inverse is FFTW_BACKWARD unscaled. Plans are cached per (d, n, sign) and
// created with FFTW_ESTIMATE | FFTW_UNALIGNED: the planner choice is then
// deterministic across processes, which restart equivalence relies on.
// Plan creation is guarded by a mutex (the FFTW planner is not thread-safe);
// execution via the new-array interface is safe on distinct buffers.
#pragma once

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "bv/field.hpp"

namespace bv {
namespace detail {

class FftPlans {
  public:
    static FftPlans& instance() {
        static FftPlans p;
        return p;
    }

    // sign: FFTW_FORWARD (-1) or FFTW_BACKWARD (+1). Out-of-place; does not
    // modify `in`.
    void execute(const Grid& g, int sign, const Complex* in, Complex* out) {
        fftw_plan plan = get(g, sign);
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                         reinterpret_cast<fftw_complex*>(out));
    }

  private:
    FftPlans() = default;
    ~FftPlans() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }
    FftPlans(const FftPlans&) = delete;

    fftw_plan get(const Grid& g, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        const auto key = std::make_tuple(g.d, g.n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::vector<int> dims(static_cast<std::size_t>(g.d), g.n);
        std::vector<Complex> a(g.size()), b(g.size());
        fftw_plan plan = fftw_plan_dft(g.d, dims.data(),
                                       reinterpret_cast<fftw_complex*>(a.data()),
                                       reinterpret_cast<fftw_complex*>(b.data()), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

    std::mutex mu_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

}  // namespace detail

inline PhysicalField to_physical(const SpectralField& f) {
    const Grid& g = f.grid();
    std::vector<Complex> out(g.size());
    detail::FftPlans::instance().execute(g, FFTW_BACKWARD, f.coeffs().data(), out.data());
    PhysicalField p(g);
    for (std::size_t i = 0; i < out.size(); ++i) p.v[i] = out[i].real();
    return p;
}

// Transforms real samples to coefficients, then restores the exact
// invariants: Hermitian symmetry (round-off from the c2c codelets) and a
// hard-zeroed mean mode.
inline SpectralField to_spectral(const PhysicalField& p) {
    const Grid& g = p.grid;
    if (p.v.size() != g.size()) throw config_error("to_spectral: sample count mismatch");
    std::vector<Complex> in(g.size());
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = Complex{p.v[i], 0.0};
    SpectralField f(g);
    detail::FftPlans::instance().execute(g, FFTW_FORWARD, in.data(), f.coeffs().data());
    const double scale = 1.0 / static_cast<double>(g.size());
    for (Complex& z : f.coeffs()) z *= scale;
    f.hermitize();
    f.zero_mean();
    return f;
}

// Builds a field by sampling fn(x) at collocation points (then mean-zeroing).
template <class Fn>
inline SpectralField field_from_function(const Grid& g, Fn&& fn) {
    PhysicalField p(g);
    for_each_point(g, [&](std::size_t i, double x0, double x1, double x2) {
        p.v[i] = fn(x0, x1, x2);
    });
    return to_spectral(p);
}

}  // namespace bv
