// Mean-zero periodic fields stored as Fourier coefficients.
//
// SpectralField keeps the full complex coefficient array (c2c layout) so the
// Hermitian-symmetry and mean-zero invariants can be asserted directly.
// Fields are plain values; every operator in operators.hpp returns a new
// field and never mutates its inputs.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "bv/grid.hpp"

namespace bv {

using Complex = std::complex<double>;

struct PhysicalField {
    Grid grid;
    std::vector<double> v;

    PhysicalField() = default;
    explicit PhysicalField(const Grid& g) : grid(g), v(g.size(), 0.0) {}
};

class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid_(g), c_(g.size(), Complex{0.0, 0.0}) {}

    const Grid& grid() const { return grid_; }
    std::vector<Complex>& coeffs() { return c_; }
    const std::vector<Complex>& coeffs() const { return c_; }

    Complex coeff(int k0, int k1, int k2 = 0) const {
        return c_[grid_.flat_mode({k0, k1, k2})];
    }
    void set_coeff(int k0, int k1, Complex v) { c_[grid_.flat_mode({k0, k1, 0})] = v; }
    void set_coeff(int k0, int k1, int k2, Complex v) {
        c_[grid_.flat_mode({k0, k1, k2})] = v;
    }

    void zero_mean() { if (!c_.empty()) c_[0] = Complex{0.0, 0.0}; }

    // Projects onto the Hermitian-symmetric (real-field) part:
    // c(k) <- (c(k) + conj(c(-k)))/2. Self-conjugate modes (all components
    // 0 or n/2) are forced real.
    void hermitize() {
        const Grid& g = grid_;
        for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
            const std::size_t cidx = g.flat_mode({-k0 == g.n / 2 ? -g.n / 2 : -k0,
                                                  -k1 == g.n / 2 ? -g.n / 2 : -k1,
                                                  -k2 == g.n / 2 ? -g.n / 2 : -k2});
            if (idx < cidx) {
                const Complex avg = 0.5 * (c_[idx] + std::conj(c_[cidx]));
                c_[idx] = avg;
                c_[cidx] = std::conj(avg);
            } else if (idx == cidx) {
                c_[idx] = Complex{c_[idx].real(), 0.0};
            }
        });
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const Complex& z : c_) m = std::max(m, std::abs(z));
        return m;
    }

    // Max |c(-k) - conj(c(k))| over all modes; 0 for a real-valued field.
    double hermitian_defect() const {
        const Grid& g = grid_;
        double worst = 0.0;
        for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
            const std::size_t cidx = g.flat_mode({-k0 == g.n / 2 ? -g.n / 2 : -k0,
                                                  -k1 == g.n / 2 ? -g.n / 2 : -k1,
                                                  -k2 == g.n / 2 ? -g.n / 2 : -k2});
            worst = std::max(worst, std::abs(c_[cidx] - std::conj(c_[idx])));
        });
        return worst;
    }

    bool finite() const {
        for (const Complex& z : c_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

  private:
    Grid grid_;
    std::vector<Complex> c_;
};

struct VectorField {
    std::vector<SpectralField> comp;  // d components on a shared grid
    bool div_free = false;            // certificate, set by leray_project

    VectorField() = default;
    explicit VectorField(const Grid& g) : comp(g.d, SpectralField(g)) {}

    const Grid& grid() const { return comp.at(0).grid(); }
    int dim() const { return static_cast<int>(comp.size()); }

    bool finite() const {
        for (const auto& f : comp)
            if (!f.finite()) return false;
        return true;
    }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (a != b) throw invariant_violation(std::string(what) + ": grid mismatch");
}

}  // namespace bv
