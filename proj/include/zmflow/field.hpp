// field.hpp -- real collocation fields and complex spectral fields.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "zmflow/errors.hpp"
#include "zmflow/grid.hpp"

namespace zm {

/// Real scalar field sampled at collocation points, row-major over the grid.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid_(g), v_(g.size(), fill) {}

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return v_.size(); }

    double& operator[](std::size_t i) { return v_[i]; }
    double operator[](std::size_t i) const { return v_[i]; }

    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    double min() const { return *std::min_element(v_.begin(), v_.end()); }
    double max() const { return *std::max_element(v_.begin(), v_.end()); }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

    double mean() const {
        double s = 0.0;
        for (double x : v_) s += x;
        return s / static_cast<double>(v_.size());
    }

    /// Grid quadrature L2 norm: sqrt(integral of f^2 over the torus).
    double l2_norm() const {
        double s = 0.0;
        for (double x : v_) s += x * x;
        return std::sqrt(s * grid_.cell_volume());
    }

    bool finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    ScalarField& operator+=(const ScalarField& o) {
        require_same_grid(grid_, o.grid_, "ScalarField::operator+=");
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& o) {
        require_same_grid(grid_, o.grid_, "ScalarField::operator-=");
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    ScalarField& operator*=(double c) {
        for (double& x : v_) x *= c;
        return *this;
    }

    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(double c, ScalarField a) { return a *= c; }

private:
    Grid grid_;
    std::vector<double> v_;
};

/// Pointwise product (no dealiasing here; see spectral.hpp for that).
inline ScalarField pointwise(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid(), b.grid(), "pointwise");
    ScalarField r(a.grid());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] * b[i];
    return r;
}

/// Vector field: d scalar components on one grid.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const Grid& g) : grid_(g) {
        comps_.assign(static_cast<std::size_t>(g.dim()), ScalarField(g));
    }

    const Grid& grid() const { return grid_; }
    int dim() const { return grid_.dim(); }

    ScalarField& comp(int a) { return comps_[static_cast<std::size_t>(a)]; }
    const ScalarField& comp(int a) const { return comps_[static_cast<std::size_t>(a)]; }

    /// Max over the grid of the pointwise Euclidean norm.
    double max_abs() const {
        double m = 0.0;
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            double s = 0.0;
            for (int a = 0; a < dim(); ++a) s += comp(a)[i] * comp(a)[i];
            m = std::max(m, s);
        }
        return std::sqrt(m);
    }

    double l2_norm() const {
        double s = 0.0;
        for (int a = 0; a < dim(); ++a) {
            double c = comps_[static_cast<std::size_t>(a)].l2_norm();
            s += c * c;
        }
        return std::sqrt(s);
    }

    bool finite() const {
        for (const auto& c : comps_)
            if (!c.finite()) return false;
        return true;
    }

    VectorField& operator+=(const VectorField& o) {
        require_same_grid(grid_, o.grid_, "VectorField::operator+=");
        for (int a = 0; a < dim(); ++a) comp(a) += o.comp(a);
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        require_same_grid(grid_, o.grid_, "VectorField::operator-=");
        for (int a = 0; a < dim(); ++a) comp(a) -= o.comp(a);
        return *this;
    }
    VectorField& operator*=(double c) {
        for (auto& f : comps_) f *= c;
        return *this;
    }

    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(double c, VectorField a) { return a *= c; }

private:
    Grid grid_;
    std::vector<ScalarField> comps_;
};

/// Complex Fourier coefficients over the full wavenumber lattice, row-major.
/// Convention: f(x) = sum_k c(k) e^{i k.x}, so real fields have conjugate-
/// symmetric coefficients.
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(const Grid& g)
        : grid_(g), c_(g.size(), std::complex<double>(0.0, 0.0)) {}

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return c_.size(); }

    std::complex<double>& operator[](std::size_t i) { return c_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return c_[i]; }

    std::vector<std::complex<double>>& data() { return c_; }
    const std::vector<std::complex<double>>& data() const { return c_; }

    /// l2 norm of coefficients; equals ||f||_{L2} / sqrt(volume) by Parseval.
    double coeff_norm() const {
        double s = 0.0;
        for (const auto& z : c_) s += std::norm(z);
        return std::sqrt(s);
    }

    SpectralField& operator+=(const SpectralField& o) {
        require_same_grid(grid_, o.grid_, "SpectralField::operator+=");
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        require_same_grid(grid_, o.grid_, "SpectralField::operator-=");
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    SpectralField& operator*=(double c) {
        for (auto& z : c_) z *= c;
        return *this;
    }

private:
    Grid grid_;
    std::vector<std::complex<double>> c_;
};

} // namespace zm
