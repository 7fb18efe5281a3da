// grid.hpp -- periodic collocation grid and its wavenumber lattice.
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "zmflow/errors.hpp"

namespace zm {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Uniform periodic grid on [0, length)^d with n points per dimension.
/// Wavenumbers are integer multiples of the fundamental k0 = 2*pi/length.
class Grid {
public:
    Grid() = default;

    Grid(int dim, int n, double length = two_pi)
        : dim_(dim), n_(n), length_(length) {
        if (dim != 2 && dim != 3)
            throw ParameterError("Grid: dimension must be 2 or 3");
        if (n < 16 || (n & (n - 1)) != 0)
            throw ParameterError("Grid: n must be a power of two >= 16");
        if (!(length > 0.0))
            throw ParameterError("Grid: length must be positive");
    }

    int dim() const { return dim_; }
    int n() const { return n_; }
    double length() const { return length_; }
    double dx() const { return length_ / n_; }
    double k0() const { return two_pi / length_; }

    std::size_t size() const {
        std::size_t s = 1;
        for (int a = 0; a < dim_; ++a) s *= static_cast<std::size_t>(n_);
        return s;
    }

    /// Cell volume for quadrature: integral(f) = cell_volume() * sum_x f(x).
    double cell_volume() const {
        double v = 1.0;
        for (int a = 0; a < dim_; ++a) v *= dx();
        return v;
    }

    double volume() const {
        double v = 1.0;
        for (int a = 0; a < dim_; ++a) v *= length_;
        return v;
    }

    /// Signed integer frequency of lattice index i in [0, n): values in [-n/2, n/2).
    int freq(int i) const { return i <= n_ / 2 ? i : i - n_; }

    /// Physical coordinate of index i along one axis.
    double coord(int i) const { return i * dx(); }

    /// Largest |k| on the lattice (corner mode), in physical wavenumber units.
    double kmax() const {
        return k0() * (n_ / 2) * std::sqrt(static_cast<double>(dim_));
    }

    bool operator==(const Grid& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && length_ == o.length_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

private:
    int dim_ = 2;
    int n_ = 16;
    double length_ = two_pi;
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (a != b) throw GridMismatchError(std::string(where) + ": fields on different grids");
}

} // namespace zm
