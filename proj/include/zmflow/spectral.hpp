// spectral.hpp -- differential operators, projectors and dealiased products.
//
// Derivative multipliers zero the Nyquist frequency on the differentiated
// axis, so div(grad f) and laplacian(f) are the same multiplier and the
// operators compose exactly. The 2/3-rule cutoff keeps |freq| <= floor(n/3)
// per axis; every nonlinear product below goes through it.
#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "zmflow/fft.hpp"
#include "zmflow/field.hpp"
#include "zmflow/grid.hpp"

namespace zm {
namespace detail {

/// Derivative wavenumber for lattice index i: signed frequency times k0,
/// with the Nyquist mode mapped to zero.
inline double deriv_wavenumber(const Grid& g, int i) {
    const int f = g.freq(i);
    if (f == g.n() / 2) return 0.0;
    return g.k0() * f;
}

/// Visit every lattice site: fn(flat_index, dk) with dk the per-axis
/// derivative wavenumbers (third entry zero in 2D).
template <typename F>
inline void for_each_mode(const Grid& g, F&& fn) {
    const int n = g.n();
    if (g.dim() == 2) {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i) {
            const double kx = deriv_wavenumber(g, i);
            for (int j = 0; j < n; ++j, ++idx)
                fn(idx, std::array<double, 3>{kx, deriv_wavenumber(g, j), 0.0});
        }
    } else {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i) {
            const double kx = deriv_wavenumber(g, i);
            for (int j = 0; j < n; ++j) {
                const double ky = deriv_wavenumber(g, j);
                for (int l = 0; l < n; ++l, ++idx)
                    fn(idx, std::array<double, 3>{kx, ky, deriv_wavenumber(g, l)});
            }
        }
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// spectral-level operators
// ---------------------------------------------------------------------------

inline SpectralField derivative_hat(const SpectralField& s, int axis) {
    SpectralField out(s.grid());
    detail::for_each_mode(s.grid(), [&](std::size_t i, const std::array<double, 3>& dk) {
        const std::complex<double> ik(0.0, dk[static_cast<std::size_t>(axis)]);
        out[i] = ik * s[i];
    });
    return out;
}

inline std::vector<SpectralField> grad_hat(const SpectralField& s) {
    std::vector<SpectralField> out;
    for (int a = 0; a < s.grid().dim(); ++a) out.push_back(derivative_hat(s, a));
    return out;
}

inline SpectralField div_hat(const std::vector<SpectralField>& w) {
    SpectralField out(w.front().grid());
    detail::for_each_mode(out.grid(), [&](std::size_t i, const std::array<double, 3>& dk) {
        std::complex<double> s(0.0, 0.0);
        for (int a = 0; a < out.grid().dim(); ++a)
            s += std::complex<double>(0.0, dk[static_cast<std::size_t>(a)]) * w[static_cast<std::size_t>(a)][i];
        out[i] = s;
    });
    return out;
}

inline SpectralField laplacian_hat(const SpectralField& s) {
    SpectralField out(s.grid());
    detail::for_each_mode(s.grid(), [&](std::size_t i, const std::array<double, 3>& dk) {
        const double k2 = dk[0] * dk[0] + dk[1] * dk[1] + dk[2] * dk[2];
        out[i] = -k2 * s[i];
    });
    return out;
}

/// Zero every mode with |freq| > floor(n/3) on any axis (2/3 rule).
inline void dealias_inplace(SpectralField& s) {
    const Grid& g = s.grid();
    const int cut = g.n() / 3;
    const int n = g.n();
    auto keep = [&](int i) { return std::abs(g.freq(i)) <= cut; };
    if (g.dim() == 2) {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i) {
            const bool ki = keep(i);
            for (int j = 0; j < n; ++j, ++idx)
                if (!ki || !keep(j)) s[idx] = 0.0;
        }
    } else {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i) {
            const bool ki = keep(i);
            for (int j = 0; j < n; ++j) {
                const bool kj = keep(j);
                for (int l = 0; l < n; ++l, ++idx)
                    if (!ki || !kj || !keep(l)) s[idx] = 0.0;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// field-level operators
// ---------------------------------------------------------------------------

inline VectorField grad(const ScalarField& f) {
    const SpectralField s = to_spectral(f);
    VectorField out(f.grid());
    for (int a = 0; a < f.grid().dim(); ++a)
        out.comp(a) = to_physical(derivative_hat(s, a));
    return out;
}

inline ScalarField div(const VectorField& w) {
    return to_physical(div_hat(to_spectral(w)));
}

inline ScalarField laplacian(const ScalarField& f) {
    return to_physical(laplacian_hat(to_spectral(f)));
}

/// Solve laplacian(out) = f with mean-zero gauge. Modes in the kernel of the
/// discrete Laplacian (the mean and pure-Nyquist modes) are zeroed.
inline ScalarField inverse_laplacian(const ScalarField& f) {
    const double l2 = f.l2_norm();
    if (std::abs(f.mean()) > 1e-12 * std::max(l2, 1e-300) && l2 > 0.0)
        throw PreconditionError("inverse_laplacian: input must be mean-zero");
    SpectralField s = to_spectral(f);
    detail::for_each_mode(s.grid(), [&](std::size_t i, const std::array<double, 3>& dk) {
        const double k2 = dk[0] * dk[0] + dk[1] * dk[1] + dk[2] * dk[2];
        s[i] = (k2 > 0.0) ? s[i] / (-k2) : 0.0;
    });
    return to_physical(s);
}

/// Spectral-level inverse Laplacian with forced mean-zero gauge (the zero
/// mode is discarded). Used inside iterations that control the gauge.
inline SpectralField inverse_laplacian_hat(const SpectralField& in) {
    SpectralField s = in;
    detail::for_each_mode(s.grid(), [&](std::size_t i, const std::array<double, 3>& dk) {
        const double k2 = dk[0] * dk[0] + dk[1] * dk[1] + dk[2] * dk[2];
        s[i] = (k2 > 0.0) ? s[i] / (-k2) : 0.0;
    });
    return s;
}

/// Helmholtz--Leray split: returns (divergence-free part, gradient part).
/// The zero mode (and Laplacian-kernel modes) go wholly to the first part.
inline std::pair<VectorField, VectorField> leray_project(const VectorField& w) {
    std::vector<SpectralField> what = to_spectral(w);
    const Grid& g = w.grid();
    std::vector<SpectralField> qhat;
    for (int a = 0; a < g.dim(); ++a) qhat.emplace_back(g);
    detail::for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& dk) {
        const double k2 = dk[0] * dk[0] + dk[1] * dk[1] + dk[2] * dk[2];
        if (k2 == 0.0) return;
        std::complex<double> kdotw(0.0, 0.0);
        for (int a = 0; a < g.dim(); ++a)
            kdotw += dk[static_cast<std::size_t>(a)] * what[static_cast<std::size_t>(a)][i];
        for (int a = 0; a < g.dim(); ++a) {
            const auto grad_part = dk[static_cast<std::size_t>(a)] * kdotw / k2;
            qhat[static_cast<std::size_t>(a)][i] = grad_part;
            what[static_cast<std::size_t>(a)][i] -= grad_part;
        }
    });
    VectorField p(g), q(g);
    for (int a = 0; a < g.dim(); ++a) {
        p.comp(a) = to_physical(what[static_cast<std::size_t>(a)]);
        q.comp(a) = to_physical(qhat[static_cast<std::size_t>(a)]);
    }
    return {p, q};
}

inline ScalarField dealias(const ScalarField& f) {
    SpectralField s = to_spectral(f);
    dealias_inplace(s);
    return to_physical(s);
}

/// Pointwise product followed by the 2/3-rule cutoff.
inline ScalarField dealiased_product(const ScalarField& a, const ScalarField& b) {
    return dealias(pointwise(a, b));
}

/// v . grad f, products dealiased.
inline ScalarField advect(const VectorField& v, const ScalarField& f) {
    require_same_grid(v.grid(), f.grid(), "advect");
    const VectorField gf = grad(f);
    ScalarField acc(f.grid());
    for (int a = 0; a < f.grid().dim(); ++a)
        acc += pointwise(v.comp(a), gf.comp(a));
    return dealias(acc);
}

/// (v . grad) u componentwise, products dealiased.
inline VectorField advect(const VectorField& v, const VectorField& u) {
    VectorField out(u.grid());
    for (int a = 0; a < u.grid().dim(); ++a) out.comp(a) = advect(v, u.comp(a));
    return out;
}

/// div(v (x) w), i.e. out_i = sum_j d_j (v_i w_j), products dealiased.
inline VectorField div_outer(const VectorField& v, const VectorField& w) {
    require_same_grid(v.grid(), w.grid(), "div_outer");
    const Grid& g = v.grid();
    VectorField out(g);
    for (int i = 0; i < g.dim(); ++i) {
        std::vector<SpectralField> row;
        for (int j = 0; j < g.dim(); ++j) {
            SpectralField s = to_spectral(pointwise(v.comp(i), w.comp(j)));
            dealias_inplace(s);
            row.push_back(std::move(s));
        }
        out.comp(i) = to_physical(div_hat(row));
    }
    return out;
}

/// Relative spectral divergence: ||div u||_2 / (||grad u||_2 + tiny).
inline double relative_divergence(const VectorField& u) {
    std::vector<SpectralField> uhat = to_spectral(u);
    double div2 = 0.0, grad2 = 0.0;
    detail::for_each_mode(u.grid(), [&](std::size_t i, const std::array<double, 3>& dk) {
        const double k2 = dk[0] * dk[0] + dk[1] * dk[1] + dk[2] * dk[2];
        std::complex<double> d(0.0, 0.0);
        for (int a = 0; a < u.grid().dim(); ++a) {
            const auto& z = uhat[static_cast<std::size_t>(a)][i];
            d += std::complex<double>(0.0, dk[static_cast<std::size_t>(a)]) * z;
            grad2 += k2 * std::norm(z);
        }
        div2 += std::norm(d);
    });
    return std::sqrt(div2) / (std::sqrt(grad2) + 1e-300);
}

} // namespace zm
