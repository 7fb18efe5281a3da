// filter_bank.hpp -- dyadic frequency blocks on the periodic lattice.
//
// The radial cutoff chi is 1 on |xi| <= 3/4, 0 on |xi| >= 4/3, and a smooth
// monotone exp(-1/t) blend in between; phi(xi) = chi(xi/2) - chi(xi) is the
// annulus profile supported in 3/4 < |xi| < 8/3. Block multipliers are
// sampled once per grid and cached; everything downstream is a table lookup.
#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "zmflow/errors.hpp"
#include "zmflow/fft.hpp"
#include "zmflow/field.hpp"
#include "zmflow/spectral.hpp"

namespace zm {

/// Smooth step: 0 for t <= 0, 1 for t >= 1, strictly increasing between.
inline double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

/// The radial cutoff chi: plateau 1 up to 3/4, support inside B(0, 4/3).
inline double dyadic_chi(double r) {
    constexpr double lo = 0.75;
    constexpr double hi = 4.0 / 3.0;
    return 1.0 - smooth_step((r - lo) / (hi - lo));
}

/// phi(xi) = chi(xi/2) - chi(xi), the annulus profile.
inline double dyadic_phi(double r) { return dyadic_chi(0.5 * r) - dyadic_chi(r); }

class DyadicFilterBank {
public:
    explicit DyadicFilterBank(const Grid& g) : grid_(g) {
        // |k| over the lattice (true moduli, Nyquist included: the bank
        // filters, it does not differentiate).
        moduli_.resize(g.size());
        const int n = g.n();
        const double k0 = g.k0();
        if (g.dim() == 2) {
            std::size_t idx = 0;
            for (int i = 0; i < n; ++i) {
                const double kx = k0 * g.freq(i);
                for (int j = 0; j < n; ++j, ++idx) {
                    const double ky = k0 * g.freq(j);
                    moduli_[idx] = std::sqrt(kx * kx + ky * ky);
                }
            }
        } else {
            std::size_t idx = 0;
            for (int i = 0; i < n; ++i) {
                const double kx = k0 * g.freq(i);
                for (int j = 0; j < n; ++j) {
                    const double ky = k0 * g.freq(j);
                    for (int l = 0; l < n; ++l, ++idx) {
                        const double kz = k0 * g.freq(l);
                        moduli_[idx] = std::sqrt(kx * kx + ky * ky + kz * kz);
                    }
                }
            }
        }

        double kmax = 0.0, kmin_pos = 1e300;
        for (double m : moduli_) {
            kmax = std::max(kmax, m);
            if (m > 0.0) kmin_pos = std::min(kmin_pos, m);
        }

        // j_max: smallest J with 2^{-(J+1)} kmax <= 3/4, so that the blocks
        // -1..j_max telescope to exactly 1 on every lattice mode.
        j_max_ = 0;
        while (std::ldexp(kmax, -(j_max_ + 1)) > 0.75) ++j_max_;

        // Homogeneous range: largest j_min with chi(2^{-j_min} kmin) = 0, so the
        // homogeneous blocks over [j_min, j_max] telescope to exactly 1 on every
        // nonzero lattice mode. Scan downward from 0.
        j_min_hom_ = 0;
        while (dyadic_chi(std::ldexp(kmin_pos, -j_min_hom_)) > 0.0) --j_min_hom_;

        block_.resize(static_cast<std::size_t>(j_max_ + 2));
        for (int j = -1; j <= j_max_; ++j) {
            auto& tab = block_[static_cast<std::size_t>(j + 1)];
            tab.resize(moduli_.size());
            for (std::size_t i = 0; i < moduli_.size(); ++i)
                tab[i] = (j == -1) ? dyadic_chi(moduli_[i])
                                   : dyadic_phi(std::ldexp(moduli_[i], -j));
        }
        hom_block_.resize(static_cast<std::size_t>(j_max_ - j_min_hom_ + 1));
        for (int j = j_min_hom_; j <= j_max_; ++j) {
            auto& tab = hom_block_[static_cast<std::size_t>(j - j_min_hom_)];
            tab.resize(moduli_.size());
            for (std::size_t i = 0; i < moduli_.size(); ++i)
                tab[i] = dyadic_phi(std::ldexp(moduli_[i], -j));
        }
    }

    const Grid& grid() const { return grid_; }
    int j_max() const { return j_max_; }
    int j_min_homogeneous() const { return j_min_hom_; }

    /// Multiplier table of the inhomogeneous block Delta_j, j in [-1, j_max].
    const std::vector<double>& block_multiplier(int j) const {
        if (j < -1 || j > j_max_)
            throw std::out_of_range("DyadicFilterBank: block index out of range");
        return block_[static_cast<std::size_t>(j + 1)];
    }

    /// Multiplier table of the homogeneous block, j in [j_min_hom, j_max].
    const std::vector<double>& homogeneous_multiplier(int j) const {
        if (j < j_min_hom_ || j > j_max_)
            throw std::out_of_range("DyadicFilterBank: homogeneous block index out of range");
        return hom_block_[static_cast<std::size_t>(j - j_min_hom_)];
    }

    /// chi(2^{-j} |k|) sampled on the lattice (low-pass at scale j).
    std::vector<double> low_pass_multiplier(int j) const {
        std::vector<double> tab(moduli_.size());
        for (std::size_t i = 0; i < tab.size(); ++i)
            tab[i] = dyadic_chi(std::ldexp(moduli_[i], -j));
        return tab;
    }

    SpectralField apply(const std::vector<double>& tab, const SpectralField& s) const {
        require_same_grid(grid_, s.grid(), "DyadicFilterBank::apply");
        SpectralField out(grid_);
        for (std::size_t i = 0; i < tab.size(); ++i) out[i] = tab[i] * s[i];
        return out;
    }

private:
    Grid grid_;
    int j_max_ = 0;
    int j_min_hom_ = 0;
    std::vector<double> moduli_;
    std::vector<std::vector<double>> block_;
    std::vector<std::vector<double>> hom_block_;
};

/// Delta_j f (j = -1 is the chi block). Output is real-valued.
inline ScalarField dyadic_block(const DyadicFilterBank& bank, const ScalarField& f, int j) {
    if (j < -1 || j > bank.j_max())
        throw std::out_of_range("dyadic_block: j out of [-1, j_max]");
    return to_physical(bank.apply(bank.block_multiplier(j), to_spectral(f)));
}

/// S_j f: zero for j <= 0, chi(2^{-j} D) f = sum_{j' <= j-1} Delta_{j'} f for j >= 1.
inline ScalarField low_cutoff(const DyadicFilterBank& bank, const ScalarField& f, int j) {
    require_same_grid(bank.grid(), f.grid(), "low_cutoff");
    if (j <= 0) return ScalarField(f.grid());
    return to_physical(bank.apply(bank.low_pass_multiplier(j), to_spectral(f)));
}

/// Homogeneous block, defined for every j with a nonempty annulus.
inline ScalarField homogeneous_block(const DyadicFilterBank& bank, const ScalarField& f, int j) {
    return to_physical(bank.apply(bank.homogeneous_multiplier(j), to_spectral(f)));
}

} // namespace zm
