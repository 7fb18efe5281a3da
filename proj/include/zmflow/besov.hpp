// besov.hpp -- blockwise Lebesgue norms, Besov norms, Chemin-Lerner norms.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "zmflow/errors.hpp"
#include "zmflow/filter_bank.hpp"

namespace zm {

/// The two computable Lebesgue exponents: grid quadrature (p = 2) and grid
/// maximum (p = inf).
enum class Lebesgue { L2, Linf };

struct BesovParams {
    double s = 0.0;
    Lebesgue p = Lebesgue::Linf;
    double r = 1.0; // summation exponent in [1, inf]; infinity() for sup
    bool homogeneous = false;
};

inline double infinite_exponent() { return std::numeric_limits<double>::infinity(); }

namespace detail {

inline double block_lp(const Grid& g, const std::vector<double>& tab,
                       const SpectralField& hat, Lebesgue p) {
    SpectralField filtered(g);
    bool any = false;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        filtered[i] = tab[i] * hat[i];
        any = any || (tab[i] != 0.0 && (hat[i].real() != 0.0 || hat[i].imag() != 0.0));
    }
    if (!any) return 0.0;
    if (p == Lebesgue::L2)
        return std::sqrt(g.volume()) * filtered.coeff_norm();
    return to_physical(filtered).max_abs();
}

inline double lr_aggregate(const std::vector<double>& terms, double r) {
    if (std::isinf(r)) {
        double m = 0.0;
        for (double t : terms) m = std::max(m, t);
        return m;
    }
    double s = 0.0;
    for (double t : terms) s += std::pow(t, r);
    return std::pow(s, 1.0 / r);
}

} // namespace detail

/// Per-block L^p norms ||Delta_j f||_{Lp}. Indexed from j = -1 (inhomogeneous)
/// or j = bank.j_min_homogeneous() (homogeneous).
inline std::vector<double> block_lp_norms(const DyadicFilterBank& bank,
                                          const ScalarField& f, Lebesgue p,
                                          bool homogeneous = false) {
    require_same_grid(bank.grid(), f.grid(), "block_lp_norms");
    if (!f.finite()) throw DataError("block_lp_norms: field has non-finite values");
    const SpectralField hat = to_spectral(f);
    std::vector<double> out;
    if (homogeneous) {
        for (int j = bank.j_min_homogeneous(); j <= bank.j_max(); ++j)
            out.push_back(detail::block_lp(bank.grid(), bank.homogeneous_multiplier(j), hat, p));
    } else {
        for (int j = -1; j <= bank.j_max(); ++j)
            out.push_back(detail::block_lp(bank.grid(), bank.block_multiplier(j), hat, p));
    }
    return out;
}

/// Same for a vector field; the block L^p norm is taken of the pointwise
/// Euclidean magnitude (p = inf) or of the componentwise l2 sum (p = 2).
inline std::vector<double> block_lp_norms(const DyadicFilterBank& bank,
                                          const VectorField& u, Lebesgue p,
                                          bool homogeneous = false) {
    require_same_grid(bank.grid(), u.grid(), "block_lp_norms");
    const Grid& g = bank.grid();
    std::vector<SpectralField> hats;
    for (int a = 0; a < g.dim(); ++a) {
        if (!u.comp(a).finite()) throw DataError("block_lp_norms: field has non-finite values");
        hats.push_back(to_spectral(u.comp(a)));
    }
    const int j_lo = homogeneous ? bank.j_min_homogeneous() : -1;
    std::vector<double> out;
    for (int j = j_lo; j <= bank.j_max(); ++j) {
        const auto& tab = homogeneous ? bank.homogeneous_multiplier(j) : bank.block_multiplier(j);
        if (p == Lebesgue::L2) {
            double s = 0.0;
            for (int a = 0; a < g.dim(); ++a) {
                const double c = detail::block_lp(g, tab, hats[static_cast<std::size_t>(a)], p);
                s += c * c;
            }
            out.push_back(std::sqrt(s));
        } else {
            std::vector<ScalarField> comps;
            for (int a = 0; a < g.dim(); ++a)
                comps.push_back(to_physical(bank.apply(tab, hats[static_cast<std::size_t>(a)])));
            double m = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                double s = 0.0;
                for (int a = 0; a < g.dim(); ++a)
                    s += comps[static_cast<std::size_t>(a)][i] * comps[static_cast<std::size_t>(a)][i];
                m = std::max(m, s);
            }
            out.push_back(std::sqrt(m));
        }
    }
    return out;
}

namespace detail {

template <typename FieldT>
inline double besov_norm_impl(const DyadicFilterBank& bank, const FieldT& f,
                              const BesovParams& prm) {
    if (prm.r < 1.0) throw ParameterError("besov_norm: r must be >= 1");
    const int j_lo = prm.homogeneous ? bank.j_min_homogeneous() : -1;
    const std::vector<double> norms = block_lp_norms(bank, f, prm.p, prm.homogeneous);
    std::vector<double> weighted(norms.size());
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const int j = j_lo + static_cast<int>(i);
        weighted[i] = std::pow(2.0, prm.s * j) * norms[i];
    }
    return lr_aggregate(weighted, prm.r);
}

} // namespace detail

/// ||f||_{B^s_{p,r}} over the resolved blocks. Homogeneous norms require a
/// mean-zero field.
inline double besov_norm(const DyadicFilterBank& bank, const ScalarField& f,
                         const BesovParams& prm) {
    if (prm.homogeneous) {
        const double l2 = f.l2_norm();
        if (l2 > 0.0 && std::abs(f.mean()) > 1e-12 * l2)
            throw PreconditionError("besov_norm: homogeneous norm of non-mean-zero field");
    }
    return detail::besov_norm_impl(bank, f, prm);
}

inline double besov_norm(const DyadicFilterBank& bank, const VectorField& u,
                         const BesovParams& prm) {
    if (prm.homogeneous) {
        for (int a = 0; a < u.dim(); ++a) {
            const double l2 = u.comp(a).l2_norm();
            if (l2 > 0.0 && std::abs(u.comp(a).mean()) > 1e-12 * l2)
                throw PreconditionError("besov_norm: homogeneous norm of non-mean-zero field");
        }
    }
    return detail::besov_norm_impl(bank, u, prm);
}

/// Time-aggregated per-block norms for the Chemin-Lerner norm
/// || 2^{js} ||Delta_j u||_{L^q_T(L^p)} ||_{l^r}. The first push records the
/// t = 0 sample (its dt is ignored); each later push advances time by dt and
/// integrates trapezoidally (q = 1, 2) or keeps a running max (q = inf).
class CheminLernerAccumulator {
public:
    CheminLernerAccumulator(const DyadicFilterBank& bank, double q,
                            Lebesgue p = Lebesgue::Linf, bool homogeneous = false)
        : bank_(&bank), q_(q), p_(p), homogeneous_(homogeneous) {
        if (!(q == 1.0 || q == 2.0 || std::isinf(q)))
            throw ParameterError("CheminLernerAccumulator: q must be 1, 2 or inf");
    }

    void push(const ScalarField& f, double dt) {
        const std::vector<double> cur = block_lp_norms(*bank_, f, p_, homogeneous_);
        if (samples_ == 0) {
            agg_.assign(cur.size(), 0.0);
            if (std::isinf(q_)) agg_ = cur;
            prev_ = cur;
            time_ = 0.0;
        } else {
            if (!(dt > 0.0)) throw ParameterError("CheminLernerAccumulator: dt must be positive");
            for (std::size_t i = 0; i < cur.size(); ++i) {
                if (std::isinf(q_))
                    agg_[i] = std::max(agg_[i], cur[i]);
                else if (q_ == 1.0)
                    agg_[i] += 0.5 * dt * (prev_[i] + cur[i]);
                else
                    agg_[i] += 0.5 * dt * (prev_[i] * prev_[i] + cur[i] * cur[i]);
            }
            prev_ = cur;
            time_ += dt;
        }
        ++samples_;
    }

    /// Elapsed time T of the accumulated window.
    double time() const { return time_; }
    int samples() const { return samples_; }
    double q() const { return q_; }

    /// Per-block time aggregate ||Delta_j u||_{L^q_T(L^p)}, index from j_lo().
    std::vector<double> block_aggregates() const {
        if (samples_ == 0) throw StateError("CheminLernerAccumulator: empty accumulator");
        std::vector<double> out(agg_.size());
        for (std::size_t i = 0; i < agg_.size(); ++i)
            out[i] = (q_ == 2.0) ? std::sqrt(agg_[i]) : agg_[i];
        return out;
    }

    int j_lo() const { return homogeneous_ ? bank_->j_min_homogeneous() : -1; }

private:
    const DyadicFilterBank* bank_;
    double q_;
    Lebesgue p_;
    bool homogeneous_;
    int samples_ = 0;
    double time_ = 0.0;
    std::vector<double> agg_;
    std::vector<double> prev_;
};

/// The Chemin-Lerner norm of the accumulated window for indices (s, r).
inline double chemin_lerner_norm(const CheminLernerAccumulator& acc, double s, double r) {
    if (r < 1.0) throw ParameterError("chemin_lerner_norm: r must be >= 1");
    const std::vector<double> blocks = acc.block_aggregates();
    std::vector<double> weighted(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const int j = acc.j_lo() + static_cast<int>(i);
        weighted[i] = std::pow(2.0, s * j) * blocks[i];
    }
    return detail::lr_aggregate(weighted, r);
}

} // namespace zm
