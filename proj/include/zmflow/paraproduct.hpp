// paraproduct.hpp -- Bony decomposition and the transport commutator.
#pragma once

#include <vector>

#include "zmflow/filter_bank.hpp"
#include "zmflow/spectral.hpp"

namespace zm {

/// T_u v = sum_{j} (sum_{j' <= j-2} Delta_{j'} u) Delta_j v, dealiased.
/// The inner partial sums make T_uv + T_vu + R(u,v) an exact split of uv.
inline ScalarField paraproduct(const DyadicFilterBank& bank, const ScalarField& u,
                               const ScalarField& v) {
    require_same_grid(u.grid(), v.grid(), "paraproduct");
    require_same_grid(bank.grid(), u.grid(), "paraproduct");
    const Grid& g = u.grid();

    const SpectralField uhat = to_spectral(u);
    const SpectralField vhat = to_spectral(v);

    // partial sums of u up to j-2, built incrementally
    ScalarField partial(g);
    ScalarField acc(g);
    for (int j = 1; j <= bank.j_max(); ++j) {
        partial += to_physical(bank.apply(bank.block_multiplier(j - 2), uhat));
        const ScalarField vj = to_physical(bank.apply(bank.block_multiplier(j), vhat));
        acc += pointwise(partial, vj);
    }
    return dealias(acc);
}

/// R(u, v) = sum_{|j-j'| <= 1} Delta_j u Delta_{j'} v, dealiased.
inline ScalarField remainder(const DyadicFilterBank& bank, const ScalarField& u,
                             const ScalarField& v) {
    require_same_grid(u.grid(), v.grid(), "remainder");
    require_same_grid(bank.grid(), u.grid(), "remainder");
    const Grid& g = u.grid();

    const SpectralField uhat = to_spectral(u);
    const SpectralField vhat = to_spectral(v);

    std::vector<ScalarField> ub, vb;
    for (int j = -1; j <= bank.j_max(); ++j) {
        ub.push_back(to_physical(bank.apply(bank.block_multiplier(j), uhat)));
        vb.push_back(to_physical(bank.apply(bank.block_multiplier(j), vhat)));
    }
    ScalarField acc(g);
    const int nb = bank.j_max() + 2;
    for (int a = 0; a < nb; ++a)
        for (int b = std::max(0, a - 1); b <= std::min(nb - 1, a + 1); ++b)
            acc += pointwise(ub[static_cast<std::size_t>(a)], vb[static_cast<std::size_t>(b)]);
    return dealias(acc);
}

/// Commutator [v., Delta_j] grad f = v.grad(Delta_j f) - Delta_j(v.grad f),
/// each term spectral with dealiased products.
inline ScalarField commutator_transport(const DyadicFilterBank& bank, const VectorField& v,
                                        const ScalarField& f, int j) {
    require_same_grid(v.grid(), f.grid(), "commutator_transport");
    require_same_grid(bank.grid(), f.grid(), "commutator_transport");
    const ScalarField fj = dyadic_block(bank, f, j);
    const ScalarField term1 = advect(v, fj);
    const ScalarField term2 = dyadic_block(bank, advect(v, f), j);
    return term1 - term2;
}

} // namespace zm
