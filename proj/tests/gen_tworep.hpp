#pragma once

#include "gen_lie2.hpp"
#include "lie2coh/tworep.hpp"

namespace testsupport {

using l2c::TwoRep;

// Representation of h through h / (span(extra) + [h,h]).
inline Representation random_rep_killing_vectors(Gen& g, const l2c::LieAlgebra& h, const Mat& extra, int d) {
    std::vector<Vec> kill;
    for (int i = 0; i < h.dim(); ++i)
        for (int j = i + 1; j < h.dim(); ++j) kill.push_back(h.bracket_basis(i, j));
    for (int c = 0; c < extra.cols(); ++c) kill.push_back(extra.col(c));
    Mat kmat = kill.empty() ? l2c::zeros(h.dim(), 0) : l2c::from_columns(kill, h.dim());
    auto ann = l2c::rank_and_kernel(Mat(kmat.transpose()));
    auto fam = commuting_family(g, d, static_cast<int>(ann.kernel.size()));
    Representation r = Representation::trivial(h, d);
    for (int i = 0; i < h.dim(); ++i)
        for (size_t k = 0; k < ann.kernel.size(); ++k) r.action[static_cast<size_t>(i)] += ann.kernel[k](i) * fam[k];
    return r;
}

// φ = 0, ρ1 = 0, both object actions vanish on μ(g).
inline TwoRep random_split_rep(Gen& g, const CrossedModuleAlg& x, int maxdim) {
    int dw = g.range(0, maxdim), dv = g.range(0, maxdim);
    TwoRep r = l2c::trivial_two_rep(x, l2c::TwoVectorSpace{dw, dv, l2c::zeros(dv, dw)});
    r.rho0W = random_rep_killing_vectors(g, x.h, x.mu, dw);
    r.rho0V = random_rep_killing_vectors(g, x.h, x.mu, dv);
    return r;
}

inline TwoRep direct_sum_rep(const TwoRep& a, const TwoRep& b) {
    const int dw = a.dimW() + b.dimW(), dv = a.dimV() + b.dimV();
    Mat phi = l2c::zeros(dv, dw);
    phi.topLeftCorner(a.dimV(), a.dimW()) = a.phi();
    phi.bottomRightCorner(b.dimV(), b.dimW()) = b.phi();
    TwoRep r{a.source, l2c::TwoVectorSpace{dw, dv, phi}, {}, l2c::direct_sum(a.rho0W, b.rho0W),
             l2c::direct_sum(a.rho0V, b.rho0V)};
    for (int i = 0; i < a.source.dg(); ++i) {
        Mat m = l2c::zeros(dw, dv);
        m.topLeftCorner(a.dimW(), a.dimV()) = a.r1_basis(i);
        m.bottomRightCorner(b.dimW(), b.dimV()) = b.r1_basis(i);
        r.rho1.push_back(m);
    }
    return r;
}

// A valid 2-representation of a random crossed module.
inline TwoRep random_two_rep(Gen& g, int maxdim_h = 3, int maxdim_v = 2) {
    int kind = g.range(0, 3);
    if (kind == 0) {
        l2c::GlPhi gp = l2c::gl_phi(random_two_vector(g, 2));
        return l2c::tautological_rep(gp);
    }
    CrossedModuleAlg x = random_quadruple_xmod(g, maxdim_h, maxdim_v);
    if (kind == 1) return l2c::adjoint_rep(x);
    if (kind == 2) return random_split_rep(g, x, 2);
    return direct_sum_rep(l2c::adjoint_rep(x), random_split_rep(g, x, 1));
}

inline bool dims_within(const TwoRep& r, int maxdim) {
    return r.source.dg() <= maxdim && r.source.dh() <= maxdim && r.dimW() <= maxdim && r.dimV() <= maxdim;
}

// Valid 2-representation with dim g, dim h, dim W, dim V all ≤ maxdim.
inline TwoRep random_small_context(Gen& g, int maxdim = 2) {
    for (;;) {
        TwoRep r = random_two_rep(g, maxdim, maxdim);
        if (dims_within(r, maxdim)) return r;
    }
}

}  // namespace testsupport
