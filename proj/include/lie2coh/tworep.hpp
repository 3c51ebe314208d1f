#pragma once

#include "lie2coh/lie2.hpp"

#include <vector>

namespace l2c {

struct TwoRep {
    CrossedModuleAlg source;
    TwoVectorSpace target;
    std::vector<Mat> rho1;  // per g basis vector, a dimW × dimV matrix
    Representation rho0W;   // h on W
    Representation rho0V;   // h on V

    int dimW() const { return target.dimW; }
    int dimV() const { return target.dimV; }
    const Mat& phi() const { return target.phi; }
    Mat r1(const Vec& x) const;
    const Mat& r1_basis(int i) const { return rho1[static_cast<size_t>(i)]; }
};

TwoRep trivial_two_rep(const CrossedModuleAlg& x, const TwoVectorSpace& v);

Diagnostics validate_two_rep(const TwoRep& r);

// Target 2-vector space μ : g → h.
TwoRep adjoint_rep(const CrossedModuleAlg& x);

// gl(φ) acting on φ itself: (F, f) ↦ (F, f), A ↦ A.
TwoRep tautological_rep(const GlPhi& gp);

// Honest representation of g ⊕_L h on W ⊕ V.
Representation bar_rho(const TwoRep& r);

// g ⊕ W → h ⊕ V with the blocks in that order.
CrossedModuleAlg semidirect_2alg(const CrossedModuleAlg& x, const TwoRep& r);

}  // namespace l2c
