#pragma once

#include "lie2coh/liealg.hpp"
#include "lie2coh/numeric.hpp"

#include <vector>

namespace l2c {

// μ : g → h with h acting on g.  action.action[i] is L_{e_i} on g.
struct CrossedModuleAlg {
    LieAlgebra g;
    LieAlgebra h;
    Mat mu;  // dim h × dim g
    Representation action;

    int dg() const { return g.dim(); }
    int dh() const { return h.dim(); }
    Mat L(const Vec& y) const { return action.act(y); }
    const Mat& L_basis(int i) const { return action.action[static_cast<size_t>(i)]; }
};

// A Lie algebra k as the crossed module 0 → k.
CrossedModuleAlg xmod_from_algebra(const LieAlgebra& k);

struct TwoVectorSpace {
    int dimW = 0;
    int dimV = 0;
    Mat phi;  // dimV × dimW
};

Diagnostics validate_crossed_module(const CrossedModuleAlg& x);

// g ⊕_L h, basis (g block, h block).
LieAlgebra lie2_arrows(const CrossedModuleAlg& x);

// V ⊕ I → h with g basis (V block, I block); I spanned by the listed basis vectors of h.
CrossedModuleAlg xmod_from_quadruple(const LieAlgebra& h, const std::vector<int>& ideal_basis, int dimV,
                                     const Representation& rho);

struct StructureReport {
    Mat orbit_basis;  // columns spanning μ(g) ⊆ h
    bool orbit_is_ideal = false;
    Mat isotropy_basis;  // columns spanning ker μ ⊆ g
    bool isotropy_abelian = false;
    bool isotropy_central = false;
    std::vector<Mat> induced_action;  // h on ker μ, in isotropy_basis coordinates
    bool induced_well_defined = false;
};

StructureReport structure_report(const CrossedModuleAlg& x);

// g_p = g^p ⊕ h, basis (x⁰ block, …, x^{p-1} block, y block).
struct NerveAlgebra {
    int p = 0;
    LieAlgebra underlying;
    Index dim() const { return underlying.dim(); }
};

NerveAlgebra nerve_algebra(const CrossedModuleAlg& x, int p);

struct SimplicialMaps {
    std::vector<Mat> faces;  // ∂_k : g_{p+1} → g_p, k = 0..p+1
    Mat final_target;        // t̂_p : g_p → h
};

SimplicialMaps simplicial_maps(const CrossedModuleAlg& x, int p);
Mat final_target(const CrossedModuleAlg& x, int p);

// gl(φ): g = Hom(V,W) with E_{ij} at index i*dimV + j, h = {(F,f) : φF = fφ}
// in the coordinates of gl0_chart (ambient coordinates: F row-major, then f).
struct GlPhi {
    TwoVectorSpace space;
    KernelChart gl0_chart;
    CrossedModuleAlg xmod;

    // ambient (F,f) ↔ gl(φ)_0 coordinates
    Vec coords0(const Mat& F, const Mat& f) const;
    std::pair<Mat, Mat> pair0(const Vec& y) const;
    Vec coords1(const Mat& A) const;
    Mat matrix1(const Vec& x) const;
};

GlPhi gl_phi(const TwoVectorSpace& v);

}  // namespace l2c
