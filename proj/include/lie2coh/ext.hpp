#pragma once

#include "lie2coh/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace l2c {

// (ω₀, α, φ) in lattice coordinates. phimap lives at (1,1,0) on g₁ = g ⊕ h but only
// its g block is meaningful; make_cocycle zeroes the h block.
struct TwoCocycle {
    TwoRep rep;
    LatticeCochain omega0;  // (0,2,0)
    LatticeCochain alpha;   // (0,1,1)
    LatticeCochain phimap;  // (1,1,0)

    const CrossedModuleAlg& xmod() const { return rep.source; }
    Vec omega0_at(int i, int j) const;  // ω₀(e_i, e_j) ∈ V
    Vec alpha_at(int i, int a) const;   // α(e_i; x_a) ∈ W
    Mat phi_matrix() const;             // dimV × dim g, column a is φ(x_a)
    // ω₁(x_a, x_b) = ρ₁(x_b) φ(x_a) + α(μ x_a; x_b), column a * dim g + b
    Mat omega1_matrix() const;
};

TwoCocycle make_cocycle(const TwoRep& r, const Vec& omega0, const Vec& alpha, const Vec& phimap);
TwoCocycle zero_cocycle(const TwoRep& r);

// Degree-2 total cochain (ω₀, α, φ, ω₁, λ = 0, v = 0); ω₁ read off its i<j entries.
Vec pack_degree2(const Lattice& lat, const TwoCocycle& c);

// Equations labelled "eq i" .. "eq vi"; the other degree-3 components of ∇ get their own labels.
Diagnostics validate_cocycle(const Lattice& lat, const TwoCocycle& c);
Diagnostics validate_cocycle(const TwoCocycle& c);

struct InvalidCocycle : std::invalid_argument {
    Diagnostics diagnostics;
    explicit InvalidCocycle(Diagnostics d);
};

struct ExtensionResult {
    CrossedModuleAlg total;  // g ⊕ W → h ⊕ V in block coordinates when built from a cocycle
    Mat include1, include0;  // W → e₁, V → e₀
    Mat project1, project0;  // e₁ → g, e₀ → h
    Mat omega1;              // dimW × (dim g)², as TwoCocycle::omega1_matrix
};

struct Splitting {
    Mat sigma1;  // g → e₁
    Mat sigma0;  // h → e₀
};

ExtensionResult extension_from_cocycle(const TwoCocycle& c);
// Rows exact at both levels and the squares are crossed-module maps.
Diagnostics validate_extension(const ExtensionResult& e, const CrossedModuleAlg& base, const TwoVectorSpace& kernel);
Splitting canonical_splitting(const ExtensionResult& e);
std::pair<TwoRep, TwoCocycle> cocycle_from_extension(const ExtensionResult& e, const Splitting& s);

struct Coboundary {
    Mat lambda0;  // dimV × dim h
    Mat lambda1;  // dimW × dim g
};

// λ with c2 - c1 = ∇λ, or nullopt when the linear system is inconsistent.
std::optional<Coboundary> coboundary_solve(const TwoCocycle& c1, const TwoCocycle& c2);
// c + ∇λ, with v = 0
TwoCocycle add_coboundary(const TwoCocycle& c, const Coboundary& l);

// Linear-algebra count of (ω₀, α, φ) solutions modulo coboundaries.
struct ClassCount {
    Index cocycles = 0, coboundaries = 0, classes = 0;
};
ClassCount extension_class_count(const TwoRep& r);

// Trivial coefficients: omega ∈ Λ²h*, phi ∈ g₁* = (g ⊕ h)*.  Output g → h ⊕ Q.
Diagnostics validate_trivial_cocycle(const CrossedModuleAlg& x, const Vec& omega, const Vec& phi);
CrossedModuleAlg trivial_coeff_extension(const CrossedModuleAlg& x, const Vec& omega, const Vec& phi);

}  // namespace l2c
