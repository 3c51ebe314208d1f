#pragma once

#include "lie2coh/exterior.hpp"
#include "lie2coh/tworep.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace l2c {

// C^{p,q}_r = Λ^q g_p* ⊗ Λ^r g* ⊗ W, with V in place of W when r = 0.
struct LatticeIndex {
    int p = 0, q = 0, r = 0;
    int degree() const { return p + q + r; }
    auto operator<=>(const LatticeIndex&) const = default;
};

// values at (qi * binom(dim g, r) + ri) * coef + c, tuples in increasing lex order
struct LatticeCochain {
    LatticeIndex index;
    Vec values;
};

enum class DiffKind { DeltaR, Delta1, Partial, DeltaK };

// Sign of each summand of ∇ indexed by (q mod 2, r mod 2); δ^{(r)} always enters with +1.
// Δ_k has its own table per k mod 4.
struct NablaSigns {
    using Table = std::array<std::array<int, 2>, 2>;
    Table delta1, partial;
    std::array<Table, 4> Delta;

    int delta_k(int k, int q, int r) const { return Delta[static_cast<size_t>(k % 4)][q % 2][r % 2]; }

    // δ^{(r)} + (-1)^q δ_(1) + (-1)^{q+r} ∂ + (-1)^r Σ Δ_k, read literally
    static NablaSigns literal();
    // as literal, except Δ_k enters with (-1)^{q(k+1) + r + k(k-1)/2}; agrees with literal for k = 1
    static NablaSigns frozen();
    bool operator==(const NablaSigns&) const = default;
};

struct LatticeOptions {
    // ∇_{n+1} ∇_n = 0 is asserted for n ≤ check_bound when the lattice is built; -1 skips it.
    int check_bound = 1;
    NablaSigns signs = NablaSigns::frozen();
};

class Lattice {
public:
    explicit Lattice(TwoRep rep, LatticeOptions opts = {});

    const TwoRep& rep() const { return rep_; }
    const CrossedModuleAlg& xmod() const { return rep_.source; }
    const NablaSigns& signs() const { return opts_.signs; }

    Index cochain_dim(LatticeIndex idx) const;
    Index coef_dim(int r) const { return r > 0 ? rep_.dimW() : rep_.dimV(); }
    // all (p,q,r) with p+q+r = n, ordered by p then q
    static std::vector<LatticeIndex> components(int n);
    Index total_dim(int n) const;
    Index offset(int n, LatticeIndex idx) const;

    static LatticeIndex target(DiffKind kind, LatticeIndex idx, int k = 0);
    Mat component_differential(DiffKind kind, LatticeIndex idx, int k = 0) const;
    Mat nabla(int n) const;

    Vec assemble(int n, const std::vector<LatticeCochain>& parts) const;
    LatticeCochain component_of(int n, const Vec& total, LatticeIndex idx) const;
    LatticeCochain zero_cochain(LatticeIndex idx) const;
    // ω(ξ_1..ξ_q; z_1..z_r) on arbitrary vectors of g_p and g
    Vec evaluate(const LatticeCochain& c, const std::vector<Vec>& xi, const std::vector<Vec>& z) const;

    const NerveAlgebra& nerve(int p) const;
    const SimplicialMaps& faces(int p) const;

private:
    Mat delta_r(LatticeIndex idx) const;
    Mat delta_1(LatticeIndex idx) const;
    Mat partial(LatticeIndex idx) const;
    Mat delta_k(LatticeIndex idx, int k) const;
    // ρ^{(r)}(e_i) on Λ^r g* ⊗ W, or ρ0_V(e_i) when r = 0
    const std::vector<Mat>& rho_r(int r) const;

    TwoRep rep_;
    LatticeOptions opts_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<NerveAlgebra>> nerves_;
    mutable std::map<int, std::unique_ptr<SimplicialMaps>> faces_;
    mutable std::map<int, std::unique_ptr<std::vector<Mat>>> rho_r_;
    mutable std::map<int, std::unique_ptr<Mat>> nabla_;
};

struct CohomologyResult {
    Index dim = 0;
    std::vector<Vec> representatives;  // kernel vectors completing the image
};

CohomologyResult total_cohomology(const Lattice& lat, int n);

// dim {v : ρ0_V(y)v = 0, ρ1(x)v = 0}
Index h0_invariants(const TwoRep& r);

struct H1Dims {
    Index der = 0, inn = 0, out = 0;
};

// Derivations of g ⊕_L h into W ⊕ V for ρ̄ that are maps of 2-vector spaces, modulo inner ones.
H1Dims h1_der_inn(const TwoRep& r);

// Ω^n_tot = ⊕_{p+q=n, q≥1} Λ^q g_p*, d = δ + (-1)^q ∂, trivial coefficients.
std::vector<LatticeIndex> trivial_components(int n);
Index trivial_total_dim(const CrossedModuleAlg& x, int n);
Index trivial_offset(const CrossedModuleAlg& x, int n, int p);
Mat trivial_total_complex(const CrossedModuleAlg& x, int n);

}  // namespace l2c
