#pragma once

#include "lie2coh/grp.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace l2c {

// An element of the nerve G_p of G ⋊ H ⇉ H: composable arrows (g_a, h_a),
// a = 0..p−1, stored as (g_0, …, g_{p−1}; h) with h the source of the last one.
// Arrow a has source h·i(g_{p−1}⋯g_{a+1}); arrow a+1 composes before arrow a.
struct NerveElem {
    std::vector<MatJ> g;
    MatJ h;
    int p() const { return static_cast<int>(g.size()); }
};

// A point of G_p^q × G^r.
struct GroupPoint {
    std::vector<NerveElem> gammas;
    std::vector<MatJ> f;
};

// Cochain on G_p^q × G^r, W-valued for r ≥ 1 and V-valued for r = 0.
struct GroupCochain {
    int p = 0, q = 0, r = 0;
    int dim = 0;
    std::function<VecJ(const GroupPoint&)> eval;

    VecJ operator()(const GroupPoint& pt) const { return eval(pt); }
};

// Nerve helpers, exposed for tests.
MatJ nerve_source(const GroupXMod& x, const NerveElem& e, int a);  // source of arrow a
MatJ nerve_target(const GroupXMod& x, const NerveElem& e);         // t_p: target of arrow 0, h itself for p = 0
NerveElem nerve_face(const GroupXMod& x, const NerveElem& e, int k);
NerveElem nerve_mul(const GroupXMod& x, const NerveElem& a, const NerveElem& b);  // arrowwise in G ⋊ H
// G-component of the product of row-0 arrows of columns [from, to)
MatJ row0_product_g(const GroupXMod& x, const std::vector<NerveElem>& cols, int from, int to);

enum class GroupDiff { delta, partial, deltaPrime, delta1, Delta, Delta2q, Delta2p };

struct Signature {
    int p = 0, q = 0, r = 0;
    bool operator==(const Signature&) const = default;
};

Signature group_diff_target(GroupDiff kind, const Signature& s);  // throws std::invalid_argument

// Value of (kind c) at pt; pt must have the target signature of kind.
VecJ group_cochain_diff(const GroupTwoRep& rep, GroupDiff kind, const GroupCochain& c, const GroupPoint& pt);
GroupCochain group_cochain_apply(const GroupTwoRep& rep, GroupDiff kind, const GroupCochain& c);

GroupCochain zero_cochain(const GroupTwoRep& rep, const Signature& s);
GroupCochain operator+(const GroupCochain& a, const GroupCochain& b);
GroupCochain operator-(const GroupCochain& a, const GroupCochain& b);
GroupCochain scaled(double s, const GroupCochain& a);

GroupPoint sample_point(const GroupXMod& x, const Signature& s, Rng& rng);
// Normalized (vanishes as soon as some f_k is the unit) random smooth cochain
// built from polynomials in the entries.
GroupCochain random_group_cochain(const GroupTwoRep& rep, const Signature& s, Rng& rng);

// Max residual over samples of an identity a = b between cochains of equal signature.
double sampled_residual(const GroupXMod& x, const GroupCochain& a, const GroupCochain& b, int samples,
                        std::uint64_t seed);

// (−1)^r(δ∂ − ∂δ) against Δδ₁ − δ₁Δ (the δ₁Δ term only for r ≥ 1)
double relation_star(const GroupTwoRep& rep, const GroupCochain& w, int samples, std::uint64_t seed);
// ∂Δ + Δ∂ against Δ₂^q δ₁, for r = 1
double relation_iv(const GroupTwoRep& rep, const GroupCochain& w, int samples, std::uint64_t seed);
// δΔ + Δδ against Δ₂^p δ₁, for r = 1
double relation_v(const GroupTwoRep& rep, const GroupCochain& w, int samples, std::uint64_t seed);

// (ω₀, ω₁, α, φ̂) of a Lie 2-group 2-cocycle.
struct GpTwoCocycle {
    std::function<VecJ(const MatJ&, const MatJ&)> omega0;  // H × H → V
    std::function<VecJ(const MatJ&, const MatJ&)> omega1;  // G × G → W
    std::function<VecJ(const MatJ&, const MatJ&)> alpha;   // (h; g) ↦ W
    std::function<VecJ(const MatJ&)> phihat;               // G → V
};

GpTwoCocycle zero_gp_cocycle(const GroupTwoRep& rep);
// Entries "eq i" … "eq vii".
ResidualReport gp2cocycle_residuals(const GroupTwoRep& rep, const GpTwoCocycle& c, int samples, std::uint64_t seed);

// R_x: differentiate the first G slot (first G_p slot when r = 0) along exp(τx).
GroupCochain van_est_R(const GroupXMod& x, const Eigen::VectorXd& direction, const GroupCochain& c);
// Σ_σ Σ_ϱ |σ||ϱ| R_{ξ_σ(q)}⋯R_{ξ_σ(1)} R_{x_ϱ(r)}⋯R_{x_ϱ(1)} ω at the empty point; q + r ≤ 3.
Eigen::VectorXd van_est_phi(const GroupXMod& x, const GroupCochain& c, const std::vector<Eigen::VectorXd>& xis,
                            const std::vector<Eigen::VectorXd>& xs);

}  // namespace l2c
