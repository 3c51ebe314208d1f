#pragma once

#include "lie2coh/expm.hpp"
#include "lie2coh/lie2.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace l2c {

using MatJ = MatT<Jet>;
using VecJ = VecT<Jet>;
using Rng = std::mt19937_64;

// GL(φ)_1 inside Hom(V,W); φ is dimV × dimW.
template <class T>
MatT<T> glphi_mul(const MatT<T>& phi, const MatT<T>& a, const MatT<T>& b) {
    return a + b + a * (phi * b);
}

template <class T>
MatT<T> glphi_inv(const MatT<T>& phi, const MatT<T>& a) {
    return -(a * inverse<T>(identity_t<T>(phi.rows()) + phi * a));
}

// Δ A = (I + Aφ, I + φA)
template <class T>
std::pair<MatT<T>, MatT<T>> glphi_delta(const MatT<T>& phi, const MatT<T>& a) {
    return {identity_t<T>(phi.cols()) + a * phi, identity_t<T>(phi.rows()) + phi * a};
}

// A^{(F,f)} = F⁻¹ A f
template <class T>
MatT<T> glphi_act(const MatT<T>& a, const MatT<T>& F, const MatT<T>& f) {
    return inverse<T>(F) * a * f;
}

// A Σ_{n<terms} (φA)^n / (n+1)!
template <class T>
MatT<T> glphi1_exp(const MatT<T>& phi, const MatT<T>& a, int terms) {
    if (terms < 1) throw std::invalid_argument("glphi1_exp: need at least one term");
    const Eigen::Index n = phi.rows();
    MatT<T> pa = phi * a;
    MatT<T> term = identity_t<T>(n);
    MatT<T> sum = identity_t<T>(n);
    for (int k = 1; k < terms; ++k) {
        term = (term * pa) * T(1.0 / (k + 1));
        sum += term;
    }
    return a * sum;
}

// A crossed module of matrix groups given by closures.  Elements are matrices
// of fixed shape; every map accepts jets so that derivatives come out exactly.
struct GroupXMod {
    std::string name;
    Eigen::MatrixXd unit_g, unit_h;
    std::function<MatJ(const MatJ&, const MatJ&)> mul_g, mul_h;
    std::function<MatJ(const MatJ&)> inv_g, inv_h;
    std::function<MatJ(const MatJ&)> i;
    std::function<MatJ(const MatJ&, const MatJ&)> act;  // (g, h) ↦ g^h, a right action
    // Lie algebra coordinates → one-parameter subgroup value
    std::function<MatJ(const VecJ&)> exp_g, exp_h;
    // rows: linear coordinates on the tangent space, applied to the row-major
    // entries of (element − unit)
    Eigen::MatrixXd chart_g, chart_h;
    std::function<Eigen::MatrixXd(Rng&)> sample_g, sample_h;

    int dim_g() const { return static_cast<int>(chart_g.rows()); }
    int dim_h() const { return static_cast<int>(chart_h.rows()); }
};

GroupXMod glphi_group(const TwoVectorSpace& v);
// G = R^ng, H = R^nh as column vectors under addition, i(g) = mu g, trivial action.
GroupXMod abelian_group_xmod(int ng, int nh, const Eigen::MatrixXd& mu);

// Row-major entries of a matrix as a column vector.
template <class T>
VecT<T> row_major(const MatT<T>& m) {
    VecT<T> v(m.size());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
    return v;
}

// A 2-representation G → GL(φ): ρ₁ : G → GL(φ)_1, ρ₀ = (ρ₀W, ρ₀V) : H → GL(φ)_0.
struct GroupTwoRep {
    GroupXMod x;
    Eigen::MatrixXd phi;  // dimV × dimW
    std::function<MatJ(const MatJ&)> rho1, rho0W, rho0V;

    int dimW() const { return static_cast<int>(phi.cols()); }
    int dimV() const { return static_cast<int>(phi.rows()); }
};

// GL(φ) acting on (W, V) through the identity.
GroupTwoRep glphi_identity_rep(const TwoVectorSpace& v);
// ρ₁ = 0, ρ₀ = identity
GroupTwoRep trivial_group_rep(const GroupXMod& x, const Eigen::MatrixXd& phi);

struct ResidualReport {
    std::vector<std::pair<std::string, double>> entries;

    double max() const;
    double at(const std::string& name) const;
    bool pass(double tol = 1e-9) const { return max() <= tol; }
};

ResidualReport group_xmod_validate_sampled(const GroupXMod& x, int samples, std::uint64_t seed);
ResidualReport group_rep_validate_sampled(const GroupTwoRep& r, int samples, std::uint64_t seed);

// Crossed module of Lie algebras with double entries, in the bases of chart_g, chart_h.
struct FloatXModAlg {
    std::vector<Eigen::MatrixXd> ad_g, ad_h;  // column b of ad[a] is [e_a, e_b]
    Eigen::MatrixXd mu;
    std::vector<Eigen::MatrixXd> action;      // action[k] is L_{e_k} on g
};

FloatXModAlg lie_functor_extract(const GroupXMod& x);
// Snap entries to nearby rationals (denominator ≤ 64); throws if one is not within tol.
CrossedModuleAlg rationalize(const FloatXModAlg& f, double tol = 1e-6);
double max_deviation(const FloatXModAlg& f, const CrossedModuleAlg& x);

// Curvature of the induced representation up to homotopy built from the
// splitting h_{(g,h)}(h,v) = (g,h;0,v) of the semidirect VB-groupoid.  Returns
// the fibre discrepancy of h_{(g₂g₁,h)} against h_{(g₁,hi(g₂))}∘h_{(g₂,h)},
// together with the mismatch of the base arrows and of composability.
Eigen::VectorXd induced_curvature(const GroupTwoRep& r, const Eigen::MatrixXd& g1, const Eigen::MatrixXd& g2,
                                  const Eigen::MatrixXd& h, const Eigen::VectorXd& v);

double max_abs(const MatJ& m);  // constant terms only

}  // namespace l2c
