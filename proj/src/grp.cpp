#include "lie2coh/grp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace l2c {

namespace {

double diff(const MatJ& a, const MatJ& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    double m = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a(i).value() - b(i).value()));
    return m;
}

MatJ block_diag(const MatJ& a, const MatJ& b) {
    MatJ m = zeros_t<Jet>(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

Eigen::MatrixXd uniform(Rng& rng, Eigen::Index r, Eigen::Index c, double s) {
    std::uniform_real_distribution<double> d(-s, s);
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = d(rng);
    return m;
}

// second mixed derivative in τ₀, τ₁
Eigen::MatrixXd d01(const MatJ& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.size(); ++i) out(i) = m(i).derivative({1, 1, 0, 0});
    return out;
}

Eigen::MatrixXd d0(const MatJ& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.size(); ++i) out(i) = m(i).derivative({1, 0, 0, 0});
    return out;
}

VecJ basis_curve(int dim, int a, int var, int nvars) {
    VecJ v(dim);
    for (int k = 0; k < dim; ++k) v(k) = Jet(0.0);
    v(a) = Jet::variable(var, nvars, Jet::kMaxOrder);
    return v;
}

Eigen::VectorXd chart(const Eigen::MatrixXd& c, const Eigen::MatrixXd& m) {
    return c * row_major<double>(m);
}

}  // namespace

double max_abs(const MatJ& m) {
    double out = 0.0;
    for (Eigen::Index i = 0; i < m.size(); ++i) out = std::max(out, std::abs(m(i).value()));
    return out;
}

GroupXMod glphi_group(const TwoVectorSpace& v) {
    const int dw = v.dimW, dv = v.dimV;
    GlPhi gl = gl_phi(v);
    const Eigen::MatrixXd phid = to_double(v.phi);
    const MatJ phi = lift<Jet>(phid);

    GroupXMod x;
    x.name = "GL(phi)";
    x.unit_g = Eigen::MatrixXd::Zero(dw, dv);
    x.unit_h = Eigen::MatrixXd::Identity(dw + dv, dw + dv);
    x.mul_g = [phi](const MatJ& a, const MatJ& b) { return glphi_mul<Jet>(phi, a, b); };
    x.inv_g = [phi](const MatJ& a) { return glphi_inv<Jet>(phi, a); };
    x.mul_h = [](const MatJ& a, const MatJ& b) { return MatJ(a * b); };
    x.inv_h = [](const MatJ& a) { return inverse<Jet>(a); };
    x.i = [phi](const MatJ& a) {
        auto [F, f] = glphi_delta<Jet>(phi, a);
        return block_diag(F, f);
    };
    x.act = [dw, dv](const MatJ& a, const MatJ& h) {
        return glphi_act<Jet>(a, MatJ(h.topLeftCorner(dw, dw)), MatJ(h.bottomRightCorner(dv, dv)));
    };
    x.exp_g = [phi, dw, dv](const VecJ& c) {
        MatJ a(dw, dv);
        for (int r = 0; r < dw; ++r)
            for (int s = 0; s < dv; ++s) a(r, s) = c(r * dv + s);
        return glphi1_exp<Jet>(phi, a, 20);
    };

    // gl(φ)_0 basis in ambient coordinates (F row-major, then f row-major)
    std::vector<Eigen::VectorXd> basis0;
    for (const auto& b : gl.gl0_chart.basis) basis0.push_back(to_double(Mat(b)));
    const int d0 = static_cast<int>(basis0.size());
    auto ambient_to_block = [dw, dv](int a) {
        const int n = dw + dv;
        if (a < dw * dw) return (a / dw) * n + a % dw;
        a -= dw * dw;
        return (dw + a / dv) * n + dw + a % dv;
    };
    x.exp_h = [basis0, dw, dv, d0](const VecJ& c) {
        MatJ F = zeros_t<Jet>(dw, dw), f = zeros_t<Jet>(dv, dv);
        for (int k = 0; k < d0; ++k) {
            const auto& b = basis0[static_cast<size_t>(k)];
            for (int a = 0; a < dw * dw; ++a)
                if (b(a) != 0.0) F(a / dw, a % dw) += c(k) * b(a);
            for (int a = 0; a < dv * dv; ++a)
                if (b(dw * dw + a) != 0.0) f(a / dv, a % dv) += c(k) * b(dw * dw + a);
        }
        return expm<Jet>(block_diag(F, f));
    };
    x.chart_g = Eigen::MatrixXd::Identity(dw * dv, dw * dv);
    x.chart_h = Eigen::MatrixXd::Zero(d0, (dw + dv) * (dw + dv));
    for (int k = 0; k < d0; ++k) x.chart_h(k, ambient_to_block(static_cast<int>(gl.gl0_chart.free[static_cast<size_t>(k)]))) = 1.0;

    x.sample_g = [phid, dw, dv](Rng& rng) {
        for (;;) {
            Eigen::MatrixXd a = uniform(rng, dw, dv, 0.5);
            Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dv, dv) + phid * a;
            if (std::abs(m.determinant()) > 0.2) return a;
        }
    };
    auto exp_h = x.exp_h;
    x.sample_h = [exp_h, d0](Rng& rng) {
        Eigen::MatrixXd c = uniform(rng, d0, 1, 0.4);
        VecJ cj(d0);
        for (int k = 0; k < d0; ++k) cj(k) = Jet(c(k, 0));
        return values<Jet>(exp_h(cj));
    };
    return x;
}

GroupXMod abelian_group_xmod(int ng, int nh, const Eigen::MatrixXd& mu) {
    if (mu.rows() != nh || mu.cols() != ng) throw std::invalid_argument("abelian_group_xmod: mu must be nh × ng");
    GroupXMod x;
    x.name = "abelian";
    x.unit_g = Eigen::MatrixXd::Zero(ng, 1);
    x.unit_h = Eigen::MatrixXd::Zero(nh, 1);
    x.mul_g = x.mul_h = [](const MatJ& a, const MatJ& b) { return MatJ(a + b); };
    x.inv_g = x.inv_h = [](const MatJ& a) { return MatJ(-a); };
    const MatJ m = lift<Jet>(mu);
    x.i = [m](const MatJ& g) { return MatJ(m * g); };
    x.act = [](const MatJ& g, const MatJ&) { return g; };
    x.exp_g = x.exp_h = [](const VecJ& c) { return MatJ(c); };
    x.chart_g = Eigen::MatrixXd::Identity(ng, ng);
    x.chart_h = Eigen::MatrixXd::Identity(nh, nh);
    x.sample_g = [ng](Rng& rng) { return uniform(rng, ng, 1, 1.0); };
    x.sample_h = [nh](Rng& rng) { return uniform(rng, nh, 1, 1.0); };
    return x;
}

GroupTwoRep glphi_identity_rep(const TwoVectorSpace& v) {
    const int dw = v.dimW, dv = v.dimV;
    GroupTwoRep r;
    r.x = glphi_group(v);
    r.phi = to_double(v.phi);
    r.rho1 = [](const MatJ& a) { return a; };
    r.rho0W = [dw](const MatJ& h) { return MatJ(h.topLeftCorner(dw, dw)); };
    r.rho0V = [dv](const MatJ& h) { return MatJ(h.bottomRightCorner(dv, dv)); };
    return r;
}

GroupTwoRep trivial_group_rep(const GroupXMod& x, const Eigen::MatrixXd& phi) {
    const int dw = static_cast<int>(phi.cols()), dv = static_cast<int>(phi.rows());
    GroupTwoRep r;
    r.x = x;
    r.phi = phi;
    r.rho1 = [dw, dv](const MatJ&) { return zeros_t<Jet>(dw, dv); };
    r.rho0W = [dw](const MatJ&) { return identity_t<Jet>(dw); };
    r.rho0V = [dv](const MatJ&) { return identity_t<Jet>(dv); };
    return r;
}

double ResidualReport::max() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, e.second);
    return m;
}

double ResidualReport::at(const std::string& name) const {
    for (const auto& e : entries)
        if (e.first == name) return e.second;
    throw std::out_of_range("ResidualReport: no entry " + name);
}

ResidualReport group_xmod_validate_sampled(const GroupXMod& x, int samples, std::uint64_t seed) {
    Rng rng(seed);
    double hom = 0, aut = 0, right = 0, equiv = 0, peiffer = 0, inv = 0;
    const MatJ eg = lift<Jet>(x.unit_g), eh = lift<Jet>(x.unit_h);
    for (int s = 0; s < samples; ++s) {
        MatJ g1 = lift<Jet>(x.sample_g(rng)), g2 = lift<Jet>(x.sample_g(rng));
        MatJ h1 = lift<Jet>(x.sample_h(rng)), h2 = lift<Jet>(x.sample_h(rng));
        hom = std::max(hom, diff(x.i(x.mul_g(g1, g2)), x.mul_h(x.i(g1), x.i(g2))));
        aut = std::max(aut, diff(x.act(x.mul_g(g1, g2), h1), x.mul_g(x.act(g1, h1), x.act(g2, h1))));
        right = std::max(right, diff(x.act(x.act(g1, h1), h2), x.act(g1, x.mul_h(h1, h2))));
        equiv = std::max(equiv, diff(x.i(x.act(g1, h1)), x.mul_h(x.mul_h(x.inv_h(h1), x.i(g1)), h1)));
        peiffer = std::max(peiffer, diff(x.act(g1, x.i(g2)), x.mul_g(x.mul_g(x.inv_g(g2), g1), g2)));
        inv = std::max({inv, diff(x.mul_g(g1, x.inv_g(g1)), eg), diff(x.mul_h(h1, x.inv_h(h1)), eh)});
    }
    return ResidualReport{{{"i homomorphism", hom},
                           {"action by automorphisms", aut},
                           {"right action", right},
                           {"equivariance", equiv},
                           {"Peiffer", peiffer},
                           {"inverses", inv}}};
}

ResidualReport group_rep_validate_sampled(const GroupTwoRep& r, int samples, std::uint64_t seed) {
    const GroupXMod& x = r.x;
    Rng rng(seed);
    const MatJ phi = lift<Jet>(r.phi);
    const MatJ iw = identity_t<Jet>(r.dimW()), iv = identity_t<Jet>(r.dimV());
    double r1 = 0, r0w = 0, r0v = 0, inter = 0, viv = 0, wiw = 0, eq = 0;
    for (int s = 0; s < samples; ++s) {
        MatJ g1 = lift<Jet>(x.sample_g(rng)), g2 = lift<Jet>(x.sample_g(rng));
        MatJ h1 = lift<Jet>(x.sample_h(rng)), h2 = lift<Jet>(x.sample_h(rng));
        r1 = std::max(r1, diff(r.rho1(x.mul_g(g1, g2)), glphi_mul<Jet>(phi, r.rho1(g1), r.rho1(g2))));
        r0w = std::max(r0w, diff(r.rho0W(x.mul_h(h1, h2)), MatJ(r.rho0W(h1) * r.rho0W(h2))));
        r0v = std::max(r0v, diff(r.rho0V(x.mul_h(h1, h2)), MatJ(r.rho0V(h1) * r.rho0V(h2))));
        inter = std::max(inter, diff(MatJ(phi * r.rho0W(h1)), MatJ(r.rho0V(h1) * phi)));
        viv = std::max(viv, diff(r.rho0V(x.i(g1)), MatJ(iv + phi * r.rho1(g1))));
        wiw = std::max(wiw, diff(r.rho0W(x.i(g1)), MatJ(iw + r.rho1(g1) * phi)));
        eq = std::max(eq, diff(r.rho1(x.act(g1, h1)), MatJ(inverse<Jet>(r.rho0W(h1)) * r.rho1(g1) * r.rho0V(h1))));
    }
    return ResidualReport{{{"rho1 homomorphism", r1},
                           {"rho0W homomorphism", r0w},
                           {"rho0V homomorphism", r0v},
                           {"phi intertwines rho0", inter},
                           {"rho0V(i(g)) = I + phi rho1(g)", viv},
                           {"rho0W(i(g)) = I + rho1(g) phi", wiw},
                           {"rho1 equivariance", eq}}};
}

FloatXModAlg lie_functor_extract(const GroupXMod& x) {
    const int dg = x.dim_g(), dh = x.dim_h();
    FloatXModAlg out;
    auto bracket = [](const auto& mul, const auto& inv, const MatJ& a, const MatJ& b) {
        return mul(mul(mul(a, b), inv(a)), inv(b));
    };
    out.ad_g.assign(static_cast<size_t>(dg), Eigen::MatrixXd::Zero(dg, dg));
    for (int a = 0; a < dg; ++a)
        for (int b = 0; b < dg; ++b) {
            MatJ k = bracket(x.mul_g, x.inv_g, x.exp_g(basis_curve(dg, a, 0, 2)), x.exp_g(basis_curve(dg, b, 1, 2)));
            out.ad_g[static_cast<size_t>(a)].col(b) = chart(x.chart_g, d01(k));
        }
    out.ad_h.assign(static_cast<size_t>(dh), Eigen::MatrixXd::Zero(dh, dh));
    for (int a = 0; a < dh; ++a)
        for (int b = 0; b < dh; ++b) {
            MatJ k = bracket(x.mul_h, x.inv_h, x.exp_h(basis_curve(dh, a, 0, 2)), x.exp_h(basis_curve(dh, b, 1, 2)));
            out.ad_h[static_cast<size_t>(a)].col(b) = chart(x.chart_h, d01(k));
        }
    out.mu = Eigen::MatrixXd::Zero(dh, dg);
    for (int a = 0; a < dg; ++a) out.mu.col(a) = chart(x.chart_h, d0(x.i(x.exp_g(basis_curve(dg, a, 0, 1)))));
    // the action is on the right, so L_y x = −∂s∂t (exp tx)^{exp sy}
    out.action.assign(static_cast<size_t>(dh), Eigen::MatrixXd::Zero(dg, dg));
    for (int k = 0; k < dh; ++k)
        for (int a = 0; a < dg; ++a) {
            MatJ m = x.act(x.exp_g(basis_curve(dg, a, 1, 2)), x.exp_h(basis_curve(dh, k, 0, 2)));
            out.action[static_cast<size_t>(k)].col(a) = -chart(x.chart_g, d01(m));
        }
    return out;
}

namespace {

Rational snap(double v, double tol) {
    for (long q = 1; q <= 64; ++q) {
        double p = std::round(v * static_cast<double>(q));
        if (std::abs(v - p / static_cast<double>(q)) <= tol) return Rational(static_cast<long>(p), q);
    }
    throw std::domain_error("rationalize: entry is not close to a small rational");
}

Mat snap(const Eigen::MatrixXd& m, double tol) {
    Mat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = snap(m(i, j), tol);
    return out;
}

double dev(const Eigen::MatrixXd& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    return a.size() == 0 ? 0.0 : (a - to_double(b)).cwiseAbs().maxCoeff();
}

}  // namespace

CrossedModuleAlg rationalize(const FloatXModAlg& f, double tol) {
    std::vector<Mat> g, h, act;
    for (const auto& m : f.ad_g) g.push_back(snap(m, tol));
    for (const auto& m : f.ad_h) h.push_back(snap(m, tol));
    for (const auto& m : f.action) act.push_back(snap(m, tol));
    CrossedModuleAlg x;
    x.g = LieAlgebra::from_ad(std::move(g));
    x.h = LieAlgebra::from_ad(std::move(h));
    x.mu = snap(f.mu, tol);
    x.action = Representation{x.h, x.g.dim(), std::move(act)};
    return x;
}

double max_deviation(const FloatXModAlg& f, const CrossedModuleAlg& x) {
    if (static_cast<int>(f.ad_g.size()) != x.dg() || static_cast<int>(f.ad_h.size()) != x.dh()) return 1e300;
    double m = dev(f.mu, x.mu);
    for (int a = 0; a < x.dg(); ++a) m = std::max(m, dev(f.ad_g[static_cast<size_t>(a)], x.g.ad_basis(a)));
    for (int a = 0; a < x.dh(); ++a) {
        m = std::max(m, dev(f.ad_h[static_cast<size_t>(a)], x.h.ad_basis(a)));
        m = std::max(m, dev(f.action[static_cast<size_t>(a)], x.L_basis(a)));
    }
    return m;
}

Eigen::VectorXd induced_curvature(const GroupTwoRep& r, const Eigen::MatrixXd& g1d, const Eigen::MatrixXd& g2d,
                                  const Eigen::MatrixXd& hd, const Eigen::VectorXd& vd) {
    const GroupXMod& x = r.x;
    const MatJ phi = lift<Jet>(r.phi);
    // arrows of the VB-groupoid: ((g,w), (h,v)) with source (h,v)
    struct Arrow {
        MatJ g, w, h, v;
    };
    auto e0_mul = [&](const MatJ& h, const MatJ& v, const MatJ& h2, const MatJ& v2) {
        return std::pair<MatJ, MatJ>{x.mul_h(h, h2), MatJ(v + r.rho0V(h) * v2)};
    };
    auto target = [&](const Arrow& a) { return e0_mul(a.h, a.v, x.i(a.g), MatJ(phi * a.w)); };
    auto compose = [&](const Arrow& later, const Arrow& earlier) {
        // (e₁', e₀ε(e₁)) ⋈ (e₁, e₀) = (e₁e₁', e₀)
        MatJ w = earlier.w + r.rho0W(x.i(earlier.g)) * later.w;
        return Arrow{x.mul_g(earlier.g, later.g), w, earlier.h, earlier.v};
    };
    const MatJ zero_w = zeros_t<Jet>(r.dimW(), 1);
    auto split = [&](const MatJ& g, const MatJ& h, const MatJ& v) { return Arrow{g, zero_w, h, v}; };

    MatJ g1 = lift<Jet>(g1d), g2 = lift<Jet>(g2d), h = lift<Jet>(hd), v = lift<Jet>(Eigen::MatrixXd(vd));
    Arrow first = split(g2, h, v);
    auto [th, tv] = target(first);
    Arrow second = split(g1, th, tv);
    Arrow b = compose(second, first);
    Arrow a = split(x.mul_g(g2, g1), h, v);

    const int dw = r.dimW(), dv = r.dimV();
    Eigen::VectorXd out(dw + dv + 3);
    out.head(dw) = values<Jet>(MatJ(a.w - b.w)).col(0);
    out.segment(dw, dv) = values<Jet>(MatJ(a.v - b.v)).col(0);
    out(dw + dv) = diff(a.g, b.g);
    out(dw + dv + 1) = std::max(diff(a.h, b.h), diff(a.v, b.v));
    out(dw + dv + 2) = std::max(diff(th, x.mul_h(h, x.i(g2))), diff(tv, v));
    return out;
}

}  // namespace l2c
