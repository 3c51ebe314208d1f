#include "lie2coh/tworep.hpp"

#include <stdexcept>

namespace l2c {

Mat TwoRep::r1(const Vec& x) const {
    Mat m = zeros(dimW(), dimV());
    for (int i = 0; i < source.dg(); ++i)
        if (!x(i).is_zero()) m += x(i) * rho1[static_cast<size_t>(i)];
    return m;
}

TwoRep trivial_two_rep(const CrossedModuleAlg& x, const TwoVectorSpace& v) {
    return TwoRep{x, v, std::vector<Mat>(static_cast<size_t>(x.dg()), zeros(v.dimW, v.dimV)),
                  Representation::trivial(x.h, v.dimW), Representation::trivial(x.h, v.dimV)};
}

Diagnostics validate_two_rep(const TwoRep& r) {
    Diagnostics out;
    const CrossedModuleAlg& x = r.source;
    const int dg = x.dg(), dh = x.dh(), dw = r.dimW(), dv = r.dimV();
    bool shapes = r.phi().rows() == dv && r.phi().cols() == dw && static_cast<int>(r.rho1.size()) == dg &&
                  r.rho0W.space_dim == dw && r.rho0V.space_dim == dv && r.rho0W.algebra == x.h && r.rho0V.algebra == x.h;
    for (const auto& m : r.rho1) shapes = shapes && m.rows() == dw && m.cols() == dv;
    if (!shapes) {
        out.push_back({"shape", {}, "2-representation data inconsistent with source/target"});
        return out;
    }
    for (auto& v : validate_representation(r.rho0W)) out.push_back({"rho0_W: " + v.identity, v.witness, v.detail});
    for (auto& v : validate_representation(r.rho0V)) out.push_back({"rho0_V: " + v.identity, v.witness, v.detail});
    const Mat& phi = r.phi();
    for (int y = 0; y < dh; ++y)
        if (mul(phi, r.rho0W.action[static_cast<size_t>(y)]) != mul(r.rho0V.action[static_cast<size_t>(y)], phi))
            out.push_back({"axiom 1: phi rho0_W(y) = rho0_V(y) phi", {y}, ""});
    for (int i = 0; i < dg; ++i) {
        Vec mx = x.mu.col(i);
        const Mat& r1 = r.r1_basis(i);
        if (r.rho0V.act(mx) != mul(phi, r1)) out.push_back({"axiom 2: rho0_V(mu x) = phi rho1(x)", {i}, ""});
        if (r.rho0W.act(mx) != mul(r1, phi)) out.push_back({"axiom 2: rho0_W(mu x) = rho1(x) phi", {i}, ""});
    }
    for (int i = 0; i < dg; ++i)
        for (int j = i + 1; j < dg; ++j) {
            const Mat& a = r.r1_basis(i);
            const Mat& b = r.r1_basis(j);
            if (r.r1(x.g.bracket_basis(i, j)) != Mat(mul(a, mul(phi, b)) - mul(b, mul(phi, a))))
                out.push_back({"axiom 3: rho1[x0,x1] = rho1(x0) phi rho1(x1) - rho1(x1) phi rho1(x0)", {i, j}, ""});
        }
    for (int y = 0; y < dh; ++y)
        for (int i = 0; i < dg; ++i) {
            Mat lhs = r.r1(x.L_basis(y).col(i));
            Mat rhs = mul(r.rho0W.action[static_cast<size_t>(y)], r.r1_basis(i)) -
                      mul(r.r1_basis(i), r.rho0V.action[static_cast<size_t>(y)]);
            if (lhs != rhs) out.push_back({"axiom 4: rho1(L_y x) = rho0_W(y) rho1(x) - rho1(x) rho0_V(y)", {y, i}, ""});
        }
    return out;
}

TwoRep adjoint_rep(const CrossedModuleAlg& x) {
    const int dg = x.dg(), dh = x.dh();
    TwoRep r{x, TwoVectorSpace{dg, dh, x.mu}, {}, Representation{x.h, dg, {}}, adjoint(x.h)};
    for (int i = 0; i < dg; ++i) {
        // ad_1(x)(u) = -L_u x
        Mat m = zeros(dg, dh);
        for (int k = 0; k < dh; ++k) m.col(k) = -x.L_basis(k).col(i);
        r.rho1.push_back(m);
    }
    for (int k = 0; k < dh; ++k) r.rho0W.action.push_back(x.L_basis(k));
    return r;
}

TwoRep tautological_rep(const GlPhi& gp) {
    const CrossedModuleAlg& x = gp.xmod;
    TwoRep r{x, gp.space, {}, Representation{x.h, gp.space.dimW, {}}, Representation{x.h, gp.space.dimV, {}}};
    for (int i = 0; i < x.dg(); ++i) r.rho1.push_back(gp.matrix1(unit(x.dg(), i)));
    for (int k = 0; k < x.dh(); ++k) {
        auto [F, f] = gp.pair0(unit(x.dh(), k));
        r.rho0W.action.push_back(F);
        r.rho0V.action.push_back(f);
    }
    return r;
}

Representation bar_rho(const TwoRep& r) {
    if (!validate_two_rep(r).empty()) throw std::invalid_argument("bar_rho: invalid 2-representation");
    const CrossedModuleAlg& x = r.source;
    const int dg = x.dg(), dh = x.dh(), dw = r.dimW(), dv = r.dimV();
    Representation out{lie2_arrows(x), dw + dv, {}};
    for (int i = 0; i < dg; ++i) {
        Mat m = zeros(dw + dv, dw + dv);
        m.topLeftCorner(dw, dw) = r.rho0W.act(x.mu.col(i));
        m.topRightCorner(dw, dv) = r.r1_basis(i);
        out.action.push_back(m);
    }
    for (int k = 0; k < dh; ++k) {
        Mat m = zeros(dw + dv, dw + dv);
        m.topLeftCorner(dw, dw) = r.rho0W.action[static_cast<size_t>(k)];
        m.bottomRightCorner(dv, dv) = r.rho0V.action[static_cast<size_t>(k)];
        out.action.push_back(m);
    }
    return out;
}

CrossedModuleAlg semidirect_2alg(const CrossedModuleAlg& x, const TwoRep& r) {
    if (!validate_two_rep(r).empty()) throw std::invalid_argument("semidirect_2alg: invalid 2-representation");
    const int dg = x.dg(), dh = x.dh(), dw = r.dimW(), dv = r.dimV();
    const int ng = dg + dw, nh = dh + dv;
    // g ⊕ W: [(x0,w0),(x1,w1)] = ([x0,x1], ρ0W(μx0)w1 - ρ0W(μx1)w0)
    std::vector<Mat> gad;
    for (int i = 0; i < dg; ++i) {
        Mat m = zeros(ng, ng);
        m.topLeftCorner(dg, dg) = x.g.ad_basis(i);
        m.bottomRightCorner(dw, dw) = r.rho0W.act(x.mu.col(i));
        gad.push_back(m);
    }
    for (int a = 0; a < dw; ++a) {
        Mat m = zeros(ng, ng);
        for (int j = 0; j < dg; ++j) m.block(dg, j, dw, 1) = -Mat(r.rho0W.act(x.mu.col(j))).col(a);
        gad.push_back(m);
    }
    std::vector<Mat> had;
    for (int k = 0; k < dh; ++k) {
        Mat m = zeros(nh, nh);
        m.topLeftCorner(dh, dh) = x.h.ad_basis(k);
        m.bottomRightCorner(dv, dv) = r.rho0V.action[static_cast<size_t>(k)];
        had.push_back(m);
    }
    for (int a = 0; a < dv; ++a) {
        Mat m = zeros(nh, nh);
        for (int k = 0; k < dh; ++k) m.block(dh, k, dv, 1) = -r.rho0V.action[static_cast<size_t>(k)].col(a);
        had.push_back(m);
    }
    LieAlgebra g = LieAlgebra::from_ad(std::move(gad));
    LieAlgebra h = LieAlgebra::from_ad(std::move(had));
    Mat mu = zeros(nh, ng);
    mu.topLeftCorner(dh, dg) = x.mu;
    mu.bottomRightCorner(dv, dw) = r.phi();
    // L_{(y,v)}(x,w) = (L_y x, ρ0W(y)w - ρ1(x)v)
    Representation act{h, ng, {}};
    for (int k = 0; k < dh; ++k) {
        Mat m = zeros(ng, ng);
        m.topLeftCorner(dg, dg) = x.L_basis(k);
        m.bottomRightCorner(dw, dw) = r.rho0W.action[static_cast<size_t>(k)];
        act.action.push_back(m);
    }
    for (int a = 0; a < dv; ++a) {
        Mat m = zeros(ng, ng);
        for (int i = 0; i < dg; ++i) m.block(dg, i, dw, 1) = -r.r1_basis(i).col(a);
        act.action.push_back(m);
    }
    return CrossedModuleAlg{g, h, mu, act};
}

}  // namespace l2c
