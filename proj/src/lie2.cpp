#include "lie2coh/lie2.hpp"

#include <stdexcept>

namespace l2c {

CrossedModuleAlg xmod_from_algebra(const LieAlgebra& k) {
    return CrossedModuleAlg{LieAlgebra(0), k, zeros(k.dim(), 0), Representation::trivial(k, 0)};
}

Diagnostics validate_crossed_module(const CrossedModuleAlg& x) {
    Diagnostics out;
    const int dg = x.dg(), dh = x.dh();
    if (x.mu.rows() != dh || x.mu.cols() != dg || x.action.space_dim != dg || !(x.action.algebra == x.h)) {
        out.push_back({"shape", {}, "mu or action inconsistent with g, h"});
        return out;
    }
    for (auto& v : validate_representation(x.action)) {
        v.identity = "action: " + v.identity;
        out.push_back(v);
    }
    for (int y = 0; y < dh; ++y) {
        const Mat& Ly = x.L_basis(y);
        for (int i = 0; i < dg; ++i)
            for (int j = i + 1; j < dg; ++j) {
                Vec lhs = mul(Ly, x.g.bracket_basis(i, j));
                Vec rhs = x.g.bracket(Ly.col(i), unit(dg, j)) + x.g.bracket(unit(dg, i), Ly.col(j));
                if (lhs != rhs) out.push_back({"derivation L_y[x0,x1] = [L_y x0,x1] + [x0,L_y x1]", {y, i, j}, ""});
            }
    }
    for (int y = 0; y < dh; ++y)
        for (int i = 0; i < dg; ++i) {
            Vec lhs = mul(x.mu, x.L_basis(y).col(i));
            Vec rhs = x.h.bracket(unit(dh, y), x.mu.col(i));
            if (lhs != rhs) out.push_back({"equivariance mu(L_y x) = [y, mu x]", {y, i}, ""});
        }
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j < dg; ++j) {
            Vec lhs = mul(x.L(x.mu.col(i)), unit(dg, j));
            if (lhs != x.g.bracket_basis(i, j)) out.push_back({"Peiffer L_{mu x0} x1 = [x0,x1]", {i, j}, ""});
        }
    return out;
}

LieAlgebra lie2_arrows(const CrossedModuleAlg& x) {
    const int dg = x.dg(), dh = x.dh(), n = dg + dh;
    std::vector<Mat> ad;
    for (int i = 0; i < dg; ++i) {
        Mat m = zeros(n, n);
        m.topLeftCorner(dg, dg) = x.g.ad_basis(i);
        for (int k = 0; k < dh; ++k) m.block(0, dg + k, dg, 1) = -x.L_basis(k).col(i);
        ad.push_back(m);
    }
    for (int k = 0; k < dh; ++k) {
        Mat m = zeros(n, n);
        m.topLeftCorner(dg, dg) = x.L_basis(k);
        m.bottomRightCorner(dh, dh) = x.h.ad_basis(k);
        ad.push_back(m);
    }
    return LieAlgebra::from_ad(std::move(ad));
}

CrossedModuleAlg xmod_from_quadruple(const LieAlgebra& h, const std::vector<int>& ideal_basis, int dimV,
                                     const Representation& rho) {
    const int dh = h.dim(), ni = static_cast<int>(ideal_basis.size());
    std::vector<int> pos(static_cast<size_t>(dh), -1);
    for (int a = 0; a < ni; ++a) {
        int i = ideal_basis[static_cast<size_t>(a)];
        if (i < 0 || i >= dh || pos[static_cast<size_t>(i)] >= 0)
            throw std::invalid_argument("xmod_from_quadruple: bad ideal index set");
        pos[static_cast<size_t>(i)] = a;
    }
    // coordinates in I of a vector known to lie in I
    auto to_ideal = [&](const Vec& v) {
        Vec c = zero_vec(ni);
        for (int k = 0; k < dh; ++k) {
            if (v(k).is_zero()) continue;
            if (pos[static_cast<size_t>(k)] < 0) return std::optional<Vec>{};
            c(pos[static_cast<size_t>(k)]) = v(k);
        }
        return std::optional<Vec>{c};
    };
    for (int k = 0; k < dh; ++k)
        for (int i : ideal_basis)
            if (!to_ideal(h.bracket_basis(k, i)))
                throw std::invalid_argument("xmod_from_quadruple: span is not an ideal (e" + std::to_string(k + 1) +
                                            ", e" + std::to_string(i + 1) + ")");
    if (rho.space_dim != dimV || !(rho.algebra == h) || !validate_representation(rho).empty())
        throw std::invalid_argument("xmod_from_quadruple: rho is not a representation of h on V");
    for (int i : ideal_basis)
        if (!is_zero(rho.action[static_cast<size_t>(i)]))
            throw std::invalid_argument("xmod_from_quadruple: rho does not vanish on the ideal");

    const int dg = dimV + ni;
    std::vector<Mat> gad;
    for (int a = 0; a < dg; ++a) gad.push_back(zeros(dg, dg));
    for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b)
            gad[static_cast<size_t>(dimV + a)].block(dimV, dimV + b, ni, 1) =
                *to_ideal(h.bracket_basis(ideal_basis[static_cast<size_t>(a)], ideal_basis[static_cast<size_t>(b)]));
    LieAlgebra g = LieAlgebra::from_ad(std::move(gad));

    Mat mu = zeros(dh, dg);
    for (int a = 0; a < ni; ++a) mu(ideal_basis[static_cast<size_t>(a)], dimV + a) = 1;

    Representation act{h, dg, {}};
    for (int k = 0; k < dh; ++k) {
        Mat L = zeros(dg, dg);
        L.topLeftCorner(dimV, dimV) = rho.action[static_cast<size_t>(k)];
        for (int b = 0; b < ni; ++b)
            L.block(dimV, dimV + b, ni, 1) = *to_ideal(h.bracket_basis(k, ideal_basis[static_cast<size_t>(b)]));
        act.action.push_back(L);
    }
    return CrossedModuleAlg{g, h, mu, act};
}

StructureReport structure_report(const CrossedModuleAlg& x) {
    StructureReport r;
    const int dg = x.dg(), dh = x.dh();
    r.orbit_basis = column_basis(x.mu);
    Index orank = r.orbit_basis.cols();
    r.orbit_is_ideal = true;
    for (int y = 0; y < dh; ++y)
        for (Index c = 0; c < orank; ++c) {
            Vec br = x.h.bracket(unit(dh, y), r.orbit_basis.col(c));
            if (rank(hstack(r.orbit_basis, br)) != orank) r.orbit_is_ideal = false;
        }
    KernelChart iso = kernel_chart(x.mu);
    r.isotropy_basis = from_columns(iso.basis, dg);
    r.isotropy_abelian = true;
    r.isotropy_central = true;
    for (Index a = 0; a < iso.dim(); ++a) {
        for (Index b = 0; b < iso.dim(); ++b)
            if (!is_zero(x.g.bracket(iso.basis[static_cast<size_t>(a)], iso.basis[static_cast<size_t>(b)])))
                r.isotropy_abelian = false;
        for (int i = 0; i < dg; ++i)
            if (!is_zero(x.g.bracket(unit(dg, i), iso.basis[static_cast<size_t>(a)]))) r.isotropy_central = false;
    }
    for (int y = 0; y < dh; ++y) {
        Mat m = zeros(iso.dim(), iso.dim());
        for (Index b = 0; b < iso.dim(); ++b) m.col(b) = iso.coords(mul(x.L_basis(y), iso.basis[static_cast<size_t>(b)]));
        r.induced_action.push_back(m);
    }
    r.induced_well_defined = true;
    for (int i = 0; i < dg; ++i) {
        Mat Lmu = x.L(x.mu.col(i));
        for (const auto& k : iso.basis)
            if (!is_zero(mul(Lmu, k))) r.induced_well_defined = false;
    }
    return r;
}

namespace {

// Embedding of g_p into (g ⊕_L h)^p: component j is (x^j, y + Σ_{k>j} μ x^k).
Mat nerve_embedding(const CrossedModuleAlg& x, int p) {
    const int dg = x.dg(), dh = x.dh(), da = dg + dh;
    Mat e = zeros(p * da, p * dg + dh);
    for (int j = 0; j < p; ++j) {
        e.block(j * da, j * dg, dg, dg) = identity(dg);
        e.block(j * da + dg, p * dg, dh, dh) = identity(dh);
        for (int k = j + 1; k < p; ++k) e.block(j * da + dg, k * dg, dh, dg) = x.mu;
    }
    return e;
}

}  // namespace

NerveAlgebra nerve_algebra(const CrossedModuleAlg& x, int p) {
    if (p < 0) throw std::invalid_argument("nerve_algebra: negative level");
    if (p == 0) return NerveAlgebra{0, x.h};
    const int dg = x.dg(), dh = x.dh(), da = dg + dh, n = p * dg + dh;
    LieAlgebra arrows = lie2_arrows(x);
    Mat e = nerve_embedding(x, p);
    auto decode = [&](const Vec& comps) {
        Vec v = zero_vec(n);
        for (int j = 0; j < p; ++j) v.segment(j * dg, dg) = comps.segment(j * da, dg);
        v.tail(dh) = comps.segment((p - 1) * da + dg, dh);
        return v;
    };
    std::vector<Mat> ad(static_cast<size_t>(n), zeros(n, n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec ea = e.col(a), eb = e.col(b);
            Vec br = zero_vec(p * da);
            for (int j = 0; j < p; ++j) br.segment(j * da, da) = arrows.bracket(ea.segment(j * da, da), eb.segment(j * da, da));
            Vec v = decode(br);
            if (Vec(mul(e, v)) != br) throw std::invalid_argument("nerve_algebra: g_p not closed under the bracket");
            ad[static_cast<size_t>(a)].col(b) = v;
        }
    return NerveAlgebra{p, LieAlgebra::from_ad(std::move(ad))};
}

Mat final_target(const CrossedModuleAlg& x, int p) {
    const int dg = x.dg(), dh = x.dh();
    Mat t = zeros(dh, p * dg + dh);
    for (int j = 0; j < p; ++j) t.block(0, j * dg, dh, dg) = x.mu;
    t.rightCols(dh) = identity(dh);
    return t;
}

SimplicialMaps simplicial_maps(const CrossedModuleAlg& x, int p) {
    const int dg = x.dg(), dh = x.dh();
    const int nsrc = (p + 1) * dg + dh, ntgt = p * dg + dh;
    SimplicialMaps s;
    for (int k = 0; k <= p + 1; ++k) {
        Mat f = zeros(ntgt, nsrc);
        f.block(p * dg, (p + 1) * dg, dh, dh) = identity(dh);
        for (int j = 0; j <= p; ++j) {
            // source block j lands in target block t (or is dropped / pushed to y)
            if (k == 0) {
                if (j > 0) f.block((j - 1) * dg, j * dg, dg, dg) = identity(dg);
            } else if (k <= p) {
                int t = (j < k) ? j : j - 1;
                f.block(t * dg, j * dg, dg, dg) = identity(dg);
            } else {
                if (j < p)
                    f.block(j * dg, j * dg, dg, dg) = identity(dg);
                else
                    f.block(p * dg, j * dg, dh, dg) = x.mu;
            }
        }
        s.faces.push_back(f);
    }
    s.final_target = final_target(x, p);
    return s;
}

Vec GlPhi::coords0(const Mat& F, const Mat& f) const {
    const int dw = space.dimW, dv = space.dimV;
    Vec amb(dw * dw + dv * dv);
    for (int a = 0; a < dw; ++a)
        for (int b = 0; b < dw; ++b) amb(a * dw + b) = F(a, b);
    for (int c = 0; c < dv; ++c)
        for (int d = 0; d < dv; ++d) amb(dw * dw + c * dv + d) = f(c, d);
    return gl0_chart.coords(amb);
}

std::pair<Mat, Mat> GlPhi::pair0(const Vec& y) const {
    const int dw = space.dimW, dv = space.dimV;
    Vec amb = gl0_chart.embed(y);
    if (amb.size() == 0) amb = zero_vec(dw * dw + dv * dv);
    Mat F(dw, dw), f(dv, dv);
    for (int a = 0; a < dw; ++a)
        for (int b = 0; b < dw; ++b) F(a, b) = amb(a * dw + b);
    for (int c = 0; c < dv; ++c)
        for (int d = 0; d < dv; ++d) f(c, d) = amb(dw * dw + c * dv + d);
    return {F, f};
}

Vec GlPhi::coords1(const Mat& A) const {
    const int dw = space.dimW, dv = space.dimV;
    Vec v(dw * dv);
    for (int i = 0; i < dw; ++i)
        for (int j = 0; j < dv; ++j) v(i * dv + j) = A(i, j);
    return v;
}

Mat GlPhi::matrix1(const Vec& x) const {
    const int dw = space.dimW, dv = space.dimV;
    Mat A(dw, dv);
    for (int i = 0; i < dw; ++i)
        for (int j = 0; j < dv; ++j) A(i, j) = x(i * dv + j);
    return A;
}

GlPhi gl_phi(const TwoVectorSpace& v) {
    const int dw = v.dimW, dv = v.dimV;
    if (v.phi.rows() != dv || v.phi.cols() != dw) throw std::invalid_argument("gl_phi: phi must be dimV × dimW");
    const Mat& phi = v.phi;
    // φF - fφ = 0, one row per entry (i,j) of a dimV × dimW matrix
    Mat cons = zeros(dv * dw, dw * dw + dv * dv);
    for (int i = 0; i < dv; ++i)
        for (int j = 0; j < dw; ++j) {
            int row = i * dw + j;
            for (int a = 0; a < dw; ++a) cons(row, a * dw + j) += phi(i, a);
            for (int c = 0; c < dv; ++c) cons(row, dw * dw + i * dv + c) -= phi(c, j);
        }
    GlPhi out;
    out.space = v;
    out.gl0_chart = kernel_chart(cons);
    const int d0 = static_cast<int>(out.gl0_chart.dim()), d1 = dw * dv;

    std::vector<std::pair<Mat, Mat>> pairs;
    for (int a = 0; a < d0; ++a) pairs.push_back(out.pair0(unit(d0, a)));
    std::vector<Mat> had(static_cast<size_t>(d0), zeros(d0, d0));
    for (int a = 0; a < d0; ++a)
        for (int b = 0; b < d0; ++b) {
            const auto& [Fa, fa] = pairs[static_cast<size_t>(a)];
            const auto& [Fb, fb] = pairs[static_cast<size_t>(b)];
            had[static_cast<size_t>(a)].col(b) = out.coords0(mul(Fa, Fb) - mul(Fb, Fa), mul(fa, fb) - mul(fb, fa));
        }
    LieAlgebra h = LieAlgebra::from_ad(std::move(had));

    std::vector<Mat> gad(static_cast<size_t>(d1), zeros(d1, d1));
    for (int i = 0; i < dw; ++i)
        for (int j = 0; j < dv; ++j)
            for (int k = 0; k < dw; ++k)
                for (int l = 0; l < dv; ++l) {
                    // E_ij φ E_kl - E_kl φ E_ij = φ_jk E_il - φ_li E_kj
                    Mat& m = gad[static_cast<size_t>(i * dv + j)];
                    m(i * dv + l, k * dv + l) += phi(j, k);
                    m(k * dv + j, k * dv + l) -= phi(l, i);
                }
    LieAlgebra g = LieAlgebra::from_ad(std::move(gad));

    Mat mu = zeros(d0, d1);
    for (int c = 0; c < d1; ++c) {
        Mat A = out.matrix1(unit(d1, c));
        mu.col(c) = out.coords0(mul(A, phi), mul(phi, A));
    }
    Representation act{h, d1, {}};
    for (int a = 0; a < d0; ++a) {
        const auto& [F, f] = pairs[static_cast<size_t>(a)];
        Mat L = zeros(d1, d1);
        for (int c = 0; c < d1; ++c) {
            Mat A = out.matrix1(unit(d1, c));
            L.col(c) = out.coords1(mul(F, A) - mul(A, f));
        }
        act.action.push_back(L);
    }
    out.xmod = CrossedModuleAlg{g, h, mu, act};
    return out;
}

}  // namespace l2c
