#include "lie2coh/ext.hpp"

#include <string>

namespace l2c {

namespace {

constexpr LatticeIndex kOmega0{0, 2, 0}, kAlpha{0, 1, 1}, kPhi{1, 1, 0}, kOmega1{0, 0, 2};

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    Mat out = zeros(m.rows(), m.cols());
    for (Index j = 0; j < m.cols(); ++j) {
        auto col = solve_linear(m, unit(m.rows(), j));
        if (!col) throw std::invalid_argument("inverse: singular");
        out.col(j) = *col;
    }
    return out;
}

bool same_context(const TwoRep& a, const TwoRep& b) {
    const CrossedModuleAlg &x = a.source, &y = b.source;
    return x.g == y.g && x.h == y.h && x.mu == y.mu && x.action.action == y.action.action && a.dimW() == b.dimW() &&
           a.dimV() == b.dimV() && a.phi() == b.phi() && a.rho1 == b.rho1 && a.rho0W.action == b.rho0W.action &&
           a.rho0V.action == b.rho0V.action;
}

std::string label(LatticeIndex idx) {
    if (idx == LatticeIndex{0, 3, 0}) return "eq i: delta omega0 = 0";
    if (idx == LatticeIndex{0, 0, 3}) return "eq iii: omega1 is a 2-cocycle";
    if (idx == LatticeIndex{1, 2, 0}) return "eq iv: epsilon is an equivariant homomorphism";
    if (idx == LatticeIndex{0, 2, 1}) return "eq v: the action is a homomorphism";
    if (idx == LatticeIndex{0, 1, 2}) return "eq vi: the action is by derivations";
    if (idx == LatticeIndex{1, 1, 1}) return "omega1 definition";
    if (idx == LatticeIndex{2, 1, 0}) return "phi independent of h";
    return "component (" + std::to_string(idx.p) + "," + std::to_string(idx.q) + "," + std::to_string(idx.r) + ")";
}

// ∇ columns of λ₀ at (0,1,0) and λ₁ at (0,0,1), restricted to the three cocycle components
struct CoboundaryMap {
    Mat full;  // rows: all of degree 2
    Index n0 = 0, n1 = 0;
};

CoboundaryMap coboundary_map(const Lattice& lat) {
    const LatticeIndex l0{0, 1, 0}, l1{0, 0, 1};
    Mat n1 = lat.nabla(1);
    CoboundaryMap out;
    out.n0 = lat.cochain_dim(l0);
    out.n1 = lat.cochain_dim(l1);
    out.full = hstack(n1.middleCols(lat.offset(1, l0), out.n0), n1.middleCols(lat.offset(1, l1), out.n1));
    return out;
}

Vec triple_coords(const Lattice& lat, const Vec& total) {
    Vec a = lat.component_of(2, total, kOmega0).values, b = lat.component_of(2, total, kAlpha).values,
        c = lat.component_of(2, total, kPhi).values;
    Vec out(a.size() + b.size() + c.size());
    out << a, b, c;
    return out;
}

// coordinate vector of a ∈ ker(project) through the (σ, include) decomposition
struct Decomposition {
    Mat inv;
    Index base = 0;
    Vec split(const Vec& e) const { return Vec(mul(inv, e)).tail(inv.rows() - base); }
};

Vec apply(const Mat& m, const Vec& v) { return Vec(mul(m, v)); }

}  // namespace

Vec TwoCocycle::omega0_at(int i, int j) const {
    const int dv = rep.dimV();
    if (i == j) return zero_vec(dv);
    Tuple t{std::min(i, j), std::max(i, j)};
    Vec v = omega0.values.segment(exterior(xmod().dh(), 2).index(t) * dv, dv);
    return i < j ? v : Vec(-v);
}

Vec TwoCocycle::alpha_at(int i, int a) const {
    const int dw = rep.dimW();
    return alpha.values.segment((static_cast<Index>(i) * xmod().dg() + a) * dw, dw);
}

Mat TwoCocycle::phi_matrix() const {
    const int dg = xmod().dg(), dv = rep.dimV();
    Mat out = zeros(dv, dg);
    for (int a = 0; a < dg; ++a) out.col(a) = phimap.values.segment(static_cast<Index>(a) * dv, dv);
    return out;
}

Mat TwoCocycle::omega1_matrix() const {
    const CrossedModuleAlg& x = xmod();
    const int dg = x.dg(), dw = rep.dimW();
    Mat phi = phi_matrix();
    Mat out = zeros(dw, static_cast<Index>(dg) * dg);
    for (int a = 0; a < dg; ++a)
        for (int b = 0; b < dg; ++b) {
            Vec v = apply(rep.r1_basis(b), phi.col(a));
            for (int i = 0; i < x.dh(); ++i)
                if (!x.mu(i, a).is_zero()) v += x.mu(i, a) * alpha_at(i, b);
            out.col(static_cast<Index>(a) * dg + b) = v;
        }
    return out;
}

TwoCocycle make_cocycle(const TwoRep& r, const Vec& omega0, const Vec& alpha, const Vec& phimap) {
    const int dg = r.source.dg(), dh = r.source.dh(), dw = r.dimW(), dv = r.dimV();
    if (omega0.size() != binomial(dh, 2) * dv || alpha.size() != static_cast<Index>(dh) * dg * dw ||
        phimap.size() != static_cast<Index>(dg + dh) * dv)
        throw std::invalid_argument("make_cocycle: component sizes do not match the context");
    Vec phi = phimap;
    phi.tail(static_cast<Index>(dh) * dv).setConstant(Rational(0));
    return TwoCocycle{r, {kOmega0, omega0}, {kAlpha, alpha}, {kPhi, phi}};
}

TwoCocycle zero_cocycle(const TwoRep& r) {
    const int dg = r.source.dg(), dh = r.source.dh();
    return make_cocycle(r, zero_vec(binomial(dh, 2) * r.dimV()), zero_vec(static_cast<Index>(dh) * dg * r.dimW()),
                        zero_vec(static_cast<Index>(dg + dh) * r.dimV()));
}

Vec pack_degree2(const Lattice& lat, const TwoCocycle& c) {
    const int dg = lat.xmod().dg(), dw = lat.rep().dimW();
    Mat w1 = c.omega1_matrix();
    const ExteriorBasis& pairs = exterior(dg, 2);
    Vec om1 = zero_vec(lat.cochain_dim(kOmega1));
    for (Index t = 0; t < pairs.size(); ++t) {
        const Tuple& ab = pairs.tuple(t);
        om1.segment(t * dw, dw) = w1.col(static_cast<Index>(ab[0]) * dg + ab[1]);
    }
    return lat.assemble(2, {c.omega0, c.alpha, c.phimap, {kOmega1, om1}});
}

InvalidCocycle::InvalidCocycle(Diagnostics d)
    : std::invalid_argument("invalid cocycle: " + (d.empty() ? std::string("?") : describe(d[0]))),
      diagnostics(std::move(d)) {}

Diagnostics validate_cocycle(const Lattice& lat, const TwoCocycle& c) {
    Diagnostics out;
    if (!same_context(lat.rep(), c.rep) || c.omega0.index != kOmega0 || c.alpha.index != kAlpha ||
        c.phimap.index != kPhi || c.omega0.values.size() != lat.cochain_dim(kOmega0) ||
        c.alpha.values.size() != lat.cochain_dim(kAlpha) || c.phimap.values.size() != lat.cochain_dim(kPhi)) {
        out.push_back({"shape", {}, "cocycle components do not match the context"});
        return out;
    }
    const int dg = lat.xmod().dg();
    Mat w1 = c.omega1_matrix();
    for (int a = 0; a < dg; ++a)
        for (int b = a; b < dg; ++b)
            if (!is_zero(Mat(w1.col(static_cast<Index>(a) * dg + b) + w1.col(static_cast<Index>(b) * dg + a))))
                out.push_back({"eq ii: omega1 is skew", {a, b}, ""});

    Vec res = apply(lat.nabla(2), pack_degree2(lat, c));
    for (auto idx : Lattice::components(3)) {
        Vec part = lat.component_of(3, res, idx).values;
        Index first = -1;
        for (Index k = 0; k < part.size() && first < 0; ++k)
            if (!part(k).is_zero()) first = k;
        if (first < 0) continue;
        const Index cd = lat.coef_dim(idx.r), nr = binomial(dg, idx.r);
        const Index qi = (first / cd) / nr, ri = (first / cd) % nr;
        std::vector<int> witness = exterior(static_cast<int>(lat.nerve(idx.p).dim()), idx.q).tuple(qi);
        for (int z : exterior(dg, idx.r).tuple(ri)) witness.push_back(z);
        out.push_back({label(idx), witness,
                       "coefficient " + std::to_string(first % cd) + " = " + to_string(part(first))});
    }
    return out;
}

Diagnostics validate_cocycle(const TwoCocycle& c) {
    Lattice lat(c.rep, LatticeOptions{-1, NablaSigns::frozen()});
    return validate_cocycle(lat, c);
}

ExtensionResult extension_from_cocycle(const TwoCocycle& c) {
    auto diag = validate_cocycle(c);
    if (!diag.empty()) throw InvalidCocycle(diag);
    const TwoRep& r = c.rep;
    const CrossedModuleAlg& x = r.source;
    const int dg = x.dg(), dh = x.dh(), dw = r.dimW(), dv = r.dimV();
    const Index n0 = dh + dv, n1 = dg + dw;

    std::vector<Mat> ad0;
    for (int i = 0; i < dh; ++i) {
        Mat m = zeros(n0, n0);
        m.topLeftCorner(dh, dh) = x.h.ad_basis(i);
        for (int j = 0; j < dh; ++j) m.block(dh, j, dv, 1) = -c.omega0_at(i, j);
        m.bottomRightCorner(dv, dv) = r.rho0V.action[static_cast<size_t>(i)];
        ad0.push_back(m);
    }
    for (int k = 0; k < dv; ++k) {
        Mat m = zeros(n0, n0);
        for (int j = 0; j < dh; ++j) m.block(dh, j, dv, 1) = -r.rho0V.action[static_cast<size_t>(j)].col(k);
        ad0.push_back(m);
    }

    Mat w1 = c.omega1_matrix();
    std::vector<Mat> ad1;
    for (int a = 0; a < dg; ++a) {
        Mat m = zeros(n1, n1);
        m.topLeftCorner(dg, dg) = x.g.ad_basis(a);
        for (int b = 0; b < dg; ++b) m.block(dg, b, dw, 1) = -w1.col(static_cast<Index>(a) * dg + b);
        m.bottomRightCorner(dw, dw) = r.rho0W.act(x.mu.col(a));
        ad1.push_back(m);
    }
    for (int k = 0; k < dw; ++k) {
        Mat m = zeros(n1, n1);
        for (int b = 0; b < dg; ++b) m.block(dg, b, dw, 1) = -r.rho0W.act(x.mu.col(b)).col(k);
        ad1.push_back(m);
    }

    Mat mu = zeros(n0, n1);
    mu.topLeftCorner(dh, dg) = x.mu;
    mu.bottomLeftCorner(dv, dg) = c.phi_matrix();
    mu.bottomRightCorner(dv, dw) = r.phi();

    LieAlgebra e0 = LieAlgebra::from_ad(ad0), e1 = LieAlgebra::from_ad(ad1);
    Representation act{e0, static_cast<int>(n1), {}};
    for (int i = 0; i < dh; ++i) {
        Mat m = zeros(n1, n1);
        m.topLeftCorner(dg, dg) = x.L_basis(i);
        for (int a = 0; a < dg; ++a) m.block(dg, a, dw, 1) = -c.alpha_at(i, a);
        m.bottomRightCorner(dw, dw) = r.rho0W.action[static_cast<size_t>(i)];
        act.action.push_back(m);
    }
    for (int k = 0; k < dv; ++k) {
        Mat m = zeros(n1, n1);
        for (int a = 0; a < dg; ++a) m.block(dg, a, dw, 1) = -r.r1_basis(a).col(k);
        act.action.push_back(m);
    }

    ExtensionResult e;
    e.total = CrossedModuleAlg{e1, e0, mu, act};
    e.include1 = vstack(zeros(dg, dw), identity(dw));
    e.include0 = vstack(zeros(dh, dv), identity(dv));
    e.project1 = hstack(identity(dg), zeros(dg, dw));
    e.project0 = hstack(identity(dh), zeros(dh, dv));
    e.omega1 = w1;
    return e;
}

Diagnostics validate_extension(const ExtensionResult& e, const CrossedModuleAlg& base, const TwoVectorSpace& kernel) {
    Diagnostics out;
    const CrossedModuleAlg& t = e.total;
    const int n1 = t.dg(), n0 = t.dh();
    if (e.include1.rows() != n1 || e.include1.cols() != kernel.dimW || e.include0.rows() != n0 ||
        e.include0.cols() != kernel.dimV || e.project1.rows() != base.dg() || e.project1.cols() != n1 ||
        e.project0.rows() != base.dh() || e.project0.cols() != n0) {
        out.push_back({"shape", {}, "structure maps do not fit the total crossed module"});
        return out;
    }
    for (auto& v : validate_crossed_module(t)) out.push_back({"total: " + v.identity, v.witness, v.detail});
    auto exact = [&](const Mat& inc, const Mat& proj, const std::string& lvl) {
        if (rank(inc) != inc.cols()) out.push_back({"include" + lvl + " injective", {}, ""});
        if (rank(proj) != proj.rows()) out.push_back({"project" + lvl + " surjective", {}, ""});
        if (!is_zero(mul(proj, inc)) || inc.cols() + proj.rows() != inc.rows())
            out.push_back({"row " + lvl + " exact", {}, ""});
    };
    exact(e.include1, e.project1, "1");
    exact(e.include0, e.project0, "0");
    if (mul(t.mu, e.include1) != mul(e.include0, kernel.phi)) out.push_back({"include square commutes", {}, ""});
    if (mul(base.mu, e.project1) != mul(e.project0, t.mu)) out.push_back({"project square commutes", {}, ""});
    if (!validate_homomorphism(t.g, base.g, e.project1).empty()) out.push_back({"project1 homomorphism", {}, ""});
    if (!validate_homomorphism(t.h, base.h, e.project0).empty()) out.push_back({"project0 homomorphism", {}, ""});
    for (int k = 0; k < n0; ++k)
        if (mul(e.project1, t.L_basis(k)) != mul(base.L(e.project0.col(k)), e.project1))
            out.push_back({"project equivariant", {k}, ""});
    // W → V carries zero brackets and the zero action
    for (int a = 0; a < kernel.dimW; ++a)
        for (int b = 0; b < kernel.dimW; ++b)
            if (!is_zero(Mat(t.g.bracket(e.include1.col(a), e.include1.col(b)))))
                out.push_back({"include1 homomorphism", {a, b}, ""});
    for (int a = 0; a < kernel.dimV; ++a) {
        for (int b = 0; b < kernel.dimV; ++b)
            if (!is_zero(Mat(t.h.bracket(e.include0.col(a), e.include0.col(b)))))
                out.push_back({"include0 homomorphism", {a, b}, ""});
        if (!is_zero(mul(t.L(e.include0.col(a)), e.include1))) out.push_back({"include equivariant", {a}, ""});
    }
    return out;
}

Splitting canonical_splitting(const ExtensionResult& e) {
    const Index dg = e.project1.rows(), dh = e.project0.rows();
    return Splitting{vstack(identity(dg), zeros(e.total.dg() - dg, dg)), vstack(identity(dh), zeros(e.total.dh() - dh, dh))};
}

std::pair<TwoRep, TwoCocycle> cocycle_from_extension(const ExtensionResult& e, const Splitting& s) {
    const CrossedModuleAlg& t = e.total;
    const int dg = static_cast<int>(e.project1.rows()), dh = static_cast<int>(e.project0.rows());
    const int dw = static_cast<int>(e.include1.cols()), dv = static_cast<int>(e.include0.cols());
    if (s.sigma1.rows() != t.dg() || s.sigma1.cols() != dg || s.sigma0.rows() != t.dh() || s.sigma0.cols() != dh)
        throw std::invalid_argument("cocycle_from_extension: splitting has the wrong shape");
    if (mul(e.project1, s.sigma1) != identity(dg) || mul(e.project0, s.sigma0) != identity(dh))
        throw std::invalid_argument("cocycle_from_extension: splitting is not a section of the projections");
    Decomposition d1{inverse(hstack(s.sigma1, e.include1)), dg};
    Decomposition d0{inverse(hstack(s.sigma0, e.include0)), dh};

    auto sig1 = [&](const Vec& x) { return apply(s.sigma1, x); };
    auto sig0 = [&](const Vec& y) { return apply(s.sigma0, y); };

    // quotient crossed module, read through σ
    std::vector<Mat> adg, adh;
    for (int a = 0; a < dg; ++a) {
        Mat m = zeros(dg, dg);
        for (int b = 0; b < dg; ++b) m.col(b) = apply(e.project1, t.g.bracket(sig1(unit(dg, a)), sig1(unit(dg, b))));
        adg.push_back(m);
    }
    for (int i = 0; i < dh; ++i) {
        Mat m = zeros(dh, dh);
        for (int j = 0; j < dh; ++j) m.col(j) = apply(e.project0, t.h.bracket(sig0(unit(dh, i)), sig0(unit(dh, j))));
        adh.push_back(m);
    }
    CrossedModuleAlg base;
    base.g = LieAlgebra::from_ad(adg);
    base.h = LieAlgebra::from_ad(adh);
    base.mu = mul(e.project0, mul(t.mu, s.sigma1));
    base.action = Representation{base.h, dg, {}};
    std::vector<Mat> Ls;  // L^ε_{σ₀ y_i}
    for (int i = 0; i < dh; ++i) {
        Ls.push_back(t.L(sig0(unit(dh, i))));
        base.action.action.push_back(mul(e.project1, mul(Ls.back(), s.sigma1)));
    }

    TwoRep r = trivial_two_rep(base, TwoVectorSpace{dw, dv, zeros(dv, dw)});
    for (int k = 0; k < dw; ++k) r.target.phi.col(k) = d0.split(apply(t.mu, e.include1.col(k)));
    for (int i = 0; i < dh; ++i)
        for (int k = 0; k < dv; ++k) {
            r.rho0V.action[static_cast<size_t>(i)].col(k) = d0.split(t.h.bracket(sig0(unit(dh, i)), e.include0.col(k)));
        }
    for (int i = 0; i < dh; ++i)
        for (int k = 0; k < dw; ++k) r.rho0W.action[static_cast<size_t>(i)].col(k) = d1.split(apply(Ls[static_cast<size_t>(i)], e.include1.col(k)));
    for (int k = 0; k < dv; ++k) {
        Mat lv = t.L(e.include0.col(k));
        for (int a = 0; a < dg; ++a) r.rho1[static_cast<size_t>(a)].col(k) = -d1.split(apply(lv, sig1(unit(dg, a))));
    }

    const ExteriorBasis& pairs = exterior(dh, 2);
    Vec om0 = zero_vec(pairs.size() * dv);
    for (Index p = 0; p < pairs.size(); ++p) {
        Vec y0 = unit(dh, pairs.tuple(p)[0]), y1 = unit(dh, pairs.tuple(p)[1]);
        om0.segment(p * dv, dv) = d0.split(Vec(sig0(base.h.bracket(y0, y1)) - t.h.bracket(sig0(y0), sig0(y1))));
    }
    Vec al = zero_vec(static_cast<Index>(dh) * dg * dw);
    for (int i = 0; i < dh; ++i)
        for (int a = 0; a < dg; ++a) {
            Vec lyx = apply(base.L_basis(i), unit(dg, a));
            al.segment((static_cast<Index>(i) * dg + a) * dw, dw) =
                d1.split(Vec(sig1(lyx) - apply(Ls[static_cast<size_t>(i)], sig1(unit(dg, a)))));
        }
    Vec ph = zero_vec(static_cast<Index>(dg + dh) * dv);
    for (int a = 0; a < dg; ++a) {
        Vec xa = unit(dg, a);
        ph.segment(static_cast<Index>(a) * dv, dv) = d0.split(Vec(apply(t.mu, sig1(xa)) - sig0(apply(base.mu, xa))));
    }
    TwoCocycle c = make_cocycle(r, om0, al, ph);
    return {r, c};
}

std::optional<Coboundary> coboundary_solve(const TwoCocycle& c1, const TwoCocycle& c2) {
    if (!same_context(c1.rep, c2.rep)) throw std::invalid_argument("coboundary_solve: cocycles live in different contexts");
    Lattice lat(c1.rep, LatticeOptions{-1, NablaSigns::frozen()});
    CoboundaryMap cm = coboundary_map(lat);
    Vec diff = pack_degree2(lat, c2) - pack_degree2(lat, c1);
    auto z = solve_linear(cm.full, diff);
    if (!z) return std::nullopt;
    const int dg = c1.xmod().dg(), dh = c1.xmod().dh(), dw = c1.rep.dimW(), dv = c1.rep.dimV();
    Coboundary out{zeros(dv, dh), zeros(dw, dg)};
    for (int i = 0; i < dh; ++i) out.lambda0.col(i) = z->segment(static_cast<Index>(i) * dv, dv);
    for (int a = 0; a < dg; ++a) out.lambda1.col(a) = z->segment(cm.n0 + static_cast<Index>(a) * dw, dw);
    return out;
}

TwoCocycle add_coboundary(const TwoCocycle& c, const Coboundary& l) {
    Lattice lat(c.rep, LatticeOptions{-1, NablaSigns::frozen()});
    CoboundaryMap cm = coboundary_map(lat);
    const int dg = c.xmod().dg(), dh = c.xmod().dh(), dw = c.rep.dimW(), dv = c.rep.dimV();
    if (l.lambda0.rows() != dv || l.lambda0.cols() != dh || l.lambda1.rows() != dw || l.lambda1.cols() != dg)
        throw std::invalid_argument("add_coboundary: lambda shapes");
    Vec z = zero_vec(cm.n0 + cm.n1);
    for (int i = 0; i < dh; ++i) z.segment(static_cast<Index>(i) * dv, dv) = l.lambda0.col(i);
    for (int a = 0; a < dg; ++a) z.segment(cm.n0 + static_cast<Index>(a) * dw, dw) = l.lambda1.col(a);
    Vec d = apply(cm.full, z);
    return make_cocycle(c.rep, c.omega0.values + lat.component_of(2, d, kOmega0).values,
                        c.alpha.values + lat.component_of(2, d, kAlpha).values,
                        c.phimap.values + lat.component_of(2, d, kPhi).values);
}

ClassCount extension_class_count(const TwoRep& r) {
    Lattice lat(r, LatticeOptions{-1, NablaSigns::frozen()});
    const int dg = r.source.dg(), dh = r.source.dh(), dv = r.dimV();
    const Index a = lat.cochain_dim(kOmega0), b = lat.cochain_dim(kAlpha), cg = static_cast<Index>(dg) * dv;
    const Index nvars = a + b + cg;
    const Index nres = static_cast<Index>(dg) * dg * r.dimW() + lat.total_dim(3);
    Mat sys = zeros(nres, nvars);
    Mat n2 = lat.nabla(2);
    for (Index k = 0; k < nvars; ++k) {
        Vec om = zero_vec(a), al = zero_vec(b), ph = zero_vec(static_cast<Index>(dg + dh) * dv);
        if (k < a)
            om(k) = 1;
        else if (k < a + b)
            al(k - a) = 1;
        else
            ph(k - a - b) = 1;
        TwoCocycle c = make_cocycle(r, om, al, ph);
        Mat w1 = c.omega1_matrix();
        Mat sym = w1;  // ω₁(a,b) + ω₁(b,a), column a*dg+b
        for (int x = 0; x < dg; ++x)
            for (int y = 0; y < dg; ++y) sym.col(x * dg + y) += w1.col(y * dg + x);
        Vec col(nres);
        col << sym.reshaped(), apply(n2, pack_degree2(lat, c));
        sys.col(k) = col;
    }
    ClassCount out;
    out.cocycles = nvars - rank(sys);
    CoboundaryMap cm = coboundary_map(lat);
    Mat img = zeros(nvars, cm.full.cols());
    for (Index j = 0; j < cm.full.cols(); ++j) {
        Vec t = triple_coords(lat, cm.full.col(j));
        img.col(j) = t.head(nvars);  // φ's h block is zero on coboundaries
    }
    out.coboundaries = rank(img);
    out.classes = out.cocycles - out.coboundaries;
    return out;
}

Diagnostics validate_trivial_cocycle(const CrossedModuleAlg& x, const Vec& omega, const Vec& phi) {
    Diagnostics out;
    const int dg = x.dg(), dh = x.dh();
    if (omega.size() != binomial(dh, 2) || phi.size() != dg + dh) {
        out.push_back({"shape", {}, "omega must be a 2-form on h and phi a 1-form on g + h"});
        return out;
    }
    Vec c(omega.size() + phi.size());
    c << omega, phi;
    Vec d = apply(trivial_total_complex(x, 2), c);
    const char* names[] = {"delta omega = 0", "partial omega + delta phi = 0", "partial phi = 0"};
    for (int p = 0; p < 3; ++p) {
        const Index off = trivial_offset(x, 3, p);
        const Index len = (p + 1 < 3 ? trivial_offset(x, 3, p + 1) : trivial_total_dim(x, 3)) - off;
        for (Index k = 0; k < len; ++k)
            if (!d(off + k).is_zero()) {
                out.push_back({names[p], {static_cast<int>(k)}, "value " + to_string(d(off + k))});
                break;
            }
    }
    return out;
}

CrossedModuleAlg trivial_coeff_extension(const CrossedModuleAlg& x, const Vec& omega, const Vec& phi) {
    auto diag = validate_trivial_cocycle(x, omega, phi);
    if (!diag.empty()) throw InvalidCocycle(diag);
    const int dg = x.dg(), dh = x.dh();
    const ExteriorBasis& pairs = exterior(dh, 2);
    std::vector<Mat> ad;
    for (int i = 0; i < dh; ++i) {
        Mat m = zeros(dh + 1, dh + 1);
        m.topLeftCorner(dh, dh) = x.h.ad_basis(i);
        for (int j = 0; j < dh; ++j) {
            if (i == j) continue;
            Rational w = omega(pairs.index({std::min(i, j), std::max(i, j)}));
            m(dh, j) = i < j ? Rational(-w) : w;
        }
        ad.push_back(m);
    }
    ad.push_back(zeros(dh + 1, dh + 1));
    LieAlgebra h = LieAlgebra::from_ad(ad);
    Mat mu = vstack(x.mu, Mat(phi.head(dg).transpose()));
    Representation act{h, dg, x.action.action};
    act.action.push_back(zeros(dg, dg));
    return CrossedModuleAlg{x.g, h, mu, act};
}

}  // namespace l2c
