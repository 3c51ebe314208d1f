#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen_lie2.hpp"
#include "lie2coh/lie2.hpp"

using namespace l2c;
using namespace testsupport;

TEST_CASE("validate_crossed_module examples") {
    CHECK(validate_crossed_module(xmod_from_algebra(aff1())).empty());
    CHECK(validate_crossed_module(ideal_inclusion_aff1()).empty());
    CHECK(validate_crossed_module(line_identity()).empty());
    // μ = id with a nonzero action breaks Peiffer: L_{μx}x' = x' but [x,x'] = 0
    CrossedModuleAlg bad = line_identity();
    bad.action.action[0] = scalar_mat(1);
    auto d = validate_crossed_module(bad);
    bool peiffer = false;
    for (auto& v : d)
        if (v.identity.rfind("Peiffer", 0) == 0) peiffer = true;
    CHECK(peiffer);
}

TEST_CASE("lie2_arrows examples") {
    CHECK(lie2_arrows(xmod_from_algebra(aff1())) == aff1());
    LieAlgebra a = lie2_arrows(line_scaling());
    // [(x0,y0),(x1,y1)] = (y0 x1 - y1 x0, 0)
    Vec u = vec({2, 3}), w = vec({5, 7});
    CHECK(a.bracket(u, w) == vec({3 * 5 - 7 * 2, 0}));
    LieAlgebra b = lie2_arrows(ideal_inclusion_aff1());
    CHECK(b.dim() == 3);
    CHECK(validate_lie_algebra(b).empty());
}

TEST_CASE("xmod_from_quadruple examples and errors") {
    // h abelian, I = 0: V →0 h
    LieAlgebra h(2);
    Representation rho{h, 1, {scalar_mat(3), scalar_mat(-1)}};
    CrossedModuleAlg x = xmod_from_quadruple(h, {}, 1, rho);
    CHECK(validate_crossed_module(x).empty());
    CHECK(is_zero(x.mu));

    CrossedModuleAlg inc = ideal_inclusion_aff1();
    CHECK(inc.dg() == 1);
    CHECK(inc.mu == vec({0, 1}));

    CrossedModuleAlg q = quadruple_aff1_line();
    CHECK(q.dg() == 2);
    CHECK(validate_crossed_module(q).empty());

    CHECK_THROWS(xmod_from_quadruple(aff1(), {0}, 0, Representation::trivial(aff1(), 0)));
    Representation notkilled{aff1(), 1, {scalar_mat(0), scalar_mat(1)}};
    CHECK_THROWS(xmod_from_quadruple(aff1(), {1}, 1, notkilled));
}

TEST_CASE("structure_report examples") {
    auto r0 = structure_report(xmod_from_algebra(aff1()));
    CHECK(r0.orbit_basis.cols() == 0);
    CHECK(r0.isotropy_basis.cols() == 0);

    auto r1 = structure_report(line_identity());
    CHECK(r1.orbit_basis.cols() == 1);
    CHECK(r1.isotropy_basis.cols() == 0);

    auto r2 = structure_report(quadruple_aff1_line());
    // ker μ = V (first coordinate) and the induced action is rho
    REQUIRE(r2.isotropy_basis.cols() == 1);
    CHECK(r2.isotropy_basis == vec({1, 0}));
    CHECK(r2.induced_action[0] == scalar_mat(1));
    CHECK(r2.induced_action[1] == scalar_mat(0));
    CHECK(r2.induced_well_defined);
}

TEST_CASE("nerve_algebra examples") {
    CrossedModuleAlg x = line_scaling();
    CHECK(nerve_algebra(x, 0).underlying == x.h);
    CHECK(nerve_algebra(x, 1).underlying == lie2_arrows(x));
    CrossedModuleAlg z = xmod_from_algebra(aff1());
    CHECK(nerve_algebra(z, 2).underlying == aff1());
}

TEST_CASE("simplicial_maps examples") {
    CrossedModuleAlg x = quadruple_aff1_line();
    auto s0 = simplicial_maps(x, 0);
    REQUIRE(s0.faces.size() == 2);
    // ŝ(x,y) = y, t̂(x,y) = y + μx on g ⊕ h
    Mat src = hstack(zeros(2, 2), identity(2));
    Mat tgt = hstack(x.mu, identity(2));
    CHECK(s0.faces[0] == src);
    CHECK(s0.faces[1] == tgt);

    auto sz = simplicial_maps(xmod_from_algebra(aff1()), 3);
    for (auto& f : sz.faces) CHECK(f == identity(2));

    CrossedModuleAlg l = line_scaling();
    auto s1 = simplicial_maps(l, 1);
    // (x0, x1; y) ↦ (x0 + x1; y)
    Mat expect = zeros(2, 3);
    expect(0, 0) = 1;
    expect(0, 1) = 1;
    expect(1, 2) = 1;
    CHECK(s1.faces[1] == expect);
}

TEST_CASE("nerve algebras, faces and simplicial identities on fixtures") {
    for (auto& [name, x] : fixture_xmods()) {
        CAPTURE(name);
        REQUIRE(validate_crossed_module(x).empty());
        auto rep = structure_report(x);
        CHECK(rep.orbit_is_ideal);
        CHECK(rep.isotropy_abelian);
        CHECK(rep.isotropy_central);
        CHECK(rep.induced_well_defined);
        for (int p = 0; p <= 3; ++p) {
            NerveAlgebra np = nerve_algebra(x, p);
            CHECK(np.dim() == p * x.dg() + x.dh());
            CHECK(validate_lie_algebra(np.underlying).empty());
            NerveAlgebra np1 = nerve_algebra(x, p + 1);
            auto s = simplicial_maps(x, p);
            for (auto& f : s.faces) CHECK(validate_homomorphism(np1.underlying, np.underlying, f).empty());
            CHECK(validate_homomorphism(np.underlying, x.h, s.final_target).empty());
            // t̂_p ∘ ∂_k = t̂_{p+1} for k ≥ 1 (∂_0 forgets x⁰)
            for (int k = 1; k <= p + 1; ++k) CHECK(mul(s.final_target, s.faces[static_cast<size_t>(k)]) == final_target(x, p + 1));
        }
        for (int p = 0; p <= 2; ++p) {
            auto lo = simplicial_maps(x, p);
            auto hi = simplicial_maps(x, p + 1);
            for (int j = 0; j <= p + 1; ++j)
                for (int k = 0; k <= j; ++k)
                    CHECK(mul(lo.faces[static_cast<size_t>(j)], hi.faces[static_cast<size_t>(k)]) ==
                          mul(lo.faces[static_cast<size_t>(k)], hi.faces[static_cast<size_t>(j + 1)]));
        }
    }
}

TEST_CASE("gl_phi examples") {
    GlPhi one = gl_phi(TwoVectorSpace{1, 1, scalar_mat(1)});
    CHECK(one.xmod.dh() == 1);
    CHECK(one.xmod.dg() == 1);
    CHECK(is_zero(one.xmod.g.ad_basis(0)));
    auto [F, f] = one.pair0(vec({1}));
    CHECK(F == f);

    Mat phi(1, 2);
    phi << 1, 0;
    GlPhi gp = gl_phi(TwoVectorSpace{2, 1, phi});
    CHECK(gp.xmod.dh() == 3);
    CHECK(gp.xmod.dg() == 2);
    Vec a = vec({2, 5}), b = vec({-3, 7});
    // [A,B] = (0, a2 b1 - a1 b2)
    CHECK(gp.xmod.g.bracket(a, b) == vec({0, 5 * (-3) - 2 * 7}));

    GlPhi z = gl_phi(TwoVectorSpace{2, 3, zeros(3, 2)});
    CHECK(z.xmod.dh() == 4 + 9);
    CHECK(is_zero(z.xmod.mu));
    for (int i = 0; i < z.xmod.dg(); ++i) CHECK(is_zero(z.xmod.g.ad_basis(i)));
}

TEST_CASE("gl_phi is a crossed module for random phi") {
    Gen g(41);
    for (int t = 0; t < 50; ++t) {
        TwoVectorSpace v = random_two_vector(g, 4);
        GlPhi gp = gl_phi(v);
        CHECK(gp.xmod.dg() == v.dimW * v.dimV);
        // dim gl(φ)_0 from vec(φF - fφ) = (I ⊗ φ) vec F - (φᵀ ⊗ I) vec f
        Mat cons = hstack(kron(identity(v.dimW), v.phi), -kron(Mat(v.phi.transpose()), identity(v.dimV)));
        CHECK(gp.xmod.dh() == cons.cols() - rank(cons));
        CHECK(validate_crossed_module(gp.xmod).empty());
    }
}
