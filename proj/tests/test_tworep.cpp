#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen_tworep.hpp"
#include "lie2coh/tworep.hpp"

using namespace l2c;
using namespace testsupport;

namespace {

bool flags(const Diagnostics& d, const std::string& prefix) {
    for (auto& v : d)
        if (v.identity.rfind(prefix, 0) == 0) return true;
    return false;
}

// (fg, fh): a → b is a crossed-module map, checked on basis vectors.
bool is_xmod_map(const CrossedModuleAlg& a, const CrossedModuleAlg& b, const Mat& fg, const Mat& fh) {
    if (!validate_homomorphism(a.g, b.g, fg).empty() || !validate_homomorphism(a.h, b.h, fh).empty()) return false;
    if (mul(b.mu, fg) != mul(fh, a.mu)) return false;
    for (int k = 0; k < a.dh(); ++k)
        if (mul(fg, a.L_basis(k)) != mul(b.L(fh.col(k)), fg)) return false;
    return true;
}

Mat projection(int keep, int total) { return hstack(identity(keep), zeros(keep, total - keep)); }

}  // namespace

TEST_CASE("validate_two_rep examples") {
    for (auto& [name, x] : fixture_xmods()) {
        CAPTURE(name);
        CHECK(validate_two_rep(trivial_two_rep(x, TwoVectorSpace{2, 1, vec({1, 1}).transpose()})).empty());
    }
    // W = 0 and a rep of h/μ(g): ideal inclusion into aff(1) has μ(g) = span(e2)
    CrossedModuleAlg inc = ideal_inclusion_aff1();
    TwoRep unit_rep = trivial_two_rep(inc, TwoVectorSpace{0, 1, zeros(1, 0)});
    unit_rep.rho0V.action[0] = scalar_mat(5);
    CHECK(validate_two_rep(unit_rep).empty());
    unit_rep.rho0V.action[1] = scalar_mat(1);  // no longer vanishes on μ(g), and breaks the bracket too
    CHECK(flags(validate_two_rep(unit_rep), "axiom 2"));

    CrossedModuleAlg z = xmod_from_algebra(LieAlgebra(1));
    TwoRep bad = trivial_two_rep(z, TwoVectorSpace{1, 1, scalar_mat(1)});
    bad.rho0V.action[0] = scalar_mat(2);
    auto d = validate_two_rep(bad);
    CHECK(flags(d, "axiom 1"));
    REQUIRE(!d.empty());
    CHECK(d[0].witness == std::vector<int>{0});
}

TEST_CASE("each axiom is flagged separately") {
    // axiom 3: ρ1 on an abelian g with ρ1(x0) φ ρ1(x1) ≠ ρ1(x1) φ ρ1(x0)
    CrossedModuleAlg ab{LieAlgebra(2), LieAlgebra(0), zeros(0, 2), Representation::trivial(LieAlgebra(0), 2)};
    Mat phi = identity(2);
    TwoRep r = trivial_two_rep(ab, TwoVectorSpace{2, 2, phi});
    Mat a(2, 2), b(2, 2);
    a << 0, 1, 0, 0;
    b << 0, 0, 1, 0;
    r.rho1 = {a, b};
    auto d = validate_two_rep(r);
    // with μ = 0 axiom 2 forces φρ1 = 0, so this one also trips axiom 2
    CHECK(flags(d, "axiom 3"));
    CHECK(!flags(d, "axiom 1"));
    CHECK(!flags(d, "axiom 4"));

    // axiom 4: line-scaling with ρ1 = 1 but trivial object actions
    TwoRep s = trivial_two_rep(line_scaling(), TwoVectorSpace{1, 1, scalar_mat(0)});
    s.rho1 = {scalar_mat(1)};
    d = validate_two_rep(s);
    CHECK(flags(d, "axiom 4"));
    CHECK(!flags(d, "axiom 3"));

    TwoRep shape = trivial_two_rep(line_scaling(), TwoVectorSpace{1, 1, scalar_mat(0)});
    shape.rho1.clear();
    CHECK(flags(validate_two_rep(shape), "shape"));
}

TEST_CASE("adjoint_rep examples") {
    TwoRep a0 = adjoint_rep(xmod_from_algebra(aff1()));
    CHECK(a0.dimW() == 0);
    CHECK(a0.rho0V.action == adjoint(aff1()).action);

    TwoRep s = adjoint_rep(line_scaling());
    CHECK(s.rho1[0] == scalar_mat(-1));
    CHECK(s.rho0W.action[0] == scalar_mat(1));
    CHECK(s.rho0V.action[0] == scalar_mat(0));
    CHECK(validate_two_rep(s).empty());

    CHECK(validate_two_rep(adjoint_rep(ideal_inclusion_aff1())).empty());
    for (auto& [name, x] : fixture_xmods()) {
        CAPTURE(name);
        CHECK(validate_two_rep(adjoint_rep(x)).empty());
    }
}

TEST_CASE("adjoint_rep is valid on random quadruples") {
    Gen g(7);
    for (int t = 0; t < 50; ++t) {
        CrossedModuleAlg x = random_quadruple_xmod(g, 3, 3);
        REQUIRE(validate_crossed_module(x).empty());
        auto d = validate_two_rep(adjoint_rep(x));
        CHECK(d.empty());
        if (!d.empty()) MESSAGE(describe(d[0]));
    }
}

TEST_CASE("tautological_rep of gl(phi)") {
    Gen g(8);
    for (int t = 0; t < 20; ++t) {
        GlPhi gp = gl_phi(random_two_vector(g, 3));
        CHECK(validate_two_rep(tautological_rep(gp)).empty());
    }
}

TEST_CASE("bar_rho examples") {
    CrossedModuleAlg x = quadruple_aff1_line();
    Representation z = bar_rho(trivial_two_rep(x, TwoVectorSpace{1, 2, zeros(2, 1)}));
    for (auto& m : z.action) CHECK(is_zero(m));

    TwoRep s = adjoint_rep(line_scaling());
    Representation b = bar_rho(s);
    REQUIRE(b.action.size() == 2);
    // ρ̄(x) = [[0, -1],[0, 0]], ρ̄(y) = [[1, 0],[0, 0]]
    Mat bx(2, 2), by(2, 2);
    bx << 0, -1, 0, 0;
    by << 1, 0, 0, 0;
    CHECK(b.action[0] == bx);
    CHECK(b.action[1] == by);
    CHECK(validate_representation(b).empty());

    // W = 0: ρ̄ = ρ₀⁰ ∘ projection onto h
    CrossedModuleAlg inc = ideal_inclusion_aff1();
    TwoRep unit_rep = trivial_two_rep(inc, TwoVectorSpace{0, 1, zeros(1, 0)});
    unit_rep.rho0V.action[0] = scalar_mat(3);
    Representation u = bar_rho(unit_rep);
    CHECK(u.action[0] == scalar_mat(0));
    CHECK(u.action[1] == scalar_mat(3));
    CHECK(u.action[2] == scalar_mat(0));

    TwoRep bad = trivial_two_rep(line_scaling(), TwoVectorSpace{1, 1, scalar_mat(0)});
    bad.rho1 = {scalar_mat(1)};
    CHECK_THROWS(bar_rho(bad));
    CHECK_THROWS(semidirect_2alg(line_scaling(), bad));
}

TEST_CASE("bar_rho is a representation for random valid 2-reps") {
    Gen g(9);
    for (int t = 0; t < 100; ++t) {
        TwoRep r = random_two_rep(g);
        REQUIRE(validate_two_rep(r).empty());
        Representation b = bar_rho(r);
        CHECK(validate_representation(b).empty());
        // on random elements, through the bracket of g ⊕_L h
        LieAlgebra arrows = lie2_arrows(r.source);
        Vec u = g.vector(arrows.dim(), 2), w = g.vector(arrows.dim(), 2);
        Mat bu = b.act(u), bw = b.act(w);
        CHECK(b.act(arrows.bracket(u, w)) == Mat(mul(bu, bw) - mul(bw, bu)));
    }
}

TEST_CASE("semidirect_2alg examples") {
    CrossedModuleAlg x = quadruple_aff1_line();
    CrossedModuleAlg same = semidirect_2alg(x, trivial_two_rep(x, TwoVectorSpace{0, 0, zeros(0, 0)}));
    CHECK(same.g == x.g);
    CHECK(same.h == x.h);
    CHECK(same.mu == x.mu);
    CHECK(same.action.action == x.action.action);

    CrossedModuleAlg prod = semidirect_2alg(x, trivial_two_rep(x, TwoVectorSpace{1, 1, scalar_mat(0)}));
    CHECK(validate_crossed_module(prod).empty());
    CHECK(prod.g == direct_sum(x.g, LieAlgebra(1)));
    CHECK(prod.h == direct_sum(x.h, LieAlgebra(1)));

    for (auto& [name, f] : fixture_xmods()) {
        CAPTURE(name);
        CHECK(validate_crossed_module(semidirect_2alg(f, adjoint_rep(f))).empty());
    }
}

TEST_CASE("semidirect_2alg on random valid 2-reps") {
    Gen g(10);
    for (int t = 0; t < 60; ++t) {
        TwoRep r = random_two_rep(g);
        CrossedModuleAlg s = semidirect_2alg(r.source, r);
        CHECK(s.dg() == r.source.dg() + r.dimW());
        CHECK(s.dh() == r.source.dh() + r.dimV());
        CHECK(validate_crossed_module(s).empty());
        CHECK(is_xmod_map(s, r.source, projection(r.source.dg(), s.dg()), projection(r.source.dh(), s.dh())));
    }
}
