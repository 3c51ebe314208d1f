#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen_lie.hpp"
#include "lie2coh/exterior.hpp"
#include "lie2coh/liealg.hpp"

using namespace l2c;
using namespace testsupport;

namespace {

Mat mat(std::initializer_list<std::initializer_list<int>> rows) {
    Mat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (auto& r : rows) {
        Index j = 0;
        for (int x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("exterior basis ordering and signs") {
    const auto& b = exterior(4, 2);
    CHECK(b.size() == 6);
    CHECK(b.tuple(0) == Tuple{0, 1});
    CHECK(b.tuple(5) == Tuple{2, 3});
    CHECK(b.index({1, 3}) == 4);
    Tuple t{2, 0, 1};
    CHECK(sort_sign(t) == 1);
    Tuple u{1, 0};
    CHECK(sort_sign(u) == -1);
    Tuple w{1, 1};
    CHECK(sort_sign(w) == 0);
    for (int n = 0; n <= 5; ++n)
        for (int q = 0; q <= 6; ++q) CHECK(exterior(n, q).size() == binomial(n, q));
}

TEST_CASE("lambda_pullback is given by minors") {
    Gen g(31);
    Mat m = g.matrix(3, 3, 3, 1.0);
    Mat p2 = lambda_pullback(m, 2);
    // coefficient of e_J in Me_{i0} ∧ Me_{i1} is the 2×2 minor det M[J, I]
    const auto& b = exterior(3, 2);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) {
            const Tuple& I = b.tuple(i);
            const Tuple& J = b.tuple(j);
            Rational det = m(J[0], I[0]) * m(J[1], I[1]) - m(J[1], I[0]) * m(J[0], I[1]);
            CHECK(p2(i, j) == det);
        }
    Mat p3 = lambda_pullback(m, 3);
    Rational det3 = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(p3(0, 0) == det3);
    // functoriality: (AB)^* = B^* A^*
    Mat a = g.matrix(3, 4), c = g.matrix(4, 2);
    CHECK(lambda_pullback(mul(a, c), 2) == mul(lambda_pullback(c, 2), lambda_pullback(a, 2)));
}

TEST_CASE("validate_lie_algebra examples") {
    CHECK(validate_lie_algebra(LieAlgebra(4)).empty());
    CHECK(validate_lie_algebra(aff1()).empty());
    CHECK(validate_lie_algebra(sl2()).empty());
    // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e2 breaks Jacobi on (1,2,3)
    LieAlgebra bad = LieAlgebra::from_brackets(3, {{0, 1, vec({0, 0, 1})}, {0, 2, vec({0, 1, 0})}, {1, 2, vec({0, 1, 0})}});
    auto d = validate_lie_algebra(bad);
    REQUIRE(d.size() == 1);
    CHECK(d[0].witness == std::vector<int>{0, 1, 2});
    // with [e2,e3]=e1 instead the triple still satisfies Jacobi
    LieAlgebra ok = LieAlgebra::from_brackets(3, {{0, 1, vec({0, 0, 1})}, {0, 2, vec({0, 1, 0})}, {1, 2, vec({1, 0, 0})}});
    CHECK(validate_lie_algebra(ok).empty());
}

TEST_CASE("validate_representation examples") {
    CHECK(validate_representation(Representation::trivial(aff1(), 2)).empty());
    Representation line{LieAlgebra(1), 3, {mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})}};
    CHECK(validate_representation(line).empty());
    // ρ(e1) = diag(1,0), ρ(e2) = E12 respects [e1,e2] = e2
    Representation good{aff1(), 2, {mat({{1, 0}, {0, 0}}), mat({{0, 1}, {0, 0}})}};
    CHECK(validate_representation(good).empty());
    // diag(0,1) gives commutator -E12 and is rejected
    Representation flipped{aff1(), 2, {mat({{0, 0}, {0, 1}}), mat({{0, 1}, {0, 0}})}};
    auto d = validate_representation(flipped);
    REQUIRE(d.size() == 1);
    CHECK(d[0].witness == std::vector<int>{0, 1});
}

TEST_CASE("ce_differential examples") {
    for (int q = 0; q <= 3; ++q) CHECK(is_zero(ce_differential(Representation::trivial(LieAlgebra(3), 2), q)));
    Mat d1 = ce_differential(Representation::trivial(aff1(), 1), 1);
    CHECK(d1 == mat({{0, -1}}));
    Representation one{LieAlgebra(1), 1, {mat({{1}})}};
    CHECK(ce_differential(one, 0) == mat({{1}}));
}

TEST_CASE("ce_differential squares to zero and has the right size") {
    Gen g(32);
    for (int t = 0; t < 100; ++t) {
        LieAlgebra alg = random_lie_algebra(g, 3);
        REQUIRE(validate_lie_algebra(alg).empty());
        Representation r = random_representation(g, alg, 3);
        REQUIRE(validate_representation(r).empty());
        for (int q = 0; q <= alg.dim(); ++q) {
            Mat d = ce_differential(r, q);
            CHECK(d.cols() == binomial(alg.dim(), q) * r.space_dim);
            CHECK(ce_cochain_dim(r, q) == d.cols());
            CHECK(is_zero(mul(ce_differential(r, q + 1), d)));
        }
    }
}

TEST_CASE("low degree CE cohomology matches invariants and abelianization") {
    Gen g(33);
    for (int t = 0; t < 60; ++t) {
        LieAlgebra alg = random_lie_algebra(g, 3);
        Representation r = random_representation(g, alg, 3);
        // H^0 = joint kernel of the action
        Mat stacked = zeros(0, r.space_dim);
        for (auto& a : r.action) stacked = vstack(stacked, a);
        CHECK(r.space_dim - rank(ce_differential(r, 0)) == r.space_dim - rank(stacked));
        // trivial coefficients: dim H^1 = dim g - dim [g,g]
        Representation triv = Representation::trivial(alg, 1);
        std::vector<Vec> derived;
        for (int i = 0; i < alg.dim(); ++i)
            for (int j = i + 1; j < alg.dim(); ++j) derived.push_back(alg.bracket_basis(i, j));
        Index dder = derived.empty() ? 0 : rank(from_columns(derived, alg.dim()));
        Index h1 = alg.dim() - rank(ce_differential(triv, 1)) - rank(ce_differential(triv, 0));
        CHECK(h1 == alg.dim() - dder);
    }
}
