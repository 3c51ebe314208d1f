#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie2coh/expm.hpp"
#include "lie2coh/jet.hpp"
#include "lie2coh/numeric.hpp"
#include "support.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

using namespace l2c;
using testsupport::Gen;

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

// Rank by floating-point SVD; fine as an oracle for tiny integer matrices.
Index svd_rank(const Mat& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_double(m));
    Index r = 0;
    for (Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-9) ++r;
    return r;
}

}  // namespace

TEST_CASE("rational parsing canonicalizes") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/-8")) == "1/2");
    CHECK(to_string(parse_rational("6/3")) == "2");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1.5"));
}

TEST_CASE("rank_and_kernel examples") {
    auto id = rank_and_kernel(identity(3));
    CHECK(id.rank == 3);
    CHECK(id.kernel.empty());

    auto z = rank_and_kernel(zeros(2, 2));
    CHECK(z.rank == 0);
    CHECK(z.kernel.size() == 2);

    Mat m = mat({{1, 2}, {2, 4}});
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    Vec v = rk.kernel[0];
    // proportional to (-2, 1)
    CHECK(v(0) == -2 * v(1));
    CHECK(!v(1).is_zero());
}

TEST_CASE("solve_linear examples") {
    Vec b(2);
    b << 1, 2;
    auto x = solve_linear(identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);

    Vec e(2);
    e << 1, 0;
    CHECK(!solve_linear(zeros(2, 2), e));

    Vec ones(2);
    ones << 1, 1;
    auto y = solve_linear(mat({{2, 0}, {0, 3}}), ones);
    REQUIRE(y);
    CHECK((*y)(0) == Rational(1, 2));
    CHECK((*y)(1) == Rational(1, 3));
}

TEST_CASE("rational field laws hold exactly") {
    Gen g(11);
    for (int t = 0; t < 500; ++t) {
        Rational p = g.rational(50, 30), q = g.rational(50, 30), r = g.rational(50, 30);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(boost::multiprecision::denominator(p) > 0);
    }
}

TEST_CASE("rank is transpose invariant and kernels are certified") {
    Gen g(12);
    for (int t = 0; t < 200; ++t) {
        Index r = g.range(1, 6), c = g.range(1, 6);
        Mat m = g.matrix(r, c, 2, 0.5);
        auto rk = rank_and_kernel(m);
        CHECK(rk.rank == rank(Mat(m.transpose())));
        CHECK(rk.rank == svd_rank(m));
        CHECK(rk.rank + static_cast<Index>(rk.kernel.size()) == c);
        for (auto& v : rk.kernel) CHECK(is_zero(mul(m, v)));
        if (!rk.kernel.empty()) CHECK(rank(from_columns(rk.kernel, c)) == static_cast<Index>(rk.kernel.size()));
    }
}

TEST_CASE("solve_linear agrees with rank certificate") {
    Gen g(13);
    for (int t = 0; t < 200; ++t) {
        Index r = g.range(1, 5), c = g.range(1, 5);
        Mat m = g.matrix(r, c, 3, 0.6);
        Vec b = g.coin() ? Vec(mul(m, g.vector(c))) : g.vector(r);
        auto x = solve_linear(m, b);
        bool consistent = rank(m) == rank(hstack(m, b));
        CHECK(x.has_value() == consistent);
        if (x) CHECK(mul(m, *x) == b);
    }
}

TEST_CASE("mul agrees with the dense Eigen product") {
    Gen g(14);
    for (int t = 0; t < 50; ++t) {
        Mat a = g.matrix(g.range(1, 5), 4), b = g.matrix(4, g.range(1, 5));
        CHECK(mul(a, b) == Mat(a * b));
    }
}

TEST_CASE("jet_exp examples") {
    Jet c = jet_exp(Jet(0.3));
    CHECK(c.value() == doctest::Approx(std::exp(0.3)).epsilon(1e-15));

    Jet t = jet_exp(Jet::variable(0, 1, 2));
    CHECK(t.coeff({0, 0, 0, 0}) == doctest::Approx(1.0));
    CHECK(t.coeff({1, 0, 0, 0}) == doctest::Approx(1.0));
    CHECK(t.coeff({2, 0, 0, 0}) == doctest::Approx(0.5));

    const double a = 0.7;
    Jet u = jet_exp(Jet::variable(0, 1, 1, a));
    CHECK(u.value() == doctest::Approx(std::exp(a)));
    CHECK(u.coeff({1, 0, 0, 0}) == doctest::Approx(std::exp(a)));
    CHECK(u.coeff({2, 0, 0, 0}) == 0.0);
}

TEST_CASE("jet arithmetic matches hand Taylor expansions") {
    // f(s,t) = (1+s)/(1-t) = (1+s)(1+t+t^2+t^3)
    Jet s = Jet::variable(0, 2, 3), t = Jet::variable(1, 2, 3);
    Jet f = (Jet(1.0) + s) / (Jet(1.0) - t);
    CHECK(f.coeff({0, 3, 0, 0}) == doctest::Approx(1.0));
    CHECK(f.coeff({1, 2, 0, 0}) == doctest::Approx(1.0));
    CHECK(f.coeff({2, 1, 0, 0}) == doctest::Approx(0.0));
    // e^{st}: mixed derivative ∂s∂t at 0 is 1
    Jet g = jet_exp(s * t);
    CHECK(g.derivative({1, 1, 0, 0}) == doctest::Approx(1.0));
    CHECK(g.coeff({2, 2, 0, 0}) == 0.0);  // beyond order 3
    // x^3 derivative at x0 = 2: 3rd derivative 6
    Jet x = Jet::variable(0, 1, 3, 2.0);
    Jet cube = x * x * x;
    CHECK(cube.derivative({3, 0, 0, 0}) == doctest::Approx(6.0));
    CHECK(cube.derivative({1, 0, 0, 0}) == doctest::Approx(12.0));
}

TEST_CASE("jet exponential is a homomorphism for commuting scalars") {
    Gen g(15);
    for (int trial = 0; trial < 200; ++trial) {
        int nv = g.range(1, 4);
        Jet j(g.real(-1, 1)), k(g.real(-1, 1));
        j = j + Jet::constant(0.0, nv, 2);
        k = k + Jet::constant(0.0, nv, 2);
        for (int slot = 1; slot < Jet::kSize; ++slot) {
            if (Jet::monomial_degree(slot) > 2) break;
            bool used = true;
            for (int v = nv; v < Jet::kMaxVars; ++v)
                if (Jet::monomial(slot)[static_cast<size_t>(v)] != 0) used = false;
            if (!used) continue;
            j.coeff_at(slot) = g.real(-1, 1);
            k.coeff_at(slot) = g.real(-1, 1);
        }
        Jet lhs = jet_exp(j) * jet_exp(k), rhs = jet_exp(j + k);
        for (int slot = 0; slot < Jet::kSize; ++slot)
            CHECK(std::abs(lhs.coeff_at(slot) - rhs.coeff_at(slot)) <= 1e-12);
    }
}

TEST_CASE("templated expm matches the Eigen matrix exponential") {
    Gen g(16);
    for (int t = 0; t < 50; ++t) {
        Index n = g.range(1, 4);
        Eigen::MatrixXd a = g.dmatrix(n, n, g.coin() ? 0.5 : 3.0);
        Eigen::MatrixXd ref = a.exp();
        Eigen::MatrixXd got = expm<double>(a);
        CHECK((got - ref).norm() <= 1e-9 * std::max(1.0, ref.norm()));
    }
}

TEST_CASE("expm over jets differentiates the one-parameter group") {
    Gen g(17);
    Eigen::MatrixXd a = g.dmatrix(3, 3);
    MatT<Jet> ta = lift<Jet>(a) * Jet::variable(0, 1, 2);
    MatT<Jet> e = expm<Jet>(ta);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) {
            CHECK(e(i, j).value() == doctest::Approx(i == j ? 1.0 : 0.0));
            CHECK(e(i, j).coeff({1, 0, 0, 0}) == doctest::Approx(a(i, j)));
            CHECK(e(i, j).coeff({2, 0, 0, 0}) == doctest::Approx((a * a)(i, j) / 2));
        }
    MatT<double> m = g.dmatrix(3, 3) + 3.0 * Eigen::MatrixXd::Identity(3, 3);
    CHECK((inverse<double>(m) * m - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-12);
}
