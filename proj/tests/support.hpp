#pragma once

#include "lie2coh/numeric.hpp"

#include <cstdint>
#include <random>

namespace testsupport {

using l2c::Index;
using l2c::Mat;
using l2c::Rational;
using l2c::Vec;

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    Rational rational(int span = 5, int maxden = 4) {
        int d = range(1, maxden);
        return Rational(range(-span, span), d);
    }
    Rational small_int(int span = 2) { return Rational(range(-span, span)); }

    Mat matrix(Index r, Index c, int span = 2, double density = 0.7) {
        Mat m = l2c::zeros(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j)
                if (coin(density)) m(i, j) = small_int(span);
        return m;
    }
    Vec vector(Index n, int span = 3) {
        Vec v(n);
        for (Index i = 0; i < n; ++i) v(i) = small_int(span);
        return v;
    }
    Eigen::MatrixXd dmatrix(Index r, Index c, double scale = 1.0) {
        Eigen::MatrixXd m(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j) m(i, j) = real(-scale, scale);
        return m;
    }
};

}  // namespace testsupport
