#pragma once

#include "lie2coh/homalg.hpp"
#include "support.hpp"

namespace testsupport {

inline l2c::FinComplex random_complex(Gen& g, int lo, int ndeg, int maxdim) {
    std::vector<Index> dims;
    for (int i = 0; i < ndeg; ++i) dims.push_back(g.range(0, maxdim));
    std::vector<Mat> d;
    for (int i = 0; i + 1 < ndeg; ++i) {
        Index src = dims[static_cast<size_t>(i)], dst = dims[static_cast<size_t>(i + 1)];
        if (i == 0) {
            d.push_back(g.matrix(dst, src, 2, 0.6));
            continue;
        }
        // rows of q annihilate the image of the previous differential
        const Mat& prev = d.back();
        auto ann = l2c::rank_and_kernel(Mat(prev.transpose()));
        Mat q = l2c::from_columns(ann.kernel, src).transpose();
        Mat m = g.matrix(dst, q.rows(), 2, 0.7);
        d.push_back(l2c::mul(m, q));
    }
    return l2c::FinComplex(lo, dims, d);
}

// Random element of the solution space of d_B f = f d_A.
inline l2c::ChainMap random_chain_map(Gen& g, const l2c::FinComplex& a, const l2c::FinComplex& b) {
    int lo = a.lo(), hi = a.hi();
    std::vector<Index> offs;
    Index unknowns = 0;
    for (int n = lo; n <= hi; ++n) {
        offs.push_back(unknowns);
        unknowns += a.dim(n) * b.dim(n);
    }
    Index eqs = 0;
    for (int n = lo; n < hi; ++n) eqs += b.dim(n + 1) * a.dim(n);
    Mat sys = l2c::zeros(eqs, unknowns);
    Index row = 0;
    for (int n = lo; n < hi; ++n) {
        Mat da = a.d(n), db = b.d(n);
        Index off_n = offs[static_cast<size_t>(n - lo)], off_n1 = offs[static_cast<size_t>(n + 1 - lo)];
        // entry (i,j) of db*f_n - f_{n+1}*da
        for (Index i = 0; i < b.dim(n + 1); ++i)
            for (Index j = 0; j < a.dim(n); ++j, ++row) {
                for (Index k = 0; k < b.dim(n); ++k) sys(row, off_n + k * a.dim(n) + j) += db(i, k);
                for (Index k = 0; k < a.dim(n + 1); ++k) sys(row, off_n1 + i * a.dim(n + 1) + k) -= da(k, j);
            }
    }
    auto rk = l2c::rank_and_kernel(sys);
    Vec x = l2c::zero_vec(unknowns);
    for (auto& v : rk.kernel)
        if (g.coin(0.6)) x += g.small_int(2) * v;
    std::vector<Mat> comps;
    for (int n = lo; n <= hi; ++n) {
        Mat f = l2c::zeros(b.dim(n), a.dim(n));
        for (Index i = 0; i < b.dim(n); ++i)
            for (Index j = 0; j < a.dim(n); ++j) f(i, j) = x(offs[static_cast<size_t>(n - lo)] + i * a.dim(n) + j);
        comps.push_back(f);
    }
    return l2c::ChainMap(a, b, comps);
}

// Mix of generic maps, identities and isomorphisms so both verdicts occur.
inline l2c::ChainMap random_small_chain_map(Gen& g) {
    l2c::FinComplex a = random_complex(g, 0, 4, 3);
    int mode = g.range(0, 3);
    if (mode == 0) {
        std::vector<Mat> id;
        for (int n = a.lo(); n <= a.hi(); ++n) id.push_back(l2c::identity(a.dim(n)));
        return l2c::ChainMap(a, a, id);
    }
    if (mode == 1) return random_chain_map(g, a, a);
    l2c::FinComplex b = random_complex(g, 0, 4, 3);
    return random_chain_map(g, a, b);
}

}  // namespace testsupport
