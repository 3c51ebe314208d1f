#include "lie2coh/homalg.hpp"

#include <stdexcept>

namespace l2c {

FinComplex::FinComplex(int lo, std::vector<Index> dims, std::vector<Mat> d)
    : lo_(lo), dims_(std::move(dims)), d_(std::move(d)) {
    if (dims_.empty()) throw std::invalid_argument("FinComplex: empty degree range");
    if (d_.size() + 1 != dims_.size()) throw std::invalid_argument("FinComplex: need one differential per degree gap");
    for (size_t i = 0; i < d_.size(); ++i)
        if (d_[i].rows() != dims_[i + 1] || d_[i].cols() != dims_[i])
            throw std::invalid_argument("FinComplex: differential shape mismatch at degree " +
                                        std::to_string(lo_ + static_cast<int>(i)));
    for (size_t i = 0; i + 1 < d_.size(); ++i)
        if (!is_zero(mul(d_[i + 1], d_[i])))
            throw std::invalid_argument("FinComplex: d^2 != 0 at degree " + std::to_string(lo_ + static_cast<int>(i)));
}

Index FinComplex::dim(int n) const {
    if (n < lo_ || n > hi()) return 0;
    return dims_[static_cast<size_t>(n - lo_)];
}

Mat FinComplex::d(int n) const {
    if (n < lo_ || n >= hi()) return zeros(dim(n + 1), dim(n));
    return d_[static_cast<size_t>(n - lo_)];
}

ChainMap::ChainMap(FinComplex source, FinComplex target, std::vector<Mat> components)
    : a_(std::move(source)), b_(std::move(target)), f_(std::move(components)) {
    if (a_.lo() != b_.lo() || a_.hi() != b_.hi())
        throw std::invalid_argument("ChainMap: source and target must share the degree range");
    if (f_.size() != static_cast<size_t>(a_.hi() - a_.lo() + 1))
        throw std::invalid_argument("ChainMap: one component per degree");
    for (int n = a_.lo(); n <= a_.hi(); ++n) {
        const Mat& fn = f_[static_cast<size_t>(n - a_.lo())];
        if (fn.rows() != b_.dim(n) || fn.cols() != a_.dim(n))
            throw std::invalid_argument("ChainMap: component shape mismatch");
    }
    for (int n = a_.lo(); n < a_.hi(); ++n)
        if (mul(b_.d(n), at(n)) != mul(at(n + 1), a_.d(n)))
            throw std::invalid_argument("ChainMap: does not commute with differentials at degree " + std::to_string(n));
}

Mat ChainMap::at(int n) const {
    if (n < a_.lo() || n > a_.hi()) return zeros(b_.dim(n), a_.dim(n));
    return f_[static_cast<size_t>(n - a_.lo())];
}

Index cohomology_dim(const FinComplex& c, int n) {
    return c.dim(n) - rank(c.d(n)) - rank(c.d(n - 1));
}

std::vector<std::pair<int, Index>> cohomology_dims(const FinComplex& c) {
    std::vector<std::pair<int, Index>> out;
    for (int n = c.lo(); n <= c.hi(); ++n) out.emplace_back(n, cohomology_dim(c, n));
    return out;
}

FinComplex mapping_cone(const ChainMap& f) {
    const FinComplex& a = f.source();
    const FinComplex& b = f.target();
    int lo = a.lo() - 1, hi = a.hi();
    std::vector<Index> dims;
    std::vector<Mat> d;
    for (int n = lo; n <= hi; ++n) dims.push_back(a.dim(n + 1) + b.dim(n));
    for (int n = lo; n < hi; ++n) {
        Index a1 = a.dim(n + 1), b0 = b.dim(n), a2 = a.dim(n + 2), b1 = b.dim(n + 1);
        Mat m = zeros(a2 + b1, a1 + b0);
        if (a2 > 0 && a1 > 0) m.block(0, 0, a2, a1) = -a.d(n + 1);
        if (b1 > 0 && a1 > 0) m.block(a2, 0, b1, a1) = f.at(n + 1);
        if (b1 > 0 && b0 > 0) m.block(a2, a1, b1, b0) = b.d(n);
        d.push_back(std::move(m));
    }
    return FinComplex(lo, std::move(dims), std::move(d));
}

namespace {

Mat cocycles(const FinComplex& c, int n) {
    auto rk = rank_and_kernel(c.d(n));
    return from_columns(rk.kernel, c.dim(n));
}

}  // namespace

bool induced_injective(const ChainMap& f, int n) {
    const FinComplex& a = f.source();
    const FinComplex& b = f.target();
    Mat z = cocycles(a, n);
    if (z.cols() == 0) return true;
    Mat sys = hstack(mul(f.at(n), z), -b.d(n - 1));
    auto rk = rank_and_kernel(sys);
    // cocycles whose image is a coboundary
    std::vector<Vec> sent;
    for (auto& v : rk.kernel) sent.push_back(mul(z, v.head(z.cols())));
    if (sent.empty()) return true;
    Mat bnd = a.d(n - 1);
    return rank(hstack(bnd, from_columns(sent, a.dim(n)))) == rank(bnd);
}

bool induced_surjective(const ChainMap& f, int n) {
    const FinComplex& b = f.target();
    Mat zb = cocycles(b, n);
    Mat za = cocycles(f.source(), n);
    return rank(hstack(mul(f.at(n), za), b.d(n - 1))) == zb.cols();
}

ConeEquiv cone_vanishing_equiv(const ChainMap& f, int k) {
    FinComplex cone = mapping_cone(f);
    ConeEquiv out;
    out.lhs = true;
    for (int n = cone.lo(); n <= k; ++n)
        if (cohomology_dim(cone, n) != 0) out.lhs = false;
    out.rhs = true;
    for (int n = f.source().lo(); n <= k; ++n)
        if (!induced_injective(f, n) || !induced_surjective(f, n)) out.rhs = false;
    if (!induced_injective(f, k + 1)) out.rhs = false;
    return out;
}

}  // namespace l2c
