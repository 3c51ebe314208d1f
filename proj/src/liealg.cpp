#include "lie2coh/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace l2c {

std::string describe(const Violation& v) {
    std::ostringstream os;
    os << v.identity;
    if (!v.witness.empty()) {
        os << " at (";
        for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i] + 1;
        os << ")";
    }
    if (!v.detail.empty()) os << ": " << v.detail;
    return os.str();
}

LieAlgebra::LieAlgebra(int dim) : dim_(dim), ad_(static_cast<size_t>(dim), zeros(dim, dim)) {}

LieAlgebra LieAlgebra::from_brackets(int dim, const std::vector<std::tuple<int, int, Vec>>& brackets) {
    LieAlgebra g(dim);
    for (const auto& [i, j, v] : brackets) {
        if (i < 0 || j < 0 || i >= dim || j >= dim || i == j || v.size() != dim)
            throw std::invalid_argument("LieAlgebra: bad bracket entry");
        g.ad_[static_cast<size_t>(i)].col(j) = v;
        g.ad_[static_cast<size_t>(j)].col(i) = -v;
    }
    return g;
}

LieAlgebra LieAlgebra::from_ad(std::vector<Mat> ad) {
    int dim = static_cast<int>(ad.size());
    for (const auto& m : ad)
        if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("LieAlgebra: ad matrix shape");
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            if (Vec(ad[static_cast<size_t>(i)].col(j)) != Vec(-ad[static_cast<size_t>(j)].col(i)))
                throw std::invalid_argument("LieAlgebra: bracket not antisymmetric");
    LieAlgebra g(dim);
    g.ad_ = std::move(ad);
    return g;
}

Mat LieAlgebra::ad(const Vec& x) const {
    Mat m = zeros(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        if (!x(i).is_zero()) m += x(i) * ad_[static_cast<size_t>(i)];
    return m;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(dim_);
    for (int i = 0; i < dim_; ++i)
        if (!x(i).is_zero()) out += x(i) * Vec(mul(ad_[static_cast<size_t>(i)], y));
    return out;
}

Mat Representation::act(const Vec& x) const {
    Mat m = zeros(space_dim, space_dim);
    for (int i = 0; i < algebra.dim(); ++i)
        if (!x(i).is_zero()) m += x(i) * action[static_cast<size_t>(i)];
    return m;
}

Representation Representation::trivial(const LieAlgebra& g, int space_dim) {
    return Representation{g, space_dim, std::vector<Mat>(static_cast<size_t>(g.dim()), zeros(space_dim, space_dim))};
}

Representation adjoint(const LieAlgebra& g) {
    Representation r{g, g.dim(), {}};
    for (int i = 0; i < g.dim(); ++i) r.action.push_back(g.ad_basis(i));
    return r;
}

Representation pullback(const Representation& r, const LieAlgebra& k, const Mat& f) {
    Representation out{k, r.space_dim, {}};
    for (int i = 0; i < k.dim(); ++i) out.action.push_back(r.act(f.col(i)));
    return out;
}

Diagnostics validate_lie_algebra(const LieAlgebra& g) {
    Diagnostics out;
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
                Vec jac = g.bracket(ei, g.bracket(ej, ek)) + g.bracket(ej, g.bracket(ek, ei)) +
                          g.bracket(ek, g.bracket(ei, ej));
                if (!is_zero(jac)) out.push_back({"Jacobi", {i, j, k}, ""});
            }
    return out;
}

Diagnostics validate_representation(const Representation& r) {
    Diagnostics out;
    const LieAlgebra& g = r.algebra;
    if (static_cast<int>(r.action.size()) != g.dim()) {
        out.push_back({"shape", {}, "one matrix per basis vector required"});
        return out;
    }
    for (const auto& m : r.action)
        if (m.rows() != r.space_dim || m.cols() != r.space_dim) {
            out.push_back({"shape", {}, "action matrix has wrong size"});
            return out;
        }
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            const Mat& a = r.action[static_cast<size_t>(i)];
            const Mat& b = r.action[static_cast<size_t>(j)];
            if (r.act(g.bracket_basis(i, j)) != Mat(mul(a, b) - mul(b, a)))
                out.push_back({"rho[x,y] = [rho x, rho y]", {i, j}, ""});
        }
    return out;
}

Diagnostics validate_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Mat& f) {
    Diagnostics out;
    if (f.rows() != h.dim() || f.cols() != g.dim()) {
        out.push_back({"shape", {}, "map has wrong size"});
        return out;
    }
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j)
            if (Vec(mul(f, g.bracket_basis(i, j))) != h.bracket(f.col(i), f.col(j)))
                out.push_back({"f[x,y] = [fx,fy]", {i, j}, ""});
    return out;
}

Index ce_cochain_dim(const Representation& r, int q) {
    return binomial(r.algebra.dim(), q) * r.space_dim;
}

Mat ce_differential(const Representation& r, int q) {
    const LieAlgebra& g = r.algebra;
    const int n = g.dim();
    const Index dv = r.space_dim;
    const ExteriorBasis& in = exterior(n, q);
    const ExteriorBasis& out = exterior(n, q + 1);
    Mat d = zeros(out.size() * dv, in.size() * dv);
    if (dv == 0) return d;
    for (Index o = 0; o < out.size(); ++o) {
        const Tuple& a = out.tuple(o);
        for (int j = 0; j <= q; ++j) {
            Tuple rest = a;
            rest.erase(rest.begin() + j);
            Index col = in.index(rest);
            const Mat& rho = r.action[static_cast<size_t>(a[static_cast<size_t>(j)])];
            if (j % 2 == 0)
                d.block(o * dv, col * dv, dv, dv) += rho;
            else
                d.block(o * dv, col * dv, dv, dv) -= rho;
        }
        for (int m = 0; m <= q; ++m)
            for (int l = m + 1; l <= q; ++l) {
                Vec br = g.bracket_basis(a[static_cast<size_t>(m)], a[static_cast<size_t>(l)]);
                Tuple rest = a;
                rest.erase(rest.begin() + l);
                rest.erase(rest.begin() + m);
                for (int k = 0; k < n; ++k) {
                    if (br(k).is_zero()) continue;
                    Tuple t = rest;
                    t.insert(t.begin(), k);
                    int s = sort_sign(t);
                    if (s == 0) continue;
                    Rational c = br(k) * (((m + l) % 2 == 0) ? s : -s);
                    Index col = in.index(t);
                    for (Index v = 0; v < dv; ++v) d(o * dv + v, col * dv + v) += c;
                }
            }
    }
    return d;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    int n = a.dim() + b.dim();
    std::vector<Mat> ad;
    for (int i = 0; i < a.dim(); ++i) {
        Mat m = zeros(n, n);
        m.topLeftCorner(a.dim(), a.dim()) = a.ad_basis(i);
        ad.push_back(m);
    }
    for (int i = 0; i < b.dim(); ++i) {
        Mat m = zeros(n, n);
        m.bottomRightCorner(b.dim(), b.dim()) = b.ad_basis(i);
        ad.push_back(m);
    }
    return LieAlgebra::from_ad(std::move(ad));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(a.algebra == b.algebra)) throw std::invalid_argument("direct_sum: representations of different algebras");
    int n = a.space_dim + b.space_dim;
    Representation out{a.algebra, n, {}};
    for (int i = 0; i < a.algebra.dim(); ++i) {
        Mat m = zeros(n, n);
        m.topLeftCorner(a.space_dim, a.space_dim) = a.action[static_cast<size_t>(i)];
        m.bottomRightCorner(b.space_dim, b.space_dim) = b.action[static_cast<size_t>(i)];
        out.action.push_back(m);
    }
    return out;
}

}  // namespace l2c
