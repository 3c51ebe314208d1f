#pragma once

#include "lie2coh/jet.hpp"

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

namespace l2c {

template <class T>
using MatT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using VecT = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class T>
MatT<T> identity_t(Eigen::Index n) {
    MatT<T> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = T(i == j ? 1.0 : 0.0);
    return m;
}

template <class T>
MatT<T> zeros_t(Eigen::Index r, Eigen::Index c) {
    MatT<T> m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = T(0.0);
    return m;
}

template <class T>
MatT<T> lift(const Eigen::MatrixXd& m) {
    MatT<T> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = T(m(i, j));
    return out;
}

template <class T>
Eigen::MatrixXd values(const MatT<T>& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = scalar_value(m(i, j));
    return out;
}

// Gauss-Jordan with partial pivoting on the constant term.  Works for double
// and for jets (a jet is invertible iff its constant term is).
template <class T>
MatT<T> inverse(const MatT<T>& a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse: not square");
    MatT<T> m = a;
    MatT<T> inv = identity_t<T>(n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        double best = std::abs(scalar_value(m(c, c)));
        for (Eigen::Index i = c + 1; i < n; ++i) {
            double v = std::abs(scalar_value(m(i, c)));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0) throw std::domain_error("inverse: singular matrix");
        if (p != c) {
            m.row(p).swap(m.row(c));
            inv.row(p).swap(inv.row(c));
        }
        T piv = T(1.0) / m(c, c);
        m.row(c) *= piv;
        inv.row(c) *= piv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == c) continue;
            T f = m(i, c);
            m.row(i) -= f * m.row(c);
            inv.row(i) -= f * inv.row(c);
        }
    }
    return inv;
}

// Scaling and squaring with a Taylor core.
template <class T>
MatT<T> expm(const MatT<T>& a) {
    const Eigen::Index n = a.rows();
    double norm = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) s += std::abs(scalar_value(a(i, j)));
        norm = std::max(norm, s);
    }
    int squarings = 0;
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    MatT<T> b = a * T(std::ldexp(1.0, -squarings));
    MatT<T> result = identity_t<T>(n);
    MatT<T> term = identity_t<T>(n);
    for (int k = 1; k <= 20; ++k) {
        term = (term * b) * T(1.0 / k);
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace l2c
