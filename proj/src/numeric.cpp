#include "lie2coh/numeric.hpp"

#include <stdexcept>

namespace l2c {

namespace {

Integer parse_integer(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw std::invalid_argument("empty number");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad number '" + t + "'");
    for (size_t j = i; j < t.size(); ++j)
        if (t[j] < '0' || t[j] > '9') throw std::invalid_argument("bad number '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    return Integer(t);
}

// |num| * den, used to rank pivot candidates.
Integer pivot_weight(const Rational& x) {
    Integer n = boost::multiprecision::numerator(x);
    if (n < 0) n = -n;
    return n * boost::multiprecision::denominator(x);
}

}  // namespace

Rational parse_rational(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& x) {
    if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
    return x.str();
}

Mat zeros(Index rows, Index cols) { return Mat::Zero(rows, cols); }
Vec zero_vec(Index n) { return Vec::Zero(n); }
Mat identity(Index n) { return Mat::Identity(n, n); }

Vec unit(Index n, Index i) {
    Vec v = Vec::Zero(n);
    v(i) = 1;
    return v;
}

bool is_zero(const Mat& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

Mat mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
    Mat c = Mat::Zero(a.rows(), b.cols());
    std::vector<Index> nz;
    for (Index k = 0; k < a.cols(); ++k) {
        nz.clear();
        for (Index i = 0; i < a.rows(); ++i)
            if (!a(i, k).is_zero()) nz.push_back(i);
        if (nz.empty()) continue;
        for (Index j = 0; j < b.cols(); ++j) {
            const Rational& bkj = b(k, j);
            if (bkj.is_zero()) continue;
            for (Index i : nz) c(i, j) += a(i, k) * bkj;
        }
    }
    return c;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat c = Mat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return c;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Mat c(a.rows(), a.cols() + b.cols());
    c << a, b;
    return c;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Mat c(a.rows() + b.rows(), a.cols());
    c << a, b;
    return c;
}

Mat from_columns(const std::vector<Vec>& cols, Index rows) {
    Mat m(rows, static_cast<Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Index>(j)) = cols[j];
    return m;
}

std::vector<Index> rref(Mat& m) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index best = -1;
        Integer best_w;
        for (Index i = row; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            Integer w = pivot_weight(m(i, col));
            if (best < 0 || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best < 0) continue;
        if (best != row) m.row(best).swap(m.row(row));
        Rational inv = 1 / m(row, col);
        std::vector<Index> nzc;
        for (Index j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) {
                m(row, j) *= inv;
                nzc.push_back(j);
            }
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (Index j : nzc) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

RankKernel rank_and_kernel(const Mat& m) {
    KernelChart ch = kernel_chart(m);
    return RankKernel{m.cols() - ch.dim(), std::move(ch.basis)};
}

KernelChart kernel_chart(const Mat& m) {
    Mat r = m;
    auto piv = rref(r);
    KernelChart out;
    std::vector<bool> is_piv(static_cast<size_t>(m.cols()), false);
    for (Index c : piv) is_piv[static_cast<size_t>(c)] = true;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_piv[static_cast<size_t>(free)]) continue;
        Vec v = Vec::Zero(m.cols());
        v(free) = 1;
        for (size_t k = 0; k < piv.size(); ++k) v(piv[k]) = -r(static_cast<Index>(k), free);
        out.basis.push_back(std::move(v));
        out.free.push_back(free);
    }
    return out;
}

Vec KernelChart::coords(const Vec& v) const {
    Vec c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(free[static_cast<size_t>(i)]);
    return c;
}

Vec KernelChart::embed(const Vec& c) const {
    Index n = basis.empty() ? 0 : basis[0].size();
    Vec v = Vec::Zero(n);
    for (Index i = 0; i < dim(); ++i)
        if (!c(i).is_zero()) v += c(i) * basis[static_cast<size_t>(i)];
    return v;
}

Index rank(const Mat& m) {
    Mat r = m;
    return static_cast<Index>(rref(r).size());
}

std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: b.len != rows");
    Mat aug(m.rows(), m.cols() + 1);
    aug << m, b;
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    Vec x = Vec::Zero(m.cols());
    for (size_t k = 0; k < piv.size(); ++k) x(piv[k]) = aug(static_cast<Index>(k), m.cols());
    return x;
}

Mat column_basis(const Mat& m) {
    Mat r = m;
    auto piv = rref(r);
    Mat out(m.rows(), static_cast<Index>(piv.size()));
    for (size_t k = 0; k < piv.size(); ++k) out.col(static_cast<Index>(k)) = m.col(piv[k]);
    return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

Eigen::MatrixXd to_double(const Mat& m) {
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) d(i, j) = to_double(m(i, j));
    return d;
}

}  // namespace l2c
