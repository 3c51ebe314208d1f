#include "lie2coh/exterior.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace l2c {

namespace {

std::uint64_t mask(const Tuple& t) {
    std::uint64_t m = 0;
    for (int i : t) m |= (std::uint64_t{1} << i);
    return m;
}

void build(int n, int q, int start, Tuple& cur, std::vector<Tuple>& out) {
    if (static_cast<int>(cur.size()) == q) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        build(n, q, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Index binomial(Index n, Index k) {
    if (k < 0 || k > n) return 0;
    Index r = 1;
    for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ExteriorBasis::ExteriorBasis(int n, int q) : n_(n), q_(q) {
    if (n < 0 || n > 63 || q < 0) throw std::invalid_argument("ExteriorBasis: out of range");
    if (q <= n) {
        Tuple cur;
        build(n, q, 0, cur, tuples_);
    }
    for (size_t i = 0; i < tuples_.size(); ++i) lookup_[mask(tuples_[i])] = static_cast<Index>(i);
}

Index ExteriorBasis::index(const Tuple& t) const {
    if (static_cast<int>(t.size()) != q_) return -1;
    auto it = lookup_.find(mask(t));
    return it == lookup_.end() ? -1 : it->second;
}

const ExteriorBasis& exterior(int n, int q) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ExteriorBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, q}];
    if (!slot) slot = std::make_unique<ExteriorBasis>(n, q);
    return *slot;
}

int sort_sign(Tuple& t) {
    int sign = 1;
    for (size_t i = 1; i < t.size(); ++i)
        for (size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j]) return 0;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    return sign;
}

SparseVec sparse(const Vec& v) {
    SparseVec s;
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) s.emplace_back(static_cast<int>(i), v(i));
    return s;
}

namespace {

void expand(const std::vector<SparseVec>& vs, size_t k, Tuple& cur, const Rational& coef, const ExteriorBasis& basis,
            std::unordered_map<Index, Rational>& acc) {
    if (k == vs.size()) {
        Tuple t = cur;
        int s = sort_sign(t);
        if (s == 0) return;
        Index idx = basis.index(t);
        if (s > 0)
            acc[idx] += coef;
        else
            acc[idx] -= coef;
        return;
    }
    for (const auto& [i, c] : vs[k]) {
        bool repeat = false;
        for (int j : cur)
            if (j == i) repeat = true;
        if (repeat) continue;
        cur.push_back(i);
        expand(vs, k + 1, cur, coef * c, basis, acc);
        cur.pop_back();
    }
}

}  // namespace

void wedge_expand(const std::vector<SparseVec>& vs, const Rational& scale, int n,
                  std::unordered_map<Index, Rational>& acc) {
    const ExteriorBasis& basis = exterior(n, static_cast<int>(vs.size()));
    Tuple cur;
    expand(vs, 0, cur, scale, basis, acc);
}

Mat lambda_pullback(const Mat& m, int q) {
    int nsrc = static_cast<int>(m.cols()), ntgt = static_cast<int>(m.rows());
    const ExteriorBasis& src = exterior(nsrc, q);
    const ExteriorBasis& tgt = exterior(ntgt, q);
    std::vector<SparseVec> cols;
    for (int j = 0; j < nsrc; ++j) cols.push_back(sparse(m.col(j)));
    Mat out = zeros(src.size(), tgt.size());
    for (Index i = 0; i < src.size(); ++i) {
        std::vector<SparseVec> vs;
        for (int j : src.tuple(i)) vs.push_back(cols[static_cast<size_t>(j)]);
        std::unordered_map<Index, Rational> acc;
        wedge_expand(vs, Rational(1), ntgt, acc);
        for (auto& [j, c] : acc) out(i, j) += c;
    }
    return out;
}

Mat lambda_derivation(const Mat& a, int q) {
    int n = static_cast<int>(a.rows());
    const ExteriorBasis& basis = exterior(n, q);
    Mat out = zeros(basis.size(), basis.size());
    for (Index i = 0; i < basis.size(); ++i) {
        const Tuple& t = basis.tuple(i);
        std::unordered_map<Index, Rational> acc;
        for (size_t k = 0; k < t.size(); ++k) {
            std::vector<SparseVec> vs;
            for (size_t l = 0; l < t.size(); ++l)
                vs.push_back(l == k ? sparse(a.col(t[l])) : SparseVec{{t[l], Rational(1)}});
            wedge_expand(vs, Rational(1), n, acc);
        }
        for (auto& [j, c] : acc) out(i, j) += c;
    }
    return out;
}

}  // namespace l2c
