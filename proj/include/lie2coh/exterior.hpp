#pragma once

#include "lie2coh/numeric.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace l2c {

using Tuple = std::vector<int>;
using SparseVec = std::vector<std::pair<int, Rational>>;

Index binomial(Index n, Index k);

// Strictly increasing q-subsets of {0..n-1} in lexicographic order.
class ExteriorBasis {
public:
    ExteriorBasis(int n, int q);
    int n() const { return n_; }
    int q() const { return q_; }
    Index size() const { return static_cast<Index>(tuples_.size()); }
    const Tuple& tuple(Index i) const { return tuples_[static_cast<size_t>(i)]; }
    // index of an increasing tuple, -1 if absent
    Index index(const Tuple& t) const;

private:
    int n_, q_;
    std::vector<Tuple> tuples_;
    std::unordered_map<std::uint64_t, Index> lookup_;
};

// Shared, immutable instances.
const ExteriorBasis& exterior(int n, int q);

// Sorts t in place; returns the permutation sign, or 0 on a repeated entry.
int sort_sign(Tuple& t);

SparseVec sparse(const Vec& v);

// Coordinates of v_1 ∧ ... ∧ v_q in the increasing basis, scaled and added
// into acc (keyed by basis index).
void wedge_expand(const std::vector<SparseVec>& vs, const Rational& scale, int n,
                  std::unordered_map<Index, Rational>& acc);

// Matrix of ω ↦ ω(M·,…,M·) from Λ^q(target)* to Λ^q(source)*, M : source → target.
Mat lambda_pullback(const Mat& m, int q);
// Matrix of ω ↦ Σ_k ω(x_1,…,A x_k,…,x_q) on Λ^q(n)*.
Mat lambda_derivation(const Mat& a, int q);

}  // namespace l2c
