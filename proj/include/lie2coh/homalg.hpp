#pragma once

#include "lie2coh/numeric.hpp"

#include <utility>
#include <vector>

namespace l2c {

// Bounded cochain complex over Q on degrees lo .. lo+dims.size()-1.
// d[i] : C^{lo+i} -> C^{lo+i+1}; the last degree maps to zero.
class FinComplex {
public:
    FinComplex(int lo, std::vector<Index> dims, std::vector<Mat> d);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    Index dim(int n) const;
    // d_n : C^n -> C^{n+1}, zero matrices outside the range
    Mat d(int n) const;

private:
    int lo_;
    std::vector<Index> dims_;
    std::vector<Mat> d_;
};

class ChainMap {
public:
    // components[i] : A^{lo+i} -> B^{lo+i}; both complexes must share the range
    ChainMap(FinComplex source, FinComplex target, std::vector<Mat> components);

    const FinComplex& source() const { return a_; }
    const FinComplex& target() const { return b_; }
    Mat at(int n) const;

private:
    FinComplex a_, b_;
    std::vector<Mat> f_;
};

std::vector<std::pair<int, Index>> cohomology_dims(const FinComplex& c);
Index cohomology_dim(const FinComplex& c, int n);

FinComplex mapping_cone(const ChainMap& f);

struct ConeEquiv {
    bool lhs = false;
    bool rhs = false;
};

ConeEquiv cone_vanishing_equiv(const ChainMap& f, int k);

// Induced map on H^n, tested by brute force.
bool induced_injective(const ChainMap& f, int n);
bool induced_surjective(const ChainMap& f, int n);

}  // namespace l2c
