#pragma once

#include "lie2coh/exterior.hpp"
#include "lie2coh/numeric.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace l2c {

struct Violation {
    std::string identity;
    std::vector<int> witness;  // basis indices, 0-based
    std::string detail;
};
using Diagnostics = std::vector<Violation>;

std::string describe(const Violation& v);

// Structure constants stored as ad matrices: column j of ad(i) is [e_i, e_j].
class LieAlgebra {
public:
    LieAlgebra() : LieAlgebra(0) {}
    explicit LieAlgebra(int dim);  // abelian
    // brackets[i][j] for i<j; missing pairs are zero
    static LieAlgebra from_brackets(int dim, const std::vector<std::tuple<int, int, Vec>>& brackets);
    // Every ad matrix given; antisymmetry is checked.
    static LieAlgebra from_ad(std::vector<Mat> ad);

    int dim() const { return dim_; }
    const Mat& ad_basis(int i) const { return ad_[static_cast<size_t>(i)]; }
    Vec bracket_basis(int i, int j) const { return ad_[static_cast<size_t>(i)].col(j); }
    Mat ad(const Vec& x) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && ad_ == o.ad_; }

private:
    int dim_;
    std::vector<Mat> ad_;
};

struct Representation {
    LieAlgebra algebra;
    int space_dim = 0;
    std::vector<Mat> action;  // one space_dim × space_dim matrix per basis vector

    Mat act(const Vec& x) const;
    static Representation trivial(const LieAlgebra& g, int space_dim);
};

Representation adjoint(const LieAlgebra& g);
// ρ ∘ f for a linear map f : k → algebra of ρ (pullback of the action).
Representation pullback(const Representation& r, const LieAlgebra& k, const Mat& f);

Diagnostics validate_lie_algebra(const LieAlgebra& g);
Diagnostics validate_representation(const Representation& r);
// f : g → h a Lie algebra homomorphism?
Diagnostics validate_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Mat& f);

Index ce_cochain_dim(const Representation& r, int q);
// d : Λ^q g* ⊗ V → Λ^{q+1} g* ⊗ V; coordinates ordered (tuple, v).
Mat ce_differential(const Representation& r, int q);

// Direct sum of algebras; the block order is (a, b).
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
// Same algebra acting blockwise.
Representation direct_sum(const Representation& a, const Representation& b);

}  // namespace l2c
