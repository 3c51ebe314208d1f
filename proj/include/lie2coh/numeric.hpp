#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l2c {

// gmp_rational keeps lowest terms under arithmetic; string input is the one
// place it does not, so parse_rational canonicalizes explicitly.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& x);

Mat zeros(Index rows, Index cols);
Vec zero_vec(Index n);
Mat identity(Index n);
Vec unit(Index n, Index i);

bool is_zero(const Mat& m);

// Product that skips zero entries; lattice matrices are mostly zeros.
Mat mul(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat from_columns(const std::vector<Vec>& cols, Index rows);

// In-place reduced row echelon form; returns pivot columns.
std::vector<Index> rref(Mat& m);

struct RankKernel {
    Index rank = 0;
    std::vector<Vec> kernel;
};

RankKernel rank_and_kernel(const Mat& m);
Index rank(const Mat& m);
std::optional<Vec> solve_linear(const Mat& m, const Vec& b);

// Kernel basis from the reduced echelon form: basis vector i is 1 at free
// column i and 0 at the other free columns, so coordinates of a kernel
// element are just its entries at the free columns.
struct KernelChart {
    std::vector<Vec> basis;
    std::vector<Index> free;
    Index dim() const { return static_cast<Index>(basis.size()); }
    Vec coords(const Vec& v) const;
    Vec embed(const Vec& c) const;
};
KernelChart kernel_chart(const Mat& m);

// Basis of the column space, as columns of the original matrix.
Mat column_basis(const Mat& m);

double to_double(const Rational& x);
Eigen::MatrixXd to_double(const Mat& m);

}  // namespace l2c
