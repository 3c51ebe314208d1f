#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <iosfwd>
#include <vector>

namespace l2c {

// Truncated multivariate Taylor polynomial in at most 4 variables, order at
// most 3.  All jets share one monomial layout (graded, then lexicographic),
// so jets over different variable counts combine without re-indexing; the
// effective truncation order of a result is the smaller of the operands'.
class Jet {
public:
    static constexpr int kMaxVars = 4;
    static constexpr int kMaxOrder = 3;
    static constexpr int kSize = 35;
    using Exponent = std::array<int, kMaxVars>;

    Jet() : Jet(0.0) {}
    Jet(double c) : nvars_(0), order_(kMaxOrder) {
        c_.fill(0.0);
        c_[0] = c;
    }

    // value + τ_i, with τ_i the i-th of nvars variables.
    static Jet variable(int i, int nvars, int order, double value = 0.0);
    static Jet constant(double c, int nvars, int order);

    int num_vars() const { return nvars_; }
    int order() const { return order_; }
    double value() const { return c_[0]; }

    double coeff(const Exponent& e) const;
    // ∂^e at the expansion point, i.e. e! times the coefficient.
    double derivative(const Exponent& e) const;
    double coeff_at(int slot) const { return c_[static_cast<size_t>(slot)]; }
    double& coeff_at(int slot) { return c_[static_cast<size_t>(slot)]; }

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator/=(const Jet& o);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
    friend Jet operator-(Jet a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Jet operator+(const Jet& a) { return a; }

    // Comparisons look at the constant term only (needed for pivoting).
    friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

    friend Jet reciprocal(const Jet& j);
    friend Jet jet_exp(const Jet& j);

    static int monomial_degree(int slot);
    static const Exponent& monomial(int slot);
    static int slot_of(const Exponent& e);

private:
    void merge_shape(const Jet& o) {
        if (o.nvars_ > nvars_) nvars_ = o.nvars_;
        if (o.order_ < order_) order_ = o.order_;
    }
    void truncate();
    // sum_{k=0}^{order} a_k n^k where n is this jet with constant term removed
    Jet series(const std::array<double, kMaxOrder + 1>& a) const;

    int nvars_;
    int order_;
    std::array<double, kSize> c_;
};

Jet reciprocal(const Jet& j);
Jet jet_exp(const Jet& j);
inline Jet exp(const Jet& j) { return jet_exp(j); }

// ∂/∂τ_var restricted to τ_var = 0; the truncation order drops by one.
Jet partial_at_zero(const Jet& j, int var);

std::ostream& operator<<(std::ostream& os, const Jet& j);

// Constant-term view used by pivoting and scaling heuristics.
inline double scalar_value(double x) { return x; }
inline double scalar_value(const Jet& j) { return j.value(); }

}  // namespace l2c

namespace Eigen {
template <>
struct NumTraits<l2c::Jet> : GenericNumTraits<l2c::Jet> {
    using Real = l2c::Jet;
    using NonInteger = l2c::Jet;
    using Nested = l2c::Jet;
    using Literal = l2c::Jet;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 35,
        AddCost = 35,
        MulCost = 200
    };
    static inline Real epsilon() { return l2c::Jet(std::numeric_limits<double>::epsilon()); }
    static inline Real dummy_precision() { return l2c::Jet(1e-12); }
    static inline int digits10() { return 15; }
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<l2c::Jet, double, BinaryOp> {
    using ReturnType = l2c::Jet;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<double, l2c::Jet, BinaryOp> {
    using ReturnType = l2c::Jet;
};
}  // namespace Eigen
