#include "lie2coh/jet.hpp"

#include <ostream>
#include <stdexcept>

namespace l2c {

namespace {

struct Tables {
    std::array<Jet::Exponent, Jet::kSize> mono{};
    std::array<int, Jet::kSize> degree{};
    // products[i] lists (j, k) with mono[i] + mono[j] = mono[k], degree ≤ 3
    std::array<std::vector<std::pair<int, int>>, Jet::kSize> products;

    Tables() {
        int n = 0;
        for (int d = 0; d <= Jet::kMaxOrder; ++d) {
            Jet::Exponent e{};
            // lexicographic enumeration of exponents of total degree d
            for (e[0] = d; e[0] >= 0; --e[0])
                for (e[1] = d - e[0]; e[1] >= 0; --e[1])
                    for (e[2] = d - e[0] - e[1]; e[2] >= 0; --e[2]) {
                        e[3] = d - e[0] - e[1] - e[2];
                        mono[static_cast<size_t>(n)] = e;
                        degree[static_cast<size_t>(n)] = d;
                        ++n;
                    }
        }
        for (int i = 0; i < Jet::kSize; ++i)
            for (int j = 0; j < Jet::kSize; ++j) {
                if (degree[static_cast<size_t>(i)] + degree[static_cast<size_t>(j)] > Jet::kMaxOrder) continue;
                Jet::Exponent s{};
                for (int v = 0; v < Jet::kMaxVars; ++v)
                    s[static_cast<size_t>(v)] = mono[static_cast<size_t>(i)][static_cast<size_t>(v)] +
                                                mono[static_cast<size_t>(j)][static_cast<size_t>(v)];
                products[static_cast<size_t>(i)].emplace_back(j, find(s));
            }
    }

    int find(const Jet::Exponent& e) const {
        for (int k = 0; k < Jet::kSize; ++k)
            if (mono[static_cast<size_t>(k)] == e) return k;
        return -1;
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

int Jet::monomial_degree(int slot) { return tables().degree[static_cast<size_t>(slot)]; }
const Jet::Exponent& Jet::monomial(int slot) { return tables().mono[static_cast<size_t>(slot)]; }
int Jet::slot_of(const Exponent& e) { return tables().find(e); }

Jet Jet::variable(int i, int nvars, int order, double value) {
    if (nvars < 1 || nvars > kMaxVars || i < 0 || i >= nvars || order < 1 || order > kMaxOrder)
        throw std::invalid_argument("Jet::variable: out of range");
    Jet j = constant(value, nvars, order);
    Exponent e{};
    e[static_cast<size_t>(i)] = 1;
    j.c_[static_cast<size_t>(slot_of(e))] = 1.0;
    return j;
}

Jet Jet::constant(double c, int nvars, int order) {
    Jet j(c);
    j.nvars_ = nvars;
    j.order_ = order;
    return j;
}

double Jet::coeff(const Exponent& e) const {
    int s = slot_of(e);
    if (s < 0) return 0.0;
    return c_[static_cast<size_t>(s)];
}

double Jet::derivative(const Exponent& e) const {
    double f = 1.0;
    for (int k : e)
        for (int m = 2; m <= k; ++m) f *= m;
    return f * coeff(e);
}

void Jet::truncate() {
    for (int k = 0; k < kSize; ++k)
        if (monomial_degree(k) > order_) c_[static_cast<size_t>(k)] = 0.0;
}

Jet& Jet::operator+=(const Jet& o) {
    merge_shape(o);
    for (int k = 0; k < kSize; ++k) c_[static_cast<size_t>(k)] += o.c_[static_cast<size_t>(k)];
    truncate();
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    merge_shape(o);
    for (int k = 0; k < kSize; ++k) c_[static_cast<size_t>(k)] -= o.c_[static_cast<size_t>(k)];
    truncate();
    return *this;
}

Jet& Jet::operator*=(const Jet& o) {
    merge_shape(o);
    std::array<double, kSize> r{};
    const auto& t = tables();
    for (int i = 0; i < kSize; ++i) {
        double a = c_[static_cast<size_t>(i)];
        if (a == 0.0) continue;
        for (auto [j, k] : t.products[static_cast<size_t>(i)]) {
            if (t.degree[static_cast<size_t>(k)] > order_) continue;
            r[static_cast<size_t>(k)] += a * o.c_[static_cast<size_t>(j)];
        }
    }
    c_ = r;
    return *this;
}

Jet& Jet::operator/=(const Jet& o) { return *this *= reciprocal(o); }

Jet Jet::series(const std::array<double, kMaxOrder + 1>& a) const {
    Jet n = *this;
    n.c_[0] = 0.0;
    Jet acc = constant(a[kMaxOrder], nvars_, order_);
    for (int k = kMaxOrder - 1; k >= 0; --k) {
        acc *= n;
        acc.c_[0] += a[static_cast<size_t>(k)];
    }
    return acc;
}

Jet reciprocal(const Jet& j) {
    double c = j.c_[0];
    if (c == 0.0) throw std::domain_error("Jet reciprocal of zero constant term");
    // 1/(c+n) = (1/c) Σ (-n/c)^k
    std::array<double, Jet::kMaxOrder + 1> a{};
    double p = 1.0 / c;
    for (int k = 0; k <= Jet::kMaxOrder; ++k) {
        a[static_cast<size_t>(k)] = p;
        p *= -1.0 / c;
    }
    return j.series(a);
}

Jet jet_exp(const Jet& j) {
    double e = std::exp(j.c_[0]);
    std::array<double, Jet::kMaxOrder + 1> a{};
    double f = 1.0;
    for (int k = 0; k <= Jet::kMaxOrder; ++k) {
        if (k > 0) f *= k;
        a[static_cast<size_t>(k)] = e / f;
    }
    return j.series(a);
}

Jet partial_at_zero(const Jet& j, int var) {
    if (var < 0 || var >= Jet::kMaxVars) throw std::invalid_argument("partial_at_zero: variable out of range");
    Jet out = Jet::constant(0.0, j.num_vars(), j.order() > 0 ? j.order() - 1 : 0);
    for (int k = 1; k < Jet::kSize; ++k) {
        double c = j.coeff_at(k);
        if (c == 0.0) continue;
        Jet::Exponent e = Jet::monomial(k);
        int n = e[static_cast<size_t>(var)];
        if (n != 1) continue;
        e[static_cast<size_t>(var)] = 0;
        out.coeff_at(Jet::slot_of(e)) += c;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << j.value();
    for (int k = 1; k < Jet::kSize; ++k) {
        double c = j.coeff_at(k);
        if (c == 0.0) continue;
        os << (c < 0 ? " - " : " + ") << std::abs(c);
        const auto& e = Jet::monomial(k);
        for (int v = 0; v < Jet::kMaxVars; ++v) {
            if (e[static_cast<size_t>(v)] == 0) continue;
            os << "*t" << v;
            if (e[static_cast<size_t>(v)] > 1) os << "^" << e[static_cast<size_t>(v)];
        }
    }
    return os;
}

}  // namespace l2c
