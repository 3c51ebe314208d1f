#include "lie2coh/lattice.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace l2c {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

SparseVec unit_sparse(int i) { return SparseVec{{i, Rational(1)}}; }

}  // namespace

NablaSigns NablaSigns::literal() {
    NablaSigns s;
    for (int q = 0; q < 2; ++q)
        for (int r = 0; r < 2; ++r) {
            s.delta1[q][r] = parity_sign(q);
            s.partial[q][r] = parity_sign(q + r);
            for (auto& t : s.Delta) t[q][r] = parity_sign(r);
        }
    return s;
}

NablaSigns NablaSigns::frozen() {
    NablaSigns s = literal();
    for (int k = 0; k < 4; ++k)
        for (int q = 0; q < 2; ++q)
            for (int r = 0; r < 2; ++r) s.Delta[static_cast<size_t>(k)][q][r] = parity_sign(q * (k + 1) + r + k * (k - 1) / 2);
    return s;
}

Lattice::Lattice(TwoRep rep, LatticeOptions opts) : rep_(std::move(rep)), opts_(opts) {
    auto d = validate_crossed_module(rep_.source);
    if (!d.empty()) throw std::invalid_argument("Lattice: invalid crossed module: " + describe(d[0]));
    d = validate_two_rep(rep_);
    if (!d.empty()) throw std::invalid_argument("Lattice: invalid 2-representation: " + describe(d[0]));
    for (int n = 0; n <= opts_.check_bound; ++n)
        if (!is_zero(mul(nabla(n + 1), nabla(n))))
            throw std::logic_error("Lattice: nabla^2 != 0 in degree " + std::to_string(n));
}

const NerveAlgebra& Lattice::nerve(int p) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = nerves_[p];
    if (!slot) slot = std::make_unique<NerveAlgebra>(nerve_algebra(xmod(), p));
    return *slot;
}

const SimplicialMaps& Lattice::faces(int p) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = faces_[p];
    if (!slot) slot = std::make_unique<SimplicialMaps>(simplicial_maps(xmod(), p));
    return *slot;
}

const std::vector<Mat>& Lattice::rho_r(int r) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = rho_r_[r];
    if (slot) return *slot;
    auto out = std::make_unique<std::vector<Mat>>();
    const CrossedModuleAlg& x = xmod();
    if (r == 0) {
        *out = rep_.rho0V.action;
    } else {
        Index nr = binomial(x.dg(), r);
        for (int k = 0; k < x.dh(); ++k)
            out->push_back(kron(identity(nr), rep_.rho0W.action[static_cast<size_t>(k)]) -
                           kron(lambda_derivation(x.L_basis(k), r), identity(rep_.dimW())));
    }
    slot = std::move(out);
    return *slot;
}

Index Lattice::cochain_dim(LatticeIndex idx) const {
    const CrossedModuleAlg& x = xmod();
    Index np = static_cast<Index>(idx.p) * x.dg() + x.dh();
    return binomial(np, idx.q) * binomial(x.dg(), idx.r) * coef_dim(idx.r);
}

std::vector<LatticeIndex> Lattice::components(int n) {
    std::vector<LatticeIndex> out;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q) out.push_back({p, q, n - p - q});
    return out;
}

Index Lattice::total_dim(int n) const {
    Index s = 0;
    for (auto idx : components(n)) s += cochain_dim(idx);
    return s;
}

Index Lattice::offset(int n, LatticeIndex idx) const {
    Index s = 0;
    for (auto c : components(n)) {
        if (c == idx) return s;
        s += cochain_dim(c);
    }
    throw std::invalid_argument("Lattice::offset: index not in degree");
}

LatticeIndex Lattice::target(DiffKind kind, LatticeIndex idx, int k) {
    switch (kind) {
        case DiffKind::DeltaR: return {idx.p, idx.q + 1, idx.r};
        case DiffKind::Delta1: return {idx.p, idx.q, idx.r + 1};
        case DiffKind::Partial: return {idx.p + 1, idx.q, idx.r};
        case DiffKind::DeltaK: return {idx.p + 1, idx.q + k, idx.r - k};
    }
    throw std::invalid_argument("Lattice::target: unknown kind");
}

Mat Lattice::component_differential(DiffKind kind, LatticeIndex idx, int k) const {
    switch (kind) {
        case DiffKind::DeltaR: return delta_r(idx);
        case DiffKind::Delta1: return delta_1(idx);
        case DiffKind::Partial: return partial(idx);
        case DiffKind::DeltaK:
            if (k < 1 || k > idx.r) throw std::out_of_range("DeltaK: need 1 <= k <= r");
            return delta_k(idx, k);
    }
    throw std::invalid_argument("component_differential: unknown kind");
}

Mat Lattice::delta_r(LatticeIndex idx) const {
    const NerveAlgebra& np = nerve(idx.p);
    const Mat& t = faces(idx.p).final_target;
    const std::vector<Mat>& rr = rho_r(idx.r);
    Index cdim = binomial(xmod().dg(), idx.r) * coef_dim(idx.r);
    Representation rep{np.underlying, static_cast<int>(cdim), {}};
    for (Index i = 0; i < np.dim(); ++i) {
        Mat m = zeros(cdim, cdim);
        for (int k = 0; k < xmod().dh(); ++k)
            if (!t(k, i).is_zero()) m += t(k, i) * rr[static_cast<size_t>(k)];
        rep.action.push_back(m);
    }
    return ce_differential(rep, idx.q);
}

Mat Lattice::delta_1(LatticeIndex idx) const {
    const CrossedModuleAlg& x = xmod();
    Index nq = binomial(nerve(idx.p).dim(), idx.q);
    if (idx.r == 0) {
        // δ_(1)ω(Ξ; x) = ρ1(x) ω(Ξ)
        Mat seed = zeros(static_cast<Index>(x.dg()) * rep_.dimW(), rep_.dimV());
        for (int i = 0; i < x.dg(); ++i) seed.block(i * rep_.dimW(), 0, rep_.dimW(), rep_.dimV()) = rep_.r1_basis(i);
        return kron(identity(nq), seed);
    }
    Representation rho{x.g, rep_.dimW(), {}};
    for (int i = 0; i < x.dg(); ++i) rho.action.push_back(rep_.rho0W.act(x.mu.col(i)));
    return kron(identity(nq), ce_differential(rho, idx.r));
}

Mat Lattice::partial(LatticeIndex idx) const {
    const SimplicialMaps& s = faces(idx.p);
    Index inner = binomial(xmod().dg(), idx.r) * coef_dim(idx.r);
    Index rows = binomial(nerve(idx.p + 1).dim(), idx.q) * inner;
    Index cols = binomial(nerve(idx.p).dim(), idx.q) * inner;
    Mat out = zeros(rows, cols);
    for (size_t k = 0; k < s.faces.size(); ++k) {
        Mat term = kron(lambda_pullback(s.faces[k], idx.q), identity(inner));
        if (k % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

// Δ_kω(Ξ;Z) = Σ_{a_1<…<a_k} (-1)^{a_1+…+a_k} ω(∂_0Ξ(a_1..a_k); x⁰_{a_1},…,x⁰_{a_k}, Z),
// followed by φ when r = k.
Mat Lattice::delta_k(LatticeIndex idx, int k) const {
    const CrossedModuleAlg& x = xmod();
    const int dg = x.dg();
    const int p = idx.p, q = idx.q, r = idx.r;
    const int n0 = static_cast<int>(nerve(p).dim()), n1 = static_cast<int>(nerve(p + 1).dim());
    const Mat& f0 = faces(p).faces[0];
    const ExteriorBasis& qout = exterior(n1, q + k);
    const ExteriorBasis& rout = exterior(dg, r - k);
    const ExteriorBasis& rin = exterior(dg, r);
    const ExteriorBasis& subsets = exterior(q + k, k);
    const Index cin = coef_dim(r), cout = coef_dim(r - k);
    const bool to_v = (r == k);
    Mat out = zeros(qout.size() * rout.size() * cout, binomial(n0, q) * rin.size() * cin);
    if (out.size() == 0) return out;

    std::vector<SparseVec> f0cols;
    for (int b = 0; b < n1; ++b) f0cols.push_back(sparse(f0.col(b)));

    for (Index qo = 0; qo < qout.size(); ++qo) {
        const Tuple& xi = qout.tuple(qo);
        for (Index ro = 0; ro < rout.size(); ++ro) {
            const Tuple& zt = rout.tuple(ro);
            const Index row = (qo * rout.size() + ro) * cout;
            for (Index si = 0; si < subsets.size(); ++si) {
                const Tuple& a = subsets.tuple(si);
                int asum = 0;
                std::vector<SparseVec> rargs;
                bool dead = false;
                for (int pos : a) {
                    asum += pos;
                    int b = xi[static_cast<size_t>(pos)];
                    if (b >= dg) {  // x⁰ component of a basis vector outside the x⁰ block is 0
                        dead = true;
                        break;
                    }
                    rargs.push_back(unit_sparse(b));
                }
                if (dead) continue;
                for (int z : zt) rargs.push_back(unit_sparse(z));
                std::vector<SparseVec> qargs;
                size_t ai = 0;
                for (int pos = 0; pos < q + k; ++pos) {
                    if (ai < a.size() && a[ai] == pos) {
                        ++ai;
                        continue;
                    }
                    qargs.push_back(f0cols[static_cast<size_t>(xi[static_cast<size_t>(pos)])]);
                }
                std::unordered_map<Index, Rational> accq, accr;
                wedge_expand(qargs, Rational(parity_sign(asum)), n0, accq);
                if (accq.empty()) continue;
                wedge_expand(rargs, Rational(1), dg, accr);
                for (const auto& [qi, cq] : accq)
                    for (const auto& [ri, cr] : accr) {
                        Rational c = cq * cr;
                        if (c.is_zero()) continue;
                        const Index col = (qi * rin.size() + ri) * cin;
                        if (to_v)
                            out.block(row, col, cout, cin) += c * rep_.phi();
                        else
                            for (Index w = 0; w < cin; ++w) out(row + w, col + w) += c;
                    }
            }
        }
    }
    return out;
}

Mat Lattice::nabla(int n) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = nabla_.find(n);
        if (it != nabla_.end()) return *it->second;
    }
    Mat out = zeros(total_dim(n + 1), total_dim(n));
    auto place = [&](LatticeIndex src, LatticeIndex tgt, int sign, const Mat& m) {
        if (m.size() == 0) return;
        auto blk = out.block(offset(n + 1, tgt), offset(n, src), m.rows(), m.cols());
        if (sign > 0)
            blk += m;
        else
            blk -= m;
    };
    const NablaSigns& s = opts_.signs;
    const int dg = xmod().dg();
    for (auto idx : components(n)) {
        if (cochain_dim(idx) == 0) continue;
        const int qp = idx.q % 2, rp = idx.r % 2;
        place(idx, target(DiffKind::DeltaR, idx), 1, delta_r(idx));
        if (idx.r + 1 <= dg) place(idx, target(DiffKind::Delta1, idx), s.delta1[qp][rp], delta_1(idx));
        place(idx, target(DiffKind::Partial, idx), s.partial[qp][rp], partial(idx));
        for (int k = 1; k <= idx.r; ++k) place(idx, target(DiffKind::DeltaK, idx, k), s.delta_k(k, qp, rp), delta_k(idx, k));
    }
    std::lock_guard<std::mutex> lock(mu_);
    nabla_[n] = std::make_unique<Mat>(out);
    return out;
}

Vec Lattice::assemble(int n, const std::vector<LatticeCochain>& parts) const {
    Vec out = zero_vec(total_dim(n));
    for (const auto& c : parts) {
        if (c.index.degree() != n) throw std::invalid_argument("assemble: component of the wrong degree");
        if (c.values.size() != cochain_dim(c.index)) throw std::invalid_argument("assemble: component size");
        out.segment(offset(n, c.index), c.values.size()) += c.values;
    }
    return out;
}

LatticeCochain Lattice::component_of(int n, const Vec& total, LatticeIndex idx) const {
    return LatticeCochain{idx, total.segment(offset(n, idx), cochain_dim(idx))};
}

LatticeCochain Lattice::zero_cochain(LatticeIndex idx) const { return LatticeCochain{idx, zero_vec(cochain_dim(idx))}; }

Vec Lattice::evaluate(const LatticeCochain& c, const std::vector<Vec>& xi, const std::vector<Vec>& z) const {
    const LatticeIndex idx = c.index;
    if (static_cast<int>(xi.size()) != idx.q || static_cast<int>(z.size()) != idx.r)
        throw std::invalid_argument("evaluate: argument count");
    const int np = static_cast<int>(nerve(idx.p).dim()), dg = xmod().dg();
    std::vector<SparseVec> qs, rs;
    for (const auto& v : xi) qs.push_back(sparse(v));
    for (const auto& v : z) rs.push_back(sparse(v));
    std::unordered_map<Index, Rational> accq, accr;
    wedge_expand(qs, Rational(1), np, accq);
    wedge_expand(rs, Rational(1), dg, accr);
    const Index nr = binomial(dg, idx.r), cd = coef_dim(idx.r);
    Vec out = zero_vec(cd);
    for (const auto& [qi, cq] : accq)
        for (const auto& [ri, cr] : accr) out += (cq * cr) * c.values.segment((qi * nr + ri) * cd, cd);
    return out;
}

CohomologyResult total_cohomology(const Lattice& lat, int n) {
    Mat dn = lat.nabla(n);
    Mat im = n > 0 ? column_basis(lat.nabla(n - 1)) : zeros(lat.total_dim(n), 0);
    auto ker = rank_and_kernel(dn).kernel;
    CohomologyResult res;
    if (ker.empty()) return res;
    Mat both = hstack(im, from_columns(ker, lat.total_dim(n)));
    Mat red = both;
    for (Index c : rref(red))
        if (c >= im.cols()) res.representatives.push_back(both.col(c));
    res.dim = static_cast<Index>(res.representatives.size());
    return res;
}

Index h0_invariants(const TwoRep& r) {
    const int dv = r.dimV();
    Mat stacked = zeros(0, dv);
    for (const auto& m : r.rho0V.action) stacked = vstack(stacked, m);
    for (const auto& m : r.rho1) stacked = vstack(stacked, m);
    return dv - rank(stacked);
}

H1Dims h1_der_inn(const TwoRep& r) {
    const CrossedModuleAlg& x = r.source;
    const int dg = x.dg(), dh = x.dh(), dw = r.dimW(), dv = r.dimV();
    // unknowns: λ̄ as a (dw+dv) × (dg+dh) matrix, column-major; λ1 is the top-left block, λ0 the bottom-right
    const int nr = dw + dv, nc = dg + dh;
    auto var = [nr](int row, int col) { return static_cast<Index>(col) * nr + row; };
    const Index nvars = static_cast<Index>(nr) * nc;
    std::vector<Vec> eqs;
    auto fresh = [&]() { return zero_vec(nvars); };
    // block form: the off-diagonal blocks vanish
    for (int i = 0; i < dg; ++i)
        for (int v = 0; v < dv; ++v) {
            Vec e = fresh();
            e(var(dw + v, i)) = 1;
            eqs.push_back(e);
        }
    for (int k = 0; k < dh; ++k)
        for (int w = 0; w < dw; ++w) {
            Vec e = fresh();
            e(var(w, dg + k)) = 1;
            eqs.push_back(e);
        }
    // φ λ1(x) = λ0(μ x)
    for (int i = 0; i < dg; ++i)
        for (int v = 0; v < dv; ++v) {
            Vec e = fresh();
            for (int w = 0; w < dw; ++w) e(var(w, i)) += r.phi()(v, w);
            for (int k = 0; k < dh; ++k) e(var(dw + v, dg + k)) -= x.mu(k, i);
            eqs.push_back(e);
        }
    // λ̄[a,b] = ρ̄(a)λ̄(b) - ρ̄(b)λ̄(a) on basis pairs
    Representation bar = bar_rho(r);
    const LieAlgebra& arrows = bar.algebra;
    for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b) {
            Vec br = arrows.bracket_basis(a, b);
            const Mat& ra = bar.action[static_cast<size_t>(a)];
            const Mat& rb = bar.action[static_cast<size_t>(b)];
            for (int o = 0; o < nr; ++o) {
                Vec e = fresh();
                for (int c = 0; c < nc; ++c)
                    if (!br(c).is_zero()) e(var(o, c)) += br(c);
                for (int m = 0; m < nr; ++m) {
                    e(var(m, b)) -= ra(o, m);
                    e(var(m, a)) += rb(o, m);
                }
                eqs.push_back(e);
            }
        }
    Mat sys = eqs.empty() ? zeros(0, nvars) : Mat(from_columns(eqs, nvars).transpose());
    H1Dims out;
    out.der = nvars - rank(sys);
    out.inn = r.dimV() - h0_invariants(r);
    out.out = out.der - out.inn;
    return out;
}

std::vector<LatticeIndex> trivial_components(int n) {
    std::vector<LatticeIndex> out;
    for (int p = 0; p < n; ++p) out.push_back({p, n - p, 0});
    return out;
}

namespace {

Index trivial_dim(const CrossedModuleAlg& x, LatticeIndex idx) {
    return binomial(static_cast<Index>(idx.p) * x.dg() + x.dh(), idx.q);
}

}  // namespace

Index trivial_total_dim(const CrossedModuleAlg& x, int n) {
    Index s = 0;
    for (auto idx : trivial_components(n)) s += trivial_dim(x, idx);
    return s;
}

Index trivial_offset(const CrossedModuleAlg& x, int n, int p) {
    Index s = 0;
    for (auto idx : trivial_components(n)) {
        if (idx.p == p) return s;
        s += trivial_dim(x, idx);
    }
    throw std::invalid_argument("trivial_offset: p out of range");
}

Mat trivial_total_complex(const CrossedModuleAlg& x, int n) {
    Mat out = zeros(trivial_total_dim(x, n + 1), trivial_total_dim(x, n));
    for (auto idx : trivial_components(n)) {
        if (trivial_dim(x, idx) == 0) continue;
        NerveAlgebra np = nerve_algebra(x, idx.p);
        Mat d = ce_differential(Representation::trivial(np.underlying, 1), idx.q);
        out.block(trivial_offset(x, n + 1, idx.p), trivial_offset(x, n, idx.p), d.rows(), d.cols()) += d;
        SimplicialMaps s = simplicial_maps(x, idx.p);
        Mat del = zeros(binomial(nerve_algebra(x, idx.p + 1).dim(), idx.q), d.cols());
        for (size_t k = 0; k < s.faces.size(); ++k) {
            Mat term = lambda_pullback(s.faces[k], idx.q);
            if (k % 2 == 0)
                del += term;
            else
                del -= term;
        }
        auto blk = out.block(trivial_offset(x, n + 1, idx.p + 1), trivial_offset(x, n, idx.p), del.rows(), del.cols());
        if (idx.q % 2 == 0)
            blk += del;
        else
            blk -= del;
    }
    return out;
}

}  // namespace l2c
