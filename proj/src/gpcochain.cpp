#include "lie2coh/gpcochain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace l2c {

namespace {

using Cols = std::vector<NerveElem>;
using Fs = std::vector<MatJ>;

VecJ eval(const GroupCochain& c, const Cols& g, const Fs& f) { return c.eval(GroupPoint{g, f}); }

VecJ mv(const MatJ& m, const VecJ& v) { return m * v; }

Cols q_face(const GroupXMod& x, const Cols& cols, int j) {
    const int n = static_cast<int>(cols.size());
    Cols out;
    for (int b = 0; b < n; ++b) {
        if (j == 0 && b == 0) continue;
        if (j == n && b == n - 1) continue;
        if (j > 0 && j < n && b == j - 1) {
            out.push_back(nerve_mul(x, cols[static_cast<size_t>(b)], cols[static_cast<size_t>(b + 1)]));
            ++b;
            continue;
        }
        out.push_back(cols[static_cast<size_t>(b)]);
    }
    return out;
}

Cols p_face(const GroupXMod& x, const Cols& cols, int k) {
    Cols out;
    for (const auto& c : cols) out.push_back(nerve_face(x, c, k));
    return out;
}

Cols slice(const Cols& cols, int from) { return Cols(cols.begin() + from, cols.end()); }

Fs act_all(const GroupXMod& x, const Fs& f, const MatJ& h) {
    Fs out;
    for (const auto& g : f) out.push_back(x.act(g, h));
    return out;
}

MatJ prod_targets(const GroupXMod& x, const Cols& cols) {
    MatJ t = lift<Jet>(x.unit_h);
    for (const auto& c : cols) t = x.mul_h(t, nerve_target(x, c));
    return t;
}

double sgn(int k) { return k % 2 ? -1.0 : 1.0; }

void check_point(const Signature& s, const GroupPoint& pt) {
    bool ok = static_cast<int>(pt.gammas.size()) == s.q && static_cast<int>(pt.f.size()) == s.r;
    for (const auto& g : pt.gammas) ok = ok && g.p() == s.p;
    if (!ok) throw std::invalid_argument("group cochain: arity mismatch");
}

}  // namespace

MatJ nerve_source(const GroupXMod& x, const NerveElem& e, int a) {
    const int p = e.p();
    if (a < 0 || a >= p) throw std::out_of_range("nerve_source: arrow index");
    if (a == p - 1) return e.h;
    MatJ g = e.g[static_cast<size_t>(p - 1)];
    for (int b = p - 2; b > a; --b) g = x.mul_g(g, e.g[static_cast<size_t>(b)]);
    return x.mul_h(e.h, x.i(g));
}

MatJ nerve_target(const GroupXMod& x, const NerveElem& e) {
    const int p = e.p();
    if (p == 0) return e.h;
    MatJ g = e.g[static_cast<size_t>(p - 1)];
    for (int b = p - 2; b >= 0; --b) g = x.mul_g(g, e.g[static_cast<size_t>(b)]);
    return x.mul_h(e.h, x.i(g));
}

NerveElem nerve_face(const GroupXMod& x, const NerveElem& e, int k) {
    const int n = e.p();  // faces G_n → G_{n−1}, k = 0..n
    if (n == 0 || k < 0 || k > n) throw std::out_of_range("nerve_face: index");
    NerveElem out;
    out.h = e.h;
    if (k == n) {
        out.g.assign(e.g.begin(), e.g.end() - 1);
        out.h = x.mul_h(e.h, x.i(e.g.back()));
        return out;
    }
    for (int a = 0; a < n; ++a) {
        if (k == 0 && a == 0) continue;
        if (k > 0 && a == k - 1) {
            out.g.push_back(x.mul_g(e.g[static_cast<size_t>(k)], e.g[static_cast<size_t>(k - 1)]));
            ++a;
            continue;
        }
        out.g.push_back(e.g[static_cast<size_t>(a)]);
    }
    return out;
}

NerveElem nerve_mul(const GroupXMod& x, const NerveElem& a, const NerveElem& b) {
    if (a.p() != b.p()) throw std::invalid_argument("nerve_mul: degree mismatch");
    NerveElem out;
    for (int k = 0; k < a.p(); ++k)
        out.g.push_back(x.mul_g(x.act(a.g[static_cast<size_t>(k)], nerve_source(x, b, k)), b.g[static_cast<size_t>(k)]));
    out.h = x.mul_h(a.h, b.h);
    return out;
}

MatJ row0_product_g(const GroupXMod& x, const std::vector<NerveElem>& cols, int from, int to) {
    MatJ g = lift<Jet>(x.unit_g);
    MatJ h = lift<Jet>(x.unit_h);
    for (int b = from; b < to; ++b) {
        const auto& c = cols[static_cast<size_t>(b)];
        MatJ g2 = c.g[0], h2 = nerve_source(x, c, 0);
        // (g,h)(g',h') = (g^{h'} g', hh')
        g = x.mul_g(x.act(g, h2), g2);
        h = x.mul_h(h, h2);
    }
    return g;
}

Signature group_diff_target(GroupDiff kind, const Signature& s) {
    switch (kind) {
        case GroupDiff::delta:
            return {s.p, s.q + 1, s.r};
        case GroupDiff::deltaPrime:
            if (s.r < 1) throw std::invalid_argument("deltaPrime needs r >= 1");
            return {s.p, s.q + 1, s.r};
        case GroupDiff::partial:
            return {s.p + 1, s.q, s.r};
        case GroupDiff::delta1:
            return {s.p, s.q, s.r + 1};
        case GroupDiff::Delta:
            if (s.r < 1) throw std::invalid_argument("Delta needs r >= 1");
            return {s.p + 1, s.q + 1, s.r - 1};
        case GroupDiff::Delta2q:
            if (s.r != 2) throw std::invalid_argument("Delta2q needs r = 2");
            return {s.p + 2, s.q + 1, 0};
        case GroupDiff::Delta2p:
            if (s.r != 2) throw std::invalid_argument("Delta2p needs r = 2");
            return {s.p + 1, s.q + 2, 0};
    }
    throw std::invalid_argument("unknown differential");
}

VecJ group_cochain_diff(const GroupTwoRep& rep, GroupDiff kind, const GroupCochain& c, const GroupPoint& pt) {
    const GroupXMod& x = rep.x;
    const Signature src{c.p, c.q, c.r};
    check_point(group_diff_target(kind, src), pt);
    const Cols& G = pt.gammas;
    const Fs& f = pt.f;
    const MatJ phi = lift<Jet>(rep.phi);
    const int p = c.p, q = c.q, r = c.r;

    switch (kind) {
        case GroupDiff::delta:
        case GroupDiff::deltaPrime: {
            if (r == 0) {
                VecJ out = mv(rep.rho0V(nerve_target(x, G[0])), eval(c, q_face(x, G, 0), f));
                for (int j = 1; j <= q + 1; ++j) out += sgn(j) * eval(c, q_face(x, G, j), f);
                return out;
            }
            VecJ out = eval(c, q_face(x, G, 0), act_all(x, f, nerve_target(x, G[0])));
            for (int j = 1; j <= q; ++j) out += sgn(j) * eval(c, q_face(x, G, j), f);
            out += sgn(q + 1) *
                   mv(inverse<Jet>(rep.rho0W(nerve_target(x, G[static_cast<size_t>(q)]))), eval(c, q_face(x, G, q + 1), f));
            return out;
        }
        case GroupDiff::partial: {
            VecJ out = eval(c, p_face(x, G, 0), f);
            if (r >= 1 && q >= 1) out = mv(inverse<Jet>(rep.rho0W(x.i(row0_product_g(x, G, 0, q)))), out);
            for (int j = 1; j <= p + 1; ++j) out += sgn(j) * eval(c, p_face(x, G, j), f);
            return out;
        }
        case GroupDiff::delta1: {
            MatJ T = prod_targets(x, G);
            if (r == 0) return mv(inverse<Jet>(rep.rho0W(T)) * rep.rho1(f[0]), eval(c, G, {}));
            VecJ out = mv(rep.rho0W(x.i(x.act(f[0], T))), eval(c, G, Fs(f.begin() + 1, f.end())));
            for (int k = 1; k <= r; ++k) {
                Fs m;
                for (int a = 0; a <= r; ++a) {
                    if (a == k - 1) {
                        m.push_back(x.mul_g(f[static_cast<size_t>(k - 1)], f[static_cast<size_t>(k)]));
                        ++a;
                        continue;
                    }
                    m.push_back(f[static_cast<size_t>(a)]);
                }
                out += sgn(k) * eval(c, G, m);
            }
            out += sgn(r + 1) * eval(c, G, Fs(f.begin(), f.end() - 1));
            return out;
        }
        case GroupDiff::Delta: {
            Cols minor = p_face(x, slice(G, 1), 0);
            const MatJ& g00 = G[0].g[0];
            if (r == 1) return mv(rep.rho0V(prod_targets(x, p_face(x, G, 0))) * phi, eval(c, minor, {g00}));
            const int rr = r - 1;  // length of f
            const MatJ h00 = nerve_source(x, G[0], 0);
            MatJ hprod = lift<Jet>(x.unit_h);
            for (int b = 1; b <= q; ++b) hprod = x.mul_h(hprod, nerve_source(x, G[static_cast<size_t>(b)], 0));
            const MatJ a0 = x.act(g00, hprod);
            Fs args = act_all(x, f, h00);
            args.push_back(g00);
            VecJ inner = mv(inverse<Jet>(rep.rho0W(x.i(a0))), eval(c, minor, args));
            const MatJ hig = x.mul_h(h00, x.i(g00));
            const MatJ ginv = x.inv_g(g00);
            const MatJ last = x.mul_g(x.act(f[static_cast<size_t>(rr - 1)], h00), g00);
            for (int n = 1; n <= rr; ++n) {
                Fs d;
                for (int k = 0; k < n - 1; ++k) d.push_back(x.act(f[static_cast<size_t>(k)], hig));
                d.push_back(ginv);
                for (int k = n - 1; k < rr - 1; ++k) d.push_back(x.act(f[static_cast<size_t>(k)], h00));
                Fs d1 = d, d2 = d;
                d1.push_back(last);
                d2.push_back(g00);
                inner += sgn(rr - n) * (eval(c, minor, d1) - eval(c, minor, d2));
            }
            if (q >= 1) inner = mv(inverse<Jet>(rep.rho0W(x.i(row0_product_g(x, G, 1, q + 1)))), inner);
            return inner;
        }
        case GroupDiff::Delta2q: {
            Cols minor = p_face(x, p_face(x, slice(G, 1), 0), 0);
            return mv(rep.rho0V(prod_targets(x, p_face(x, p_face(x, G, 0), 0))) * phi, eval(c, minor, {G[0].g[1], G[0].g[0]}));
        }
        case GroupDiff::Delta2p: {
            Cols minor = p_face(x, slice(G, 2), 0);
            Cols all = p_face(x, G, 0);
            const MatJ a = x.act(G[0].g[0], nerve_source(x, G[1], 0));
            return mv(rep.rho0V(prod_targets(x, all)) * phi, eval(c, minor, {a, G[1].g[0]}));
        }
    }
    throw std::invalid_argument("unknown differential");
}

GroupCochain group_cochain_apply(const GroupTwoRep& rep, GroupDiff kind, const GroupCochain& c) {
    Signature t = group_diff_target(kind, {c.p, c.q, c.r});
    GroupCochain out;
    out.p = t.p;
    out.q = t.q;
    out.r = t.r;
    out.dim = t.r == 0 ? rep.dimV() : rep.dimW();
    out.eval = [rep, kind, c](const GroupPoint& pt) { return group_cochain_diff(rep, kind, c, pt); };
    return out;
}

GroupCochain zero_cochain(const GroupTwoRep& rep, const Signature& s) {
    const int d = s.r == 0 ? rep.dimV() : rep.dimW();
    return GroupCochain{s.p, s.q, s.r, d, [d](const GroupPoint&) { return VecJ(zeros_t<Jet>(d, 1)); }};
}

GroupCochain operator+(const GroupCochain& a, const GroupCochain& b) {
    if (a.p != b.p || a.q != b.q || a.r != b.r) throw std::invalid_argument("cochain sum: signature mismatch");
    return GroupCochain{a.p, a.q, a.r, a.dim, [a, b](const GroupPoint& pt) { return VecJ(a(pt) + b(pt)); }};
}

GroupCochain scaled(double s, const GroupCochain& a) {
    return GroupCochain{a.p, a.q, a.r, a.dim, [s, a](const GroupPoint& pt) { return VecJ(a(pt) * Jet(s)); }};
}

GroupCochain operator-(const GroupCochain& a, const GroupCochain& b) { return a + scaled(-1.0, b); }

GroupPoint sample_point(const GroupXMod& x, const Signature& s, Rng& rng) {
    GroupPoint pt;
    for (int b = 0; b < s.q; ++b) {
        NerveElem e;
        for (int a = 0; a < s.p; ++a) e.g.push_back(lift<Jet>(x.sample_g(rng)));
        e.h = lift<Jet>(x.sample_h(rng));
        pt.gammas.push_back(std::move(e));
    }
    for (int k = 0; k < s.r; ++k) pt.f.push_back(lift<Jet>(x.sample_g(rng)));
    return pt;
}

GroupCochain random_group_cochain(const GroupTwoRep& rep, const Signature& s, Rng& rng) {
    const GroupXMod& x = rep.x;
    const int dim = s.r == 0 ? rep.dimV() : rep.dimW();
    const Eigen::Index ng = x.unit_g.size(), nh = x.unit_h.size();
    const Eigen::Index nx = s.q * (s.p * ng + nh) + s.r * ng;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto rnd = [&](Eigen::Index n) {
        Eigen::VectorXd v(n);
        for (Eigen::Index k = 0; k < n; ++k) v(k) = u(rng);
        return v;
    };
    struct Term {
        Eigen::VectorXd c, a, b;
        std::vector<Eigen::VectorXd> l;
    };
    std::vector<Term> terms;
    for (int m = 0; m < 3; ++m) {
        Term t{rnd(dim), rnd(nx), rnd(nx), {}};
        for (int k = 0; k < s.r; ++k) t.l.push_back(rnd(ng));
        terms.push_back(std::move(t));
    }
    const Eigen::MatrixXd eg = x.unit_g, eh = x.unit_h;
    auto dot = [](const Eigen::VectorXd& w, const VecJ& v, Eigen::Index off, Eigen::Index n) {
        Jet s(0.0);
        for (Eigen::Index k = 0; k < n; ++k)
            if (w(off + k) != 0.0) s += v(k) * Jet(w(off + k));
        return s;
    };
    GroupCochain out;
    out.p = s.p;
    out.q = s.q;
    out.r = s.r;
    out.dim = dim;
    out.eval = [terms, s, eg, eh, ng, nh, dim, dot](const GroupPoint& pt) {
        std::vector<VecJ> feats;
        for (const auto& e : pt.gammas) {
            for (const auto& g : e.g) feats.push_back(row_major<Jet>(MatJ(g - lift<Jet>(eg))));
            feats.push_back(row_major<Jet>(MatJ(e.h - lift<Jet>(eh))));
        }
        std::vector<VecJ> fs;
        for (const auto& f : pt.f) fs.push_back(row_major<Jet>(MatJ(f - lift<Jet>(eg))));
        VecJ out = zeros_t<Jet>(dim, 1);
        for (const auto& t : terms) {
            Jet lin_a(0.0), lin_b(0.0);
            Eigen::Index off = 0;
            auto feed = [&](const VecJ& v) {
                lin_a += dot(t.a, v, off, v.size());
                lin_b += dot(t.b, v, off, v.size());
                off += v.size();
            };
            for (const auto& v : feats) feed(v);
            for (const auto& v : fs) feed(v);
            Jet w = Jet(1.0) + lin_a + lin_b * lin_b;
            for (int k = 0; k < s.r; ++k) w *= dot(t.l[static_cast<size_t>(k)], fs[static_cast<size_t>(k)], 0, ng);
            for (int i = 0; i < dim; ++i) out(i) += w * Jet(t.c(i));
        }
        (void)nh;
        return out;
    };
    return out;
}

double sampled_residual(const GroupXMod& x, const GroupCochain& a, const GroupCochain& b, int samples,
                        std::uint64_t seed) {
    if (a.p != b.p || a.q != b.q || a.r != b.r) throw std::invalid_argument("sampled_residual: signature mismatch");
    Rng rng(seed);
    double m = 0.0;
    for (int s = 0; s < samples; ++s) {
        GroupPoint pt = sample_point(x, {a.p, a.q, a.r}, rng);
        m = std::max(m, max_abs(MatJ(a(pt) - b(pt))));
    }
    return m;
}

double relation_star(const GroupTwoRep& rep, const GroupCochain& w, int samples, std::uint64_t seed) {
    auto D = [&](GroupDiff k, const GroupCochain& c) { return group_cochain_apply(rep, k, c); };
    GroupCochain lhs = scaled(sgn(w.r), D(GroupDiff::delta, D(GroupDiff::partial, w)) -
                                            D(GroupDiff::partial, D(GroupDiff::delta, w)));
    GroupCochain rhs = D(GroupDiff::Delta, D(GroupDiff::delta1, w));
    if (w.r >= 1) rhs = rhs - D(GroupDiff::delta1, D(GroupDiff::Delta, w));
    return sampled_residual(rep.x, lhs, rhs, samples, seed);
}

double relation_iv(const GroupTwoRep& rep, const GroupCochain& w, int samples, std::uint64_t seed) {
    if (w.r != 1) throw std::invalid_argument("relation_iv: needs r = 1");
    auto D = [&](GroupDiff k, const GroupCochain& c) { return group_cochain_apply(rep, k, c); };
    GroupCochain lhs = D(GroupDiff::partial, D(GroupDiff::Delta, w)) + D(GroupDiff::Delta, D(GroupDiff::partial, w));
    GroupCochain rhs = D(GroupDiff::Delta2q, D(GroupDiff::delta1, w));
    return sampled_residual(rep.x, lhs, rhs, samples, seed);
}

double relation_v(const GroupTwoRep& rep, const GroupCochain& w, int samples, std::uint64_t seed) {
    if (w.r != 1) throw std::invalid_argument("relation_v: needs r = 1");
    auto D = [&](GroupDiff k, const GroupCochain& c) { return group_cochain_apply(rep, k, c); };
    GroupCochain lhs = D(GroupDiff::delta, D(GroupDiff::Delta, w)) + D(GroupDiff::Delta, D(GroupDiff::delta, w));
    GroupCochain rhs = D(GroupDiff::Delta2p, D(GroupDiff::delta1, w));
    return sampled_residual(rep.x, lhs, rhs, samples, seed);
}

GpTwoCocycle zero_gp_cocycle(const GroupTwoRep& rep) {
    const int dw = rep.dimW(), dv = rep.dimV();
    auto zw = [dw](const MatJ&, const MatJ&) { return VecJ(zeros_t<Jet>(dw, 1)); };
    auto zv = [dv](const MatJ&, const MatJ&) { return VecJ(zeros_t<Jet>(dv, 1)); };
    return GpTwoCocycle{zv, zw, zw, [dv](const MatJ&) { return VecJ(zeros_t<Jet>(dv, 1)); }};
}

ResidualReport gp2cocycle_residuals(const GroupTwoRep& rep, const GpTwoCocycle& c, int samples, std::uint64_t seed) {
    const GroupXMod& x = rep.x;
    const MatJ phi = lift<Jet>(rep.phi);
    Rng rng(seed);
    std::array<double, 7> res{};
    auto upd = [&](int k, const VecJ& v) { res[static_cast<size_t>(k)] = std::max(res[static_cast<size_t>(k)], max_abs(v)); };
    auto W = [&](const MatJ& h) { return rep.rho0W(h); };
    auto V = [&](const MatJ& h) { return rep.rho0V(h); };
    auto Winv = [&](const MatJ& h) { return inverse<Jet>(rep.rho0W(h)); };
    for (int s = 0; s < samples; ++s) {
        MatJ g0 = lift<Jet>(x.sample_g(rng)), g1 = lift<Jet>(x.sample_g(rng)), g2 = lift<Jet>(x.sample_g(rng));
        MatJ h0 = lift<Jet>(x.sample_h(rng)), h1 = lift<Jet>(x.sample_h(rng)), h2 = lift<Jet>(x.sample_h(rng));
        auto hm = x.mul_h;
        auto gm = x.mul_g;
        upd(0, mv(V(h0), c.omega0(h1, h2)) - c.omega0(hm(h0, h1), h2) + c.omega0(h0, hm(h1, h2)) - c.omega0(h0, h1));
        upd(1, mv(W(x.i(g0)), c.omega1(g1, g2)) - c.omega1(gm(g0, g1), g2) + c.omega1(g0, gm(g1, g2)) -
                   c.omega1(g0, g1));
        upd(2, mv(phi, c.omega1(g1, g2)) - c.omega0(x.i(g1), x.i(g2)) -
                   (mv(V(x.i(g1)), c.phihat(g2)) - c.phihat(gm(g1, g2)) + c.phihat(g1)));
        upd(3, mv(Winv(hm(h1, h2)) * rep.rho1(g0), c.omega0(h1, h2)) -
                   (mv(Winv(h2), c.alpha(h1, g0)) - c.alpha(hm(h1, h2), g0) + c.alpha(h2, x.act(g0, h1))));
        {
            MatJ hi = x.inv_h(h0);
            upd(4, c.phihat(x.act(g0, h0)) - mv(V(hi), c.phihat(g0)) + mv(phi, c.alpha(h0, g0)) -
                       (mv(V(hi), c.omega0(x.i(g0), h0)) + c.omega0(hi, hm(x.i(g0), h0)) - c.omega0(hi, h0)));
        }
        {
            MatJ gi = x.inv_g(g2);
            upd(5, mv(Winv(x.i(g2)) * rep.rho1(g1), c.phihat(g2)) + c.alpha(x.i(g2), g1) -
                       (mv(Winv(x.i(g2)), c.omega1(g1, g2)) + c.omega1(gi, gm(g1, g2)) - c.omega1(gi, g2)));
        }
        upd(6, mv(Winv(h0), c.omega1(g1, g2)) - c.omega1(x.act(g1, h0), x.act(g2, h0)) -
                   (mv(W(x.i(x.act(g1, h0))), c.alpha(h0, g2)) - c.alpha(h0, gm(g1, g2)) + c.alpha(h0, g1)));
    }
    static const char* names[] = {"eq i", "eq ii", "eq iii", "eq iv", "eq v", "eq vi", "eq vii"};
    ResidualReport out;
    for (int k = 0; k < 7; ++k) out.entries.emplace_back(names[k], res[static_cast<size_t>(k)]);
    return out;
}

namespace {

int max_vars(const GroupPoint& pt) {
    int n = 0;
    auto scan = [&](const MatJ& m) {
        for (Eigen::Index i = 0; i < m.size(); ++i) n = std::max(n, m(i).num_vars());
    };
    for (const auto& e : pt.gammas) {
        for (const auto& g : e.g) scan(g);
        scan(e.h);
    }
    for (const auto& f : pt.f) scan(f);
    return n;
}

VecJ curve(const Eigen::VectorXd& d, Eigen::Index off, Eigen::Index n, const Jet& tau) {
    VecJ v(n);
    for (Eigen::Index k = 0; k < n; ++k) v(k) = tau * Jet(d(off + k));
    return v;
}

}  // namespace

GroupCochain van_est_R(const GroupXMod& x, const Eigen::VectorXd& dir, const GroupCochain& c) {
    GroupCochain out = c;
    const int dg = x.dim_g(), dh = x.dim_h();
    if (c.r >= 1) {
        if (dir.size() != dg) throw std::invalid_argument("van_est_R: direction must lie in g");
        out.r = c.r - 1;
    } else if (c.q >= 1) {
        if (dir.size() != c.p * dg + dh) throw std::invalid_argument("van_est_R: direction must lie in g_p");
        out.q = c.q - 1;
    } else {
        throw std::invalid_argument("van_est_R: arity underflow");
    }
    out.eval = [x, dir, c, dg, dh](const GroupPoint& pt) {
        const int var = max_vars(pt);
        if (var >= Jet::kMaxVars) throw std::domain_error("van_est_R: too many nested derivatives");
        const Jet tau = Jet::variable(var, var + 1, Jet::kMaxOrder);
        GroupPoint full = pt;
        if (c.r >= 1) {
            full.f.insert(full.f.begin(), x.exp_g(curve(dir, 0, dg, tau)));
        } else {
            NerveElem e;
            for (int a = 0; a < c.p; ++a) e.g.push_back(x.exp_g(curve(dir, a * dg, dg, tau)));
            e.h = x.exp_h(curve(dir, c.p * dg, dh, tau));
            full.gammas.insert(full.gammas.begin(), std::move(e));
        }
        VecJ v = c(full);
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = partial_at_zero(v(i), var);
        return v;
    };
    return out;
}

namespace {

int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace

Eigen::VectorXd van_est_phi(const GroupXMod& x, const GroupCochain& c, const std::vector<Eigen::VectorXd>& xis,
                            const std::vector<Eigen::VectorXd>& xs) {
    const int q = static_cast<int>(xis.size()), r = static_cast<int>(xs.size());
    if (q != c.q || r != c.r) throw std::invalid_argument("van_est_phi: argument count does not match the signature");
    if (q + r > 3) throw std::invalid_argument("van_est_phi: degree bound exceeded (q + r <= 3)");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(c.dim);
    std::vector<int> rho(static_cast<size_t>(r)), sigma(static_cast<size_t>(q));
    std::iota(rho.begin(), rho.end(), 0);
    do {
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            GroupCochain cur = c;
            for (int k = 0; k < r; ++k) cur = van_est_R(x, xs[static_cast<size_t>(rho[static_cast<size_t>(k)])], cur);
            for (int k = 0; k < q; ++k) cur = van_est_R(x, xis[static_cast<size_t>(sigma[static_cast<size_t>(k)])], cur);
            VecJ v = cur(GroupPoint{});
            const double s = perm_sign(rho) * perm_sign(sigma);
            for (int i = 0; i < c.dim; ++i) out(i) += s * v(i).value();
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    } while (std::next_permutation(rho.begin(), rho.end()));
    return out;
}

}  // namespace l2c
