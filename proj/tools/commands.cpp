#include "commands.hpp"

#include "problem.hpp"

#include "lie2coh/gpcochain.hpp"
#include "lie2coh/grp.hpp"
#include "lie2coh/homalg.hpp"
#include "lie2coh/lattice.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>

namespace l2c::cli {

namespace {

struct Report {
    std::ostream& out;
    bool failed = false;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out << "CHECK " << name << ": " << (ok ? "PASS" : "FAIL");
        if (!detail.empty()) out << ' ' << detail;
        out << '\n';
        failed = failed || !ok;
    }
    void diagnostics(const std::string& name, const Diagnostics& d) {
        check(name, d.empty(), d.empty() ? "" : std::to_string(d.size()) + (d.size() == 1 ? " violation" : " violations"));
        for (const auto& v : d) out << "  - " << describe(v) << '\n';
    }
    void residual(const std::string& name, double r, double tol) {
        check(name, r <= tol, "residual " + sci(r) + " (tolerance " + sci(tol) + ")");
    }
    int code() const { return failed ? 1 : 0; }

    static std::string sci(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2e", x);
        return buf;
    }
};

std::string fmt(const Vec& v) {
    std::string s = "[";
    for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v(i));
    return s + "]";
}

std::string fmt(const Mat& m) {
    std::string s = "[";
    for (Index r = 0; r < m.rows(); ++r) s += (r ? ", " : "") + fmt(Vec(m.row(r).transpose()));
    return s + "]";
}

// quoted entries, ready to paste into a cochains section
std::string fmt_json(const Vec& v) {
    std::string s = "[";
    for (Index i = 0; i < v.size(); ++i) s += (i ? ", \"" : "\"") + to_string(v(i)) + "\"";
    return s + "]";
}

std::string triple(const LatticeIndex& idx) {
    return "(" + std::to_string(idx.p) + "," + std::to_string(idx.q) + "," + std::to_string(idx.r) + ")";
}

std::uint64_t parse_seed(const std::string& s, const std::string& where) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw InputError(where, "expected a non-negative integer seed");
    return v;
}

// --seed, then the file's options, then LIE2COH_SEED, then 1
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const Options& file) {
    if (flag) return *flag;
    if (file.seed) return *file.seed;
    if (const char* env = std::getenv("LIE2COH_SEED")) return parse_seed(env, "LIE2COH_SEED");
    return 1;
}

bool validate_structures(const ProblemFile& pf, Report& rep) {
    const bool before = rep.failed;
    rep.failed = false;
    if (pf.xmod) {
        rep.diagnostics("lie algebra g", validate_lie_algebra(pf.xmod->g));
        rep.diagnostics("lie algebra h", validate_lie_algebra(pf.xmod->h));
        rep.diagnostics("crossed module", validate_crossed_module(*pf.xmod));
    }
    if (pf.rep) rep.diagnostics("2-representation", validate_two_rep(*pf.rep));
    const bool ok = !rep.failed;
    rep.failed = before || !ok;
    return ok;
}

const TwoRep& need_rep(const ProblemFile& pf) {
    if (!pf.rep) throw InputError("/two_rep", "missing two_rep section");
    return *pf.rep;
}

int cmd_validate(const ProblemFile& pf, Report& rep) {
    if (!pf.xmod && !pf.space && !pf.rep) rep.out << "nothing to validate\n";
    const bool ok = validate_structures(pf, rep);
    for (const auto& entry : pf.cochains) {
        const std::string& name = entry.first;
        if (!ok) {
            rep.check("cocycle " + name, false, "not checked: the context is invalid");
            continue;
        }
        rep.diagnostics("cocycle " + name, validate_cocycle(cocycle_named(pf, name)));
    }
    return rep.code();
}

FinComplex trivial_window(const CrossedModuleAlg& x, int n) {
    const int lo = std::max(0, n - 1);
    std::vector<Index> dims;
    std::vector<Mat> d;
    for (int k = lo; k <= n + 1; ++k) dims.push_back(trivial_total_dim(x, k));
    for (int k = lo; k <= n; ++k) d.push_back(trivial_total_complex(x, k));
    return FinComplex(lo, dims, d);
}

int cmd_cohomology(const ProblemFile& pf, int n, bool trivial, Report& rep) {
    if (n < 0) throw InputError("--degree", "degree must be non-negative");
    if (trivial) {
        if (!pf.xmod) throw InputError("/lie2algebra", "missing lie2algebra section");
        if (!validate_structures(ProblemFile{pf.xmod, {}, {}, {}, {}}, rep)) return rep.code();
        const CrossedModuleAlg& x = *pf.xmod;
        bool sq = true;
        for (int k = std::max(0, n - 1); k <= n; ++k)
            sq = sq && is_zero(mul(trivial_total_complex(x, k + 1), trivial_total_complex(x, k)));
        rep.check("d^2 = 0", sq);
        rep.out << "H^" << n << "_tot = " << cohomology_dim(trivial_window(x, n), n) << '\n';
        return rep.code();
    }
    const TwoRep& r = need_rep(pf);
    if (!validate_structures(pf, rep)) return rep.code();
    Lattice lat(r, LatticeOptions{-1, NablaSigns::frozen()});
    bool sq = true;
    for (int k = std::max(0, n - 1); k <= n; ++k) sq = sq && is_zero(mul(lat.nabla(k + 1), lat.nabla(k)));
    rep.check("nabla^2 = 0", sq, "around degree " + std::to_string(n));
    if (!sq) return rep.code();
    const Index h = total_cohomology(lat, n).dim;
    rep.out << "H^" << n << " = " << h << '\n';
    if (n == 0) {
        const Index inv = h0_invariants(r);
        rep.check("invariants", inv == h,
                  "H^0 = " + std::to_string(h) + ", invariants = " + std::to_string(inv) + (inv == h ? ", invariants agree" : ""));
    } else if (n == 1) {
        const H1Dims d = h1_der_inn(r);
        rep.check("derivations mod inner", d.out == h,
                  "Der = " + std::to_string(d.der) + ", Inn = " + std::to_string(d.inn) + ", Der/Inn = " +
                      std::to_string(d.out) + ", H^1 = " + std::to_string(h));
    }
    return rep.code();
}

std::pair<LatticeIndex, Index> locate(const Lattice& lat, int n, Index flat) {
    for (const auto& idx : Lattice::components(n)) {
        const Index o = lat.offset(n, idx);
        if (flat >= o && flat < o + lat.cochain_dim(idx)) return {idx, flat - o};
    }
    throw std::logic_error("locate: index out of range");
}

int cmd_nabla_check(const ProblemFile& pf, int max_degree, int trials, std::uint64_t seed, bool corrupt, Report& rep) {
    const TwoRep& r = need_rep(pf);
    if (!validate_structures(pf, rep)) return rep.code();
    NablaSigns signs = NablaSigns::frozen();
    if (corrupt) signs.partial[0][0] = -signs.partial[0][0];
    Lattice lat(r, LatticeOptions{-1, signs});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int n = 0; n <= max_degree; ++n) {
        const Mat a = lat.nabla(n), b = lat.nabla(n + 1);
        const Mat p = mul(b, a);
        std::string detail;
        for (Index c = 0; c < p.cols() && detail.empty(); ++c)
            for (Index row = 0; row < p.rows(); ++row) {
                if (p(row, c) == 0) continue;
                auto [src, si] = locate(lat, n, c);
                auto [dst, di] = locate(lat, n + 2, row);
                detail = "block " + triple(src) + " -> " + triple(dst) + ", entry (" + std::to_string(di + 1) + "," +
                         std::to_string(si + 1) + ") = " + to_string(p(row, c));
                break;
            }
        rep.check("nabla^2 degree " + std::to_string(n), detail.empty(),
                  detail.empty() ? std::to_string(p.rows()) + "x" + std::to_string(p.cols()) + " zero" : detail);
        if (trials > 0 && a.cols() > 0) {
            bool ok = true;
            for (int t = 0; t < trials; ++t) {
                Vec v(a.cols());
                for (Index i = 0; i < v.size(); ++i) v(i) = coef(rng);
                const Mat img = mul(b, mul(a, Mat(v)));
                ok = ok && is_zero(img);
            }
            rep.check("nabla^2 probes degree " + std::to_string(n), ok, std::to_string(trials) + " random cochains");
        }
    }
    return rep.code();
}

void print_algebra(std::ostream& out, const std::string& name, const LieAlgebra& g) {
    out << name << " (dim " << g.dim() << ")\n";
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            const Vec v = g.bracket_basis(i, j);
            if (v.isZero()) continue;
            out << "  [" << i + 1 << "," << j + 1 << "] = " << fmt(v) << '\n';
        }
}

void print_xmod(std::ostream& out, const CrossedModuleAlg& x, const std::string& g1, const std::string& g0) {
    print_algebra(out, g1, x.g);
    print_algebra(out, g0, x.h);
    out << "mu = " << fmt(x.mu) << '\n';
    for (int k = 0; k < x.dh(); ++k)
        if (!x.L_basis(k).isZero()) out << "action " << k + 1 << " = " << fmt(x.L_basis(k)) << '\n';
}

bool checked_cocycle(const ProblemFile& pf, const std::string& name, Report& rep, TwoCocycle& out) {
    if (!validate_structures(pf, rep)) return false;
    out = cocycle_named(pf, name);
    Diagnostics d = validate_cocycle(out);
    rep.diagnostics("cocycle " + name, d);
    return d.empty();
}

int cmd_extend(const ProblemFile& pf, const std::string& name, Report& rep) {
    need_rep(pf);
    TwoCocycle c = zero_cocycle(*pf.rep);
    if (!checked_cocycle(pf, name, rep, c)) return rep.code();
    ExtensionResult e = extension_from_cocycle(c);
    print_xmod(rep.out, e.total, "e1", "e0");
    rep.diagnostics("extension", validate_extension(e, pf.rep->source, pf.rep->target));
    return rep.code();
}

TwoCocycle split_of(const TwoCocycle& c) {
    ExtensionResult e = extension_from_cocycle(c);
    return cocycle_from_extension(e, canonical_splitting(e)).second;
}

int cmd_split(const ProblemFile& pf, const std::string& name, Report& rep) {
    need_rep(pf);
    TwoCocycle c = zero_cocycle(*pf.rep);
    if (!checked_cocycle(pf, name, rep, c)) return rep.code();
    TwoCocycle s = split_of(c);
    rep.out << "\"omega0\": " << fmt_json(s.omega0.values) << '\n';
    rep.out << "\"alpha\": " << fmt_json(s.alpha.values) << '\n';
    rep.out << "\"phi\": " << fmt_json(s.phimap.values) << '\n';
    rep.check("round trip", s.omega0.values == c.omega0.values && s.alpha.values == c.alpha.values &&
                                s.phimap.values == c.phimap.values);
    return rep.code();
}

int cmd_compare(const ProblemFile& pf, const std::string& a, const std::string& b, Report& rep) {
    need_rep(pf);
    TwoCocycle ca = zero_cocycle(*pf.rep), cb = ca;
    if (!checked_cocycle(pf, a, rep, ca)) return rep.code();
    if (b.empty()) {
        cb = split_of(ca);
        rep.out << "comparing " << a << " with split(extend(" << a << "))\n";
    } else {
        Diagnostics d = validate_cocycle(cb = cocycle_named(pf, b));
        rep.diagnostics("cocycle " + b, d);
        if (!d.empty()) return rep.code();
    }
    std::optional<Coboundary> l = coboundary_solve(ca, cb);
    if (!l) {
        rep.out << "cohomologous: no\n";
    } else if (l->lambda0.isZero() && l->lambda1.isZero()) {
        rep.out << "cohomologous: yes, lambda = 0\n";
    } else {
        rep.out << "cohomologous: yes\n";
        rep.out << "lambda0 = " << fmt(l->lambda0) << '\n';
        rep.out << "lambda1 = " << fmt(l->lambda1) << '\n';
    }
    return rep.code();
}

// ---- built-in group scenarios

struct GroupArgs {
    std::vector<int> dims;
    int trials = 20;
    std::uint64_t seed = 1;
    std::optional<double> tolerance;

    double tol(double fallback) const { return tolerance.value_or(fallback); }
};

Mat random_phi(int dw, int dv, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-2, 2);
    Mat m(dv, dw);
    for (Index i = 0; i < m.size(); ++i) m(i) = d(rng);
    return m;
}

Mat default_phi() {
    Mat phi(2, 2);
    phi << 1, 1, 0, 2;
    return phi;
}

// dims given: random φ of that shape; otherwise φ = [[1,1],[0,2]]
TwoVectorSpace scenario_space(const GroupArgs& a, std::vector<int> fallback) {
    if (a.dims.empty()) {
        if (fallback.empty()) return TwoVectorSpace{2, 2, default_phi()};
    } else {
        fallback = a.dims;
    }
    return TwoVectorSpace{fallback[0], fallback[1], random_phi(fallback[0], fallback[1], a.seed)};
}

void report_residuals(Report& rep, const std::string& prefix, const ResidualReport& r, double tol) {
    for (const auto& [name, v] : r.entries) rep.residual(prefix + name, v, tol);
}

void scenario_glphi(const GroupArgs& a, Report& rep) {
    TwoVectorSpace v = scenario_space(a, {2, 1});
    rep.out << "phi = " << fmt(v.phi) << '\n';
    const double tol = a.tol(1e-9);
    report_residuals(rep, "crossed module: ", group_xmod_validate_sampled(glphi_group(v), a.trials, a.seed), tol);
    report_residuals(rep, "2-representation: ", group_rep_validate_sampled(glphi_identity_rep(v), a.trials, a.seed + 1),
                     tol);
}

void scenario_exp(const GroupArgs& a, Report& rep) {
    TwoVectorSpace v = scenario_space(a, {2, 2});
    std::mt19937_64 rng(a.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    if (v.dimW == 1 && v.dimV == 1) {
        double worst = 0;
        Eigen::MatrixXd one = Eigen::MatrixXd::Ones(1, 1);
        for (int t = 0; t < a.trials; ++t) {
            const double x = u(rng);
            Eigen::MatrixXd e = glphi1_exp<double>(one, Eigen::MatrixXd::Constant(1, 1, x), 30);
            worst = std::max(worst, std::abs(e(0, 0) - std::expm1(x)));
        }
        rep.residual("scalar exp(a) = e^a - 1", worst, a.tol(1e-12));
    }
    rep.out << "phi = " << fmt(v.phi) << '\n';
    const Eigen::MatrixXd phi = to_double(v.phi);
    double group = 0, wside = 0, vside = 0;
    for (int t = 0; t < a.trials; ++t) {
        Eigen::MatrixXd m(v.dimW, v.dimV);
        for (Index i = 0; i < m.size(); ++i) m(i) = 0.8 * u(rng);
        const double s = u(rng), w = u(rng);
        Eigen::MatrixXd lhs = glphi_mul<double>(phi, glphi1_exp<double>(phi, Eigen::MatrixXd(s * m), 30),
                                                glphi1_exp<double>(phi, Eigen::MatrixXd(w * m), 30));
        group = std::max(group, (lhs - glphi1_exp<double>(phi, Eigen::MatrixXd((s + w) * m), 30)).cwiseAbs().maxCoeff());
        auto [F, f] = glphi_delta<double>(phi, glphi1_exp<double>(phi, m, 30));
        wside = std::max(wside, (F - expm<double>(Eigen::MatrixXd(m * phi))).cwiseAbs().maxCoeff());
        vside = std::max(vside, (f - expm<double>(Eigen::MatrixXd(phi * m))).cwiseAbs().maxCoeff());
    }
    const double tol = a.tol(1e-9);
    rep.residual("one-parameter subgroup", group, tol);
    rep.residual("Delta exp(A) first = exp(A phi)", wside, tol);
    rep.residual("Delta exp(A) second = exp(phi A)", vside, tol);
}

void scenario_lie_functor(const GroupArgs& a, Report& rep) {
    std::vector<std::pair<std::string, TwoVectorSpace>> spaces;
    if (a.dims.empty()) {
        Mat row(1, 2);
        row << 1, 0;
        spaces = {{"phi = [[1]]", TwoVectorSpace{1, 1, identity(1)}},
                  {"phi = [[1, 0]]", TwoVectorSpace{2, 1, row}},
                  {"phi = 0 (2x2)", TwoVectorSpace{2, 2, zeros(2, 2)}}};
    } else {
        TwoVectorSpace v = scenario_space(a, {});
        spaces = {{"phi = " + fmt(v.phi), v}};
    }
    for (const auto& [label, v] : spaces) {
        FloatXModAlg f = lie_functor_extract(glphi_group(v));
        const CrossedModuleAlg oracle = gl_phi(v).xmod;
        rep.residual(label + " matches gl(phi)", max_deviation(f, oracle), a.tol(1e-6));
        bool exact = false;
        try {
            CrossedModuleAlg r = rationalize(f);
            exact = r.g == oracle.g && r.h == oracle.h && r.mu == oracle.mu && r.action.action == oracle.action.action;
        } catch (const std::exception&) {
        }
        rep.check(label + " rationalized equals gl(phi)", exact);
    }
}

std::string sig(const Signature& s) {
    return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.r) + ")";
}

void scenario_star(const GroupArgs& a, Report& rep) {
    TwoVectorSpace v = scenario_space(a, {});
    rep.out << "phi = " << fmt(v.phi) << '\n';
    GroupTwoRep r = glphi_identity_rep(v);
    Rng rng(a.seed);
    const double tol = a.tol(1e-9);
    for (Signature s : {Signature{0, 0, 0}, Signature{0, 0, 1}, Signature{0, 0, 2}, Signature{1, 0, 1},
                        Signature{0, 1, 1}, Signature{1, 1, 0}})
        rep.residual("star relation " + sig(s), relation_star(r, random_group_cochain(r, s, rng), a.trials, a.seed), tol);
    for (Signature s : {Signature{0, 0, 1}, Signature{1, 0, 1}, Signature{0, 1, 1}}) {
        GroupCochain w = random_group_cochain(r, s, rng);
        rep.residual("relation IV " + sig(s), relation_iv(r, w, a.trials, a.seed), tol);
        rep.residual("relation V " + sig(s), relation_v(r, w, a.trials, a.seed), tol);
    }
}

std::string plain(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", std::round(x * 1e9) / 1e9 + 0.0);
    return buf;
}

void scenario_vanest(const GroupArgs& a, Report& rep) {
    // F(u, v) = u₁v₂ on R², a group 2-cocycle whose van Est image is the area form
    GroupXMod h2 = abelian_group_xmod(0, 2, Eigen::MatrixXd::Zero(2, 0));
    GroupCochain F{0, 2, 0, 1, [](const GroupPoint& pt) {
                       return VecJ(VecJ::Constant(1, pt.gammas[0].h(0, 0) * pt.gammas[1].h(1, 0)));
                   }};
    Eigen::Matrix2d m;
    const Eigen::Matrix2d e = Eigen::Matrix2d::Identity();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = van_est_phi(h2, F, {e.col(i), e.col(j)}, {})(0);
    rep.out << "PhiF = [[" << plain(m(0, 0)) << ", " << plain(m(0, 1)) << "], [" << plain(m(1, 0)) << ", "
            << plain(m(1, 1)) << "]]\n";
    Eigen::Matrix2d expect;
    expect << 0, 1, -1, 0;
    const double tol = a.tol(1e-12);
    rep.residual("PhiF on the standard basis", (m - expect).cwiseAbs().maxCoeff(), tol);
    std::mt19937_64 rng(a.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0;
    bool alternating = true;
    for (int t = 0; t < a.trials; ++t) {
        Eigen::VectorXd x(2), y(2);
        x << u(rng), u(rng);
        y << u(rng), u(rng);
        const double xy = van_est_phi(h2, F, {x, y}, {})(0);
        worst = std::max(worst, std::abs(xy - (x(0) * y(1) - x(1) * y(0))));
        alternating = alternating && van_est_phi(h2, F, {y, x}, {})(0) == -xy &&
                      van_est_phi(h2, F, {x, x}, {})(0) == 0.0;
    }
    rep.residual("PhiF(x,y) = x1 y2 - x2 y1", worst, tol);
    rep.check("PhiF alternating", alternating, std::to_string(a.trials) + " argument swaps, exact");
}

void scenario_gp2(const GroupArgs& a, Report& rep) {
    TwoVectorSpace v = scenario_space(a, {});
    rep.out << "phi = " << fmt(v.phi) << '\n';
    GroupTwoRep r = glphi_identity_rep(v);
    const double tol = a.tol(1e-12);
    report_residuals(rep, "semidirect ", gp2cocycle_residuals(r, zero_gp_cocycle(r), a.trials, a.seed), tol);
    // negative control: α(h; g) = h²g over G = H = R, i = 0, φ = 0
    GroupTwoRep line = trivial_group_rep(abelian_group_xmod(1, 1, Eigen::MatrixXd::Zero(1, 1)), Eigen::MatrixXd::Zero(1, 1));
    GpTwoCocycle bad = zero_gp_cocycle(line);
    bad.alpha = [](const MatJ& h, const MatJ& g) { return VecJ(VecJ::Constant(1, h(0, 0) * h(0, 0) * g(0, 0))); };
    ResidualReport br = gp2cocycle_residuals(line, bad, a.trials, a.seed);
    double others = 0;
    for (const auto& [name, x] : br.entries)
        if (name != "eq iv") others = std::max(others, x);
    rep.check("perturbed alpha trips exactly eq iv", br.at("eq iv") > tol && others <= tol,
              "eq iv residual " + Report::sci(br.at("eq iv")) + ", others " + Report::sci(others));
}

int cmd_group_check(const std::string& scenario, const GroupArgs& a, Report& rep) {
    if (!a.dims.empty()) {
        if (a.dims.size() != 2) throw InputError("--dims", "expected two dimensions W V");
        for (int d : a.dims)
            if (d < 1 || d > 4) throw InputError("--dims", "dimensions must be in 1..4");
    }
    if (a.trials < 1) throw InputError("--trials", "need at least one trial");
    if (scenario == "glphi") scenario_glphi(a, rep);
    else if (scenario == "exp") scenario_exp(a, rep);
    else if (scenario == "lie-functor") scenario_lie_functor(a, rep);
    else if (scenario == "starTop") scenario_star(a, rep);
    else if (scenario == "vanest-heisenberg") scenario_vanest(a, rep);
    else if (scenario == "gp2cocycle-semidirect") scenario_gp2(a, rep);
    else throw InputError(scenario, "unknown scenario");
    return rep.code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomology of Lie 2-algebras and Lie 2-groups", "lie2coh"};
    app.require_subcommand(1);

    std::string file, cocycle, other;
    int degree = 0, max_degree = 3, trials = 5;
    bool trivial = false, corrupt = false;
    std::uint64_t seed = 0;
    double tolerance = 0;

    auto* validate = app.add_subcommand("validate", "validate every declared structure and cocycle");
    validate->add_option("file", file, "problem file")->required();

    auto* cohom = app.add_subcommand("cohomology", "dimension of H^n");
    cohom->add_option("file", file, "problem file")->required();
    cohom->add_option("--degree", degree, "degree n")->required();
    cohom->add_flag("--trivial", trivial, "trivial coefficients on the lie2algebra alone");

    auto* nabla = app.add_subcommand("nabla-check", "exact check that the total differential squares to zero");
    nabla->add_option("file", file, "problem file")->required();
    auto* o_maxdeg = nabla->add_option("--max-degree", max_degree, "check degrees 0..N");
    auto* o_trials = nabla->add_option("--trials", trials, "random probe cochains per degree");
    auto* o_seed = nabla->add_option("--seed", seed, "seed for the probes");
    nabla->add_flag("--corrupt-sign-table", corrupt)->group("");  // negative control for tests

    auto* extend = app.add_subcommand("extend", "build the extension of a named cocycle");
    extend->add_option("file", file, "problem file")->required();
    extend->add_option("--cocycle", cocycle, "cochain name")->required();

    auto* split = app.add_subcommand("split", "cocycle of the extension under the canonical splitting");
    split->add_option("file", file, "problem file")->required();
    split->add_option("--cocycle", cocycle, "cochain name")->required();

    auto* compare = app.add_subcommand("compare", "decide whether two cocycles are cohomologous");
    compare->add_option("file", file, "problem file")->required();
    compare->add_option("--cocycle", cocycle, "cochain name")->required();
    compare->add_option("--with", other, "second cochain name; default: split(extend(cocycle))");

    std::string scenario;
    std::vector<int> dims;
    int gtrials = 20;
    auto* group = app.add_subcommand("group-check", "built-in sampled checks on matrix Lie 2-groups");
    group->add_option("scenario", scenario, "glphi, exp, lie-functor, starTop, vanest-heisenberg, gp2cocycle-semidirect")
        ->required();
    group->add_option("--dims", dims, "dim W and dim V")->expected(2);
    group->add_option("--trials", gtrials, "samples per check");
    auto* g_seed = group->add_option("--seed", seed, "sampling seed");
    auto* g_tol = group->add_option("--tolerance", tolerance, "residual tolerance");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Report rep{out};
    try {
        if (*group) {
            GroupArgs a;
            a.dims = dims;
            a.trials = gtrials;
            a.seed = resolve_seed(*g_seed ? std::optional<std::uint64_t>(seed) : std::nullopt, Options{});
            if (*g_tol) a.tolerance = tolerance;
            return cmd_group_check(scenario, a, rep);
        }
        const ProblemFile pf = load_problem(file);
        if (*validate) return cmd_validate(pf, rep);
        if (*cohom) return cmd_cohomology(pf, degree, trivial, rep);
        if (*nabla) {
            const int n = *o_maxdeg ? max_degree : pf.options.max_degree.value_or(3);
            const int k = *o_trials ? trials : pf.options.trials.value_or(5);
            const std::uint64_t s = resolve_seed(*o_seed ? std::optional<std::uint64_t>(seed) : std::nullopt, pf.options);
            return cmd_nabla_check(pf, n, k, s, corrupt, rep);
        }
        if (*extend) return cmd_extend(pf, cocycle, rep);
        if (*split) return cmd_split(pf, cocycle, rep);
        if (*compare) return cmd_compare(pf, cocycle, other, rep);
    } catch (const InputError& e) {
        err << "error: " << (e.where.empty() ? "/" : e.where) << ": " << e.what() << '\n';
        return 2;
    } catch (const InvalidCocycle& e) {
        rep.diagnostics("cocycle", e.diagnostics);
        return 1;
    }
    return 2;
}

}  // namespace l2c::cli
