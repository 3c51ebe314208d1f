#include "problem.hpp"

#include "lie2coh/exterior.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace l2c::cli {

using nlohmann::json;

namespace {

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, size_t i) { return base + "/" + std::to_string(i); }

Rational rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw InputError(where, "expected a rational as an integer or a \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(where, std::string("bad rational: ") + e.what());
    }
}

int natural(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 64)
        throw InputError(where, "expected a non-negative integer dimension");
    return j.get<int>();
}

const json& array(const json& j, const std::string& where, size_t n) {
    if (!j.is_array()) throw InputError(where, "expected an array");
    if (j.size() != n)
        throw InputError(where, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
    return j;
}

Mat matrix(const json& j, const std::string& where, Index rows, Index cols) {
    array(j, where, static_cast<size_t>(rows));
    Mat m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const std::string rw = at(where, static_cast<size_t>(r));
        const json& row = array(j[static_cast<size_t>(r)], rw, static_cast<size_t>(cols));
        for (Index c = 0; c < cols; ++c) m(r, c) = rational(row[static_cast<size_t>(c)], at(rw, static_cast<size_t>(c)));
    }
    return m;
}

Vec vector(const json& j, const std::string& where, Index n) {
    array(j, where, static_cast<size_t>(n));
    Vec v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational(j[static_cast<size_t>(i)], at(where, static_cast<size_t>(i)));
    return v;
}

std::vector<Mat> matrices(const json& parent, const char* key, const std::string& where, size_t count, Index rows,
                          Index cols) {
    if (!parent.contains(key)) return std::vector<Mat>(count, zeros(rows, cols));
    const std::string w = at(where, key);
    array(parent[key], w, count);
    std::vector<Mat> out;
    for (size_t k = 0; k < count; ++k) out.push_back(matrix(parent[key][k], at(w, k), rows, cols));
    return out;
}

const json& object(const json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where, "expected an object");
    return j;
}

void known_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* key : keys) ok = ok || k == key;
        if (!ok) throw InputError(at(where, k), "unknown key");
    }
}

// {"dim": n, "brackets": [[i, j, [..]], ...]} with 1-based i ≠ j
LieAlgebra algebra(const json& j, const std::string& where) {
    object(j, where);
    known_keys(j, where, {"dim", "brackets"});
    if (!j.contains("dim")) throw InputError(where, "missing \"dim\"");
    const int n = natural(j["dim"], at(where, "dim"));
    std::vector<std::tuple<int, int, Vec>> br;
    std::set<std::pair<int, int>> seen;
    if (j.contains("brackets")) {
        const std::string bw = at(where, "brackets");
        if (!j["brackets"].is_array()) throw InputError(bw, "expected an array");
        for (size_t k = 0; k < j["brackets"].size(); ++k) {
            const std::string ew = at(bw, k);
            const json& e = array(j["brackets"][k], ew, 3);
            for (size_t s : {0u, 1u})
                if (!e[s].is_number_integer() || e[s].get<long long>() < 1 || e[s].get<long long>() > n)
                    throw InputError(at(ew, s), "basis index must be in 1.." + std::to_string(n));
            int a = e[0].get<int>() - 1, b = e[1].get<int>() - 1;
            if (a == b) throw InputError(ew, "bracket of a basis vector with itself");
            Vec v = vector(e[2], at(ew, 2), n);
            if (a > b) {
                std::swap(a, b);
                v = -v;
            }
            if (!seen.insert({a, b}).second) throw InputError(ew, "bracket given twice");
            br.emplace_back(a, b, v);
        }
    }
    return LieAlgebra::from_brackets(n, br);
}

Vec cochain_part(const json& j, const char* key, const std::string& where, Index n) {
    if (!j.contains(key)) return zero_vec(n);
    return vector(j[key], at(where, key), n);
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        // nlohmann reports "... at line L, column C: ..."
        auto p = msg.find("at line ");
        std::string where = "byte " + std::to_string(e.byte);
        if (p != std::string::npos) where = msg.substr(p + 3, msg.find(':', p) - p - 3);
        throw InputError(where, "syntax error");
    }
    object(doc, "");
    known_keys(doc, "", {"lie2algebra", "two_vector", "two_rep", "cochains", "options"});

    ProblemFile pf;
    if (doc.contains("lie2algebra")) {
        const std::string w = "/lie2algebra";
        const json& j = object(doc["lie2algebra"], w);
        known_keys(j, w, {"g", "h", "mu", "action"});
        CrossedModuleAlg x;
        x.g = j.contains("g") ? algebra(j["g"], at(w, "g")) : LieAlgebra(0);
        x.h = j.contains("h") ? algebra(j["h"], at(w, "h")) : LieAlgebra(0);
        x.mu = j.contains("mu") ? matrix(j["mu"], at(w, "mu"), x.dh(), x.dg()) : zeros(x.dh(), x.dg());
        x.action = Representation{x.h, x.dg(), matrices(j, "action", w, static_cast<size_t>(x.dh()), x.dg(), x.dg())};
        pf.xmod = x;
    }
    if (doc.contains("two_vector")) {
        const std::string w = "/two_vector";
        const json& j = object(doc["two_vector"], w);
        known_keys(j, w, {"W", "V", "phi"});
        if (!j.contains("W") || !j.contains("V")) throw InputError(w, "missing \"W\" or \"V\"");
        TwoVectorSpace v;
        v.dimW = natural(j["W"], at(w, "W"));
        v.dimV = natural(j["V"], at(w, "V"));
        v.phi = j.contains("phi") ? matrix(j["phi"], at(w, "phi"), v.dimV, v.dimW) : zeros(v.dimV, v.dimW);
        pf.space = v;
    }
    if (doc.contains("two_rep")) {
        const std::string w = "/two_rep";
        const json& j = object(doc["two_rep"], w);
        known_keys(j, w, {"rho1", "rho0_W", "rho0_V"});
        if (!pf.xmod || !pf.space) throw InputError(w, "two_rep needs lie2algebra and two_vector");
        const CrossedModuleAlg& x = *pf.xmod;
        const TwoVectorSpace& v = *pf.space;
        TwoRep r;
        r.source = x;
        r.target = v;
        r.rho1 = matrices(j, "rho1", w, static_cast<size_t>(x.dg()), v.dimW, v.dimV);
        r.rho0W = Representation{x.h, v.dimW, matrices(j, "rho0_W", w, static_cast<size_t>(x.dh()), v.dimW, v.dimW)};
        r.rho0V = Representation{x.h, v.dimV, matrices(j, "rho0_V", w, static_cast<size_t>(x.dh()), v.dimV, v.dimV)};
        pf.rep = r;
    }
    if (doc.contains("cochains")) {
        const std::string w = "/cochains";
        const json& j = object(doc["cochains"], w);
        if (!j.empty() && !pf.rep) throw InputError(w, "cochains need two_rep");
        for (const auto& [name, c] : j.items()) {
            const std::string cw = at(w, name);
            object(c, cw);
            known_keys(c, cw, {"omega0", "alpha", "phi"});
            const TwoRep& r = *pf.rep;
            const Index dg = r.source.dg(), dh = r.source.dh(), dw = r.dimW(), dv = r.dimV();
            CochainData s;
            s.omega0 = cochain_part(c, "omega0", cw, binomial(dh, 2) * dv);
            s.alpha = cochain_part(c, "alpha", cw, dh * dg * dw);
            s.phi = zero_vec((dg + dh) * dv);
            // the h block of φ is ignored, so either length is accepted
            if (c.contains("phi")) {
                const size_t n = c["phi"].is_array() ? c["phi"].size() : 0;
                const Index len = n == static_cast<size_t>((dg + dh) * dv) ? (dg + dh) * dv : dg * dv;
                s.phi.head(len) = vector(c["phi"], at(cw, "phi"), len);
            }
            pf.cochains.emplace(name, s);
        }
    }
    if (doc.contains("options")) {
        const std::string w = "/options";
        const json& j = object(doc["options"], w);
        known_keys(j, w, {"seed", "trials", "max_degree", "tolerance"});
        if (j.contains("seed")) {
            if (!j["seed"].is_number_unsigned()) throw InputError(at(w, "seed"), "expected a non-negative integer");
            pf.options.seed = j["seed"].get<std::uint64_t>();
        }
        for (const char* key : {"trials", "max_degree"}) {
            if (!j.contains(key)) continue;
            if (!j[key].is_number_integer() || j[key].get<long long>() < 0 || j[key].get<long long>() > 100000)
                throw InputError(at(w, key), "expected a non-negative integer");
            (std::string(key) == "trials" ? pf.options.trials : pf.options.max_degree) = j[key].get<int>();
        }
        if (j.contains("tolerance")) {
            const json& t = j["tolerance"];
            double tol = -1;
            if (t.is_number()) tol = t.get<double>();
            else if (t.is_string()) {
                try {
                    tol = std::stod(t.get<std::string>());
                } catch (const std::exception&) {
                }
            }
            if (!(tol >= 0)) throw InputError(at(w, "tolerance"), "expected a non-negative number");
            pf.options.tolerance = tol;
        }
    }
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

TwoCocycle cocycle_named(const ProblemFile& pf, const std::string& name) {
    if (!pf.rep) throw InputError("/two_rep", "missing two_rep");
    auto it = pf.cochains.find(name);
    if (it == pf.cochains.end()) throw InputError("/cochains/" + name, "no such cochain");
    return make_cocycle(*pf.rep, it->second.omega0, it->second.alpha, it->second.phi);
}

}  // namespace l2c::cli
