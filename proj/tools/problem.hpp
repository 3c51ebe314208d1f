#pragma once

#include "lie2coh/ext.hpp"
#include "lie2coh/tworep.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace l2c::cli {

// Raised for anything wrong with the input document; `where` is a JSON pointer
// into the document, or "line L, column C" for syntax errors.
struct InputError : std::runtime_error {
    std::string where;
    InputError(std::string where_, const std::string& what) : std::runtime_error(what), where(std::move(where_)) {}
};

struct CochainData {
    Vec omega0, alpha, phi;  // phi already padded to (dim g + dim h) * dim V
};

struct Options {
    std::optional<std::uint64_t> seed;
    std::optional<int> trials, max_degree;
    std::optional<double> tolerance;
};

struct ProblemFile {
    std::optional<CrossedModuleAlg> xmod;
    std::optional<TwoVectorSpace> space;
    std::optional<TwoRep> rep;
    std::map<std::string, CochainData> cochains;
    Options options;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

// rep needed; builds the cocycle for a named cochain
TwoCocycle cocycle_named(const ProblemFile& pf, const std::string& name);

}  // namespace l2c::cli
