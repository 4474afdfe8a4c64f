#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "duadic/constructions.hpp"
#include "duadic/verify.hpp"
#include "json.hpp"

// JSON-in/JSON-out entry points shared by the command line tool and the
// Python bindings.
namespace duadic {

struct LengthArgs {
    std::optional<std::uint64_t> n, p, m, t;
};

/// Resolves the length parameters of a family: cyclic-hermitian accepts n or
/// (p, m), nega-extended accepts n or (p, t), the rest need n. Throws InvalidArgument.
ConstructionRecipe recipe_from_args(Family family, std::uint64_t q, const LengthArgs& len);

/// Full report with embedded code records and oracle outcomes.
nlohmann::json construct_json(const ConstructionRecipe& recipe, const BuildOptions& opts, bool timings = true);

/// Cosets and minimal polynomials of x^n - a over GF(q), with the product check.
nlohmann::json factor_json(std::uint64_t q, std::uint32_t n, Shift shift);

/// Re-runs the oracles on every code record in doc (a code object, a report
/// with "codes", or an array of either) and compares with recorded outcomes.
nlohmann::json inspect_json(const nlohmann::json& doc, const DistanceOptions& opts);

}  // namespace duadic
