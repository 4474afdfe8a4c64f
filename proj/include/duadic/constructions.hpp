#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "duadic/code.hpp"
#include "duadic/cyclotomic.hpp"
#include "duadic/field.hpp"
#include "json.hpp"

namespace duadic {

enum class Family {
    cyclic_euclidean,
    cyclic_hermitian,
    nega_centered,
    nega_allodd_euclidean,
    nega_allodd_hermitian,
    nega_extended,
};

inline constexpr Family kAllFamilies[] = {Family::cyclic_euclidean,      Family::cyclic_hermitian,
                                          Family::nega_centered,         Family::nega_allodd_euclidean,
                                          Family::nega_allodd_hermitian, Family::nega_extended};

/// Hyphenated CLI spelling, e.g. "nega-allodd-hermitian".
std::string family_name(Family f);
/// Accepts hyphens or underscores.
std::optional<Family> parse_family(std::string_view s);

struct HypothesisCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    /// Alternatives (e.g. the individual theorem cases) are recorded but not
    /// required; their disjunction appears as a separate required check.
    bool required = true;
};

struct ConstructionRecipe {
    Family family = Family::cyclic_euclidean;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<HypothesisCheck> checks;
    /// Order of the field the codes live in (q, or q^2 in Hermitian families); 0 if undefined.
    std::uint64_t code_field_order = 0;
    /// Length of the constacyclic code before any extension.
    std::uint32_t base_length = 0;

    [[nodiscard]] bool hypotheses_hold() const;
    [[nodiscard]] std::optional<std::int64_t> param(std::string_view name) const;
    [[nodiscard]] std::vector<std::string> failing() const;
};

ConstructionRecipe recipe_cyclic_euclidean(std::uint64_t q, std::uint64_t n);
/// n = p^m given directly; p and m are derived (and checked) from it.
ConstructionRecipe recipe_cyclic_hermitian(std::uint64_t q, std::uint64_t n);
ConstructionRecipe recipe_nega_centered(std::uint64_t q, std::uint64_t n);
ConstructionRecipe recipe_nega_allodd(std::uint64_t q, std::uint64_t n, DualKind kind);
ConstructionRecipe recipe_nega_extended(std::uint64_t q, std::uint64_t p, std::uint64_t t);

/// Dispatch on family. For nega_extended, n must be 2p^t and p, t are recovered from it.
ConstructionRecipe make_recipe(Family family, std::uint64_t q, std::uint64_t n);

enum class GammaEquation { eq1, eq3, eq4 };

std::string equation_text(GammaEquation e);

struct GammaSolution {
    GammaEquation equation = GammaEquation::eq1;
    FieldPtr field;
    Elem gamma = 0;
    std::uint64_t n = 0;
};

/// 1 + g^2 n = 0, 1 + g^(sqrt(Q)+1) n = 0 or 2 + g^2 n = 0 in the given field;
/// smallest solution in canonical order. Throws DegenerateN when p | n (or
/// for eq4 in characteristic 2) and HermitianOnNonSquareField for eq3.
std::optional<GammaSolution> solve_gamma(GammaEquation eq, const FieldPtr& field, std::uint64_t n);

/// Evaluates the left-hand side; zero iff gamma solves the equation.
Elem gamma_residual(const GammaSolution& g);

enum class Prediction { exists, unknown };

/// Sufficient conditions for 1 + g^2 p^m = 0 over GF(r^t). Throws
/// HypothesisViolated when p^m does not divide r^t - 1.
Prediction predict_gamma_existence(std::uint64_t r, std::uint64_t t, std::uint64_t p, std::uint64_t m);

/// [n, k] cyclic code with defining set {j, ..., n-k+j-1} mod n.
LinearCode mds_generator_code(const FieldPtr& field, std::uint32_t n, std::uint32_t k, std::uint32_t j);

enum class ParityClass { odd, zero_mod_4, two_mod_4 };
std::string parity_name(ParityClass c);

struct OrderFacts {
    std::uint64_t q = 0, p = 0, t = 0;
    std::uint64_t ord_p = 0;
    std::uint64_t ord_pt = 0;
    std::uint64_t ord_2pt = 0;
    unsigned z = 0;
    ParityClass parity = ParityClass::odd;
    bool q_is_residue = false;
    /// ord_{p^t} = p^(t-1) ord_p, checked when z = 1.
    std::optional<bool> remark_formula_holds;
    /// p = 1 mod 4 and q a non-residue: ord_p = 0 mod 4 predicted.
    bool lemma_case1 = false;
    /// q a residue and p = 3 mod 4: ord_p odd predicted.
    bool lemma_case2 = false;
    std::optional<bool> lemma_prediction_holds;
    /// mu_{-1} gives a type II splitting iff ord_{2p^t}(q) is not 2 mod 4.
    bool mu_minus1_type_ii = false;
    /// q = 3 mod 4, p = 1 mod 4, z = 1, q a non-residue, q prime: the
    /// claimed insolubility of 2 + g^2 n = 0, compared with the actual solver.
    bool insolubility_claim_applies = false;
    std::optional<bool> eq4_solvable;
};

/// Throws NotCoprime when p divides q.
OrderFacts order_facts(std::uint64_t q, std::uint64_t p, std::uint64_t t);

enum class Status { pass, hypothesis_fail, field_too_large, property_fail, unverified_distance };
std::string status_name(Status s);

enum class Outcome { pass, fail, info };
std::string outcome_name(Outcome o);

struct Check {
    std::string name;
    Outcome outcome = Outcome::info;
    std::string detail;
    nlohmann::json witness;  // null when none
};

struct BuiltCode {
    std::string label;
    LinearCode code;
    DistanceResult distance;
    std::optional<std::uint32_t> claimed_distance;
    DualKind duality = DualKind::euclidean;
    bool self_dual = false;
};

struct BuildOptions {
    DistanceOptions distance;
    /// Build even when hypotheses fail (status still HYPOTHESIS_FAIL).
    bool force = false;
};

struct VerificationReport {
    nlohmann::json entry;  // table entry or null for ad-hoc runs
    ConstructionRecipe recipe;
    std::optional<GammaSolution> gamma;
    std::optional<Splitting> splitting;
    std::vector<BuiltCode> codes;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    Status status = Status::pass;
    std::vector<std::pair<std::string, double>> timings;
};

/// Builds and verifies from a recipe. Never throws on hypothesis failure:
/// when hypotheses fail and opts.force is false nothing is built.
VerificationReport run_recipe(const ConstructionRecipe& recipe, const BuildOptions& opts = {});

// Theorem-level constructors. They throw HypothesisViolated listing the
// failing hypotheses unless opts.force is set, and NoGammaSolution when no
// gamma exists and force is off.
VerificationReport build_cyclic_euclidean(std::uint64_t q, std::uint64_t n, const BuildOptions& opts = {});
VerificationReport build_cyclic_hermitian(std::uint64_t q, std::uint64_t p, std::uint64_t m,
                                          const BuildOptions& opts = {});
VerificationReport build_nega_centered(std::uint64_t q, std::uint64_t n, const BuildOptions& opts = {});
VerificationReport build_nega_allodd(std::uint64_t q, std::uint64_t n, DualKind kind, const BuildOptions& opts = {});
VerificationReport build_nega_extended(std::uint64_t q, std::uint64_t p, std::uint64_t t,
                                       const BuildOptions& opts = {});

/// Status from checks, by precedence HYPOTHESIS_FAIL, FIELD_TOO_LARGE,
/// PROPERTY_FAIL, UNVERIFIED_DISTANCE, PASS.
Status assess(const VerificationReport& r);

}  // namespace duadic
