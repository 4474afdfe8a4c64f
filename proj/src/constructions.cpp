#include "duadic/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "duadic/numtheory.hpp"
#include "duadic/serialize.hpp"

namespace duadic {

std::string family_name(Family f) {
    switch (f) {
        case Family::cyclic_euclidean: return "cyclic-euclidean";
        case Family::cyclic_hermitian: return "cyclic-hermitian";
        case Family::nega_centered: return "nega-centered";
        case Family::nega_allodd_euclidean: return "nega-allodd-euclidean";
        case Family::nega_allodd_hermitian: return "nega-allodd-hermitian";
        case Family::nega_extended: return "nega-extended";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view s) {
    std::string norm(s);
    std::replace(norm.begin(), norm.end(), '_', '-');
    for (Family f : kAllFamilies) {
        if (family_name(f) == norm) return f;
    }
    return std::nullopt;
}

bool ConstructionRecipe::hypotheses_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const HypothesisCheck& c) { return !c.required || c.pass; });
}

std::optional<std::int64_t> ConstructionRecipe::param(std::string_view name) const {
    for (const auto& [k, v] : params) {
        if (k == name) return v;
    }
    return std::nullopt;
}

std::vector<std::string> ConstructionRecipe::failing() const {
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (c.required && !c.pass) out.push_back(c.name);
    }
    return out;
}

namespace {

using u64 = std::uint64_t;

std::string str(u64 v) { return std::to_string(v); }

void add(ConstructionRecipe& r, std::string name, bool pass, std::string detail, bool required = true) {
    r.checks.push_back({std::move(name), pass, std::move(detail), required});
}

void param(ConstructionRecipe& r, const char* name, u64 v) { r.params.emplace_back(name, static_cast<std::int64_t>(v)); }

// q = r^t; records q, r, t and the prime-power check.
std::optional<nt::PrimePower> field_params(ConstructionRecipe& rec, u64 q) {
    auto pp = nt::as_prime_power(q);
    param(rec, "q", q);
    add(rec, "q_prime_power", pp.has_value(), pp ? str(q) + " = " + str(pp->prime) + "^" + str(pp->exponent)
                                                 : str(q) + " is not a prime power");
    if (pp) {
        param(rec, "r", pp->prime);
        param(rec, "t", pp->exponent);
    }
    return pp;
}

}  // namespace

ConstructionRecipe recipe_cyclic_euclidean(u64 q, u64 n) {
    ConstructionRecipe rec;
    rec.family = Family::cyclic_euclidean;
    const auto pp = field_params(rec, q);
    param(rec, "n", n);
    rec.base_length = static_cast<std::uint32_t>(n);
    rec.code_field_order = pp ? q : 0;
    add(rec, "n_odd", n % 2 == 1, "n = " + str(n));
    add(rec, "n_divides_q_minus_1", n > 0 && q > 1 && (q - 1) % n == 0, str(n) + " | " + str(q - 1));
    const auto np = nt::as_prime_power(n);
    if (np) {
        param(rec, "p", np->prime);
        param(rec, "m", np->exponent);
    }
    bool any = false;
    auto cas = [&](const char* name, bool pass, std::string detail) {
        any = any || pass;
        add(rec, name, pass, std::move(detail), false);
    };
    const u64 r = pp ? pp->prime : 0;
    const u64 t = pp ? pp->exponent : 0;
    cas("case_i", r == 2 && t % 2 == 1 && n > 1 && nt::is_prime(n), "q = 2^t with t odd and n an odd prime");
    cas("case_ii", pp && t % 2 == 0 && n > 0 && (r - 1) % n == 0, "t even and n | r - 1");
    cas("case_iii", r % 4 == 3 && t % 2 == 1 && np && np->prime % 4 == 3 && np->exponent % 2 == 1,
        "r = 3 mod 4, t odd, n = p^m with p = 3 mod 4 and m odd");
    cas("case_iv", r % 4 == 1 && t % 2 == 1 && np && (np->prime % 4 == 1 || np->prime % 4 == 3),
        "r = 1 mod 4, t odd, n = p^m with p = 1 or 3 mod 4 (the reading under which gamma always exists)");
    add(rec, "theorem_case", any, any ? "at least one case holds" : "no case holds");
    return rec;
}

ConstructionRecipe recipe_cyclic_hermitian(u64 q, u64 n) {
    ConstructionRecipe rec;
    rec.family = Family::cyclic_hermitian;
    const auto pp = field_params(rec, q);
    param(rec, "n", n);
    rec.base_length = static_cast<std::uint32_t>(n);
    const auto q2 = nt::checked_pow(q, 2);
    rec.code_field_order = pp && q2 ? *q2 : 0;
    add(rec, "q_odd", q % 2 == 1, "q = " + str(q));
    const auto np = nt::as_prime_power(n);
    if (np) {
        param(rec, "p", np->prime);
        param(rec, "m", np->exponent);
    }
    add(rec, "n_prime_power", np.has_value(), np ? str(n) + " = " + str(np->prime) + "^" + str(np->exponent)
                                                 : str(n) + " is not a prime power");
    add(rec, "n_divides_q2_plus_1", q2 && n > 0 && (*q2 + 1) % n == 0, str(n) + " | q^2 + 1");
    add(rec, "n_1_mod_4", n % 4 == 1, "n mod 4 = " + str(n % 4));
    add(rec, "n_in_F_r", pp && np && np->prime != pp->prime, "p differs from the characteristic");
    if (n % 4 == 1 && n >= 5) param(rec, "s", (n - 1) / 4 - 1);
    return rec;
}

ConstructionRecipe recipe_nega_centered(u64 q, u64 n) {
    ConstructionRecipe rec;
    rec.family = Family::nega_centered;
    const auto pp = field_params(rec, q);
    param(rec, "n", n);
    rec.base_length = static_cast<std::uint32_t>(n);
    rec.code_field_order = pp ? q : 0;
    add(rec, "q_odd", q % 2 == 1, "q = " + str(q));
    const u64 n1 = n / 2;
    const u64 n2 = (q + 1) / 2;
    param(rec, "n1", n1);
    param(rec, "n2", n2);
    add(rec, "n_twice_odd", n % 2 == 0 && n1 % 2 == 1, "n = 2n' with n' = " + str(n1));
    add(rec, "q_1_mod_4", q % 4 == 1, "q mod 4 = " + str(q % 4));
    add(rec, "n2_odd", q % 2 == 1 && n2 % 2 == 1, "n'' = (q+1)/2 = " + str(n2));
    add(rec, "n1_divides_n2", n1 > 0 && n2 % n1 == 0, str(n1) + " | " + str(n2));
    return rec;
}

ConstructionRecipe recipe_nega_allodd(u64 q, u64 n, DualKind kind) {
    ConstructionRecipe rec;
    rec.family = kind == DualKind::euclidean ? Family::nega_allodd_euclidean : Family::nega_allodd_hermitian;
    const auto pp = field_params(rec, q);
    param(rec, "n", n);
    rec.base_length = static_cast<std::uint32_t>(n);
    if (kind == DualKind::euclidean) {
        rec.code_field_order = pp ? q : 0;
    } else {
        const auto q2 = nt::checked_pow(q, 2);
        rec.code_field_order = pp && q2 ? *q2 : 0;
    }
    add(rec, "q_odd", q % 2 == 1, "q = " + str(q));
    const unsigned a = n > 0 ? nt::valuation(n, 2) : 0;
    const u64 n1 = n > 0 ? n >> a : 0;
    param(rec, "a", a);
    param(rec, "n1", n1);
    if (kind == DualKind::euclidean) {
        add(rec, "a_at_least_1", a >= 1, "n = 2^" + std::to_string(a) + " * " + str(n1));
    } else {
        add(rec, "a_greater_than_1", a > 1, "n = 2^" + std::to_string(a) + " * " + str(n1));
    }
    // Smallest odd multiple n'' of n' with q = 1 mod 2^(a+1) n'' (2^a n'' for Hermitian).
    const unsigned shift = kind == DualKind::euclidean ? a + 1 : a;
    std::optional<u64> n2;
    if (n1 > 0 && shift < 60) {
        for (u64 c = n1; c <= q + 1 && !n2; c += 2 * n1) {
            const u64 mod = (u64{1} << shift) * c;
            if (q > 0 && (q - 1) % mod == 0) n2 = c;
        }
    }
    if (n2) param(rec, "n2", *n2);
    const std::string modtxt = kind == DualKind::euclidean ? "2^(a+1) n''" : "2^a n''";
    add(rec, "q_congruence", n2.has_value(),
        n2 ? "q = 1 mod " + modtxt + " with n'' = " + str(*n2) : "no odd multiple n'' of n' up to q+1 with q = 1 mod " + modtxt);
    return rec;
}

ConstructionRecipe recipe_nega_extended(u64 q, u64 p, u64 t) {
    ConstructionRecipe rec;
    rec.family = Family::nega_extended;
    param(rec, "q", q);
    param(rec, "p", p);
    param(rec, "t", t);
    const auto pt = nt::checked_pow(p, static_cast<unsigned>(std::min<u64>(t, 64)));
    const u64 n = pt && *pt < (u64{1} << 30) ? 2 * *pt : 0;
    param(rec, "n", n);
    rec.base_length = static_cast<std::uint32_t>(n);
    rec.code_field_order = nt::is_prime(q) ? q : 0;
    add(rec, "q_prime", nt::is_prime(q), "q = " + str(q));
    add(rec, "p_prime", nt::is_prime(p), "p = " + str(p));
    add(rec, "p_ne_q", p != q, "p and q distinct");
    add(rec, "q_3_mod_4", q % 4 == 3, "q mod 4 = " + str(q % 4));
    add(rec, "p_3_mod_4", p % 4 == 3, "p mod 4 = " + str(p % 4));
    const bool coprime = p > 1 && q > 1 && q % p != 0 && nt::is_prime(p);
    const bool qr = coprime && p % 2 == 1 && is_quadratic_residue(static_cast<long long>(q), p);
    add(rec, "q_residue_mod_p", qr, "(q/p) = " + std::string(qr ? "1" : (coprime ? "-1" : "undefined")));
    if (coprime && p > 2 && q % 2 == 1) {
        const auto facts = order_facts(q, p, std::max<u64>(t, 1));
        param(rec, "ord_p", facts.ord_p);
        param(rec, "ord_2pt", facts.ord_2pt);
        param(rec, "z", facts.z);
        add(rec, "z_equals_1", facts.z == 1, "z = " + std::to_string(facts.z));
    } else {
        add(rec, "z_equals_1", false, "z undefined");
    }
    add(rec, "t_odd", t % 2 == 1, "t = " + str(t));
    add(rec, "length_defined", n > 0, "n = 2p^t = " + str(n));
    return rec;
}

ConstructionRecipe make_recipe(Family family, u64 q, u64 n) {
    switch (family) {
        case Family::cyclic_euclidean: return recipe_cyclic_euclidean(q, n);
        case Family::cyclic_hermitian: return recipe_cyclic_hermitian(q, n);
        case Family::nega_centered: return recipe_nega_centered(q, n);
        case Family::nega_allodd_euclidean: return recipe_nega_allodd(q, n, DualKind::euclidean);
        case Family::nega_allodd_hermitian: return recipe_nega_allodd(q, n, DualKind::hermitian);
        case Family::nega_extended: {
            const auto pp = n % 2 == 0 ? nt::as_prime_power(n / 2) : std::nullopt;
            if (pp && pp->prime != 2) return recipe_nega_extended(q, pp->prime, pp->exponent);
            ConstructionRecipe rec;
            rec.family = family;
            param(rec, "q", q);
            param(rec, "n", n);
            add(rec, "n_is_2p^t", false, str(n) + " is not twice an odd prime power");
            return rec;
        }
    }
    throw Error(Errc::InvalidArgument, "unknown family");
}

std::string equation_text(GammaEquation e) {
    switch (e) {
        case GammaEquation::eq1: return "1 + gamma^2 n = 0";
        case GammaEquation::eq3: return "1 + gamma^(q+1) n = 0";
        case GammaEquation::eq4: return "2 + gamma^2 n = 0";
    }
    return "";
}

std::optional<GammaSolution> solve_gamma(GammaEquation eq, const FieldPtr& field, u64 n) {
    const Field& f = *field;
    const Elem nn = f.from_int(static_cast<long long>(n % f.p()));
    if (nn == 0) throw Error(Errc::DegenerateN, "n = " + str(n) + " vanishes in characteristic " + str(f.p()));
    if (eq == GammaEquation::eq4 && f.p() == 2) throw Error(Errc::DegenerateN, "2 + gamma^2 n = 0 in characteristic 2");
    const Elem lhs = eq == GammaEquation::eq4 ? f.from_int(2) : f.one();
    const Elem c = f.neg(f.div(lhs, nn));  // gamma^e = -lhs / n
    GammaSolution out{eq, field, 0, n};
    if (eq == GammaEquation::eq3) {
        const std::uint32_t s = sqrt_order(f);
        const Elem g0 = solve_norm(f, c);
        // All s + 1 solutions differ by (s+1)-th roots of unity: omega^(k(s-1)).
        Elem best = g0;
        for (std::uint64_t k = 1; k <= s; ++k) best = std::min(best, f.mul(g0, f.exp(k * (s - 1))));
        out.gamma = best;
    } else {
        const auto roots = solve_square(f, c);
        if (roots.empty()) return std::nullopt;
        out.gamma = roots.front();
    }
    if (gamma_residual(out) != 0) throw Error(Errc::InvalidArgument, "gamma solver produced a non-solution");
    return out;
}

Elem gamma_residual(const GammaSolution& g) {
    const Field& f = *g.field;
    const Elem nn = f.from_int(static_cast<long long>(g.n % f.p()));
    switch (g.equation) {
        case GammaEquation::eq1: return f.add(1, f.mul(f.mul(g.gamma, g.gamma), nn));
        case GammaEquation::eq3: return f.add(1, f.mul(f.pow(g.gamma, sqrt_order(f) + 1), nn));
        case GammaEquation::eq4: return f.add(f.from_int(2), f.mul(f.mul(g.gamma, g.gamma), nn));
    }
    return 1;
}

Prediction predict_gamma_existence(u64 r, u64 t, u64 p, u64 m) {
    const auto q = nt::checked_pow(r, static_cast<unsigned>(t));
    const auto n = nt::checked_pow(p, static_cast<unsigned>(m));
    if (!q || !n || *n == 0 || (*q - 1) % *n != 0) {
        throw Error(Errc::HypothesisViolated, str(p) + "^" + str(m) + " does not divide " + str(r) + "^" + str(t) + " - 1");
    }
    if (r % 2 == 0 || t % 2 == 0) return Prediction::unknown;
    const bool case1 = r % 4 == 3 && p % 4 == 3 && m % 2 == 1;
    const bool case2 = r % 4 == 1;
    return case1 || case2 ? Prediction::exists : Prediction::unknown;
}

LinearCode mds_generator_code(const FieldPtr& field, std::uint32_t n, std::uint32_t k, std::uint32_t j) {
    if (k == 0 || k > n) throw Error(Errc::InvalidArgument, "need 0 < k <= n");
    (void)nth_root_of_unity(*field, n);  // OrderNotDividing
    auto sys = code_coset_system(*field, n, Shift::cyclic);
    std::vector<std::uint32_t> w;
    for (std::uint32_t i = 0; i < n - k; ++i) w.push_back((j + i) % n);
    std::sort(w.begin(), w.end());
    return code_from_defining_set(field, n, Shift::cyclic, DefiningSet(sys, w));
}

std::string parity_name(ParityClass c) {
    switch (c) {
        case ParityClass::odd: return "odd";
        case ParityClass::zero_mod_4: return "0 mod 4";
        case ParityClass::two_mod_4: return "2 mod 4";
    }
    return "";
}

namespace {
ParityClass parity_of(u64 v) {
    if (v % 2 == 1) return ParityClass::odd;
    return v % 4 == 0 ? ParityClass::zero_mod_4 : ParityClass::two_mod_4;
}
}  // namespace

OrderFacts order_facts(u64 q, u64 p, u64 t) {
    if (p < 2 || nt::gcd(q, p) != 1) throw Error(Errc::NotCoprime, "gcd(" + str(q) + ", " + str(p) + ") != 1");
    OrderFacts o;
    o.q = q;
    o.p = p;
    o.t = t;
    o.ord_p = nt::mult_order(q % p, p);
    const auto pt = nt::checked_pow(p, static_cast<unsigned>(t));
    if (!pt) throw Error(Errc::InvalidArgument, "p^t overflows");
    o.ord_pt = nt::mult_order(q % *pt, *pt);
    o.ord_2pt = q % 2 == 1 ? nt::mult_order(q % (2 * *pt), 2 * *pt) : 0;
    // z: largest exponent with p^z | q^ord_p - 1.
    o.z = 0;
    for (u64 pz = p; pz <= (u64{1} << 62) / p; pz *= p) {
        if (nt::powmod(q, o.ord_p, pz) != 1 % pz) break;
        ++o.z;
    }
    o.parity = parity_of(q % 2 == 1 ? o.ord_2pt : o.ord_pt);
    if (o.z == 1) o.remark_formula_holds = o.ord_pt == *nt::checked_pow(p, static_cast<unsigned>(t - 1)) * o.ord_p;
    if (p % 2 == 1) {
        o.q_is_residue = is_quadratic_residue(static_cast<long long>(q % p), p);
        o.lemma_case1 = p % 4 == 1 && !o.q_is_residue;
        o.lemma_case2 = o.q_is_residue && p % 4 == 3;
        if (o.lemma_case1) o.lemma_prediction_holds = o.ord_p % 4 == 0;
        if (o.lemma_case2) o.lemma_prediction_holds = o.ord_p % 2 == 1;
    }
    o.mu_minus1_type_ii = o.ord_2pt % 4 != 2;
    o.insolubility_claim_applies = nt::is_prime(q) && q % 4 == 3 && p % 4 == 1 && o.z == 1 && !o.q_is_residue;
    if (nt::is_prime(q) && q % 2 == 1 && 2 * *pt % q != 0) {
        o.eq4_solvable = solve_gamma(GammaEquation::eq4, make_field(q, 1), 2 * *pt).has_value();
    }
    return o;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::hypothesis_fail: return "HYPOTHESIS_FAIL";
        case Status::field_too_large: return "FIELD_TOO_LARGE";
        case Status::property_fail: return "PROPERTY_FAIL";
        case Status::unverified_distance: return "UNVERIFIED_DISTANCE";
    }
    return "";
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::info: return "info";
    }
    return "";
}

Status assess(const VerificationReport& r) {
    if (!r.recipe.hypotheses_hold()) return Status::hypothesis_fail;
    if (r.recipe.code_field_order > kMaxFieldSize) return Status::field_too_large;
    for (const auto& c : r.checks) {
        if (c.outcome == Outcome::fail) return Status::property_fail;
    }
    if (r.codes.empty()) return Status::property_fail;
    for (const auto& c : r.codes) {
        if (!c.distance.exact) return Status::unverified_distance;
    }
    return Status::pass;
}

namespace {

using clock_type = std::chrono::steady_clock;

class Timer {
public:
    Timer(VerificationReport& r, std::string phase) : r_(r), phase_(std::move(phase)), t0_(clock_type::now()) {}
    ~Timer() {
        const double s = std::chrono::duration<double>(clock_type::now() - t0_).count();
        for (auto& [k, v] : r_.timings) {
            if (k == phase_) {
                v += s;
                return;
            }
        }
        r_.timings.emplace_back(phase_, s);
    }
    Timer(const Timer&) = delete;
    Timer& operator=(const Timer&) = delete;

private:
    VerificationReport& r_;
    std::string phase_;
    clock_type::time_point t0_;
};

void check(VerificationReport& r, std::string name, Outcome o, std::string detail, json witness = nullptr) {
    r.checks.push_back({std::move(name), o, std::move(detail), std::move(witness)});
}

std::string params_text(const LinearCode& c, std::optional<std::uint32_t> d) {
    std::ostringstream os;
    os << "[" << c.n() << "," << c.k();
    if (d) os << "," << *d;
    os << "]";
    return os.str();
}

// Matrix self-duality and distance checks for one finished code.
void verify_code(VerificationReport& r, BuiltCode& bc, const BuildOptions& opts) {
    const LinearCode& c = bc.code;
    const Field& f = *c.field();
    const std::string kind = bc.duality == DualKind::euclidean ? "euclidean" : "hermitian";
    {
        Timer t(r, "self_duality");
        const auto w = orthogonality_witness(c, bc.duality);
        const bool half = 2 * c.k() == c.n();
        bc.self_dual = half && !w;
        if (bc.self_dual) {
            check(r, "self_dual_matrix:" + bc.label, Outcome::pass,
                  kind + " Gram matrix is zero and 2k = n = " + std::to_string(c.n()));
        } else if (!half) {
            check(r, "self_dual_matrix:" + bc.label, Outcome::fail, "dimension is not n/2",
                  {{"n", c.n()}, {"k", c.k()}});
        } else {
            check(r, "self_dual_matrix:" + bc.label, Outcome::fail,
                  kind + " inner product of generator rows " + std::to_string(w->row_a) + " and " +
                      std::to_string(w->row_b) + " is nonzero",
                  {{"row_a", w->row_a}, {"row_b", w->row_b}, {"inner", elem_json(f, w->inner)}});
        }
    }
    Timer t(r, "distance");
    bc.distance = min_distance(c, opts.distance);
    const auto& d = bc.distance;
    const std::string name = "distance:" + bc.label;
    json wit = d.witness.empty() ? json(nullptr) : json{{"codeword", vector_json(f, d.witness)}, {"weight", d.upper}};
    const std::string how = method_name(d.method) + ": " + d.detail;
    if (!bc.claimed_distance) {
        check(r, name, d.exact ? Outcome::pass : Outcome::info,
              (d.exact ? "d = " + std::to_string(*d.exact) : "d in [" + std::to_string(d.lower) + ", " +
                                                                 std::to_string(d.upper) + "]") +
                  " (no distance claimed); " + how,
              wit);
        return;
    }
    const std::uint32_t want = *bc.claimed_distance;
    if (d.exact && *d.exact == want) {
        check(r, name, Outcome::pass, "d = " + std::to_string(want) + " as claimed; " + how);
    } else if (d.exact || d.upper < want) {
        check(r, name, Outcome::fail,
              "claimed d = " + std::to_string(want) + " but a codeword of weight " + std::to_string(d.upper) +
                  " exists; " + how,
              wit);
    } else {
        check(r, name, Outcome::info,
              "claimed d = " + std::to_string(want) + " not certified; bounds [" + std::to_string(d.lower) + ", " +
                  std::to_string(d.upper) + "]; " + how);
    }
}

void parent_distance(VerificationReport& r, const std::string& label, const LinearCode& c, std::uint32_t claimed,
                     const BuildOptions& opts) {
    Timer t(r, "distance");
    const auto d = min_distance(c, opts.distance);
    const std::string name = "parent_mds:" + label;
    const std::string p = params_text(c, claimed);
    if (d.exact && *d.exact == claimed) {
        check(r, name, Outcome::pass, label + " is " + p + " MDS; " + method_name(d.method));
    } else if (d.exact || d.upper < claimed) {
        check(r, name, Outcome::fail, label + " is not " + p,
              {{"codeword", vector_json(*c.field(), d.witness)}, {"weight", d.upper}});
    } else {
        check(r, name, Outcome::info, label + " distance in [" + std::to_string(d.lower) + ", " +
                                          std::to_string(d.upper) + "]");
    }
}

// Euclidean: T self-dual iff -T = complement(T). Hermitian: with -qT.
void dual_set_check(VerificationReport& r, const std::string& label, const DefiningSet& T, long long mult,
                    const std::string& what) {
    const auto& sys = *T.system();
    const auto N = sys.N();
    const std::string key = mult == -1 ? "minus_i" : "minus_q_i";
    const std::string m = std::to_string(mult);
    for (std::uint32_t i : sys.universe_members()) {
        const auto img = static_cast<std::uint32_t>(nt::mod(mult * static_cast<long long>(i), N));
        const bool a = T.contains(i);
        const bool b = T.contains(img);
        if (a != b) continue;
        check(r, "self_dual_set:" + label, Outcome::fail,
              "i = " + std::to_string(i) + (a ? " in T" : " not in T") + " and " + m + "*" + std::to_string(i) +
                  " = " + std::to_string(img) + " mod " + std::to_string(N) + (b ? " in T" : " not in T") +
                  ", so the " + what + " dual set differs from T",
              {{"i", i}, {key, img}, {"in_T", a}});
        return;
    }
    check(r, "self_dual_set:" + label, Outcome::pass,
          "mu_" + m + "(T) = universe \\ T, so the " + what + " dual set equals T");
}

void splitting_check(VerificationReport& r, const Splitting& sp) {
    if (splitting_axioms_hold(sp)) {
        check(r, "splitting", Outcome::pass,
              "mu_" + std::to_string(sp.s) + " swaps S1 = " + sp.S1.to_string() + " and S2 = " + sp.S2.to_string() +
                  ", X = " + sp.X.to_string());
    } else {
        json w = {{"S1", sp.S1.members()}, {"S2", sp.S2.members()}, {"X", sp.X.members()}};
        std::string why;
        const auto N = sp.system->N();
        for (std::uint32_t i : sp.S1.members()) {
            const auto img = static_cast<std::uint32_t>(nt::mod(sp.s * static_cast<long long>(i), N));
            if (!sp.S1.contains(img)) continue;
            w["i"] = i;
            w["image"] = img;
            why = ": i = " + std::to_string(i) + " and " + std::to_string(sp.s) + "*" + std::to_string(i) + " = " +
                  std::to_string(img) + " mod " + std::to_string(N) + " both lie in S1";
            break;
        }
        check(r, "splitting", Outcome::fail, "splitting axioms fail for mu_" + std::to_string(sp.s) + why, w);
    }
}

bool gamma_check(VerificationReport& r, GammaEquation eq, const FieldPtr& f, u64 n) {
    Timer t(r, "construct");
    const auto g = solve_gamma(eq, f, n);
    if (!g) {
        const Elem nn = f->from_int(static_cast<long long>(n % f->p()));
        const Elem rhs = f->neg(f->div(eq == GammaEquation::eq4 ? f->from_int(2) : 1, nn));
        check(r, "gamma", Outcome::fail, equation_text(eq) + " has no solution: " + f->format(rhs) + " is not a square",
              {{"equation", equation_text(eq)}, {"n", n}, {"rhs", elem_json(*f, rhs)}});
        return false;
    }
    r.gamma = g;
    check(r, "gamma", Outcome::pass, equation_text(eq) + " solved by gamma = " + f->format(g->gamma),
          {{"gamma", elem_json(*f, g->gamma)}});
    return true;
}

void build_cyclic(VerificationReport& r, const FieldPtr& F, std::uint32_t n, DualKind kind, const BuildOptions& opts) {
    std::optional<Splitting> sp;
    std::optional<LinearCode> D1, D2;
    long long mult = -1;
    {
        Timer t(r, "construct");
        auto sys = code_coset_system(*F, n, Shift::cyclic);
        std::vector<std::uint32_t> w;
        if (kind == DualKind::euclidean) {
            for (std::uint32_t i = 1; i <= (n - 1) / 2; ++i) w.push_back(i);
        } else {
            mult = -static_cast<long long>(sqrt_order(*F));
            for (std::uint32_t i = (n + 3) / 4; i <= (3 * n - 3) / 4; ++i) w.push_back(i);
        }
        DefiningSet T1(sys, w);
        DefiningSet T2 = apply_multiplier(T1, mult);
        sp = Splitting{sys, mult, T1, T2, DefiningSet::closure(sys, {0}), SplittingKind::cyclic};
        D1 = code_from_defining_set(F, n, Shift::cyclic, T1);
        D2 = code_from_defining_set(F, n, Shift::cyclic, T2);
    }
    r.splitting = sp;
    splitting_check(r, *sp);
    parent_distance(r, "D1", *D1, (n + 1) / 2, opts);
    parent_distance(r, "D2", *D2, (n + 1) / 2, opts);
    if (!gamma_check(r, kind == DualKind::euclidean ? GammaEquation::eq1 : GammaEquation::eq3, F, n)) return;
    for (int i = 0; i < 2; ++i) {
        std::optional<LinearCode> e;
        {
            Timer t(r, "construct");
            e = extend_single(i == 0 ? *D1 : *D2, r.gamma->gamma);
        }
        r.codes.push_back({i == 0 ? "D1~" : "D2~", *e, {}, (n + 3) / 2, kind});
        verify_code(r, r.codes.back(), opts);
    }
}

void build_nega_single(VerificationReport& r, const FieldPtr& F, std::uint32_t n, const std::vector<std::uint32_t>& w,
                       DualKind kind, const BuildOptions& opts) {
    std::optional<LinearCode> C;
    std::optional<DefiningSet> T;
    {
        Timer t(r, "construct");
        auto sys = code_coset_system(*F, n, Shift::negacyclic);
        T = DefiningSet(sys, w);
        C = code_from_defining_set(F, n, Shift::negacyclic, *T);
    }
    if (kind == DualKind::euclidean) {
        dual_set_check(r, "C", *T, -1, "euclidean");
    } else {
        dual_set_check(r, "C", *T, -static_cast<long long>(sqrt_order(*F)), "hermitian");
    }
    r.codes.push_back({"C", *C, {}, n / 2 + 1, kind});
    verify_code(r, r.codes.back(), opts);
}

void build_extended(VerificationReport& r, const FieldPtr& F, std::uint32_t n, const BuildOptions& opts) {
    std::optional<Splitting> sp;
    {
        Timer t(r, "construct");
        sp = find_splitting(code_coset_system(*F, n, Shift::negacyclic), -1, SplittingDemand::typeII);
    }
    if (!sp) {
        check(r, "splitting", Outcome::fail, "mu_-1 gives no type II splitting of O_" + std::to_string(2 * n),
              {{"N", 2 * n}, {"multiplier", -1}});
        return;
    }
    r.splitting = sp;
    splitting_check(r, *sp);
    if (!gamma_check(r, GammaEquation::eq4, F, n)) return;
    for (int i = 0; i < 2; ++i) {
        std::optional<LinearCode> e;
        {
            Timer t(r, "construct");
            const auto D = code_from_defining_set(F, n, Shift::negacyclic, i == 0 ? sp->S1 : sp->S2);
            e = extend_double(D, r.gamma->gamma);
        }
        r.codes.push_back({i == 0 ? "D1~" : "D2~", *e, {}, std::nullopt, DualKind::euclidean});
        verify_code(r, r.codes.back(), opts);
    }
}

}  // namespace

VerificationReport run_recipe(const ConstructionRecipe& recipe, const BuildOptions& opts) {
    VerificationReport r;
    r.recipe = recipe;
    const bool hold = recipe.hypotheses_hold();
    if (!hold) r.notes.push_back("failing hypotheses: " + [&] {
        std::string s;
        for (const auto& n : recipe.failing()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());
    if ((!hold && !opts.force) || recipe.code_field_order == 0) {
        r.status = assess(r);
        return r;
    }
    if (recipe.code_field_order > kMaxFieldSize) {
        r.notes.push_back("code field of order " + str(recipe.code_field_order) + " exceeds 2^20");
        r.status = assess(r);
        return r;
    }
    const std::uint32_t n = recipe.base_length;
    try {
        const auto pp = *nt::as_prime_power(recipe.code_field_order);
        auto F = make_field(pp.prime, pp.exponent);
        switch (recipe.family) {
            case Family::cyclic_euclidean: build_cyclic(r, F, n, DualKind::euclidean, opts); break;
            case Family::cyclic_hermitian: build_cyclic(r, F, n, DualKind::hermitian, opts); break;
            case Family::nega_centered: {
                const std::uint32_t N = 2 * n;
                const auto c = static_cast<long long>((*recipe.param("q") + 1) / 2);
                const auto n1 = static_cast<long long>(n / 2);
                std::vector<std::uint32_t> w;
                for (long long i = -(n1 - 1); i <= n1 - 1; i += 2) {
                    w.push_back(static_cast<std::uint32_t>(nt::mod(c + i, N)));
                }
                std::sort(w.begin(), w.end());
                w.erase(std::unique(w.begin(), w.end()), w.end());
                build_nega_single(r, F, n, w, DualKind::euclidean, opts);
                break;
            }
            case Family::nega_allodd_euclidean:
            case Family::nega_allodd_hermitian: {
                std::vector<std::uint32_t> w;
                for (std::uint32_t i = 1; i < n; i += 2) w.push_back(i);
                build_nega_single(r, F, n, w,
                                  recipe.family == Family::nega_allodd_euclidean ? DualKind::euclidean
                                                                                 : DualKind::hermitian,
                                  opts);
                break;
            }
            case Family::nega_extended: build_extended(r, F, n, opts); break;
        }
    } catch (const Error& e) {
        check(r, "construction", Outcome::fail, e.what(), {{"error", std::string(errc_name(e.code()))}});
    }
    r.status = assess(r);
    return r;
}

namespace {

VerificationReport build_checked(const ConstructionRecipe& rec, const BuildOptions& opts) {
    if (!rec.hypotheses_hold() && !opts.force) {
        std::string s;
        for (const auto& n : rec.failing()) s += (s.empty() ? "" : ", ") + n;
        throw Error(Errc::HypothesisViolated, family_name(rec.family) + ": " + s);
    }
    auto r = run_recipe(rec, opts);
    if (!opts.force && !r.gamma) {
        for (const auto& c : r.checks) {
            if (c.name == "gamma" && c.outcome == Outcome::fail) throw Error(Errc::NoGammaSolution, c.detail);
        }
    }
    if (!opts.force && !r.splitting && rec.family == Family::nega_extended) {
        throw Error(Errc::NoSplitting, "mu_-1 gives no type II splitting");
    }
    return r;
}

}  // namespace

VerificationReport build_cyclic_euclidean(u64 q, u64 n, const BuildOptions& opts) {
    return build_checked(recipe_cyclic_euclidean(q, n), opts);
}

VerificationReport build_cyclic_hermitian(u64 q, u64 p, u64 m, const BuildOptions& opts) {
    const auto n = nt::checked_pow(p, static_cast<unsigned>(m));
    if (!n || !nt::is_prime(p)) throw Error(Errc::HypothesisViolated, "n = p^m must be a prime power");
    return build_checked(recipe_cyclic_hermitian(q, *n), opts);
}

VerificationReport build_nega_centered(u64 q, u64 n, const BuildOptions& opts) {
    return build_checked(recipe_nega_centered(q, n), opts);
}

VerificationReport build_nega_allodd(u64 q, u64 n, DualKind kind, const BuildOptions& opts) {
    return build_checked(recipe_nega_allodd(q, n, kind), opts);
}

VerificationReport build_nega_extended(u64 q, u64 p, u64 t, const BuildOptions& opts) {
    return build_checked(recipe_nega_extended(q, p, t), opts);
}

}  // namespace duadic
