#include "doctest.h"
#include "duadic/constructions.hpp"
#include "duadic/numtheory.hpp"
#include "oracles.hpp"

using namespace duadic;

namespace {

// Smallest element (canonical order) with lhs + gamma^e * n = 0, by scanning the field.
std::optional<Elem> scan_gamma(const Field& f, Elem lhs, std::uint64_t e, std::uint64_t n) {
    const Elem nn = f.from_int(static_cast<long long>(n % f.p()));
    for (Elem g = 0; g < f.q(); ++g) {
        if (f.add(lhs, f.mul(f.pow(g, e), nn)) == 0) return g;
    }
    return std::nullopt;
}

const Check* find_check(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

void check_codes(const VerificationReport& r, std::uint32_t n, std::uint32_t k, std::optional<std::uint32_t> d,
                 std::uint64_t conj_exp = 1) {
    REQUIRE(!r.codes.empty());
    for (const auto& c : r.codes) {
        CHECK(c.code.n() == n);
        CHECK(c.code.k() == k);
        CHECK(c.self_dual);
        CHECK(oracle::gram_zero(c.code, conj_exp));
        if (d) {
            REQUIRE(c.distance.exact);
            CHECK(*c.distance.exact == *d);
        }
    }
}

}  // namespace

TEST_SUITE("constructions") {
    TEST_CASE("gamma solver picks the smallest solution") {
        auto f7 = make_field(7, 1);
        auto g = solve_gamma(GammaEquation::eq1, f7, 3);
        REQUIRE(g);
        CHECK(g->gamma == 3);
        CHECK(gamma_residual(*g) == 0);

        for (std::uint64_t q : {5, 7, 9, 11, 13, 25, 27, 29, 49}) {
            auto f = make_field_of_order(q);
            for (std::uint64_t n = 1; n <= 30; ++n) {
                if (n % f->p() == 0) {
                    CHECK_THROWS_AS(solve_gamma(GammaEquation::eq1, f, n), Error);
                    continue;
                }
                const auto want1 = scan_gamma(*f, 1, 2, n);
                const auto got1 = solve_gamma(GammaEquation::eq1, f, n);
                CHECK(want1.has_value() == got1.has_value());
                if (got1) CHECK(got1->gamma == *want1);
                const auto want4 = scan_gamma(*f, f->from_int(2), 2, n);
                const auto got4 = solve_gamma(GammaEquation::eq4, f, n);
                CHECK(want4.has_value() == got4.has_value());
                if (got4) CHECK(got4->gamma == *want4);
            }
        }
        // Hermitian equation always solvable over GF(s^2).
        for (std::uint64_t s : {3, 5, 7, 9}) {
            auto f = make_field_of_order(s * s);
            for (std::uint64_t n = 1; n <= 20; ++n) {
                if (n % f->p() == 0) continue;
                const auto got = solve_gamma(GammaEquation::eq3, f, n);
                REQUIRE(got);
                CHECK(got->gamma == *scan_gamma(*f, 1, s + 1, n));
            }
        }
        CHECK_THROWS_AS(solve_gamma(GammaEquation::eq4, make_field(2, 3), 7), Error);
    }

    TEST_CASE("existence prediction is sound") {
        CHECK(predict_gamma_existence(29, 1, 7, 1) == Prediction::exists);
        CHECK_THROWS_AS(predict_gamma_existence(7, 1, 5, 1), Error);
        for (std::uint64_t r : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
            for (unsigned t = 1; t <= 3; ++t) {
                const auto q = *nt::checked_pow(r, t);
                if (q > 60000) continue;
                for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19}) {
                    if (p == r) continue;
                    for (unsigned m = 1; m <= 2; ++m) {
                        const auto n = *nt::checked_pow(p, m);
                        if ((q - 1) % n != 0) continue;
                        if (predict_gamma_existence(r, t, p, m) != Prediction::exists) continue;
                        CHECK(scan_gamma(*make_field(r, t), 1, 2, n).has_value());
                    }
                }
            }
        }
    }

    TEST_CASE("order facts agree with direct order computation") {
        std::vector<std::uint64_t> primes;
        for (std::uint64_t x = 3; x <= 100; ++x)
            if (nt::is_prime(x)) primes.push_back(x);
        for (std::uint64_t p : primes) {
            for (std::uint64_t q : primes) {
                if (p == q) continue;
                const auto o = order_facts(q, p, 1);
                const auto ord = oracle::order_mod(q, p);
                CHECK(o.ord_p == ord);
                bool residue = false;
                for (std::uint64_t x = 1; x < p; ++x) residue = residue || x * x % p == q % p;
                CHECK(o.q_is_residue == residue);
                if (p % 4 == 1 && !residue) {
                    CHECK(o.lemma_case1);
                    CHECK(ord % 4 == 0);
                    CHECK(o.lemma_prediction_holds == std::optional<bool>(true));
                }
                if (p % 4 == 3 && residue) {
                    CHECK(o.lemma_case2);
                    CHECK(ord % 2 == 1);
                    CHECK(o.lemma_prediction_holds == std::optional<bool>(true));
                }
                CHECK(o.ord_2pt == oracle::order_mod(q, 2 * p));
                CHECK(o.mu_minus1_type_ii == (o.ord_2pt % 4 != 2));
            }
        }
        // ord_{p^t} = p^(t-1) ord_p whenever z = 1.
        for (std::uint64_t p : {3, 5, 7, 11}) {
            for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19}) {
                if (p == q) continue;
                for (unsigned t = 1; t <= 3; ++t) {
                    const auto o = order_facts(q, p, t);
                    CHECK(o.ord_pt == oracle::order_mod(q, *nt::checked_pow(p, t)));
                    if (o.z == 1) CHECK(o.remark_formula_holds == std::optional<bool>(true));
                }
            }
        }
        CHECK_THROWS_AS(order_facts(9, 3, 1), Error);
    }

    TEST_CASE("insolubility claim versus the q = 3, p = 5 case") {
        const auto o = order_facts(3, 5, 1);
        CHECK(o.insolubility_claim_applies);
        CHECK(o.eq4_solvable == std::optional<bool>(true));
        auto f3 = make_field(3, 1);
        CHECK(f3->add(2, f3->mul(10 % 3, f3->mul(1, 1))) == 0);  // 2 + 10 * 1^2 = 12 = 0
    }

    TEST_CASE("MDS generator codes") {
        const auto c = mds_generator_code(make_field(13, 1), 12, 6, 1);
        CHECK(c.n() == 12);
        CHECK(c.k() == 6);
        const auto d = min_distance(c, {.budget = 1000});
        CHECK(d.method == DistanceMethod::bch_singleton_certificate);
        CHECK(d.exact == std::optional<std::uint32_t>(7));
        for (std::uint32_t k = 1; k < 6; ++k) {
            for (std::uint32_t j = 0; j < 6; ++j) {
                CHECK(oracle::brute_distance(mds_generator_code(make_field(7, 1), 6, k, j)) == 6 - k + 1);
            }
        }
        CHECK_THROWS_AS(mds_generator_code(make_field(7, 1), 5, 2, 0), Error);
    }

    TEST_CASE("cyclic Euclidean examples") {
        auto r = build_cyclic_euclidean(7, 3);
        CHECK(r.status == Status::pass);
        REQUIRE(r.gamma);
        CHECK(r.gamma->gamma == 3);
        check_codes(r, 4, 2, 3);
        for (const auto& c : r.codes) CHECK(oracle::brute_distance(c.code) == 3);

        auto r8 = build_cyclic_euclidean(8, 7);
        CHECK(r8.status == Status::pass);
        const auto& cases = r8.recipe.checks;
        CHECK(std::any_of(cases.begin(), cases.end(), [](const auto& h) { return h.name == "case_i" && h.pass; }));
        check_codes(r8, 8, 4, 5);

        // The extension raises the minimum weight by exactly one.
        for (auto [q, n] : {std::pair{7, 3}, {13, 3}, {19, 3}, {29, 7}, {41, 5}}) {
            auto rr = build_cyclic_euclidean(q, n);
            CHECK(rr.status == Status::pass);
            for (const auto& c : rr.codes) {
                const auto& parent = c.code.extension()->parent_set;
                const auto D = code_from_defining_set(c.code.field(), n, Shift::cyclic, parent);
                CHECK(oracle::brute_distance(D) == (n + 1) / 2);
                CHECK(oracle::brute_distance(c.code) == (n + 3) / 2);
            }
        }
    }

    TEST_CASE("hypothesis failures") {
        CHECK_THROWS_AS(build_cyclic_euclidean(17, 5), Error);
        auto r = run_recipe(recipe_cyclic_euclidean(17, 5));
        CHECK(r.status == Status::hypothesis_fail);
        CHECK(r.codes.empty());
        CHECK(recipe_cyclic_euclidean(17, 5).failing() == std::vector<std::string>{"n_divides_q_minus_1"});
        auto forced = run_recipe(recipe_cyclic_euclidean(13, 3), {.force = true});
        CHECK(forced.status == Status::pass);
        // Forcing a failing recipe still reports the hypothesis failure.
        auto f2 = run_recipe(recipe_cyclic_euclidean(31, 15), {.force = true});
        CHECK(f2.status == Status::hypothesis_fail);
        CHECK_FALSE(f2.codes.empty());
        // Here T is not a union of cosets; the failure is recorded, not thrown.
        auto f3 = run_recipe(recipe_nega_allodd(13, 12, DualKind::euclidean), {.force = true});
        CHECK(f3.status == Status::hypothesis_fail);
        REQUIRE(find_check(f3, "construction"));
        CHECK(find_check(f3, "construction")->witness["error"] == "NotUnionOfCosets");
        CHECK(run_recipe(recipe_cyclic_euclidean(63, 5)).status == Status::hypothesis_fail);
    }

    TEST_CASE("cyclic Hermitian examples") {
        auto r = build_cyclic_hermitian(3, 5, 1);
        CHECK(r.status == Status::pass);
        check_codes(r, 6, 3, 4, 3);
        CHECK(r.codes[0].code.field()->q() == 9);

        // n = 13: the consecutive block {4..9} meets its image under mu_-31, so
        // the extended codes have the right parameters but are not self-dual.
        auto big = build_cyclic_hermitian(31, 13, 1);
        CHECK(big.status == Status::property_fail);
        const Check* sp = find_check(big, "splitting");
        REQUIRE(sp);
        CHECK(sp->outcome == Outcome::fail);
        const auto i = sp->witness["i"].get<long long>();
        CHECK((i >= 4 && i <= 9));
        const auto img = ((-31 * i) % 13 + 13) % 13;
        CHECK(sp->witness["image"] == img);
        CHECK((img >= 4 && img <= 9));
        for (const auto& c : big.codes) {
            CHECK(c.code.n() == 14);
            CHECK(c.code.k() == 7);
            CHECK(c.distance.exact == std::optional<std::uint32_t>(8));
            CHECK_FALSE(oracle::gram_zero(c.code, 31));
        }
        CHECK_THROWS_AS(build_cyclic_hermitian(3, 7, 1), Error);
    }

    TEST_CASE("negacyclic centered examples") {
        auto r = build_nega_centered(5, 6);
        CHECK(r.status == Status::pass);
        check_codes(r, 6, 3, 4);
        CHECK(r.codes[0].code.provenance()->defining_set.members() == std::vector<std::uint32_t>{1, 3, 5});
        CHECK(oracle::brute_distance(r.codes[0].code) == 4);
        auto r14 = build_nega_centered(13, 14);
        CHECK(r14.status == Status::pass);
        check_codes(r14, 14, 7, 8);
        // -T is the complement of T among the odd residues, by plain arithmetic.
        for (auto [q, n] : {std::pair{5, 6}, {13, 14}, {17, 18}, {9, 10}, {29, 30}}) {
            auto rr = build_nega_centered(q, n);
            const auto& T = rr.codes[0].code.provenance()->defining_set;
            for (std::uint32_t i = 1; i < 2u * n; i += 2) CHECK(T.contains(i) != T.contains(2 * n - i));
        }
    }

    TEST_CASE("negacyclic all-odd examples") {
        auto r = build_nega_allodd(13, 6, DualKind::euclidean);
        CHECK(r.status == Status::pass);
        check_codes(r, 6, 3, 4);
        CHECK(r.codes[0].distance.enumerated == 2196);

        auto h = build_nega_allodd(25, 12, DualKind::hermitian);
        CHECK(h.status == Status::pass);
        check_codes(h, 12, 6, 7, 25);
        CHECK(h.codes[0].distance.method == DistanceMethod::bch_singleton_certificate);

        auto bad = build_nega_allodd(13, 12, DualKind::hermitian);
        CHECK(bad.status == Status::property_fail);
        const Check* c = find_check(bad, "self_dual_set:C");
        REQUIRE(c);
        CHECK(c->outcome == Outcome::fail);
        CHECK(c->witness["i"] == 1);
        CHECK(c->witness["minus_q_i"] == 11);
        CHECK_FALSE(oracle::gram_zero(bad.codes[0].code, 13));
        const Check* m = find_check(bad, "self_dual_matrix:C");
        REQUIRE(m);
        CHECK(m->outcome == Outcome::fail);
    }

    TEST_CASE("extended negacyclic example") {
        auto r = build_nega_extended(7, 3, 1);
        CHECK(r.status == Status::pass);
        REQUIRE(r.splitting);
        CHECK(r.splitting->S1.members() == std::vector<std::uint32_t>{1, 7});
        CHECK(r.splitting->S2.members() == std::vector<std::uint32_t>{5, 11});
        CHECK(r.splitting->X.members() == std::vector<std::uint32_t>{3, 9});
        REQUIRE(r.gamma);
        CHECK((r.gamma->gamma == 3 || r.gamma->gamma == 4));
        check_codes(r, 8, 4, std::nullopt);
        for (const auto& c : r.codes) CHECK(oracle::brute_distance(c.code) == *c.distance.exact);
    }

    TEST_CASE("family names round trip") {
        for (Family f : kAllFamilies) {
            CHECK(parse_family(family_name(f)) == f);
            auto s = family_name(f);
            std::replace(s.begin(), s.end(), '-', '_');
            CHECK(parse_family(s) == f);
        }
        CHECK_FALSE(parse_family("cyclic"));
        CHECK(make_recipe(Family::nega_extended, 7, 6).param("p") == std::optional<std::int64_t>(3));
        CHECK_FALSE(make_recipe(Family::nega_extended, 7, 8).hypotheses_hold());
    }
}
