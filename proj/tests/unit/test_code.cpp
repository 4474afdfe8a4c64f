#include "doctest.h"
#include "duadic/code.hpp"
#include "duadic/numtheory.hpp"

using namespace duadic;

namespace {

using Set = std::vector<std::uint32_t>;

// Straight enumeration of every nonzero message; the oracle for the
// counting-based engine.
std::uint32_t brute_distance(const LinearCode& c) {
    const Field& f = *c.field();
    const std::size_t k = c.k(), n = c.n();
    std::vector<Elem> msg(k, 0);
    std::uint32_t best = static_cast<std::uint32_t>(n);
    while (true) {
        std::size_t i = 0;
        while (i < k && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == k) break;
        std::uint32_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Elem x = 0;
            for (std::size_t r = 0; r < k; ++r) x = f.add(x, f.mul(msg[r], c.genmat().at(r, j)));
            w += x != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

std::vector<DefiningSet> all_unions(const CosetSystemPtr& sys) {
    std::vector<DefiningSet> out;
    const auto& cs = sys->cosets();
    for (std::uint64_t mask = 0; mask < (1ULL << cs.size()); ++mask) {
        Set m;
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (mask >> i & 1U) m.insert(m.end(), cs[i].begin(), cs[i].end());
        std::sort(m.begin(), m.end());
        out.emplace_back(sys, m);
    }
    return out;
}

Matrix row(std::vector<Elem> v) {
    Matrix m(1, v.size());
    m.data = std::move(v);
    return m;
}

}  // namespace

TEST_SUITE("code") {
TEST_CASE("factorization examples") {
    auto f13 = make_field(13, 1);
    auto fa = factor_xn_minus_a(f13, 6, Shift::negacyclic);
    CHECK(fa.factors.size() == 6);
    const Elem delta = nth_root_of_unity(*f13, 12);
    for (const auto& fac : fa.factors) {
        REQUIRE(fac.coset.size() == 1);
        CHECK(fac.poly == Poly(f13, {f13->neg(f13->pow(delta, fac.coset[0])), 1}));
    }
    auto f5 = make_field(5, 1);
    auto fb = factor_xn_minus_a(f5, 6, Shift::negacyclic);
    std::vector<long> degs;
    for (auto& fac : fb.factors) degs.push_back(fac.poly.degree());
    CHECK(degs == std::vector<long>{2, 1, 2, 1});
    auto f7 = make_field(7, 1);
    auto fc = factor_xn_minus_a(f7, 3, Shift::cyclic);
    CHECK(fc.factors[0].poly == Poly(f7, {6, 1}));
    CHECK(fc.factors[1].poly == Poly(f7, {5, 1}));
    CHECK(fc.factors[2].poly == Poly(f7, {3, 1}));
    CHECK_THROWS_AS(factor_xn_minus_a(f7, 14, Shift::cyclic), Error);
}

TEST_CASE("factor products equal x^n - a for q <= 169, n <= 30") {
    for (std::uint64_t q = 2; q <= 169; ++q) {
        if (!nt::as_prime_power(q)) continue;
        auto f = make_field_of_order(q);
        for (std::uint32_t n = 1; n <= 30; ++n) {
            for (Shift a : {Shift::cyclic, Shift::negacyclic}) {
                const std::uint32_t N = a == Shift::cyclic ? n : 2 * n;
                if (nt::gcd(N, q) != 1) continue;
                auto fac = factor_xn_minus_a(f, n, a);
                Poly prod = Poly::constant(f, 1);
                for (auto& x : fac.factors) prod = prod * x.poly;
                CHECK_MESSAGE(prod == Poly::xn_minus(f, n, a == Shift::cyclic ? 1 : f->neg(1)),
                              "q=" << q << " n=" << n);
            }
        }
    }
}

TEST_CASE("codes from defining sets") {
    auto f7 = make_field(7, 1);
    auto s3 = code_coset_system(*f7, 3, Shift::cyclic);
    auto c = code_from_defining_set(f7, 3, Shift::cyclic, DefiningSet(s3, {1}));
    CHECK(c.k() == 2);
    CHECK(c.provenance()->generator == Poly(f7, {5, 1}));
    CHECK(c.genmat().data == std::vector<Elem>{5, 1, 0, 0, 5, 1});
    auto f13 = make_field(13, 1);
    auto s12 = code_coset_system(*f13, 6, Shift::negacyclic);
    auto n6 = code_from_defining_set(f13, 6, Shift::negacyclic, DefiningSet(s12, {1, 3, 5}));
    CHECK(n6.k() == 3);
    const Elem d = nth_root_of_unity(*f13, 12);
    Poly g = Poly(f13, {f13->neg(d), 1}) * Poly(f13, {f13->neg(f13->pow(d, 3)), 1}) *
             Poly(f13, {f13->neg(f13->pow(d, 5)), 1});
    CHECK(n6.provenance()->generator == g);
    CHECK(is_self_dual(n6, DualKind::euclidean));
    auto full = code_from_defining_set(f13, 6, Shift::negacyclic, DefiningSet::empty(s12));
    CHECK(full.k() == 6);
    CHECK_FALSE(is_self_dual(full, DualKind::euclidean));
    CHECK(dual_code(full, DualKind::euclidean).k() == 0);
    // Wrong system.
    auto other = build_cosets(12, 5, Universe::odd);
    CHECK_THROWS_AS(code_from_defining_set(f13, 6, Shift::negacyclic, DefiningSet(other, {1, 5})), Error);
}

TEST_CASE("generator divides every row and x^n - a") {
    auto f = make_field(3, 2);
    for (Shift a : {Shift::cyclic, Shift::negacyclic}) {
        auto sys = code_coset_system(*f, 10, a);
        for (const auto& T : all_unions(sys)) {
            auto c = code_from_defining_set(f, 10, a, T);
            CHECK(c.k() == 10 - T.size());
            const Poly& g = c.provenance()->generator;
            CHECK(g.degree() == static_cast<long>(T.size()));
            CHECK(divmod(Poly::xn_minus(f, 10, a == Shift::cyclic ? 1 : f->neg(1)), g).second.is_zero());
            for (std::size_t i = 0; i < c.k(); ++i) {
                auto r = c.genmat().row(i);
                CHECK(divmod(Poly(f, {r.begin(), r.end()}), g).second.is_zero());
            }
        }
    }
}

TEST_CASE("defining-set duals agree with kernel duals") {
    for (std::uint64_t q : {3ULL, 5ULL, 7ULL, 9ULL, 13ULL, 25ULL}) {
        auto f = make_field_of_order(q);
        for (std::uint32_t n = 1; n <= 10; ++n) {
            for (Shift a : {Shift::cyclic, Shift::negacyclic}) {
                if (nt::gcd(a == Shift::cyclic ? n : 2 * n, q) != 1) continue;
                auto sys = code_coset_system(*f, n, a);
                for (const auto& T : all_unions(sys)) {
                    auto c = code_from_defining_set(f, n, a, T);
                    auto kd = dual_code(c, DualKind::euclidean);
                    auto sd = code_from_defining_set(f, n, a, euclidean_dual_set(T));
                    CHECK_MESSAGE(same_row_space(*f, kd.genmat(), sd.genmat()), "q=" << q << " n=" << n);
                    CHECK(is_self_dual(c, DualKind::euclidean) == (euclidean_dual_set(T) == T));
                }
            }
        }
    }
    for (std::uint64_t q : {3ULL, 5ULL}) {
        auto f = make_field_of_order(q * q);
        for (std::uint32_t n = 1; n <= 10; ++n) {
            for (Shift a : {Shift::cyclic, Shift::negacyclic}) {
                if (nt::gcd(a == Shift::cyclic ? n : 2 * n, q) != 1) continue;
                auto sys = code_coset_system(*f, n, a);
                for (const auto& T : all_unions(sys)) {
                    auto c = code_from_defining_set(f, n, a, T);
                    auto kd = dual_code(c, DualKind::hermitian);
                    auto sd = code_from_defining_set(f, n, a, hermitian_dual_set(T, q));
                    CHECK(same_row_space(*f, kd.genmat(), sd.genmat()));
                    CHECK(same_row_space(*f, dual_code(kd, DualKind::hermitian).genmat(), c.genmat()));
                    CHECK(is_self_dual(c, DualKind::hermitian) == (hermitian_dual_set(T, q) == T));
                }
            }
        }
    }
    CHECK_THROWS_AS(dual_code(code_from_defining_set(make_field(7, 1), 3, Shift::cyclic,
                                                     DefiningSet::empty(code_coset_system(*make_field(7, 1), 3,
                                                                                          Shift::cyclic))),
                              DualKind::hermitian),
                    Error);
}

TEST_CASE("extensions") {
    auto f7 = make_field(7, 1);
    auto e = extend_single(LinearCode(f7, row({5, 1, 0})), 3);
    CHECK(e.genmat().data == std::vector<Elem>{5, 1, 0, 3});
    CHECK(extend_single(LinearCode(f7, row({1, 1, 1})), 3).genmat().at(0, 3) == 5);
    CHECK(extend_single(LinearCode(f7, row({1, 2, 3})), 0).genmat().at(0, 3) == 0);
    CHECK(extend_double(LinearCode(f7, row({1, 0, 0, 0, 0, 0})), 3).genmat().data ==
          std::vector<Elem>{1, 0, 0, 0, 0, 0, 3, 0});
    CHECK(extend_double(LinearCode(f7, row({0, 1, 0, 0, 0, 0})), 3).genmat().data ==
          std::vector<Elem>{0, 1, 0, 0, 0, 0, 0, 3});
    auto d = extend_double(LinearCode(f7, row({1, 1, 1, 1, 1, 1})), 3);
    CHECK(d.genmat().at(0, 6) == 3);
    CHECK(d.genmat().at(0, 7) == 3);
    CHECK_THROWS_AS(extend_double(LinearCode(f7, row({1, 1, 1})), 3), Error);

    auto s3 = code_coset_system(*f7, 3, Shift::cyclic);
    auto c = code_from_defining_set(f7, 3, Shift::cyclic, DefiningSet(s3, {1}));
    auto x = extend_single(c, 3);
    CHECK(x.genmat().data == std::vector<Elem>{5, 1, 0, 3, 0, 5, 1, 3});
    CHECK(is_self_dual(x, DualKind::euclidean));
    auto dr = min_distance(x);
    CHECK(dr.method == DistanceMethod::exhaustive);
    CHECK(dr.enumerated == 48);
    CHECK(dr.exact == 3);
    CHECK(is_mds(x, dr));
}

TEST_CASE("extension preserves rank and adds at most one to each weight") {
    auto f = make_field(13, 1);
    auto sys = code_coset_system(*f, 4, Shift::cyclic);
    for (const auto& T : all_unions(sys)) {
        auto c = code_from_defining_set(f, 4, Shift::cyclic, T);
        if (c.k() == 0 || c.k() > 3) continue;
        auto e = extend_single(c, 5);
        CHECK(e.k() == c.k());
        // Each message: wt(ext) - wt(c) in {0, 1}, and 1 iff the appended coordinate is nonzero.
        std::vector<Elem> msg(c.k(), 0);
        while (true) {
            std::size_t i = 0;
            while (i < c.k() && ++msg[i] == f->q()) msg[i++] = 0;
            if (i == c.k()) break;
            std::vector<Elem> w(e.n(), 0);
            for (std::size_t r = 0; r < c.k(); ++r)
                for (std::size_t j = 0; j < e.n(); ++j) w[j] = f->add(w[j], f->mul(msg[r], e.genmat().at(r, j)));
            const auto we = weight(w);
            const auto wc = weight(std::span<const Elem>(w.data(), c.n()));
            CHECK(we - wc == (w.back() != 0 ? 1U : 0U));
        }
    }
}

TEST_CASE("distance engine against brute force") {
    for (std::uint64_t q : {3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 9ULL, 13ULL}) {
        auto f = make_field_of_order(q);
        for (std::uint32_t n : {5U, 6U, 7U, 8U}) {
            for (Shift a : {Shift::cyclic, Shift::negacyclic}) {
                if (nt::gcd(a == Shift::cyclic ? n : 2 * n, q) != 1) continue;
                auto sys = code_coset_system(*f, n, a);
                for (const auto& T : all_unions(sys)) {
                    auto c = code_from_defining_set(f, n, a, T);
                    if (c.k() == 0 || nt::checked_pow(q, static_cast<unsigned>(c.k())).value_or(~0ULL) > 200000) continue;
                    const auto want = brute_distance(c);
                    for (unsigned th : {1U, 4U}) {
                        DistanceOptions o;
                        o.threads = th;
                        auto r = min_distance(c, o);
                        REQUIRE(r.exact);
                        CHECK(*r.exact == want);
                        CHECK(weight(r.witness) == want);
                        CHECK(contains_codeword(c, r.witness));
                        CHECK(r.enumerated == *nt::checked_pow(q, static_cast<unsigned>(c.k())) - 1);
                    }
                    CHECK(*bch_lower_bound(c) <= want);
                }
            }
        }
    }
}

TEST_CASE("certificates") {
    auto f109 = make_field(109, 1);
    auto sys = code_coset_system(*f109, 18, Shift::negacyclic);
    DefiningSet T(sys, {1, 3, 5, 7, 9, 11, 13, 15, 17});
    auto c = code_from_defining_set(f109, 18, Shift::negacyclic, T);
    auto r = min_distance(c);
    CHECK(r.method == DistanceMethod::bch_singleton_certificate);
    CHECK(r.exact == 10);
    CHECK(is_self_dual(c, DualKind::euclidean));
    CHECK(is_mds(c, r));

    auto f5 = make_field(5, 1);
    auto s5 = code_coset_system(*f5, 6, Shift::negacyclic);
    auto c5 = code_from_defining_set(f5, 6, Shift::negacyclic, DefiningSet(s5, {1, 3, 5}));
    auto r5 = min_distance(c5);
    CHECK(r5.exact == 4);
    CHECK(is_mds(c5, r5));

    // Information-set path: a small budget forces it; cross-check with enumeration.
    auto f13 = make_field(13, 1);
    auto s13 = code_coset_system(*f13, 6, Shift::negacyclic);
    for (const auto& U : all_unions(s13)) {
        auto cu = code_from_defining_set(f13, 6, Shift::negacyclic, U);
        if (cu.k() == 0) continue;
        auto exact = min_distance(cu);
        DistanceOptions o;
        o.budget = 1;
        o.information_set_factor = 1'000'000;
        auto cert = min_distance(cu, o);
        if (cert.exact) CHECK(*cert.exact == *exact.exact);
        CHECK(cert.lower <= *exact.exact);
        CHECK(cert.upper >= *exact.exact);
        if (*exact.exact == 6 - cu.k() + 1) CHECK(cert.exact.has_value());
    }
    // Zero code.
    auto zero = code_from_defining_set(f13, 6, Shift::negacyclic, DefiningSet::universe(s13));
    auto rz = min_distance(zero);
    CHECK(rz.method == DistanceMethod::bounded_only);
    CHECK(rz.enumerated == 0);
    CHECK_THROWS_AS(is_mds(zero, rz), Error);
}

TEST_CASE("is_mds trivial") {
    auto f7 = make_field(7, 1);
    LinearCode c(f7, row({1, 1, 1, 1}));
    DistanceResult d;
    d.exact = 4;
    CHECK(is_mds(c, d));
    d.exact = 3;
    CHECK_FALSE(is_mds(c, d));
}
}
