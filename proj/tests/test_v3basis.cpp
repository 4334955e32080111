#include "lbz/v3basis.hpp"

#include "lbz/errors.hpp"

#include <doctest.h>

#include <random>

using namespace lbz;

namespace {

ThetaElement theta(int n, int head, std::vector<std::pair<int, int>> pairs,
                   std::vector<int> singles) {
    ThetaElement t;
    t.n = n;
    t.head = head;
    t.pairs = std::move(pairs);
    t.singles = std::move(singles);
    REQUIRE(t.valid());
    return t;
}

ThetaCoordinates coords_of(const char* text, int n) {
    TermLinComb e;
    e.add(parse_term(text), Rat(1));
    return reduce_to_theta(e, n);
}

QuotientCache& shared_cache() {
    static QuotientCache cache(builtin_variety("v3tilde"), 6);
    return cache;
}

} // namespace

TEST_CASE("single transposition reduces to a word minus a bracket") {
    const ThetaCoordinates c = coords_of("x1x3x2", 3);
    ThetaCoordinates expected;
    expected[theta(3, 1, {}, {2, 3})] = Rat(1);
    expected[theta(3, 1, {{2, 3}}, {})] = Rat(-1);
    CHECK(c == expected);
}

TEST_CASE("sorted inputs are fixed points") {
    CHECK(coords_of("x1x2x3x4", 4) == ThetaCoordinates{{theta(4, 1, {}, {2, 3, 4}), Rat(1)}});
    CHECK(coords_of("x2(x1x3)x4", 4) ==
          ThetaCoordinates{{theta(4, 2, {{1, 3}}, {4}), Rat(1)}});
}

TEST_CASE("bracket pair reordering uses the exchange rule") {
    const ThetaCoordinates c = coords_of("x1(x2x5)(x3x4)", 5);
    ThetaCoordinates expected;
    expected[theta(5, 1, {{2, 4}, {3, 5}}, {})] = Rat(1);
    expected[theta(5, 1, {{2, 3}, {4, 5}}, {})] = Rat(-1);
    CHECK(c == expected);
}

TEST_CASE("every theta element is its own normal form") {
    for (int n = 1; n <= 5; ++n)
        for (const ThetaElement& t : enumerate_theta(n)) {
            const ThetaCoordinates c = reduce_to_theta(theta_to_lincomb(t), n);
            CHECK(c == ThetaCoordinates{{t, Rat(1)}});
        }
}

TEST_CASE("reduction is linear") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> deg(2, 6);
        const int n = deg(rng);
        const TermLinComb e1 = random_multilinear_element(rng, n);
        const TermLinComb e2 = random_multilinear_element(rng, n);
        const Rat s = make_rat(-2, 3);
        TermLinComb combo = e1;
        TermLinComb scaled = e2;
        scaled *= s;
        combo += scaled;
        ThetaCoordinates expected = reduce_to_theta(e1, n);
        for (const auto& [t, c] : reduce_to_theta(e2, n)) {
            auto [it, fresh] = expected.try_emplace(t, c * s);
            if (!fresh) {
                it->second += c * s;
                if (it->second == 0) expected.erase(it);
            }
        }
        CHECK(reduce_to_theta(combo, n) == expected);
    }
}

TEST_CASE("reduction output differs from input by an ideal element") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> deg(1, 5);
        const int n = deg(rng);
        const TermLinComb e = random_multilinear_element(rng, n);
        const ThetaCoordinates coords = reduce_to_theta(e, n);
        LinComb diff = reduce_lincomb(e);
        diff -= theta_image_words(coords);
        if (!diff.is_zero())
            CHECK(shared_cache().at(n).ideal.contains(vectorize(diff, n)));
    }
}

TEST_CASE("reduction preserves evaluation in the module algebra") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> deg(1, 6);
        const int n = deg(rng);
        const TermLinComb e = random_multilinear_element(rng, n);
        const TermLinComb image = theta_image(reduce_to_theta(e, n));
        for (int j = 0; j < 20; ++j) {
            Assignment a;
            for (int g = 1; g <= n; ++g) a[g] = random_helement(rng);
            CHECK(evaluate(e, a) == evaluate(image, a));
        }
    }
}

TEST_CASE("reduce_to_theta validates multilinearity") {
    TermLinComb bad;
    bad.add(parse_term("x1x1"), Rat(1));
    CHECK_THROWS_AS(reduce_to_theta(bad, 2), std::invalid_argument);
    TermLinComb wrong_n;
    wrong_n.add(parse_term("x1x2"), Rat(1));
    CHECK_THROWS_AS(reduce_to_theta(wrong_n, 3), std::invalid_argument);
    CHECK(reduce_to_theta(TermLinComb{}, 3).empty());
}

TEST_CASE("random term generators are deterministic and well-shaped") {
    std::mt19937_64 a(123), b(123);
    for (int i = 0; i < 10; ++i) {
        const Term ta = random_multilinear_term(a, 5);
        const Term tb = random_multilinear_term(b, 5);
        CHECK(ta == tb);
        CHECK(ta.degree() == 5);
        TermLinComb e;
        e.add(ta, Rat(1));
        CHECK(is_multilinear(e, 5));
    }
    std::mt19937_64 c(9);
    for (int i = 0; i < 10; ++i) {
        const TermLinComb e = random_multilinear_element(c, 4);
        CHECK_FALSE(e.is_zero());
        CHECK(is_multilinear(e, 4));
    }
}

TEST_CASE("full verification passes at small degrees") {
    for (int n = 1; n <= 4; ++n) {
        const Theorem2Report rep = verify_theorem2(shared_cache(), n, -1, 20260822, 15, 4);
        CHECK(rep.span_ok);
        CHECK(rep.independence_ok);
        CHECK(rep.consistency_ok);
        CHECK(rep.pass);
        CHECK(rep.theta_count == rep.quotient_dim);
        CHECK(rep.eval_rank == rep.theta_count);
        CHECK(rep.fdeg == n);
    }
}

TEST_CASE("verification rejects a too-small polynomial degree") {
    CHECK_THROWS_AS(verify_theorem2(shared_cache(), 4, 2), std::invalid_argument);
}
