#include "lbz/heisenberg.hpp"

#include "lbz/term.hpp"
#include "lbz/v3basis.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace lbz;

namespace {

HElement H(const char* text) { return helement_from_string(text); }

std::vector<HElement> basis_elements(int max_t_power) {
    std::vector<HElement> out{HElement::a(), HElement::b(), HElement::c()};
    for (int k = 0; k <= max_t_power; ++k) out.push_back(HElement::t_power(k));
    return out;
}

} // namespace

TEST_CASE("poly arithmetic") {
    Poly p = Poly::t_power(2); // t^2
    p += Poly::constant(Rat(1));
    CHECK(p.degree() == 2);
    CHECK(format_poly(p) == "1 + t^2");
    CHECK(p.derivative() == [] {
        Poly d;
        d.c = {Rat(0), Rat(2)};
        return d;
    }());
    CHECK(format_poly(p.derivative()) == "2*t");
    CHECK(format_poly(p.times_t()) == "t + t^3");
    p -= p;
    CHECK(p.is_zero());
    CHECK(Poly::zero().degree() == -1);
    CHECK(format_poly(Poly::zero()) == "0");
}

TEST_CASE("multiplication table on the algebra part") {
    const HElement a = HElement::a(), b = HElement::b(), c = HElement::c();
    CHECK(h_mul(b, a) == c);
    CHECK(h_mul(a, b) == [] { HElement m = HElement::c(); m *= Rat(-1); return m; }());
    CHECK(h_mul(a, a).is_zero());
    CHECK(h_mul(b, b).is_zero());
    CHECK(h_mul(a, c).is_zero());
    CHECK(h_mul(c, a).is_zero());
    CHECK(h_mul(b, c).is_zero());
    CHECK(h_mul(c, b).is_zero());
    CHECK(h_mul(c, c).is_zero());
}

TEST_CASE("polynomial part acts by derivative, t-multiplication, identity") {
    const HElement t3 = HElement::t_power(3);
    CHECK(h_mul(t3, HElement::a()) == H("[3*t^2]"));
    CHECK(h_mul(t3, HElement::b()) == H("[t^4]"));
    CHECK(h_mul(t3, HElement::c()) == t3);
    CHECK(h_mul(HElement::t_power(0), HElement::a()).is_zero()); // constant derivative
    CHECK(h_mul(HElement::t_power(0), HElement::b()) == H("[t]"));
}

TEST_CASE("right polynomial part is annihilated") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 30; ++i) {
        const HElement u = random_helement(rng);
        HElement w = random_helement(rng);
        w.ca = w.cb = w.cc = 0; // pure polynomial
        CHECK(h_mul(u, w).is_zero());
    }
}

TEST_CASE("h_mul is bilinear") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const HElement u = random_helement(rng), v = random_helement(rng),
                       w = random_helement(rng);
        const Rat s = make_rat(3, 2);
        HElement sum = u;
        sum += v;
        HElement lhs = h_mul(sum, w);
        HElement rhs = h_mul(u, w);
        rhs += h_mul(v, w);
        CHECK(lhs == rhs);
        HElement sv = v;
        sv *= s;
        HElement l2 = h_mul(u, sv), r2 = h_mul(u, v);
        r2 *= s;
        CHECK(l2 == r2);
    }
}

TEST_CASE("the product satisfies the Leibniz identity") {
    const auto basis = basis_elements(8);
    for (const HElement& u : basis)
        for (const HElement& v : basis)
            for (const HElement& w : basis) CHECK(leibniz_witness(u, v, w).is_zero());
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i)
        CHECK(leibniz_witness(random_helement(rng, 4, 8), random_helement(rng, 4, 8),
                              random_helement(rng, 4, 8))
                  .is_zero());
}

TEST_CASE("evaluate walks the term tree through h_mul") {
    Assignment a{{1, HElement::t_power(0)}, {2, HElement::a()}, {3, HElement::b()}};
    CHECK(evaluate(parse_term("x1(x2x3)"), a) == H("[-1]"));
    CHECK(evaluate(parse_term("x2x3"), a) == H("-c"));
    CHECK(evaluate(parse_term("x3x2"), a) == H("c"));
    CHECK_THROWS_AS(evaluate(parse_term("x4"), a), std::invalid_argument);

    TermLinComb e;
    e.add(parse_term("x2x3"), make_rat(1, 2));
    e.add(parse_term("x3x2"), make_rat(1, 2));
    CHECK(evaluate(e, a).is_zero());
}

TEST_CASE("evaluate is linear and factors through word conversion") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 30; ++i) {
        Assignment a;
        for (int g = 1; g <= 4; ++g) a[g] = random_helement(rng);
        const Term t = random_multilinear_term(rng, 4);
        const LinComb words = leibniz_reduce(t);
        CHECK(evaluate(t, a) == evaluate(words, a));
    }
}

TEST_CASE("fourth-power right bracket identity holds in the module algebra") {
    // x1(x2(x3x4)) evaluates to zero everywhere: the inner bracket lands in
    // the span of c + polynomials, and right multiplication by a bracket of
    // such elements vanishes.
    const auto basis = basis_elements(3);
    const Term t = parse_term("x1(x2(x3x4))");
    for (const HElement& u1 : basis)
        for (const HElement& u2 : basis)
            for (const HElement& u3 : basis)
                for (const HElement& u4 : basis) {
                    const Assignment a{{1, u1}, {2, u2}, {3, u3}, {4, u4}};
                    CHECK(evaluate(t, a).is_zero());
                }
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        Assignment a;
        for (int g = 1; g <= 4; ++g) a[g] = random_helement(rng);
        CHECK(evaluate(t, a).is_zero());
    }
}

TEST_CASE("bracket-pair exchange identity holds and its sign is forced") {
    TermLinComb good; // x1(x2x5)(x3x4) - x1(x2x4)(x3x5) + x1(x2x3)(x4x5)
    good.add(parse_term("x1(x2x5)(x3x4)"), Rat(1));
    good.add(parse_term("x1(x2x4)(x3x5)"), Rat(-1));
    good.add(parse_term("x1(x2x3)(x4x5)"), Rat(1));

    TermLinComb flipped; // the same words with the last two coefficients swapped
    flipped.add(parse_term("x1(x2x5)(x3x4)"), Rat(1));
    flipped.add(parse_term("x1(x2x4)(x3x5)"), Rat(1));
    flipped.add(parse_term("x1(x2x3)(x4x5)"), Rat(-1));

    const std::vector<HElement> small{HElement::a(), HElement::b(), HElement::c(),
                                      HElement::t_power(0), HElement::t_power(1)};
    bool flipped_vanishes_everywhere = true;
    for (const HElement& u1 : small)
        for (const HElement& u2 : small)
            for (const HElement& u3 : small)
                for (const HElement& u4 : small)
                    for (const HElement& u5 : small) {
                        const Assignment a{{1, u1}, {2, u2}, {3, u3}, {4, u4}, {5, u5}};
                        CHECK(evaluate(good, a).is_zero());
                        if (!evaluate(flipped, a).is_zero()) flipped_vanishes_everywhere = false;
                    }
    // The flipped sign pattern is NOT satisfied by the module algebra:
    // x1 -> 1, x2 -> a, x3 -> b, x4 -> a, x5 -> b distinguishes them.
    CHECK_FALSE(flipped_vanishes_everywhere);
    const Assignment witness{{1, HElement::t_power(0)},
                             {2, HElement::a()},
                             {3, HElement::b()},
                             {4, HElement::a()},
                             {5, HElement::b()}};
    CHECK(evaluate(good, witness).is_zero());
    CHECK_FALSE(evaluate(flipped, witness).is_zero());
}

TEST_CASE("helement text round trip") {
    CHECK(format_helement(HElement::a()) == "a");
    CHECK(format_helement(H("a - 1/2*b + [1 + t^2]")) == "a - 1/2*b + [1 + t^2]");
    CHECK(format_helement(HElement{}) == "0");
    CHECK(H("0").is_zero());
    CHECK(H("2*a + 3*c") == [] {
        HElement h;
        h.ca = 2;
        h.cc = 3;
        return h;
    }());
    CHECK(H("[t]") == HElement::t_power(1));
    CHECK(H("-b") == [] { HElement h; h.cb = -1; return h; }());
    CHECK(H("5") == HElement::poly(Poly::constant(Rat(5)))); // bare rational
    std::mt19937_64 rng(59);
    for (int i = 0; i < 100; ++i) {
        const HElement h = random_helement(rng, 5, 6);
        CHECK(helement_from_string(format_helement(h)) == h);
    }
    CHECK_THROWS_AS(helement_from_string("a +"), ParseError);
    CHECK_THROWS_AS(helement_from_string("d"), ParseError);
    CHECK_THROWS_AS(helement_from_string("[t"), ParseError);
}

TEST_CASE("poly text round trip") {
    CHECK(format_poly(poly_from_string("1 + 2*t + t^3")) == "1 + 2*t + t^3");
    CHECK(poly_from_string("0").is_zero());
    CHECK(format_poly(poly_from_string("-1/2 + t^2 - t")) == "-1/2 - t + t^2");
    CHECK_THROWS_AS(poly_from_string("t^"), ParseError);
    CHECK_THROWS_AS(poly_from_string("2 2"), ParseError);
}
