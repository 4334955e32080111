#pragma once

#include "lbz/rational.hpp"
#include "lbz/term.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lbz {

// Polynomial in t over Q; c[k] is the coefficient of t^k, no trailing zeros.
struct Poly {
    std::vector<Rat> c;

    static Poly zero() { return {}; }
    static Poly constant(const Rat& r);
    static Poly t_power(int k); // t^k

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // zero: -1

    Poly derivative() const;
    Poly times_t() const;

    void normalize();
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);
    bool operator==(const Poly&) const = default;
};

// Element of the extended Heisenberg module: span{a,b,c} + Q[t], with
//   ba = -ab = c, all other products of a,b,c zero,
//   f a = f', f b = t f, f c = f,
//   (x + f)(y + g) = xy + f y  (the right polynomial part acts as zero).
struct HElement {
    Rat ca, cb, cc;
    Poly f;

    static HElement a() { return {1, 0, 0, {}}; }
    static HElement b() { return {0, 1, 0, {}}; }
    static HElement c() { return {0, 0, 1, {}}; }
    static HElement poly(Poly p) { return {0, 0, 0, std::move(p)}; }
    static HElement t_power(int k) { return poly(Poly::t_power(k)); }

    bool is_zero() const { return ca == 0 && cb == 0 && cc == 0 && f.is_zero(); }

    HElement& operator+=(const HElement& o);
    HElement& operator-=(const HElement& o);
    HElement& operator*=(const Rat& s);
    bool operator==(const HElement&) const = default;
};

HElement h_mul(const HElement& u, const HElement& w);

using Assignment = std::map<int, HElement>; // generator index -> value

// Throws std::invalid_argument when a generator has no assigned value.
HElement evaluate(const Term& t, const Assignment& a);
HElement evaluate(const TermLinComb& e, const Assignment& a);
HElement evaluate(const LinComb& e, const Assignment& a);

// (uv)w - (uw)v - u(vw); identically zero iff the product is (right) Leibniz.
HElement leibniz_witness(const HElement& u, const HElement& v, const HElement& w);

// Text forms. Polynomial: "1 + 2*t + t^3" (ascending powers); element:
// "a - 1/2*b + [1 + t^2]" (zero parts omitted, zero element prints "0").
std::string format_poly(const Poly& p);
std::string format_helement(const HElement& h);
Poly poly_from_string(std::string_view text);
HElement helement_from_string(std::string_view text);

} // namespace lbz
