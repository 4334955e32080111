#include "lbz/heisenberg.hpp"

#include "lbz/errors.hpp"

#include <cctype>

namespace lbz {

// --------------------------------------------------------------------- Poly

Poly Poly::constant(const Rat& r) {
    Poly p;
    if (r != 0) p.c.push_back(r);
    return p;
}

Poly Poly::t_power(int k) {
    if (k < 0) throw InvariantViolation("negative power of t");
    Poly p;
    p.c.assign(static_cast<std::size_t>(k) + 1, Rat(0));
    p.c.back() = 1;
    return p;
}

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::derivative() const {
    Poly out;
    for (std::size_t k = 1; k < c.size(); ++k)
        out.c.push_back(Rat(static_cast<long>(k)) * c[k]);
    out.normalize();
    return out;
}

Poly Poly::times_t() const {
    if (is_zero()) return {};
    Poly out;
    out.c.reserve(c.size() + 1);
    out.c.push_back(0);
    out.c.insert(out.c.end(), c.begin(), c.end());
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size(), Rat(0));
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size(), Rat(0));
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        c.clear();
        return *this;
    }
    for (auto& x : c) x *= s;
    return *this;
}

// ----------------------------------------------------------------- HElement

HElement& HElement::operator+=(const HElement& o) {
    ca += o.ca;
    cb += o.cb;
    cc += o.cc;
    f += o.f;
    return *this;
}

HElement& HElement::operator-=(const HElement& o) {
    ca -= o.ca;
    cb -= o.cb;
    cc -= o.cc;
    f -= o.f;
    return *this;
}

HElement& HElement::operator*=(const Rat& s) {
    ca *= s;
    cb *= s;
    cc *= s;
    f *= s;
    return *this;
}

HElement h_mul(const HElement& u, const HElement& w) {
    HElement out;
    // Span part: only ab = -c and ba = c survive.
    out.cc = u.cb * w.ca - u.ca * w.cb;
    // Polynomial part: f(wa a + wb b + wc c) = wa f' + wb t f + wc f.
    if (!u.f.is_zero()) {
        if (w.ca != 0) {
            Poly d = u.f.derivative();
            d *= w.ca;
            out.f += d;
        }
        if (w.cb != 0) {
            Poly tf = u.f.times_t();
            tf *= w.cb;
            out.f += tf;
        }
        if (w.cc != 0) {
            Poly fw = u.f;
            fw *= w.cc;
            out.f += fw;
        }
    }
    return out;
}

HElement evaluate(const Term& t, const Assignment& a) {
    if (t.is_leaf()) {
        const int idx = t.generator().index;
        const auto it = a.find(idx);
        if (it == a.end())
            throw std::invalid_argument("no assignment for generator x" + std::to_string(idx));
        return it->second;
    }
    return h_mul(evaluate(t.left(), a), evaluate(t.right(), a));
}

HElement evaluate(const TermLinComb& e, const Assignment& a) {
    HElement out;
    for (const auto& [t, coeff] : e) {
        HElement v = evaluate(t, a);
        v *= coeff;
        out += v;
    }
    return out;
}

HElement evaluate(const LinComb& e, const Assignment& a) {
    HElement out;
    for (const auto& [w, coeff] : e) {
        HElement v = evaluate(word_to_term(w), a);
        v *= coeff;
        out += v;
    }
    return out;
}

HElement leibniz_witness(const HElement& u, const HElement& v, const HElement& w) {
    HElement out = h_mul(h_mul(u, v), w);
    out -= h_mul(h_mul(u, w), v);
    out -= h_mul(u, h_mul(v, w));
    return out;
}

// ----------------------------------------------------------------- printing

namespace {

void append_signed(std::string& out, bool& first, const Rat& coeff, const std::string& body) {
    const bool neg = coeff < 0;
    const Rat mag = neg ? Rat(-coeff) : coeff;
    if (first) {
        if (neg) out += '-';
        first = false;
    } else {
        out += neg ? " - " : " + ";
    }
    if (mag != 1 || body.empty()) {
        out += rat_to_string(mag);
        if (!body.empty()) out += '*';
    }
    out += body;
}

std::string t_power_text(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

} // namespace

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.c.size(); ++k) {
        if (p.c[k] == 0) continue;
        append_signed(out, first, p.c[k], t_power_text(k));
    }
    return out;
}

std::string format_helement(const HElement& h) {
    if (h.is_zero()) return "0";
    std::string out;
    bool first = true;
    if (h.ca != 0) append_signed(out, first, h.ca, "a");
    if (h.cb != 0) append_signed(out, first, h.cb, "b");
    if (h.cc != 0) append_signed(out, first, h.cc, "c");
    if (!h.f.is_zero()) {
        if (!first) out += " + ";
        out += '[';
        out += format_poly(h.f);
        out += ']';
    }
    return out;
}

// ------------------------------------------------------------------ parsing

namespace {

struct Scanner {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return s[i]; }

    Rat read_rational() {
        skip_ws();
        const std::size_t begin = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == '/') {
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        if (i == begin) throw ParseError("expected a rational", i);
        return rat_from_string(s.substr(begin, i - begin));
    }

    int read_exponent() {
        skip_ws();
        const std::size_t begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == begin) throw ParseError("expected an exponent", i);
        if (i - begin > 3) throw ParseError("exponent too large", begin);
        return std::stoi(std::string(s.substr(begin, i - begin)));
    }
};

// sign-separated sum; each item handled by `item(sign)`.
template <class Item>
void parse_sum(Scanner& sc, Item&& item) {
    bool first = true;
    for (;;) {
        sc.skip_ws();
        int sign = 1;
        if (!first) {
            if (sc.done()) break;
            if (sc.peek() == '+') {
                ++sc.i;
            } else if (sc.peek() == '-') {
                sign = -1;
                ++sc.i;
            } else {
                throw ParseError("expected '+' or '-'", sc.i);
            }
        } else if (!sc.done() && sc.peek() == '-') {
            sign = -1;
            ++sc.i;
        }
        sc.skip_ws();
        if (sc.done()) throw ParseError("dangling sign", sc.i);
        item(sign);
        first = false;
    }
}

// One polynomial summand: "5", "1/2", "t", "t^3", "2*t^4", "2t" is rejected.
void parse_poly_item(Scanner& sc, int sign, Poly& out) {
    Rat coeff = 1;
    bool have_coeff = false;
    if (sc.peek() != 't') {
        coeff = sc.read_rational();
        have_coeff = true;
        sc.skip_ws();
        if (!sc.done() && sc.peek() == '*') {
            ++sc.i;
            sc.skip_ws();
            if (sc.done() || sc.peek() != 't') throw ParseError("expected 't'", sc.i);
        } else {
            // constant summand
            Poly p = Poly::constant(coeff * sign);
            out += p;
            return;
        }
    }
    (void)have_coeff;
    ++sc.i; // consume 't'
    int exp = 1;
    sc.skip_ws();
    if (!sc.done() && sc.peek() == '^') {
        ++sc.i;
        exp = sc.read_exponent();
    }
    Poly p = Poly::t_power(exp);
    p *= coeff * sign;
    out += p;
}

} // namespace

Poly poly_from_string(std::string_view text) {
    Scanner sc{text};
    Poly out;
    if (sc.done()) throw ParseError("empty polynomial", sc.i);
    parse_sum(sc, [&](int sign) { parse_poly_item(sc, sign, out); });
    return out;
}

HElement helement_from_string(std::string_view text) {
    Scanner sc{text};
    HElement out;
    if (sc.done()) throw ParseError("empty element", sc.i);
    parse_sum(sc, [&](int sign) {
        sc.skip_ws();
        if (sc.peek() == '[') {
            const std::size_t open = sc.i;
            const std::size_t close = sc.s.find(']', open);
            if (close == std::string_view::npos) throw ParseError("unclosed '['", open);
            Poly p = poly_from_string(sc.s.substr(open + 1, close - open - 1));
            p *= sign;
            out.f += p;
            sc.i = close + 1;
            return;
        }
        Rat coeff = 1;
        if (sc.peek() != 'a' && sc.peek() != 'b' && sc.peek() != 'c') {
            coeff = sc.read_rational();
            sc.skip_ws();
            if (sc.done()) {
                // bare rational: constant polynomial part
                out.f += Poly::constant(coeff * sign);
                return;
            }
            if (sc.peek() == '*') {
                ++sc.i;
                sc.skip_ws();
            } else {
                out.f += Poly::constant(coeff * sign);
                return;
            }
        }
        if (sc.done()) throw ParseError("expected a, b, c or '['", sc.i);
        const char which = sc.peek();
        if (which == '[') {
            const std::size_t open = sc.i;
            const std::size_t close = sc.s.find(']', open);
            if (close == std::string_view::npos) throw ParseError("unclosed '['", open);
            Poly p = poly_from_string(sc.s.substr(open + 1, close - open - 1));
            p *= coeff * sign;
            out.f += p;
            sc.i = close + 1;
            return;
        }
        if (which != 'a' && which != 'b' && which != 'c')
            throw ParseError("expected a, b, c or '['", sc.i);
        ++sc.i;
        const Rat v = coeff * sign;
        if (which == 'a') out.ca += v;
        if (which == 'b') out.cb += v;
        if (which == 'c') out.cc += v;
    });
    return out;
}

} // namespace lbz
