#include "lbz/term.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace lbz {

// ---------------------------------------------------------------- rationals

Rat rat_from_string(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    const std::size_t start = i;
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw ParseError("expected digits in rational", i);
    const std::string num(text.substr(num_begin, i - num_begin));
    std::string den = "1";
    if (i < n && text[i] == '/') {
        ++i;
        const std::size_t den_begin = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) throw ParseError("expected denominator digits", i);
        den.assign(text.substr(den_begin, i - den_begin));
    }
    skip_ws();
    if (i != n) throw ParseError("trailing characters after rational", i);
    const mpz_class num_z(num), den_z(den);
    if (den_z == 0) throw ParseError("zero denominator", start);
    Rat r(num_z, den_z);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

// --------------------------------------------------------------------- Term

Term::Term(Generator g) {
    if (g.index < 1) throw InvariantViolation("generator index must be >= 1");
    node_ = std::make_shared<Node>(Node{1, g.index, nullptr, nullptr});
}

Term::Term(const Term& lhs, const Term& rhs) {
    node_ = std::make_shared<Node>(
        Node{lhs.degree() + rhs.degree(), 0, lhs.node_, rhs.node_});
}

Generator Term::generator() const {
    if (!is_leaf()) throw InvariantViolation("generator() called on a product");
    return Generator{node_->gen};
}

Term Term::left() const {
    if (is_leaf()) throw InvariantViolation("left() called on a generator");
    return Term(node_->left);
}

Term Term::right() const {
    if (is_leaf()) throw InvariantViolation("right() called on a generator");
    return Term(node_->right);
}

int Term::compare(const Term& other) const {
    struct Rec {
        static int go(const Node* a, const Node* b) {
            if (a == b) return 0;
            if (a->degree != b->degree) return a->degree < b->degree ? -1 : 1;
            const bool leaf_a = a->gen != 0, leaf_b = b->gen != 0;
            if (leaf_a != leaf_b) return leaf_a ? -1 : 1;
            if (leaf_a) return a->gen < b->gen ? -1 : (a->gen > b->gen ? 1 : 0);
            if (int c = go(a->left.get(), b->left.get()); c != 0) return c;
            return go(a->right.get(), b->right.get());
        }
    };
    return Rec::go(node_.get(), other.node_.get());
}

Term word_to_term(const LeftNormedWord& w) {
    if (w.letters.empty()) throw InvariantViolation("empty word");
    Term t{Generator{w.letters.front()}};
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        t = Term(t, Term(Generator{w.letters[i]}));
    return t;
}

// ------------------------------------------------------------------- parser

namespace {

struct TermParser {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    Term parse_sequence() {
        std::optional<Term> acc;
        for (;;) {
            skip_ws();
            if (i >= s.size() || s[i] == ')') break;
            Term f = parse_factor();
            acc = acc ? Term(*acc, f) : f;
        }
        if (!acc) throw ParseError("expected a generator or '('", i);
        return *acc;
    }

    Term parse_factor() {
        if (s[i] == '(') {
            const std::size_t open = i;
            ++i;
            Term inner = parse_sequence();
            skip_ws();
            if (i >= s.size() || s[i] != ')')
                throw ParseError("unclosed '('", open);
            ++i;
            return inner;
        }
        if (s[i] == 'x') {
            ++i;
            const std::size_t digits = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == digits)
                throw ParseError("expected generator index after 'x'", i);
            if (i - digits > 8)
                throw ParseError("generator index too large", digits);
            const int idx = std::stoi(std::string(s.substr(digits, i - digits)));
            if (idx < 1) throw ParseError("generator index must be >= 1", digits);
            return Term(Generator{idx});
        }
        throw ParseError("expected a generator or '('", i);
    }
};

} // namespace

Term parse_term(std::string_view text) {
    TermParser p{text};
    Term t = p.parse_sequence();
    p.skip_ws();
    if (p.i != text.size()) throw ParseError("unexpected ')'", p.i);
    return t;
}

// ----------------------------------------------------------------- printing

namespace {

void format_term_rec(const Term& t, std::string& out) {
    if (t.is_leaf()) {
        out += 'x';
        out += std::to_string(t.generator().index);
        return;
    }
    format_term_rec(t.left(), out);
    const Term r = t.right();
    if (r.is_leaf()) {
        format_term_rec(r, out);
    } else {
        out += '(';
        format_term_rec(r, out);
        out += ')';
    }
}

template <class Comb, class KeyFormat>
std::string format_comb(const Comb& e, KeyFormat&& fmt_key) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : e) {
        const bool neg = coeff < 0;
        const Rat mag = neg ? Rat(-coeff) : coeff;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) {
            out += rat_to_string(mag);
            out += " * ";
        }
        out += fmt_key(key);
    }
    return out;
}

} // namespace

std::string format_term(const Term& t) {
    std::string out;
    format_term_rec(t, out);
    return out;
}

std::string format_word(const LeftNormedWord& w) {
    std::string out;
    for (int l : w.letters) {
        out += 'x';
        out += std::to_string(l);
    }
    return out;
}

std::string format_lincomb(const LinComb& e) {
    return format_comb(e, [](const LeftNormedWord& w) { return format_word(w); });
}

std::string format_lincomb(const TermLinComb& e) {
    return format_comb(e, [](const Term& t) { return format_term(t); });
}

// ------------------------------------------------------- Leibniz reduction

LinComb word_product(const LeftNormedWord& u, const LeftNormedWord& v) {
    LinComb out;
    if (v.letters.size() == 1) {
        LeftNormedWord w = u;
        w.letters.push_back(v.letters.front());
        out.add(w, 1);
        return out;
    }
    // u(v'z) = (uv')z - (uz)v' with z the last letter of v.
    LeftNormedWord head = v;
    const int z = head.letters.back();
    head.letters.pop_back();
    for (const auto& [w, c] : word_product(u, head)) {
        LeftNormedWord wz = w;
        wz.letters.push_back(z);
        out.add(wz, c);
    }
    LeftNormedWord uz = u;
    uz.letters.push_back(z);
    out -= word_product(uz, head);
    return out;
}

LinComb leibniz_reduce(const Term& t) {
    if (t.is_leaf()) {
        LinComb out;
        out.add(LeftNormedWord{{t.generator().index}}, 1);
        return out;
    }
    const LinComb lhs = leibniz_reduce(t.left());
    const LinComb rhs = leibniz_reduce(t.right());
    LinComb out;
    for (const auto& [wl, cl] : lhs)
        for (const auto& [wr, cr] : rhs) {
            LinComb prod = word_product(wl, wr);
            prod *= cl * cr;
            out += prod;
        }
    return out;
}

LinComb reduce_lincomb(const TermLinComb& e) {
    LinComb out;
    for (const auto& [t, c] : e) {
        LinComb r = leibniz_reduce(t);
        r *= c;
        out += r;
    }
    return out;
}

// ------------------------------------------------------------ multidegrees

namespace {

void collect_degrees(const Term& t, std::map<int, int>& deg) {
    if (t.is_leaf()) {
        ++deg[t.generator().index];
        return;
    }
    collect_degrees(t.left(), deg);
    collect_degrees(t.right(), deg);
}

} // namespace

std::map<int, int> multidegree(const Term& t) {
    std::map<int, int> deg;
    collect_degrees(t, deg);
    return deg;
}

bool is_multilinear(const TermLinComb& e, int n) {
    for (const auto& [t, c] : e) {
        (void)c;
        if (t.degree() != n) return false;
        const auto deg = multidegree(t);
        if (static_cast<int>(deg.size()) != n) return false;
        for (const auto& [v, d] : deg)
            if (v < 1 || v > n || d != 1) return false;
    }
    return true;
}

bool is_multilinear(const LinComb& e, int n) {
    for (const auto& [w, c] : e) {
        (void)c;
        if (w.degree() != n) return false;
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int l : w.letters) {
            if (l < 1 || l > n || seen[static_cast<std::size_t>(l)]) return false;
            seen[static_cast<std::size_t>(l)] = true;
        }
    }
    return true;
}

// ----------------------------------------------------------- polarization

namespace {

// Rebuilds t replacing the o-th left-to-right occurrence of variable v by the
// generator fresh[v][o].
Term substitute_occurrences(const Term& t,
                            const std::map<int, std::vector<int>>& fresh,
                            std::map<int, int>& counter) {
    if (t.is_leaf()) {
        const int v = t.generator().index;
        const auto it = fresh.find(v);
        if (it == fresh.end()) return t;
        const int o = counter[v]++;
        return Term(Generator{it->second[static_cast<std::size_t>(o)]});
    }
    Term l = substitute_occurrences(t.left(), fresh, counter);
    Term r = substitute_occurrences(t.right(), fresh, counter);
    return Term(l, r);
}

} // namespace

std::vector<TermLinComb> multilinearize(const TermLinComb& e) {
    // Group by multidegree; each group polarizes independently.
    std::map<std::map<int, int>, TermLinComb> groups;
    for (const auto& [t, c] : e) groups[multidegree(t)].add(t, c);

    std::vector<TermLinComb> out;
    for (const auto& [mdeg, comp] : groups) {
        // Fresh blocks: variables ascending, variable of degree d gets the
        // next d indices.
        std::vector<std::pair<int, int>> vars(mdeg.begin(), mdeg.end());
        std::map<int, int> block_start;
        int next = 1;
        for (const auto& [v, d] : vars) {
            block_start[v] = next;
            next += d;
        }
        // All per-variable placements of occurrences on fresh indices.
        std::vector<std::vector<std::vector<int>>> placements;
        for (const auto& [v, d] : vars) {
            std::vector<int> ids(static_cast<std::size_t>(d));
            for (int k = 0; k < d; ++k)
                ids[static_cast<std::size_t>(k)] = block_start[v] + k;
            std::vector<std::vector<int>> perms;
            std::sort(ids.begin(), ids.end());
            do perms.push_back(ids);
            while (std::next_permutation(ids.begin(), ids.end()));
            placements.push_back(std::move(perms));
        }
        TermLinComb pol;
        for (const auto& [t, c] : comp) {
            std::vector<std::size_t> odo(vars.size(), 0);
            for (;;) {
                std::map<int, std::vector<int>> fresh;
                for (std::size_t k = 0; k < vars.size(); ++k)
                    fresh[vars[k].first] = placements[k][odo[k]];
                std::map<int, int> counter;
                pol.add(substitute_occurrences(t, fresh, counter), c);
                std::size_t k = 0;
                while (k < odo.size() && ++odo[k] == placements[k].size()) {
                    odo[k] = 0;
                    ++k;
                }
                if (k == odo.size()) break;
            }
        }
        out.push_back(std::move(pol));
    }
    return out;
}

// ------------------------------------------------- alternating constructs

namespace {

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Term relabel(const Term& t, const std::map<int, int>& map) {
    if (t.is_leaf()) {
        const int v = t.generator().index;
        const auto it = map.find(v);
        return it == map.end() ? t : Term(Generator{it->second});
    }
    return Term(relabel(t.left(), map), relabel(t.right(), map));
}

} // namespace

TermLinComb standard_polynomial(const std::vector<Generator>& gens) {
    if (gens.empty()) throw InvariantViolation("standard_polynomial of no generators");
    std::vector<int> pos(gens.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<int>(i);
    TermLinComb out;
    std::sort(pos.begin(), pos.end());
    do {
        LeftNormedWord w;
        for (int p : pos) w.letters.push_back(gens[static_cast<std::size_t>(p)].index);
        out.add(word_to_term(w), permutation_sign(pos));
    } while (std::next_permutation(pos.begin(), pos.end()));
    return out;
}

TermLinComb skew_symmetrize(const Term& t, const std::set<Generator>& vars) {
    if (vars.empty()) throw std::invalid_argument("skew_symmetrize over no variables");
    const auto deg = multidegree(t);
    for (const Generator& g : vars)
        if (!deg.contains(g.index))
            throw std::invalid_argument("skew_symmetrize variable missing from term");
    std::vector<int> base;
    for (const Generator& g : vars) base.push_back(g.index);
    std::vector<int> image = base;
    TermLinComb out;
    do {
        std::map<int, int> map;
        for (std::size_t i = 0; i < base.size(); ++i) map[base[i]] = image[i];
        out.add(relabel(t, map), permutation_sign(image));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

} // namespace lbz
