#include "lbz/theta.hpp"

#include "lbz/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lbz {

bool ThetaElement::valid() const {
    if (n < 1 || head < 1 || head > n) return false;
    if (static_cast<int>(pairs.size() * 2 + singles.size()) + 1 != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    auto mark = [&](int v) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
        return true;
    };
    if (!mark(head)) return false;
    int prev_i = 0, prev_j = 0;
    for (const auto& [i, j] : pairs) {
        if (i >= j) return false;
        if (i <= prev_i || j <= prev_j) return false;
        prev_i = i;
        prev_j = j;
        if (!mark(i) || !mark(j)) return false;
    }
    int prev_k = 0;
    for (int k : singles) {
        if (k <= prev_k) return false;
        prev_k = k;
        if (!mark(k)) return false;
    }
    return true;
}

bool ThetaElement::operator<(const ThetaElement& o) const {
    if (n != o.n) return n < o.n;
    if (pairs.size() != o.pairs.size()) return pairs.size() < o.pairs.size();
    if (head != o.head) return head < o.head;
    if (pairs != o.pairs) return pairs < o.pairs;
    return singles < o.singles;
}

namespace {

// All sets of disjoint pairs on `avail` (sorted) whose i- and j-sequences
// both increase. The smallest remaining element is forced to open the next
// pair; the partner must exceed the previous partner.
void match_pairs(std::vector<int>& avail, int prev_j,
                 std::vector<std::pair<int, int>>& acc,
                 std::vector<std::vector<std::pair<int, int>>>& out) {
    if (avail.empty()) {
        out.push_back(acc);
        return;
    }
    const int i = avail.front();
    for (std::size_t k = 1; k < avail.size(); ++k) {
        const int j = avail[k];
        if (j <= prev_j) continue;
        std::vector<int> rest;
        rest.reserve(avail.size() - 2);
        for (std::size_t t = 1; t < avail.size(); ++t)
            if (t != k) rest.push_back(avail[t]);
        acc.emplace_back(i, j);
        match_pairs(rest, j, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<ThetaElement> enumerate_theta(int n) {
    if (n < 1) throw InvariantViolation("degree must be >= 1");
    std::vector<ThetaElement> out;
    for (int m = 0; 2 * m + 1 <= n; ++m) {
        for (int head = 1; head <= n; ++head) {
            std::vector<int> rest;
            for (int v = 1; v <= n; ++v)
                if (v != head) rest.push_back(v);
            // choose which 2m of `rest` are paired
            std::vector<int> mask(rest.size(), 0);
            std::fill(mask.begin(), mask.begin() + 2 * m, 1);
            // iterate subsets in a stable order via prev_permutation on mask
            std::vector<std::vector<int>> subsets;
            do {
                std::vector<int> sel;
                for (std::size_t k = 0; k < rest.size(); ++k)
                    if (mask[k]) sel.push_back(rest[k]);
                subsets.push_back(std::move(sel));
            } while (std::prev_permutation(mask.begin(), mask.end()));
            for (auto& sel : subsets) {
                std::vector<std::vector<std::pair<int, int>>> matchings;
                std::vector<std::pair<int, int>> acc;
                match_pairs(sel, 0, acc, matchings);
                for (auto& pr : matchings) {
                    ThetaElement t;
                    t.n = n;
                    t.head = head;
                    t.pairs = std::move(pr);
                    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
                    used[static_cast<std::size_t>(head)] = true;
                    for (const auto& [i, j] : t.pairs) {
                        used[static_cast<std::size_t>(i)] = true;
                        used[static_cast<std::size_t>(j)] = true;
                    }
                    for (int v = 1; v <= n; ++v)
                        if (!used[static_cast<std::size_t>(v)]) t.singles.push_back(v);
                    out.push_back(std::move(t));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Term theta_to_term(const ThetaElement& t) {
    if (!t.valid()) throw InvariantViolation("malformed theta element");
    Term acc{Generator{t.head}};
    for (const auto& [i, j] : t.pairs)
        acc = Term(acc, Term(Term(Generator{i}), Term(Generator{j})));
    for (int k : t.singles) acc = Term(acc, Term(Generator{k}));
    return acc;
}

LinComb theta_to_lincomb(const ThetaElement& t) { return leibniz_reduce(theta_to_term(t)); }

std::string format_theta(const ThetaElement& t) {
    std::string out = "theta(" + std::to_string(t.head) + "; ";
    for (const auto& [i, j] : t.pairs)
        out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    out += "; ";
    for (std::size_t k = 0; k < t.singles.size(); ++k) {
        if (k) out += ", ";
        out += std::to_string(t.singles[k]);
    }
    out += ")";
    return out;
}

namespace {

struct ThetaScanner {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    }
    bool try_consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    int read_int() {
        skip_ws();
        const std::size_t begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == begin) throw ParseError("expected an index", i);
        if (i - begin > 8) throw ParseError("index too large", begin);
        return std::stoi(std::string(s.substr(begin, i - begin)));
    }
};

} // namespace

ThetaElement parse_theta(std::string_view text) {
    ThetaScanner sc{text};
    sc.skip_ws();
    constexpr std::string_view kw = "theta";
    if (sc.s.substr(sc.i, kw.size()) != kw)
        throw ParseError("expected 'theta'", sc.i);
    sc.i += kw.size();
    sc.expect('(');
    ThetaElement t;
    t.head = sc.read_int();
    sc.expect(';');
    while (sc.try_consume('(')) {
        const int a = sc.read_int();
        sc.expect(',');
        const int b = sc.read_int();
        sc.expect(')');
        t.pairs.emplace_back(a, b);
    }
    sc.expect(';');
    sc.skip_ws();
    if (sc.i < sc.s.size() && sc.s[sc.i] != ')') {
        t.singles.push_back(sc.read_int());
        while (sc.try_consume(',')) t.singles.push_back(sc.read_int());
    }
    sc.expect(')');
    sc.skip_ws();
    if (sc.i != sc.s.size()) throw ParseError("trailing characters", sc.i);
    t.n = 1 + 2 * t.m() + static_cast<int>(t.singles.size());
    if (!t.valid()) throw ParseError("not a valid theta element", 0);
    return t;
}

Assignment theorem2_assignment(const ThetaElement& t, int fdeg) {
    if (!t.valid()) throw InvariantViolation("malformed theta element");
    if (fdeg < t.n) throw std::invalid_argument("fdeg must be >= n");
    Assignment a;
    a[t.head] = HElement::t_power(fdeg);
    for (const auto& [i, j] : t.pairs) {
        a[i] = HElement::a();
        a[j] = HElement::b();
    }
    for (int k : t.singles) a[k] = HElement::c();
    return a;
}

} // namespace lbz
