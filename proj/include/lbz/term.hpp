#pragma once

#include "lbz/errors.hpp"
#include "lbz/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lbz {

struct Generator {
    int index; // >= 1
    auto operator<=>(const Generator&) const = default;
};

// Nonassociative monomial over generators: a full binary tree whose leaves
// are generators. Immutable; copies share structure.
class Term {
public:
    explicit Term(Generator g);
    Term(const Term& lhs, const Term& rhs); // product lhs * rhs

    bool is_leaf() const { return node_->gen != 0; }
    Generator generator() const; // pre: is_leaf()
    Term left() const;           // pre: !is_leaf()
    Term right() const;          // pre: !is_leaf()
    int degree() const { return node_->degree; }

    bool operator==(const Term& other) const { return compare(other) == 0; }
    bool operator<(const Term& other) const { return compare(other) < 0; }

    // Structural order: by degree, then leaves before products, then
    // generator index / children lexicographically.
    int compare(const Term& other) const;

private:
    struct Node {
        int degree;
        int gen; // generator index if leaf, 0 otherwise
        std::shared_ptr<const Node> left, right;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Left-normed word x_{l1} x_{l2} ... x_{lk} = (...((x_{l1} x_{l2}) x_{l3})...).
struct LeftNormedWord {
    std::vector<int> letters; // generator indices, nonempty
    int degree() const { return static_cast<int>(letters.size()); }
    auto operator<=>(const LeftNormedWord&) const = default;
};

Term word_to_term(const LeftNormedWord& w);

// Formal Q-linear combination with no explicitly stored zero coefficients.
template <class Key>
class LinearCombination {
public:
    using Map = std::map<Key, Rat>;

    LinearCombination() = default;
    LinearCombination(std::initializer_list<std::pair<Key, Rat>> init) {
        for (const auto& [k, c] : init) add(k, c);
    }

    void add(const Key& k, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    const Rat* find(const Key& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? nullptr : &it->second;
    }

    LinearCombination& operator+=(const LinearCombination& other) {
        for (const auto& [k, c] : other.coeffs_) add(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& other) {
        for (const auto& [k, c] : other.coeffs_) add(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Rat& s) {
        if (s == 0) { coeffs_.clear(); return *this; }
        for (auto& [k, c] : coeffs_) c *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { a += b; return a; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { a -= b; return a; }
    friend LinearCombination operator*(const Rat& s, LinearCombination a) { a *= s; return a; }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    bool operator==(const LinearCombination&) const = default;

    auto begin() const { return coeffs_.begin(); }
    auto end() const { return coeffs_.end(); }

private:
    Map coeffs_;
};

using LinComb = LinearCombination<LeftNormedWord>;         // left-normed basis
using TermLinComb = LinearCombination<Term>;               // free nonassociative

// Grammar: term := factor {factor}; factor := generator | "(" term ")";
// generator := "x" digits (index >= 1). Juxtaposition associates left,
// whitespace is insignificant. Throws ParseError with a byte position.
Term parse_term(std::string_view text);

// Minimal parentheses: left-normed chains print bracket-free.
std::string format_term(const Term& t);
std::string format_word(const LeftNormedWord& w);

// Signed sum "c1 * w1 + c2 * w2 - ...": unit coefficients elide the "c *",
// terms ordered by the word/term ordering. Empty combination prints "0".
std::string format_lincomb(const LinComb& e);
std::string format_lincomb(const TermLinComb& e);

// Expansion in the left-normed basis of the free Leibniz algebra, by
// u(pq) -> (up)q - (uq)p. Exact; the right factor's degree drops, so the
// rewriting terminates.
LinComb leibniz_reduce(const Term& t);
LinComb reduce_lincomb(const TermLinComb& e);

// Product of two left-normed words, expanded in the left-normed basis.
LinComb word_product(const LeftNormedWord& u, const LeftNormedWord& v);

// Generator multidegree of a monomial / of every monomial.
std::map<int, int> multidegree(const Term& t);

// True when every monomial's multidegree is exactly {1:1, ..., n:1}.
bool is_multilinear(const TermLinComb& e, int n);
bool is_multilinear(const LinComb& e, int n);

// Splits into multihomogeneous components and fully polarizes each: a
// variable of degree d is replaced by d fresh variables summed over all d!
// placements. Output components are relabeled to x1..x_deg (original
// variables in increasing order, each expanding to a consecutive block).
// Multilinear components pass through up to that relabeling. Components are
// ordered by multidegree.
std::vector<TermLinComb> multilinearize(const TermLinComb& e);

// Alternating sum over all permutations of `gens` of left-normed words.
TermLinComb standard_polynomial(const std::vector<Generator>& gens);

// Alternates `t` over the variables in `vars`: sum of sgn(s) * t[v_i -> v_{s(i)}].
// Every variable of `vars` must appear in `t`.
TermLinComb skew_symmetrize(const Term& t, const std::set<Generator>& vars);

} // namespace lbz
