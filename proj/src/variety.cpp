#include "lbz/variety.hpp"

#include "lbz/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace lbz {

// ----------------------------------------------------------------- builtins

namespace {

TermLinComb single_term(const char* text) {
    TermLinComb e;
    e.add(parse_term(text), 1);
    return e;
}

} // namespace

VarietySpec builtin_variety(const std::string& name) {
    std::string low;
    for (char ch : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    VarietySpec v;
    v.name = low;
    if (low == "free") return v;
    if (low == "abelian") {
        v.identities.push_back({"product", single_term("x1x2")});
        return v;
    }
    if (low == "v1tilde") {
        v.identities.push_back({"two-brackets", single_term("x1(x2x3)(x4x5)")});
        return v;
    }
    if (low == "v3tilde") {
        v.identities.push_back({"right-bracket", single_term("x1(x2(x3x4))")});
        // Exchange of bracket pairs: x1(x2x5)(x3x4) = x1(x2x4)(x3x5) - x1(x2x3)(x4x5).
        TermLinComb ex;
        ex.add(parse_term("x1(x2x5)(x3x4)"), 1);
        ex.add(parse_term("x1(x2x4)(x3x5)"), -1);
        ex.add(parse_term("x1(x2x3)(x4x5)"), 1);
        v.identities.push_back({"pair-exchange", ex});
        return v;
    }
    if (low.size() > 3 && low.compare(0, 3, "nsa") == 0 &&
        std::all_of(low.begin() + 3, low.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const int s = std::stoi(low.substr(3));
        if (s >= 1 && s <= 6) {
            Term acc(Term(Term(Generator{1}), Term(Generator{2})),
                     Term(Term(Generator{3}), Term(Generator{4})));
            for (int i = 2; i <= s; ++i)
                acc = Term(acc, Term(Term(Generator{2 * i + 1}), Term(Generator{2 * i + 2})));
            TermLinComb e;
            e.add(acc, 1);
            v.identities.push_back({"bracket-chain", e});
            return v;
        }
    }
    throw UnknownVarietyError("unknown variety: " + name);
}

// ---------------------------------------------------------- word <-> column

int column_of_word(const LeftNormedWord& w) { return lehmer_rank(w.letters); }

LeftNormedWord word_of_column(int col, int n) { return LeftNormedWord{lehmer_unrank(col, n)}; }

SparseVec vectorize(const LinComb& e, int n) {
    if (!is_multilinear(e, n))
        throw InvariantViolation("vectorize requires a multilinear combination");
    SparseVec v;
    for (const auto& [w, c] : e) v.entries.emplace_back(column_of_word(w), c);
    std::sort(v.entries.begin(), v.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

LinComb devectorize(const SparseVec& v, int n) {
    LinComb e;
    for (const auto& [col, c] : v.entries) e.add(word_of_column(col, n), c);
    return e;
}

// ------------------------------------------------------------ quotient data

namespace {

// Left-normed expansion of t with word blocks substituted for generators.
LinComb substitute_reduce(const Term& t, const std::vector<LeftNormedWord>& blocks) {
    if (t.is_leaf()) {
        const int idx = t.generator().index;
        if (idx < 1 || idx > static_cast<int>(blocks.size()))
            throw InvariantViolation("substitution block out of range");
        LinComb out;
        out.add(blocks[static_cast<std::size_t>(idx - 1)], 1);
        return out;
    }
    const LinComb lhs = substitute_reduce(t.left(), blocks);
    const LinComb rhs = substitute_reduce(t.right(), blocks);
    LinComb out;
    for (const auto& [wl, cl] : lhs)
        for (const auto& [wr, cr] : rhs) {
            LinComb p = word_product(wl, wr);
            p *= cl * cr;
            out += p;
        }
    return out;
}

void compositions_rec(int total, int parts, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        acc.push_back(total);
        out.push_back(acc);
        acc.pop_back();
        return;
    }
    for (int first = 1; first <= total - parts + 1; ++first) {
        acc.push_back(first);
        compositions_rec(total - first, parts - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts < 1 || parts > total) return out;
    std::vector<int> acc;
    compositions_rec(total, parts, acc, out);
    return out;
}

} // namespace

QuotientCache::QuotientCache(VarietySpec v, int max_n)
    : variety_(std::move(v)), max_n_(max_n) {
    if (max_n_ < 1) throw std::invalid_argument("max_n must be >= 1");
    if (max_n_ > kHardMaxN)
        throw ResourceBoundError("degree bound " + std::to_string(max_n_) +
                                 " exceeds the hard cap " + std::to_string(kHardMaxN));
    for (const Identity& id : variety_.identities)
        for (TermLinComb& comp : multilinearize(id.element)) {
            if (comp.is_zero()) continue;
            const int deg = comp.begin()->first.degree();
            components_.emplace_back(deg, std::move(comp));
        }
}

const MultilinearQuotient& QuotientCache::at(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (n > max_n_)
        throw ResourceBoundError("degree " + std::to_string(n) + " exceeds bound " +
                                 std::to_string(max_n_));
    extend_to(n);
    return levels_[static_cast<std::size_t>(n - 1)];
}

void QuotientCache::extend_to(int n) {
    while (static_cast<int>(levels_.size()) < n) {
        const int d = static_cast<int>(levels_.size()) + 1;
        const int cols = static_cast<int>(factorial(d));
        EchelonBasis eb(cols);

        // Single-letter closure of the previous level, over every support of
        // size d-1 inside {1..d} (the component is stable under the order
        // isomorphism relabeling a T-ideal is closed under).
        if (d >= 2) {
            for (int y = 1; y <= d; ++y) {
                for (const SparseVec& row : last_rows_) {
                    SparseVec appended;
                    LinComb prepended;
                    for (const auto& [col, coeff] : row.entries) {
                        std::vector<int> w = lehmer_unrank(col, d - 1);
                        for (int& l : w)
                            if (l >= y) ++l;
                        std::vector<int> wy = w;
                        wy.push_back(y);
                        appended.entries.emplace_back(lehmer_rank(wy), coeff);
                        LinComb p = word_product(LeftNormedWord{{y}}, LeftNormedWord{w});
                        p *= coeff;
                        prepended += p;
                    }
                    std::sort(appended.entries.begin(), appended.entries.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    eb.insert(appended);
                    eb.insert(vectorize(prepended, d));
                }
            }
        }

        // Fresh substitution instances of every component at degree exactly d:
        // ordered word blocks partitioning {1..d}.
        for (const auto& [k, comp] : components_) {
            if (k > d) continue;
            const auto comps = compositions(d, k);
            std::vector<int> perm(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
            do {
                for (const auto& sizes : comps) {
                    std::vector<LeftNormedWord> blocks;
                    blocks.reserve(sizes.size());
                    std::size_t pos = 0;
                    for (int sz : sizes) {
                        LeftNormedWord b;
                        b.letters.assign(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                                         perm.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(sz)));
                        pos += static_cast<std::size_t>(sz);
                        blocks.push_back(std::move(b));
                    }
                    LinComb inst;
                    for (const auto& [t, c] : comp) {
                        LinComb part = substitute_reduce(t, blocks);
                        part *= c;
                        inst += part;
                    }
                    if (!inst.is_zero()) eb.insert(vectorize(inst, d));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        MultilinearQuotient q;
        q.n = d;
        q.ideal = eb.to_subspace();
        q.basis_cols = q.ideal.complement_columns();
        levels_.push_back(std::move(q));
        last_rows_ = eb.row_basis();
    }
}

MultilinearQuotient tideal_multilinear(const VarietySpec& v, int n, int max_n) {
    QuotientCache cache(v, max_n);
    return cache.at(n);
}

// -------------------------------------------------------------- is_identity

bool is_identity(QuotientCache& cache, const TermLinComb& f) {
    for (const TermLinComb& comp : multilinearize(f)) {
        if (comp.is_zero()) continue;
        const int deg = comp.begin()->first.degree();
        const LinComb red = reduce_lincomb(comp);
        if (red.is_zero()) continue;
        const MultilinearQuotient& q = cache.at(deg);
        if (!q.ideal.contains(vectorize(red, deg))) return false;
    }
    return true;
}

bool is_identity(const VarietySpec& v, const TermLinComb& f, int max_n) {
    QuotientCache cache(v, max_n);
    return is_identity(cache, f);
}

// ------------------------------------------------------------ condition (3)

namespace {

LeftNormedWord condition3_word(int j, int m) {
    // x y^j z y^(m-j) on x=1, y=2, z=3
    LeftNormedWord w;
    w.letters.push_back(1);
    for (int i = 0; i < j; ++i) w.letters.push_back(2);
    w.letters.push_back(3);
    for (int i = 0; i < m - j; ++i) w.letters.push_back(2);
    return w;
}

// Full polarization of condition3_word(j): y occurrences take the fresh
// indices 2..m+1 in every order; x -> 1, z -> m+2. Matches the canonical
// relabeling multilinearize() applies to the same element.
LinComb condition3_polarized(int j, int m) {
    std::vector<int> fresh(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) fresh[static_cast<std::size_t>(i)] = 2 + i;
    const LeftNormedWord base = condition3_word(j, m);
    LinComb out;
    std::sort(fresh.begin(), fresh.end());
    do {
        LeftNormedWord w;
        std::size_t next_y = 0;
        for (int l : base.letters) {
            if (l == 1) {
                w.letters.push_back(1);
            } else if (l == 3) {
                w.letters.push_back(m + 2);
            } else {
                w.letters.push_back(fresh[next_y++]);
            }
        }
        out.add(w, 1);
    } while (std::next_permutation(fresh.begin(), fresh.end()));
    return out;
}

void validate_condition3_args(int k, int m) {
    if (k < 1 || m < k) throw std::invalid_argument("need 1 <= k <= m");
}

} // namespace

TermLinComb condition3_element(int k, int m, const std::vector<Rat>& alphas) {
    validate_condition3_args(k, m);
    if (static_cast<int>(alphas.size()) != k)
        throw std::invalid_argument("expected k coefficients");
    TermLinComb e;
    e.add(word_to_term(condition3_word(k, m)), 1);
    for (int i = 1; i <= k; ++i)
        e.add(word_to_term(condition3_word(k - i, m)), -alphas[static_cast<std::size_t>(i - 1)]);
    return e;
}

bool check_condition_3(QuotientCache& cache, int k, int m, const std::vector<Rat>& alphas) {
    return is_identity(cache, condition3_element(k, m, alphas));
}

bool check_condition_3(const VarietySpec& v, int k, int m, const std::vector<Rat>& alphas,
                       int max_n) {
    QuotientCache cache(v, max_n);
    return check_condition_3(cache, k, m, alphas);
}

std::optional<std::vector<Rat>> solve_condition_3(QuotientCache& cache, int k, int m) {
    validate_condition3_args(k, m);
    const int n = m + 2;
    const MultilinearQuotient& q = cache.at(n);

    std::vector<SparseVec> residuals; // index 0: LHS, then RHS_1..RHS_k
    residuals.push_back(q.ideal.reduce(vectorize(condition3_polarized(k, m), n)));
    for (int i = 1; i <= k; ++i)
        residuals.push_back(q.ideal.reduce(vectorize(condition3_polarized(k - i, m), n)));

    // Coordinatewise equations sum_i alpha_i RHS_i[c] = LHS[c], solved by RREF
    // of the k+1 column augmented system.
    std::map<int, std::vector<Rat>> equations;
    auto row_for = [&](int c) -> std::vector<Rat>& {
        auto [it, fresh] = equations.try_emplace(c, std::vector<Rat>(static_cast<std::size_t>(k) + 1, Rat(0)));
        (void)fresh;
        return it->second;
    };
    for (int i = 1; i <= k; ++i)
        for (const auto& [c, x] : residuals[static_cast<std::size_t>(i)].entries)
            row_for(c)[static_cast<std::size_t>(i - 1)] = x;
    for (const auto& [c, x] : residuals[0].entries) row_for(c)[static_cast<std::size_t>(k)] = x;

    EchelonBasis eb(k + 1);
    for (const auto& [c, row] : equations) {
        (void)c;
        eb.insert(sparse_from_dense(row));
    }
    const Subspace s = eb.to_subspace();
    if (s.pivot_row(k) >= 0) return std::nullopt; // pivot in the augmented column
    std::vector<Rat> alpha(static_cast<std::size_t>(k), Rat(0));
    for (const SparseVec& row : s.rows()) {
        const int p = row.entries.front().first;
        for (const auto& [c, x] : row.entries)
            if (c == k) alpha[static_cast<std::size_t>(p)] = x;
    }
    return alpha;
}

std::optional<std::vector<Rat>> solve_condition_3(const VarietySpec& v, int k, int m, int max_n) {
    QuotientCache cache(v, max_n);
    return solve_condition_3(cache, k, m);
}

} // namespace lbz
