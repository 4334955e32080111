#pragma once

#include "lbz/linalg.hpp"
#include "lbz/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lbz {

struct Identity {
    std::string name; // may be empty
    TermLinComb element;
};

struct VarietySpec {
    std::string name;
    std::vector<Identity> identities; // empty list: the free algebra
};

inline constexpr int kDefaultMaxN = 6;
inline constexpr int kHardMaxN = 7;

// Builtins: "free", "abelian", "nsa<s>" (s >= 1, product of s+1 brackets),
// "v1tilde" (x1(x2x3)(x4x5)), "v3tilde" (x1(x2(x3x4)) together with the
// bracket-pair exchange identity). Case-insensitive; throws
// UnknownVarietyError otherwise.
VarietySpec builtin_variety(const std::string& name);

// Multilinear words of degree n are permutation words over {1..n}; columns
// are their lexicographic ranks.
int column_of_word(const LeftNormedWord& w);
LeftNormedWord word_of_column(int col, int n);
SparseVec vectorize(const LinComb& e, int n); // pre: is_multilinear(e, n)
LinComb devectorize(const SparseVec& v, int n);

// Degree-n multilinear component of the T-ideal of v, and its quotient data.
struct MultilinearQuotient {
    int n = 0;
    Subspace ideal;              // RREF in the word basis, cols = n!
    std::vector<int> basis_cols; // non-pivot columns: surviving basis words
    int dimension() const { return static_cast<int>(basis_cols.size()); }
};

// Levelwise construction of the multilinear components of the T-ideal, kept
// incrementally so repeated queries share work. For support {1..d} the
// component is spanned by (a) substitution instances whose left-normed word
// blocks partition {1..d} and (b) single-letter left/right multiples of the
// degree d-1 component relabeled across all (d-1)-subsets of {1..d}; iterated
// letter multiplications generate all one-sided monomial multiplications via
// L_{pq} = R_q L_p + L_p L_q and R_{pq} = R_q R_p - R_p R_q, so this span is
// the whole component. Not thread safe.
class QuotientCache {
public:
    explicit QuotientCache(VarietySpec v, int max_n = kDefaultMaxN);

    const VarietySpec& variety() const { return variety_; }
    int max_n() const { return max_n_; }

    // Quotient at degree n, computing missing levels. Throws
    // ResourceBoundError when n exceeds the configured bound.
    const MultilinearQuotient& at(int n);

private:
    void extend_to(int n);

    VarietySpec variety_;
    int max_n_;
    std::vector<std::pair<int, TermLinComb>> components_; // (degree, multilinear component)
    std::vector<MultilinearQuotient> levels_;
    std::vector<SparseVec> last_rows_; // echelon rows of the deepest level
};

MultilinearQuotient tideal_multilinear(const VarietySpec& v, int n, int max_n = kDefaultMaxN);

// True iff every multilinearization component of f lies in the corresponding
// multilinear T-ideal component.
bool is_identity(QuotientCache& cache, const TermLinComb& f);
bool is_identity(const VarietySpec& v, const TermLinComb& f, int max_n = kDefaultMaxN);

// The element x Y^k z Y^{m-k} - sum_i alpha_i x Y^{k-i} z Y^{m-k+i} on
// variables x=x1, y=x2, z=x3 (so it is homogeneous of degree m in x2).
TermLinComb condition3_element(int k, int m, const std::vector<Rat>& alphas);

// Whether the coefficients `alphas` (size k) make the exchange relation an
// identity of v; degree m+2 must be within the bound.
bool check_condition_3(QuotientCache& cache, int k, int m, const std::vector<Rat>& alphas);
bool check_condition_3(const VarietySpec& v, int k, int m, const std::vector<Rat>& alphas,
                       int max_n = kDefaultMaxN);

// Exact solve for such coefficients; returns the solution with all free
// parameters of the affine solution set at 0, or nullopt when none exists.
std::optional<std::vector<Rat>> solve_condition_3(QuotientCache& cache, int k, int m);
std::optional<std::vector<Rat>> solve_condition_3(const VarietySpec& v, int k, int m,
                                                  int max_n = kDefaultMaxN);

} // namespace lbz
