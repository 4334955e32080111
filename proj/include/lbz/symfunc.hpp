#pragma once

#include "lbz/rational.hpp"
#include "lbz/variety.hpp"

#include <utility>
#include <vector>

namespace lbz {

struct Partition {
    std::vector<int> parts; // weakly decreasing, all >= 1; empty for n = 0
    int n() const;
    bool valid() const;
    auto operator<=>(const Partition&) const = default;
};

std::string format_partition(const Partition& p); // "(3,1,1)", "()" for empty

// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);

// Conjugacy class size of cycle type mu in S_n: n! / prod(k^{m_k} m_k!).
long long class_size(const Partition& mu);

// Murnaghan-Nakayama value chi_lambda(mu). No global state.
long long irreducible_character(const Partition& lambda, const Partition& mu);

// chi_lambda(1^n).
long long irreducible_dimension(const Partition& lambda);

// A permutation with cycle type mu, as 1-based images (consecutive cycles).
std::vector<int> representative_permutation(const Partition& mu);

// Class function on S_n: one value per conjugacy class, classes ordered like
// partitions(n).
struct ClassFunction {
    int n = 0;
    std::vector<Rat> values;
};

// Character of S_n permuting generator subscripts on the multilinear quotient
// P_n(V). Traces are exact rationals read off the ideal's reduced echelon
// form: a permuted basis word is either itself (contributes 1), another basis
// word (0), or a pivot word, which is congruent to minus the tail of its
// pivot row.
ClassFunction module_character(QuotientCache& cache, int n);
ClassFunction module_character(const VarietySpec& v, int n, int max_n = kDefaultMaxN);

// Multiplicities of chi in the irreducible characters, ordered like
// partitions(n). Throws InvariantViolation unless every multiplicity is a
// nonnegative integer.
std::vector<std::pair<Partition, long long>> decompose(const ClassFunction& chi);

long long colength(const ClassFunction& chi); // sum of multiplicities

struct ColengthRow {
    int n = 0;
    int dimension = 0; // dim P_n(V)
    long long colength = 0;
    std::vector<std::pair<Partition, long long>> multiplicities;
};

std::vector<ColengthRow> colength_profile(QuotientCache& cache, int nmax);
std::vector<ColengthRow> colength_profile(const VarietySpec& v, int nmax,
                                          int max_n = kDefaultMaxN);

} // namespace lbz
