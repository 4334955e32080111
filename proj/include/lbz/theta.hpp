#pragma once

#include "lbz/heisenberg.hpp"
#include "lbz/term.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lbz {

// Normal-form monomial
//   theta(i; (i1,j1)...(im,jm); k1,...,k_{n-2m-1})
//     = x_i (x_{i1} x_{j1}) ... (x_{im} x_{jm}) x_{k1} ... x_{k_{n-2m-1}}
// (left-normed), where i_s < j_s, i_1 < ... < i_m, j_1 < ... < j_m, the
// trailing singles increase, and {head} + pairs + singles partition {1..n}.
// The head index is unconstrained.
struct ThetaElement {
    int n = 0;
    int head = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> singles;

    int m() const { return static_cast<int>(pairs.size()); }
    bool valid() const;

    // Order: by pair count m, then (head, i1, j1, i2, j2, ..., singles).
    bool operator<(const ThetaElement& o) const;
    bool operator==(const ThetaElement&) const = default;
};

using ThetaCoordinates = std::map<ThetaElement, Rat>;

// All theta elements for degree n, in the ThetaElement order.
std::vector<ThetaElement> enumerate_theta(int n);

Term theta_to_term(const ThetaElement& t);
LinComb theta_to_lincomb(const ThetaElement& t); // left-normed expansion

std::string format_theta(const ThetaElement& t);
ThetaElement parse_theta(std::string_view text); // inverse of format_theta

// Substitution used to separate theta elements in the Heisenberg module:
// head -> t^fdeg, pair left entries -> a, pair right entries -> b,
// singles -> c. Requires t.valid() and fdeg >= n.
Assignment theorem2_assignment(const ThetaElement& t, int fdeg);

} // namespace lbz
