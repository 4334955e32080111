#pragma once

#include "lbz/theta.hpp"
#include "lbz/variety.hpp"

#include <random>

namespace lbz {

// Coordinates of a multilinear degree-n element on the theta normal forms,
// modulo the T-ideal of the right-bracket and pair-exchange identities.
// Constructive rewriting, no linear solves; throws std::invalid_argument
// unless e is multilinear on x1..xn.
ThetaCoordinates reduce_to_theta(const TermLinComb& e, int n);
ThetaCoordinates reduce_to_theta(const LinComb& e, int n);

TermLinComb theta_image(const ThetaCoordinates& coords);
LinComb theta_image_words(const ThetaCoordinates& coords);

// Deterministic random sampling used by the verification routine and tests.
Term random_multilinear_term(std::mt19937_64& rng, int n);
TermLinComb random_multilinear_element(std::mt19937_64& rng, int n, int max_terms = 3);
HElement random_helement(std::mt19937_64& rng, int coeff_bound = 4, int poly_deg = 4);

struct Theorem2Report {
    int n = 0;
    int fdeg = 0;
    int theta_count = 0;
    int quotient_dim = 0;         // dim of the degree-n multilinear quotient
    bool span_ok = false;         // thetas are a basis of the quotient
    int eval_rank = 0;            // rank of the Heisenberg evaluation matrix
    bool independence_ok = false; // eval_rank == theta_count
    int consistency_checked = 0;
    bool consistency_ok = false;  // rewriting agrees with ideal membership and evaluation
    bool pass = false;
};

// Checks, for the bracket-identity variety: (a) the theta elements span the
// multilinear quotient (count equals dimension and their classes are
// independent), (b) the evaluation matrix under the separating substitutions
// head -> t^fdeg, pair entries -> a/b, singles -> c has full rank, and (c)
// rewriting random elements to theta coordinates is consistent with both the
// ideal and random evaluations. fdeg < 0 means fdeg = n.
Theorem2Report verify_theorem2(QuotientCache& cache, int n, int fdeg = -1,
                               unsigned long seed = 20260822,
                               int consistency_trials = 50, int evals_per_trial = 10);
Theorem2Report verify_theorem2(int n, int fdeg = -1, unsigned long seed = 20260822,
                               int consistency_trials = 50, int evals_per_trial = 10,
                               int max_n = kDefaultMaxN);

} // namespace lbz
