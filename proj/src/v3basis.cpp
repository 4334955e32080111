#include "lbz/v3basis.hpp"

#include "lbz/errors.hpp"

#include <algorithm>
#include <map>

namespace lbz {

// The rewriting works on "pair words": a head letter followed by factors that
// are single letters or bracket pairs,
//     head f1 f2 ... = (((head * f1) * f2) * ...),   f = y or (y z).
// Normal forms are exactly the theta shapes. Rules, each valid modulo the
// T-ideal generated by x1(x2(x3x4)) and the pair exchange identity (the first
// three are exact consequences of the Leibniz identity alone):
//   flip      U (b a) V           -> -U (a b) V                      (a < b)
//   merge     U y z V             -> U z y V - U (z y) V             (y > z)
//   commute   U y (z t) V         -> U (z t) y V
//   pair-swap U (c d) (a b) V     -> U (a b) (c d) V                 (a < c)
//   exchange  U (a b) (c d) V     -> U (a d) (c b) V - U (a c) (d b) V
//                                                 (a < c < d < b)
// Right multiplication by a bracket is antisymmetric (A(uv) = (Au)v - (Av)u),
// which justifies `flip`; `merge` is the Leibniz identity itself; `commute`
// and `pair-swap` drop a term of the form A(y(zt)) resp. A((ab)(cd)), both
// instances of the right-bracket identity; `exchange` is the pair exchange
// identity under a monomial substitution.

namespace {

struct Factor {
    int a = 0, b = 0; // b == 0: single letter a; otherwise pair (a, b)
    bool is_pair() const { return b != 0; }
    auto operator<=>(const Factor&) const = default;
};

struct PairWord {
    int head = 0;
    std::vector<Factor> fs;
    auto operator<=>(const PairWord&) const = default;
};

using Pending = std::map<PairWord, Rat>;

void emit(Pending& pending, PairWord w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = pending.try_emplace(std::move(w), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) pending.erase(it);
    }
}

// Applies the highest-priority rule at the leftmost applicable position.
// Returns false when w is already a normal form.
bool rewrite_step(const PairWord& w, const Rat& c, Pending& pending) {
    const auto& fs = w.fs;
    for (std::size_t p = 0; p < fs.size(); ++p) {
        const Factor& f = fs[p];
        if (f.is_pair() && f.a > f.b) { // flip
            PairWord out = w;
            std::swap(out.fs[p].a, out.fs[p].b);
            emit(pending, std::move(out), -c);
            return true;
        }
        if (p + 1 == fs.size()) break;
        const Factor& g = fs[p + 1];
        if (!f.is_pair() && g.is_pair()) { // commute single past pair
            PairWord out = w;
            std::swap(out.fs[p], out.fs[p + 1]);
            emit(pending, std::move(out), c);
            return true;
        }
        if (!f.is_pair() && !g.is_pair() && f.a > g.a) { // merge
            PairWord swapped = w;
            std::swap(swapped.fs[p], swapped.fs[p + 1]);
            emit(pending, std::move(swapped), c);
            PairWord merged = w;
            merged.fs[static_cast<std::size_t>(p)] = Factor{g.a, f.a}; // (z y), z < y
            merged.fs.erase(merged.fs.begin() + static_cast<std::ptrdiff_t>(p) + 1);
            emit(pending, std::move(merged), -c); // flip already folded in
            return true;
        }
        if (f.is_pair() && g.is_pair() && g.a >= g.b) continue; // let flip fire first
        if (f.is_pair() && g.is_pair()) {
            if (f.a > g.a) { // pair-swap
                PairWord out = w;
                std::swap(out.fs[p], out.fs[p + 1]);
                emit(pending, std::move(out), c);
                return true;
            }
            if (f.b > g.b) { // exchange: (a b)(c d) with a < c < d < b
                const int a = f.a, b = f.b, cc = g.a, d = g.b;
                PairWord first = w;
                first.fs[p] = Factor{a, d};
                first.fs[p + 1] = Factor{cc, b};
                emit(pending, std::move(first), c);
                PairWord second = w;
                second.fs[p] = Factor{a, cc};
                second.fs[p + 1] = Factor{d, b};
                emit(pending, std::move(second), -c);
                return true;
            }
        }
    }
    return false;
}

ThetaElement to_theta(const PairWord& w, int n) {
    ThetaElement t;
    t.n = n;
    t.head = w.head;
    for (const Factor& f : w.fs) {
        if (f.is_pair()) {
            t.pairs.emplace_back(f.a, f.b);
        } else {
            t.singles.push_back(f.a);
        }
    }
    if (!t.valid()) throw InvariantViolation("rewriting produced a non-normal form");
    return t;
}

} // namespace

ThetaCoordinates reduce_to_theta(const LinComb& e, int n) {
    if (!is_multilinear(e, n))
        throw std::invalid_argument("input is not multilinear of degree " + std::to_string(n));
    Pending pending;
    for (const auto& [w, c] : e) {
        PairWord pw;
        pw.head = w.letters.front();
        for (std::size_t i = 1; i < w.letters.size(); ++i)
            pw.fs.push_back(Factor{w.letters[i], 0});
        emit(pending, std::move(pw), c);
    }
    ThetaCoordinates done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const PairWord& w = node.key();
        const Rat& c = node.mapped();
        if (!rewrite_step(w, c, pending)) {
            const ThetaElement t = to_theta(w, n);
            auto [it, fresh] = done.try_emplace(t, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) done.erase(it);
            }
        }
    }
    return done;
}

ThetaCoordinates reduce_to_theta(const TermLinComb& e, int n) {
    if (!is_multilinear(e, n))
        throw std::invalid_argument("input is not multilinear of degree " + std::to_string(n));
    return reduce_to_theta(reduce_lincomb(e), n);
}

TermLinComb theta_image(const ThetaCoordinates& coords) {
    TermLinComb out;
    for (const auto& [t, c] : coords) out.add(theta_to_term(t), c);
    return out;
}

LinComb theta_image_words(const ThetaCoordinates& coords) {
    LinComb out;
    for (const auto& [t, c] : coords) {
        LinComb w = theta_to_lincomb(t);
        w *= c;
        out += w;
    }
    return out;
}

// -------------------------------------------------------------- randomness

Term random_multilinear_term(std::mt19937_64& rng, int n) {
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> dist(0, i);
        std::swap(letters[static_cast<std::size_t>(i)], letters[static_cast<std::size_t>(dist(rng))]);
    }
    struct Builder {
        std::mt19937_64& rng;
        const std::vector<int>& letters;
        Term build(int lo, int hi) { // [lo, hi)
            if (hi - lo == 1) return Term(Generator{letters[static_cast<std::size_t>(lo)]});
            std::uniform_int_distribution<int> dist(lo + 1, hi - 1);
            const int mid = dist(rng);
            return Term(build(lo, mid), build(mid, hi));
        }
    };
    Builder b{rng, letters};
    return b.build(0, n);
}

TermLinComb random_multilinear_element(std::mt19937_64& rng, int n, int max_terms) {
    TermLinComb out;
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    const int terms = nterms(rng);
    for (int k = 0; k < terms; ++k) {
        int nu = num(rng);
        if (nu == 0) nu = 1;
        out.add(random_multilinear_term(rng, n), make_rat(nu, den(rng)));
    }
    return out;
}

HElement random_helement(std::mt19937_64& rng, int coeff_bound, int poly_deg) {
    std::uniform_int_distribution<int> num(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> den(1, 2);
    std::uniform_int_distribution<int> deg(0, poly_deg);
    HElement h;
    h.ca = make_rat(num(rng), den(rng));
    h.cb = make_rat(num(rng), den(rng));
    h.cc = make_rat(num(rng), den(rng));
    const int d = deg(rng);
    Poly p;
    p.c.resize(static_cast<std::size_t>(d) + 1, Rat(0));
    for (int k = 0; k <= d; ++k) p.c[static_cast<std::size_t>(k)] = make_rat(num(rng), den(rng));
    p.normalize();
    h.f = p;
    return h;
}

// ------------------------------------------------------------- verification

Theorem2Report verify_theorem2(QuotientCache& cache, int n, int fdeg, unsigned long seed,
                               int consistency_trials, int evals_per_trial) {
    Theorem2Report rep;
    rep.n = n;
    rep.fdeg = fdeg < 0 ? n : fdeg;
    if (rep.fdeg < n) throw std::invalid_argument("fdeg must be >= n");

    const std::vector<ThetaElement> thetas = enumerate_theta(n);
    rep.theta_count = static_cast<int>(thetas.size());

    const MultilinearQuotient& q = cache.at(n);
    rep.quotient_dim = q.dimension();

    // (a) span: ideal rows plus theta classes must fill the whole space.
    {
        EchelonBasis eb(static_cast<int>(factorial(n)));
        for (const SparseVec& row : q.ideal.rows()) eb.insert(row);
        bool all_grew = true;
        for (const ThetaElement& t : thetas)
            all_grew = eb.insert(vectorize(theta_to_lincomb(t), n)) && all_grew;
        rep.span_ok = all_grew && rep.theta_count == rep.quotient_dim &&
                      eb.rank() == static_cast<int>(factorial(n));
    }

    // (b) independence of the separating evaluations.
    {
        const int block = 3 + rep.fdeg + n + 1; // a, b, c, then t^0..t^(fdeg+n)
        std::vector<Assignment> assignments;
        assignments.reserve(thetas.size());
        for (const ThetaElement& t : thetas)
            assignments.push_back(theorem2_assignment(t, rep.fdeg));
        EchelonBasis ev(static_cast<int>(thetas.size()) * block);
        for (const ThetaElement& row_theta : thetas) {
            const Term row_term = theta_to_term(row_theta);
            SparseVec row;
            for (std::size_t j = 0; j < thetas.size(); ++j) {
                const HElement h = evaluate(row_term, assignments[j]);
                const int base = static_cast<int>(j) * block;
                if (h.f.degree() + 1 > block - 3)
                    throw InvariantViolation("evaluation degree exceeds the coordinate block");
                if (h.ca != 0) row.entries.emplace_back(base, h.ca);
                if (h.cb != 0) row.entries.emplace_back(base + 1, h.cb);
                if (h.cc != 0) row.entries.emplace_back(base + 2, h.cc);
                for (std::size_t k = 0; k < h.f.c.size(); ++k)
                    if (h.f.c[k] != 0)
                        row.entries.emplace_back(base + 3 + static_cast<int>(k), h.f.c[k]);
            }
            ev.insert(row);
        }
        rep.eval_rank = ev.rank();
        rep.independence_ok = rep.eval_rank == rep.theta_count;
    }

    // (c) rewriting consistency on random elements.
    {
        std::mt19937_64 rng(seed);
        bool ok = true;
        for (int trial = 0; trial < consistency_trials; ++trial) {
            const TermLinComb e = random_multilinear_element(rng, n);
            const ThetaCoordinates coords = reduce_to_theta(e, n);
            LinComb diff = reduce_lincomb(e);
            diff -= theta_image_words(coords);
            if (!diff.is_zero() && !q.ideal.contains(vectorize(diff, n))) ok = false;
            const TermLinComb image = theta_image(coords);
            for (int j = 0; j < evals_per_trial; ++j) {
                Assignment a;
                for (int g = 1; g <= n; ++g) a[g] = random_helement(rng);
                if (!(evaluate(e, a) == evaluate(image, a))) ok = false;
            }
        }
        rep.consistency_checked = consistency_trials;
        rep.consistency_ok = ok;
    }

    rep.pass = rep.span_ok && rep.independence_ok && rep.consistency_ok;
    return rep;
}

Theorem2Report verify_theorem2(int n, int fdeg, unsigned long seed, int consistency_trials,
                               int evals_per_trial, int max_n) {
    QuotientCache cache(builtin_variety("v3tilde"), max_n);
    return verify_theorem2(cache, n, fdeg, seed, consistency_trials, evals_per_trial);
}

} // namespace lbz
