// Acceptance harness. argv[1] names the lbz CLI binary (used by the
// determinism criterion). Prints one PASS/FAIL line per criterion and exits
// with the number of failures, so a zero exit is a full pass.

#include "lbz/errors.hpp"
#include "lbz/heisenberg.hpp"
#include "lbz/linalg.hpp"
#include "lbz/symfunc.hpp"
#include "lbz/term.hpp"
#include "lbz/theta.hpp"
#include "lbz/v3basis.hpp"
#include "lbz/variety.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unistd.h>
#include <vector>

namespace {

using namespace lbz;

struct Outcome {
    bool ok = false;
    std::string note; // printed on both pass and fail when nonempty
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared quotient caches so later criteria reuse the levels built by earlier
// ones. All are bounded at degree 6, the largest degree any criterion needs.
QuotientCache& named_cache(const std::string& name) {
    static std::map<std::string, QuotientCache> pool;
    auto it = pool.find(name);
    if (it == pool.end()) it = pool.try_emplace(name, builtin_variety(name), 6).first;
    return it->second;
}

// a, b, c and the powers 1, t, ..., t^tmax.
std::vector<HElement> basis_elements(int tmax) {
    std::vector<HElement> out{HElement::a(), HElement::b(), HElement::c()};
    for (int k = 0; k <= tmax; ++k) out.push_back(HElement::t_power(k));
    return out;
}

std::string at_n(const char* what, int n) {
    return std::string(what) + " at n=" + std::to_string(n);
}

// 1. The module algebra satisfies the Leibniz law exactly.
Outcome criterion1() {
    const auto base = basis_elements(12); // 16 elements, 4096 ordered triples
    long long checked = 0;
    for (const HElement& u : base)
        for (const HElement& v : base)
            for (const HElement& w : base) {
                if (!leibniz_witness(u, v, w).is_zero())
                    return {false, "nonzero witness on a basis triple"};
                ++checked;
            }
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        const HElement u = random_helement(rng);
        const HElement v = random_helement(rng);
        const HElement w = random_helement(rng);
        if (!leibniz_witness(u, v, w).is_zero())
            return {false, "nonzero witness on random triple " + std::to_string(i)};
        ++checked;
    }
    return {true, std::to_string(checked) + " triples"};
}

// 2. Both defining identities, and the skew-symmetrized five-letter word,
// vanish under every substitution tried.
Outcome criterion2() {
    const Term right_bracket = parse_term("x1(x2(x3x4))");
    TermLinComb exchange;
    for (const Identity& id : builtin_variety("v3tilde").identities)
        if (id.name == "pair-exchange") exchange = id.element;
    if (exchange.is_zero()) return {false, "builtin pair-exchange identity not found"};
    const TermLinComb skew = skew_symmetrize(
        parse_term("x1x2x3x4x5"), {Generator{2}, Generator{3}, Generator{4}, Generator{5}});
    if (skew.size() != 24) return {false, "skew symmetrization does not have 24 terms"};

    const auto big = basis_elements(12);
    for (const HElement& u : big)
        for (const HElement& v : big)
            for (const HElement& w : big)
                for (const HElement& x : big) {
                    const Assignment a{{1, u}, {2, v}, {3, w}, {4, x}};
                    if (!evaluate(right_bracket, a).is_zero())
                        return {false, "right bracket nonzero on a basis tuple"};
                }

    const auto small = basis_elements(2); // 6 elements, 7776 five-tuples
    for (const HElement& u : small)
        for (const HElement& v : small)
            for (const HElement& w : small)
                for (const HElement& x : small)
                    for (const HElement& y : small) {
                        const Assignment a{{1, u}, {2, v}, {3, w}, {4, x}, {5, y}};
                        if (!evaluate(exchange, a).is_zero())
                            return {false, "pair exchange nonzero on a basis tuple"};
                        if (!evaluate(skew, a).is_zero())
                            return {false, "skew element nonzero on a basis tuple"};
                    }

    std::mt19937_64 rng(202);
    for (int i = 0; i < 100; ++i) {
        Assignment a;
        for (int v = 1; v <= 5; ++v) a[v] = random_helement(rng);
        if (!evaluate(right_bracket, a).is_zero())
            return {false, "right bracket nonzero on a random tuple"};
        if (!evaluate(exchange, a).is_zero())
            return {false, "pair exchange nonzero on a random tuple"};
        if (!evaluate(skew, a).is_zero())
            return {false, "skew element nonzero on a random tuple"};
    }
    return {true, "65536 + 7776 basis tuples, 100 random"};
}

// 3. dim of the degree-n multilinear part of the free algebra is n!, both as
// the rank of all reduced bracketings and as the empty-identity quotient.
Outcome criterion3() {
    QuotientCache& free_cache = named_cache("free");
    for (int n = 1; n <= 5; ++n) {
        const int want = static_cast<int>(factorial(n));
        EchelonBasis eb(want);
        for (const Term& t : oracles::all_multilinear_monomials(n))
            eb.insert(vectorize(leibniz_reduce(t), n));
        if (eb.rank() != want) return {false, at_n("bracketing rank != n!", n)};
        if (free_cache.at(n).dimension() != want)
            return {false, at_n("free quotient dimension != n!", n)};
    }
    return {true, "n = 1..5"};
}

// 4. The theta count equals the v3tilde quotient dimension.
Outcome criterion4() {
    QuotientCache& cache = named_cache("v3tilde");
    std::string counts;
    for (int n = 1; n <= 6; ++n) {
        const int count = static_cast<int>(enumerate_theta(n).size());
        if (count != cache.at(n).dimension())
            return {false, at_n("theta count != quotient dimension", n)};
        counts += (n > 1 ? "," : "") + std::to_string(count);
    }
    return {true, "dims " + counts};
}

// 5. The evaluation matrix of the theta elements under their separating
// substitutions (head degree fdeg = n) has full rank. Each substitution
// contributes a block of coordinates: a, b, c, then polynomial coefficients.
Outcome criterion5() {
    for (int n = 1; n <= 6; ++n) {
        const auto thetas = enumerate_theta(n);
        const int count = static_cast<int>(thetas.size());
        const int poly_len = 2 * n + 2; // head t^n times n-1 letters never exceeds this
        const int block = 3 + poly_len;
        std::vector<Assignment> subs;
        subs.reserve(thetas.size());
        for (const ThetaElement& th : thetas) subs.push_back(theorem2_assignment(th, n));
        EchelonBasis eb(count * block);
        for (const ThetaElement& th : thetas) {
            const Term t = theta_to_term(th);
            SparseVec row;
            for (int j = 0; j < count; ++j) {
                const HElement h = evaluate(t, subs[static_cast<std::size_t>(j)]);
                if (static_cast<int>(h.f.c.size()) > poly_len)
                    return {false, at_n("polynomial coordinate overflow", n)};
                const int off = j * block;
                if (h.ca != 0) row.add(off, h.ca);
                if (h.cb != 0) row.add(off + 1, h.cb);
                if (h.cc != 0) row.add(off + 2, h.cc);
                for (std::size_t k = 0; k < h.f.c.size(); ++k)
                    if (h.f.c[k] != 0) row.add(off + 3 + static_cast<int>(k), h.f.c[k]);
            }
            eb.insert(row);
        }
        if (eb.rank() != count) return {false, at_n("evaluation rank below theta count", n)};
    }
    return {true, "full rank, n = 1..6"};
}

// 6. Rewriting to theta coordinates is the identity map modulo the ideal:
// the difference lies in the ideal, and evaluations cannot tell them apart.
Outcome criterion6() {
    QuotientCache& cache = named_cache("v3tilde");
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 6;
        const TermLinComb e = random_multilinear_element(rng, n);
        const ThetaCoordinates coords = reduce_to_theta(e, n);
        const LinComb diff = reduce_lincomb(e) - theta_image_words(coords);
        if (!cache.at(n).ideal.contains(vectorize(diff, n)))
            return {false, at_n("difference from the normal form is outside the ideal", n)};
        const TermLinComb image = theta_image(coords);
        for (int rep = 0; rep < 10; ++rep) {
            Assignment a;
            for (int v = 1; v <= n; ++v) a[v] = random_helement(rng);
            if (evaluate(e, a) != evaluate(image, a))
                return {false, at_n("normal form evaluates differently", n)};
        }
    }
    return {true, "50 elements, 10 evaluations each"};
}

// 7. The two defining identities already generate every relation: their
// quotient matches the theta count at each degree, and adjoining a further
// identity of the module algebra (the 24-term skew element) changes nothing.
Outcome criterion7() {
    QuotientCache& gen = named_cache("v3tilde");
    VarietySpec enlarged = builtin_variety("v3tilde");
    enlarged.name = "v3tilde+skew";
    enlarged.identities.push_back(
        {"skew-probe", skew_symmetrize(parse_term("x1x2x3x4x5"),
                                       {Generator{2}, Generator{3}, Generator{4}, Generator{5}})});
    QuotientCache more(enlarged, 6);
    for (int n = 1; n <= 6; ++n) {
        const int count = static_cast<int>(enumerate_theta(n).size());
        if (gen.at(n).dimension() != count)
            return {false, at_n("generated quotient misses the theta count", n)};
        if (more.at(n).dimension() != count)
            return {false, at_n("adjoined identity changed the quotient", n)};
    }
    return {true, "n = 1..6, skew element adds no relation"};
}

// 8. Character machinery: orthonormality, the degree-2 decomposition of the
// free algebra, and multiplicities recombining to the module dimension for
// every builtin variety.
Outcome criterion8() {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions(n);
        const long long nf = factorial(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i; j < parts.size(); ++j) {
                long long dot = 0;
                for (const Partition& mu : parts)
                    dot += class_size(mu) * irreducible_character(parts[i], mu) *
                           irreducible_character(parts[j], mu);
                if (dot != (i == j ? nf : 0))
                    return {false, at_n("characters are not orthonormal", n)};
            }
    }
    {
        const ClassFunction chi = module_character(named_cache("free"), 2);
        const auto decomp = decompose(chi);
        if (decomp.size() != 2 || decomp[0].second != 1 || decomp[1].second != 1)
            return {false, "free degree-2 module is not trivial + sign"};
        if (colength(chi) != 2) return {false, "free degree-2 colength != 2"};
    }
    for (const char* name : {"free", "abelian", "v1tilde", "v3tilde", "nsa1", "nsa2"}) {
        QuotientCache& cache = named_cache(name);
        for (int n = 1; n <= 6; ++n) {
            const ClassFunction chi = module_character(cache, n);
            long long total = 0;
            for (const auto& [lambda, mult] : decompose(chi))
                total += mult * irreducible_dimension(lambda);
            if (total != cache.at(n).dimension())
                return {false, at_n(name, n) + ": multiplicities do not recombine"};
        }
    }
    return {true, "6 varieties, n = 1..6"};
}

// 9. The power-exchange coefficient problem: solvable for the abelian
// variety, unsolvable for the free algebra and for v1tilde.
Outcome criterion9() {
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= m; ++k) {
            const std::string km = " at k=" + std::to_string(k) + ", m=" + std::to_string(m);
            if (!solve_condition_3(named_cache("abelian"), k, m))
                return {false, "no abelian solution" + km};
            if (solve_condition_3(named_cache("free"), k, m))
                return {false, "unexpected free solution" + km};
            if (solve_condition_3(named_cache("v1tilde"), k, m))
                return {false, "unexpected v1tilde solution" + km};
        }
    return {true, "abelian solvable, free and v1tilde unsolvable, 1 <= k <= m <= 4"};
}

struct RunOutput {
    std::string out;
    int status = -1;
};

RunOutput capture(const std::string& cmd) {
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {};
    RunOutput r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    r.status = pclose(p);
    return r;
}

// 10. Every CLI command prints byte-identical output across repeated runs.
Outcome criterion10(const std::string& exe) {
    if (exe.empty()) return {false, "no CLI binary path on the command line"};
    namespace fs = std::filesystem;
    const std::string tag = std::to_string(getpid());
    const fs::path idfile = fs::temp_directory_path() / ("lbz-accept-" + tag + "-identity.json");
    const fs::path asfile = fs::temp_directory_path() / ("lbz-accept-" + tag + "-assign.json");
    {
        std::ofstream f(idfile);
        f << R"json({"name":"probe","identities":[{"name":"rb","terms":[{"term":"x1(x2(x3x4))"}]}]})json"
          << "\n";
    }
    {
        std::ofstream f(asfile);
        f << R"({"x1":"1","x2":"a","x3":"b"})" << "\n";
    }
    const std::string q = "'" + exe + "' ";
    const std::vector<std::string> commands = {
        q + "reduce 'x1(x2(x3x4))' --format json",
        q + "dim --variety v3tilde --n 4 --format json",
        q + "basis --n 4 --format json",
        q + "theta-reduce 'x1x3x2' --format json",
        q + "check '" + idfile.string() + "' --variety v3tilde --format json",
        q + "colength --variety v3tilde --nmax 4 --format json",
        q + "character --variety v3tilde --n 4 --format json",
        q + "verify-theorem2 --n 3 --format json",
        q + "condition3 --variety abelian --k 1 --m 2 --format json",
        q + "eval 'x1(x2x3)' '" + asfile.string() + "' --format json",
        q + "dim --variety-file '" + idfile.string() + "' --n 4 --format json",
    };
    Outcome result{true, std::to_string(commands.size()) + " commands, two runs each"};
    for (const std::string& cmd : commands) {
        const RunOutput first = capture(cmd + " 2>/dev/null");
        const RunOutput second = capture(cmd + " 2>/dev/null");
        if (first.status != 0 || second.status != 0) {
            result = {false, "command failed: " + cmd};
            break;
        }
        if (first.out.empty() || first.out != second.out) {
            result = {false, "output differs between runs: " + cmd};
            break;
        }
    }
    std::error_code ec;
    fs::remove(idfile, ec);
    fs::remove(asfile, ec);
    return result;
}

struct Criterion {
    int id;
    const char* what;
    double budget; // seconds; 0 means unbounded
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::string exe = argc > 1 ? argv[1] : "";
    const std::vector<Criterion> criteria = {
        {1, "Leibniz law holds throughout the Heisenberg module algebra", 5, criterion1},
        {2, "defining identities evaluate to zero in the Heisenberg module algebra", 10,
         criterion2},
        {3, "free multilinear dimension is n! by bracketing rank and by the quotient", 60,
         criterion3},
        {4, "theta count equals the v3tilde quotient dimension for n <= 6", 600, criterion4},
        {5, "theta evaluation matrix has full rank for n <= 6", 0, criterion5},
        {6, "theta rewriting agrees with the ideal and with evaluation", 0, criterion6},
        {7, "the two defining identities alone pin every quotient dimension", 0, criterion7},
        {8, "characters are orthonormal and multiplicities recombine to the dimension", 0,
         criterion8},
        {9, "power-exchange coefficients exist for abelian only", 0, criterion9},
        {10, "CLI commands print byte-identical output across repeated runs", 0,
         [&exe] { return criterion10(exe); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double dt = seconds_since(t0);
        if (r.ok && c.budget > 0 && dt > c.budget) {
            r.ok = false;
            r.note = "exceeded the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", dt);
        std::cout << (r.ok ? "PASS" : "FAIL") << ": " << c.id << " " << c.what << " (" << timing
                  << ")";
        if (!r.note.empty()) std::cout << " [" << r.note << "]";
        std::cout << "\n" << std::flush;
        if (!r.ok) ++failures;
    }
    std::cout << (static_cast<int>(criteria.size()) - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures;
}
