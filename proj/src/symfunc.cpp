#include "lbz/symfunc.hpp"

#include "lbz/errors.hpp"

#include <algorithm>
#include <map>

namespace lbz {

int Partition::n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool Partition::valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::string format_partition(const Partition& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts[i]);
    }
    out += ")";
    return out;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{acc});
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        acc.push_back(first);
        partitions_rec(n - first, first, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    return out;
}

long long class_size(const Partition& mu) {
    if (!mu.valid()) throw std::invalid_argument("not a partition");
    const int n = mu.n();
    long long size = factorial(n);
    std::map<int, int> mult;
    for (int p : mu.parts) ++mult[p];
    for (const auto& [k, m] : mult) {
        for (int i = 0; i < m; ++i) size /= k;
        size /= factorial(m);
    }
    return size;
}

// -------------------------------------------------- Murnaghan-Nakayama rule

namespace {

// Beta numbers (first-column hook lengths with padding): lambda_t + (L - t).
std::vector<long long> beta_set(const Partition& lambda, int length) {
    std::vector<long long> beta;
    for (int t = 1; t <= length; ++t) {
        const long long part =
            t <= static_cast<int>(lambda.parts.size()) ? lambda.parts[static_cast<std::size_t>(t - 1)] : 0;
        beta.push_back(part + (length - t));
    }
    return beta;
}

Partition partition_from_beta(std::vector<long long> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int length = static_cast<int>(beta.size());
    Partition out;
    for (int t = 1; t <= length; ++t) {
        const long long part = beta[static_cast<std::size_t>(t - 1)] - (length - t);
        if (part > 0) out.parts.push_back(static_cast<int>(part));
    }
    return out;
}

long long mn_value(const Partition& lambda, const std::vector<int>& mu, std::size_t mi) {
    if (mi == mu.size()) return lambda.parts.empty() ? 1 : 0;
    const int r = mu[mi];
    // Remove every rim hook of size r: move one bead down by r on the abacus.
    const int length = static_cast<int>(lambda.parts.size()) + r;
    const std::vector<long long> beta = beta_set(lambda, length);
    long long total = 0;
    for (std::size_t t = 0; t < beta.size(); ++t) {
        const long long target = beta[t] - r;
        if (target < 0) continue;
        bool occupied = false;
        int crossed = 0;
        for (std::size_t u = 0; u < beta.size(); ++u) {
            if (u == t) continue;
            if (beta[u] == target) occupied = true;
            if (beta[u] > target && beta[u] < beta[t]) ++crossed;
        }
        if (occupied) continue;
        std::vector<long long> next = beta;
        next[t] = target;
        const Partition rest = partition_from_beta(std::move(next));
        const long long sub = mn_value(rest, mu, mi + 1);
        total += (crossed % 2 == 0) ? sub : -sub;
    }
    return total;
}

} // namespace

long long irreducible_character(const Partition& lambda, const Partition& mu) {
    if (!lambda.valid() || !mu.valid()) throw std::invalid_argument("not a partition");
    if (lambda.n() != mu.n()) throw std::invalid_argument("sizes differ");
    return mn_value(lambda, mu.parts, 0);
}

long long irreducible_dimension(const Partition& lambda) {
    Partition ones;
    ones.parts.assign(static_cast<std::size_t>(lambda.n()), 1);
    return irreducible_character(lambda, ones);
}

std::vector<int> representative_permutation(const Partition& mu) {
    if (!mu.valid()) throw std::invalid_argument("not a partition");
    const int n = mu.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    int start = 1;
    for (int p : mu.parts) {
        for (int i = 0; i < p; ++i) {
            const int from = start + i;
            const int to = (i + 1 == p) ? start : from + 1;
            perm[static_cast<std::size_t>(from - 1)] = to;
        }
        start += p;
    }
    return perm;
}

// ----------------------------------------------------------- module action

namespace {

Rat quotient_trace(const MultilinearQuotient& q, const std::vector<int>& perm) {
    Rat trace = 0;
    const int n = q.n;
    for (int col : q.basis_cols) {
        const LeftNormedWord w = word_of_column(col, n);
        LeftNormedWord image;
        image.letters.reserve(w.letters.size());
        for (int l : w.letters)
            image.letters.push_back(perm[static_cast<std::size_t>(l - 1)]);
        const int icol = column_of_word(image);
        if (icol == col) {
            trace += 1;
            continue;
        }
        const int r = q.ideal.pivot_row(icol);
        if (r < 0) continue; // a different basis word: no diagonal term
        // e_icol = -(tail of row r) modulo the ideal; pick the col entry.
        const SparseVec& row = q.ideal.rows()[static_cast<std::size_t>(r)];
        const auto it = std::lower_bound(
            row.entries.begin(), row.entries.end(), col,
            [](const auto& e, int x) { return e.first < x; });
        if (it != row.entries.end() && it->first == col) trace -= it->second;
    }
    return trace;
}

} // namespace

ClassFunction module_character(QuotientCache& cache, int n) {
    const MultilinearQuotient& q = cache.at(n);
    ClassFunction chi;
    chi.n = n;
    for (const Partition& mu : partitions(n))
        chi.values.push_back(quotient_trace(q, representative_permutation(mu)));
    return chi;
}

ClassFunction module_character(const VarietySpec& v, int n, int max_n) {
    QuotientCache cache(v, max_n);
    return module_character(cache, n);
}

std::vector<std::pair<Partition, long long>> decompose(const ClassFunction& chi) {
    const int n = chi.n;
    const auto parts = partitions(n);
    if (chi.values.size() != parts.size())
        throw std::invalid_argument("class function length mismatch");
    const Rat order(static_cast<long>(factorial(n)));
    std::vector<std::pair<Partition, long long>> out;
    for (const Partition& lambda : parts) {
        Rat m = 0;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            m += Rat(static_cast<long>(class_size(parts[c]))) *
                 Rat(static_cast<long>(irreducible_character(lambda, parts[c]))) * chi.values[c];
        }
        m /= order;
        if (m < 0 || m.get_den() != 1)
            throw InvariantViolation("non-integral or negative multiplicity for " +
                                     format_partition(lambda) + ": " + rat_to_string(m));
        out.emplace_back(lambda, m.get_num().get_si());
    }
    return out;
}

long long colength(const ClassFunction& chi) {
    long long total = 0;
    for (const auto& [lambda, m] : decompose(chi)) {
        (void)lambda;
        total += m;
    }
    return total;
}

std::vector<ColengthRow> colength_profile(QuotientCache& cache, int nmax) {
    std::vector<ColengthRow> out;
    for (int n = 1; n <= nmax; ++n) {
        ColengthRow row;
        row.n = n;
        row.dimension = cache.at(n).dimension();
        const ClassFunction chi = module_character(cache, n);
        row.multiplicities = decompose(chi);
        row.colength = 0;
        for (const auto& [lambda, m] : row.multiplicities) {
            (void)lambda;
            row.colength += m;
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<ColengthRow> colength_profile(const VarietySpec& v, int nmax, int max_n) {
    QuotientCache cache(v, max_n);
    return colength_profile(cache, nmax);
}

} // namespace lbz
