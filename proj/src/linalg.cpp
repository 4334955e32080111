#include "lbz/linalg.hpp"

#include "lbz/errors.hpp"

#include <algorithm>

namespace lbz {

void SparseVec::add(int col, const Rat& c) {
    if (c == 0) return;
    auto it = std::lower_bound(entries.begin(), entries.end(), col,
                               [](const auto& e, int x) { return e.first < x; });
    if (it != entries.end() && it->first == col) {
        it->second += c;
        if (it->second == 0) entries.erase(it);
    } else {
        entries.insert(it, {col, c});
    }
}

SparseVec sparse_from_dense(const std::vector<Rat>& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.entries.emplace_back(static_cast<int>(i), v[i]);
    return out;
}

// ----------------------------------------------------------------- Subspace

Subspace::Subspace(int cols, std::vector<SparseVec> rref_rows)
    : cols_(cols), rows_(std::move(rref_rows)), row_of_pivot_(static_cast<std::size_t>(cols), -1) {
    pivots_.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].is_zero()) throw InvariantViolation("zero row in RREF");
        const int p = rows_[r].entries.front().first;
        if (!pivots_.empty() && p <= pivots_.back())
            throw InvariantViolation("RREF rows not ordered by pivot");
        pivots_.push_back(p);
        row_of_pivot_[static_cast<std::size_t>(p)] = static_cast<int>(r);
    }
}

int Subspace::pivot_row(int col) const {
    if (col < 0 || col >= cols_) return -1;
    return row_of_pivot_.empty() ? -1 : row_of_pivot_[static_cast<std::size_t>(col)];
}

std::vector<int> Subspace::complement_columns() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cols_) - rows_.size());
    std::size_t k = 0;
    for (int c = 0; c < cols_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
    // RREF rows have pairwise distinct pivot support, so one pass per pivot
    // hit suffices; accumulate into a map-free merge via SparseVec::add.
    SparseVec acc = v;
    SparseVec out;
    // Repeatedly strip the leading entry.
    while (!acc.entries.empty()) {
        auto [c, x] = acc.entries.front();
        acc.entries.erase(acc.entries.begin());
        const int r = pivot_row(c);
        if (r < 0) {
            out.entries.emplace_back(c, x);
            continue;
        }
        const SparseVec& row = rows_[static_cast<std::size_t>(r)];
        for (std::size_t k = 1; k < row.entries.size(); ++k)
            acc.add(row.entries[k].first, -x * row.entries[k].second);
    }
    return out;
}

// ------------------------------------------------------------- EchelonBasis

EchelonBasis::EchelonBasis(int cols)
    : cols_(cols), row_of_pivot_(static_cast<std::size_t>(cols), -1),
      acc_(static_cast<std::size_t>(cols), Rat(0)) {
    if (cols < 0) throw InvariantViolation("negative column count");
}

void EchelonBasis::load_acc(const SparseVec& v) const {
    for (const auto& [c, x] : v.entries) {
        if (c < 0 || c >= cols_) throw InvariantViolation("column out of range");
        acc_[static_cast<std::size_t>(c)] = x;
    }
}

void EchelonBasis::clear_acc(int first) const {
    for (int c = first; c < cols_; ++c) acc_[static_cast<std::size_t>(c)] = 0;
}

int EchelonBasis::eliminate_acc(int first) const {
    for (int c = first; c < cols_; ++c) {
        Rat& head = acc_[static_cast<std::size_t>(c)];
        if (head == 0) continue;
        const int r = row_of_pivot_[static_cast<std::size_t>(c)];
        if (r < 0) return c;
        const Rat f = head;
        head = 0;
        const SparseVec& row = rows_[static_cast<std::size_t>(r)];
        for (std::size_t k = 1; k < row.entries.size(); ++k) {
            auto& [j, pj] = row.entries[k];
            acc_[static_cast<std::size_t>(j)] -= f * pj;
        }
    }
    return -1;
}

bool EchelonBasis::insert(const SparseVec& v) {
    if (v.is_zero()) return false;
    load_acc(v);
    const int first = v.entries.front().first;
    const int p = eliminate_acc(first);
    if (p < 0) return false;
    SparseVec row;
    const Rat lead = acc_[static_cast<std::size_t>(p)];
    row.entries.emplace_back(p, 1);
    for (int c = p + 1; c < cols_; ++c) {
        Rat& x = acc_[static_cast<std::size_t>(c)];
        if (x != 0) row.entries.emplace_back(c, x / lead);
        x = 0;
    }
    acc_[static_cast<std::size_t>(p)] = 0;
    row_of_pivot_[static_cast<std::size_t>(p)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    pivot_of_row_.push_back(p);
    return true;
}

bool EchelonBasis::reduces_to_zero(const SparseVec& v) const {
    if (v.is_zero()) return true;
    load_acc(v);
    const int first = v.entries.front().first;
    const int p = eliminate_acc(first);
    clear_acc(first);
    return p < 0;
}

Subspace EchelonBasis::to_subspace() const {
    // Order rows by pivot, then back-substitute from the rightmost pivot so
    // that every subtracted row is already fully reduced.
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pivot_of_row_[static_cast<std::size_t>(a)] < pivot_of_row_[static_cast<std::size_t>(b)];
    });
    std::vector<SparseVec> reduced(rows_.size());
    std::vector<int> order_pos(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order_pos[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

    for (std::size_t k = order.size(); k-- > 0;) {
        const int r = order[k];
        const SparseVec& src = rows_[static_cast<std::size_t>(r)];
        const int pivot = pivot_of_row_[static_cast<std::size_t>(r)];
        load_acc(src);
        acc_[static_cast<std::size_t>(pivot)] = 0;
        for (int c = pivot + 1; c < cols_; ++c) {
            Rat& head = acc_[static_cast<std::size_t>(c)];
            if (head == 0) continue;
            const int r2 = row_of_pivot_[static_cast<std::size_t>(c)];
            if (r2 < 0) continue;
            const Rat f = head;
            head = 0;
            // Rows with larger pivots are already reduced.
            const SparseVec& row2 = reduced[static_cast<std::size_t>(order_pos[static_cast<std::size_t>(r2)])];
            for (std::size_t t = 1; t < row2.entries.size(); ++t)
                acc_[static_cast<std::size_t>(row2.entries[t].first)] -= f * row2.entries[t].second;
        }
        SparseVec out;
        out.entries.emplace_back(pivot, 1);
        for (int c = pivot + 1; c < cols_; ++c) {
            Rat& x = acc_[static_cast<std::size_t>(c)];
            if (x != 0) out.entries.emplace_back(c, x);
            x = 0;
        }
        reduced[k] = std::move(out);
    }
    return Subspace(cols_, std::move(reduced));
}

// ----------------------------------------------------------- free functions

Subspace rref(const RationalMatrix& m) {
    EchelonBasis basis(m.cols);
    for (const auto& row : m.rows) {
        if (static_cast<int>(row.size()) != m.cols)
            throw InvariantViolation("ragged matrix row");
        basis.insert(sparse_from_dense(row));
    }
    return basis.to_subspace();
}

int rank(const RationalMatrix& m) {
    EchelonBasis basis(m.cols);
    for (const auto& row : m.rows) {
        if (static_cast<int>(row.size()) != m.cols)
            throw InvariantViolation("ragged matrix row");
        basis.insert(sparse_from_dense(row));
    }
    return basis.rank();
}

bool contains(const Subspace& s, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != s.cols())
        throw InvariantViolation("vector length mismatch");
    return s.contains(sparse_from_dense(v));
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

int lehmer_rank(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    long long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (word[static_cast<std::size_t>(j)] < word[static_cast<std::size_t>(i)]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return static_cast<int>(rank);
}

std::vector<int> lehmer_unrank(int rank, int n) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> word;
    long long r = rank;
    for (int i = n; i >= 1; --i) {
        const long long f = factorial(i - 1);
        const long long d = r / f;
        r %= f;
        word.push_back(pool[static_cast<std::size_t>(d)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return word;
}

} // namespace lbz
