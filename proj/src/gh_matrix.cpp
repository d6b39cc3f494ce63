#include "ghkit/gh_matrix.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ghkit/word_key.hpp"

namespace ghkit {

GhMatrix::GhMatrix(FieldPtr field, int n, std::vector<Elem> cells, Validity v)
    : field_(std::move(field)), n_(n), cells_(std::move(cells)), validity_(v) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
    int q = field_->q();
    if (n_ <= 0 || n_ % q != 0)
        throw std::invalid_argument("matrix order " + std::to_string(n_) + " is not a positive multiple of q=" +
                                    std::to_string(q));
    lambda_ = n_ / q;
    if (cells_.size() != size_t(n_) * n_) throw std::invalid_argument("matrix cell count does not match order");
    for (Elem x : cells_)
        if (x >= q) throw std::invalid_argument("matrix entry out of range [0, q)");
}

GhMatrix& GhMatrix::operator=(const GhMatrix& o) {
    field_ = o.field_;
    n_ = o.n_;
    lambda_ = o.lambda_;
    cells_ = o.cells_;
    validity_.store(o.validity_.load());
    return *this;
}

void GhMatrix::ensure_valid() const {
    Validity v = validity();
    if (v == Validity::unchecked) {
        v = is_gh(*this).valid ? Validity::valid : Validity::invalid;
    }
    if (v == Validity::invalid) throw std::invalid_argument("matrix is not generalized Hadamard");
}

namespace {

// Difference histogram of rows i and j; true iff every element appears
// exactly lambda times.
bool pair_balanced(const GhMatrix& M, int i, int j, std::vector<long long>& hist) {
    const Field& f = *M.field();
    int n = M.n(), q = f.q();
    std::fill(hist.begin(), hist.end(), 0);
    const Elem* a = M.cells().data() + size_t(i) * n;
    const Elem* b = M.cells().data() + size_t(j) * n;
    for (int s = 0; s < n; ++s) ++hist[f.sub(a[s], b[s])];
    for (int x = 0; x < q; ++x)
        if (hist[x] != M.lambda()) return false;
    return true;
}

ValidityReport report_for(const GhMatrix& M, long long first_bad) {
    ValidityReport r;
    if (first_bad == LLONG_MAX) {
        r.valid = true;
        M.set_validity(Validity::valid);
        return r;
    }
    r.valid = false;
    r.row_a = int(first_bad / M.n());
    r.row_b = int(first_bad % M.n());
    r.histogram.assign(M.field()->q(), 0);
    pair_balanced(M, r.row_a, r.row_b, r.histogram);
    M.set_validity(Validity::invalid);
    return r;
}

} // namespace

ValidityReport is_gh_serial(const GhMatrix& M) {
    int n = M.n();
    std::vector<long long> hist(M.field()->q());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!pair_balanced(M, i, j, hist)) return report_for(M, (long long)i * n + j);
    return report_for(M, LLONG_MAX);
}

ValidityReport is_gh(const GhMatrix& M) {
    int n = M.n();
    // first violation in row-major pair order = smallest i*n+j over violations
    std::atomic<long long> best{LLONG_MAX};
#pragma omp parallel
    {
        std::vector<long long> hist(M.field()->q());
#pragma omp for schedule(dynamic, 4)
        for (int i = 0; i < n; ++i) {
            long long base = (long long)i * n;
            if (base >= best.load(std::memory_order_relaxed)) continue;
            for (int j = i + 1; j < n; ++j) {
                long long idx = base + j;
                if (idx >= best.load(std::memory_order_relaxed)) break;
                if (!pair_balanced(M, i, j, hist)) {
                    long long cur = best.load(std::memory_order_relaxed);
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                    break;
                }
            }
        }
    }
    return report_for(M, best.load());
}

bool is_normalized(const GhMatrix& M) {
    for (int j = 0; j < M.n(); ++j)
        if (M.at(0, j) != 0) return false;
    for (int i = 0; i < M.n(); ++i)
        if (M.at(i, 0) != 0) return false;
    return true;
}

GhMatrix normalize(const GhMatrix& M) {
    M.ensure_valid();
    const Field& f = *M.field();
    int n = M.n();
    std::vector<Elem> out = M.cells();
    for (int j = 0; j < n; ++j) {
        Elem c = out[j];
        if (c == 0) continue;
        for (int i = 0; i < n; ++i) out[size_t(i) * n + j] = f.sub(out[size_t(i) * n + j], c);
    }
    for (int i = 0; i < n; ++i) {
        Elem c = out[size_t(i) * n];
        if (c == 0) continue;
        for (int j = 0; j < n; ++j) out[size_t(i) * n + j] = f.sub(out[size_t(i) * n + j], c);
    }
    return GhMatrix(M.field(), n, std::move(out), Validity::valid);
}

GhMatrix transpose(const GhMatrix& M) {
    M.ensure_valid();
    int n = M.n();
    std::vector<Elem> out(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[size_t(j) * n + i] = M.at(i, j);
    return GhMatrix(M.field(), n, std::move(out), Validity::valid);
}

namespace {

void check_perm(const std::vector<int>& perm, int n) {
    if ((int)perm.size() != n) throw std::invalid_argument("permutation length does not match order");
    std::vector<char> seen(n, 0);
    for (int x : perm) {
        if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

} // namespace

GhMatrix apply_moves(const GhMatrix& M, const std::vector<Move>& moves) {
    M.ensure_valid();
    const Field& f = *M.field();
    int n = M.n();
    std::vector<Elem> cur = M.cells();
    for (const Move& m : moves) {
        switch (m.kind) {
        case Move::Kind::row_perm: {
            check_perm(m.perm, n);
            std::vector<Elem> next(cur.size());
            for (int i = 0; i < n; ++i)
                std::copy_n(cur.begin() + size_t(m.perm[i]) * n, n, next.begin() + size_t(i) * n);
            cur = std::move(next);
            break;
        }
        case Move::Kind::col_perm: {
            check_perm(m.perm, n);
            std::vector<Elem> next(cur.size());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) next[size_t(i) * n + j] = cur[size_t(i) * n + m.perm[j]];
            cur = std::move(next);
            break;
        }
        case Move::Kind::add_to_row: {
            if (m.index < 0 || m.index >= n) throw std::invalid_argument("row index out of range");
            for (int j = 0; j < n; ++j)
                cur[size_t(m.index) * n + j] = f.add(cur[size_t(m.index) * n + j], m.scalar);
            break;
        }
        case Move::Kind::add_to_col: {
            if (m.index < 0 || m.index >= n) throw std::invalid_argument("column index out of range");
            for (int i = 0; i < n; ++i)
                cur[size_t(i) * n + m.index] = f.add(cur[size_t(i) * n + m.index], m.scalar);
            break;
        }
        }
    }
    return GhMatrix(M.field(), n, std::move(cur), Validity::valid);
}

std::optional<Word> translation_equivalent(const GhMatrix& A, const GhMatrix& B) {
    if (!A.field()->same_as(*B.field()) || A.n() != B.n())
        throw std::invalid_argument("matrices live in different spaces");
    A.ensure_valid();
    B.ensure_valid();
    const Field& f = *A.field();
    int n = A.n();

    std::unordered_set<std::string> rows_b;
    for (int i = 0; i < n; ++i) rows_b.insert(word_key(B.row_word(i)));

    Word a0 = A.row_word(0);
    Word v(n), t(n);
    for (int bi = 0; bi < n; ++bi) {
        for (int s = 0; s < n; ++s) v[s] = f.sub(B.at(bi, s), a0[s]);
        bool ok = true;
        for (int ai = 0; ai < n && ok; ++ai) {
            for (int s = 0; s < n; ++s) t[s] = f.add(A.at(ai, s), v[s]);
            ok = rows_b.count(word_key(t)) > 0;
        }
        if (ok) return v;
    }
    return std::nullopt;
}

} // namespace ghkit
