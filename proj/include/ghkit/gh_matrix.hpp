#pragma once

#include <atomic>
#include <optional>
#include <vector>

#include "ghkit/field.hpp"

namespace ghkit {

enum class Validity : unsigned char { unchecked, valid, invalid };

// Verdict of a generalized-Hadamard check.  For an invalid matrix, (row_a,
// row_b) is the first offending row pair in row-major pair order (0-based)
// and histogram[x] counts occurrences of x among the coordinatewise
// differences of that pair.
struct ValidityReport {
    bool valid = false;
    int row_a = -1;
    int row_b = -1;
    std::vector<long long> histogram;
};

// Square matrix of order n = q*lambda over GF(q).  It is generalized
// Hadamard iff for every pair of distinct rows, the multiset of
// coordinatewise differences contains each field element exactly lambda
// times.  Construction rejects malformed shapes (n not a positive multiple
// of q, out-of-range entries); whether the matrix actually satisfies the
// difference property is a separate verdict, cached as a tri-state.
class GhMatrix {
public:
    GhMatrix(FieldPtr field, int n, std::vector<Elem> cells, Validity v = Validity::unchecked);
    GhMatrix(const GhMatrix& o)
        : field_(o.field_), n_(o.n_), lambda_(o.lambda_), cells_(o.cells_), validity_(o.validity_.load()) {}
    GhMatrix& operator=(const GhMatrix& o);

    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    int lambda() const { return lambda_; }
    Elem at(int i, int j) const { return cells_[size_t(i) * n_ + j]; }
    const std::vector<Elem>& cells() const { return cells_; }
    Word row_word(int i) const {
        return Word(cells_.begin() + size_t(i) * n_, cells_.begin() + size_t(i + 1) * n_);
    }

    Validity validity() const { return validity_.load(std::memory_order_relaxed); }
    void set_validity(Validity v) const { validity_.store(v, std::memory_order_relaxed); }
    // Validate if unchecked; throw std::invalid_argument if not a GH matrix.
    void ensure_valid() const;

    bool operator==(const GhMatrix& o) const {
        return field_->same_as(*o.field_) && n_ == o.n_ && cells_ == o.cells_;
    }

private:
    FieldPtr field_;
    int n_;
    int lambda_;
    std::vector<Elem> cells_;
    mutable std::atomic<Validity> validity_;
};

// Full GH check.  is_gh uses the OpenMP kernel and is_gh_serial the serial
// reference; both always recompute and report the same first violation.
// The verdict is cached on M as a side effect.
ValidityReport is_gh(const GhMatrix& M);
ValidityReport is_gh_serial(const GhMatrix& M);

bool is_normalized(const GhMatrix& M);

// Zero out the first row (column translations by -M[0][j]), then the first
// column (row translations by -M[i][0]).  Idempotent; preserves validity.
GhMatrix normalize(const GhMatrix& M);

GhMatrix transpose(const GhMatrix& M);

// Equivalence moves: row/column permutations and adding a scalar to every
// entry of one row or column.
struct Move {
    enum class Kind { row_perm, col_perm, add_to_row, add_to_col };
    Kind kind;
    std::vector<int> perm; // gather indices: output i takes input perm[i]
    int index = 0;
    Elem scalar = 0;

    static Move row_perm_of(std::vector<int> p) { return {Kind::row_perm, std::move(p), 0, 0}; }
    static Move col_perm_of(std::vector<int> p) { return {Kind::col_perm, std::move(p), 0, 0}; }
    static Move add_to_row(int i, Elem s) { return {Kind::add_to_row, {}, i, s}; }
    static Move add_to_col(int j, Elem s) { return {Kind::add_to_col, {}, j, s}; }
};

GhMatrix apply_moves(const GhMatrix& M, const std::vector<Move>& moves);

// Search for v with {rows of A} + v = {rows of B} as sets.  Any such v is
// the difference of some row of B and a fixed row of A, so at most n
// candidates are tried, in B's row order.
std::optional<Word> translation_equivalent(const GhMatrix& A, const GhMatrix& B);

} // namespace ghkit
