#pragma once

#include <vector>

#include "ghkit/field.hpp"

namespace ghkit {

// A basis of a linear subspace of F^length in reduced row echelon form:
// rows sorted by pivot column, each pivot entry 1 and alone in its column.
// The RREF of a subspace is unique, so two bases are equal iff they span
// the same subspace.
struct LinearBasis {
    FieldPtr field;          // scalar field (GF(q), or GF(p) for expanded bases)
    int length = 0;          // ambient vector length
    std::vector<Word> rows;  // RREF rows
    std::vector<int> pivots; // pivot column of each row, strictly increasing

    int dim() const { return int(rows.size()); }

    // Reduce w against the basis; returns the remainder (zero iff w in span).
    Word reduce(Word w) const;
    bool contains(const Word& w) const;

    bool operator==(const LinearBasis& o) const { return length == o.length && rows == o.rows; }
};

// Incremental RREF builder.
class RrefBuilder {
public:
    RrefBuilder(FieldPtr field, int length);

    // Insert a vector; returns true if the dimension grew.
    bool insert(Word w);
    int dim() const { return int(rows_.size()); }
    LinearBasis take();
    const std::vector<Word>& rows() const { return rows_; }

private:
    FieldPtr field_;
    int length_;
    std::vector<Word> rows_;
    std::vector<int> pivots_;
};

// dim(span(a) + span(b)); bases must share field and length.
int union_dim(const LinearBasis& a, const LinearBasis& b);

// dim(span(a) n span(b)) via dim a + dim b - dim(a + b).
int intersection_dim(const LinearBasis& a, const LinearBasis& b);

} // namespace ghkit
