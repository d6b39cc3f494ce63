#pragma once

#include "ghkit/gh_matrix.hpp"

// Hand-transcribed H(3,3) of order 9 with profile (rank 4, ker 2): a
// Sylvester matrix with one coset switched.
inline ghkit::GhMatrix fixture_order9_ker2() {
    static const ghkit::Elem rows[9][9] = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 2, 1, 2, 0, 0, 1, 2}, {0, 2, 1, 0, 2, 1, 0, 2, 1},
        {0, 0, 0, 1, 1, 1, 2, 2, 2}, {0, 1, 2, 2, 0, 1, 2, 0, 1}, {0, 2, 1, 1, 0, 2, 2, 1, 0},
        {0, 0, 0, 2, 2, 2, 1, 1, 1}, {0, 1, 2, 0, 1, 2, 1, 2, 0}, {0, 2, 1, 2, 1, 0, 1, 0, 2}};
    std::vector<ghkit::Elem> cells;
    for (auto& r : rows) cells.insert(cells.end(), r, r + 9);
    return ghkit::GhMatrix(ghkit::field_new(3, 1), 9, std::move(cells));
}

// Hand-transcribed H(3,2) of order 6 with profile (rank 5, ker 1); its rank
// meets the n-1 bound with equality and its row span is not self-orthogonal.
inline ghkit::GhMatrix fixture_order6_ker1() {
    static const ghkit::Elem rows[6][6] = {{0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 2, 2},
                                           {0, 1, 2, 0, 1, 2}, {0, 1, 0, 2, 2, 1},
                                           {0, 2, 1, 2, 1, 0}, {0, 2, 2, 1, 0, 1}};
    std::vector<ghkit::Elem> cells;
    for (auto& r : rows) cells.insert(cells.end(), r, r + 6);
    return ghkit::GhMatrix(ghkit::field_new(3, 1), 6, std::move(cells));
}
