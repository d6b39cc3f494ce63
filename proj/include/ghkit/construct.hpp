#pragma once

#include <stdexcept>
#include <vector>

#include "ghkit/gh_matrix.hpp"

namespace ghkit {

// Requested invariants fall outside the realizable set (a theorem-level
// exclusion, not a usage mistake).
class infeasible_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Multiplication table of F_q under the standard element order; normalized,
// lambda = 1.
GhMatrix s_q(const FieldPtr& f);

// s_q with columns 1 and 2 (0-based) exchanged; requires q >= 3.  Its row
// set meets the row set of s_q only in the zero word when q > 3.
GhMatrix s_q_swapped(const FieldPtr& f);

// t-fold Kronecker sum of s_q: order q^t, row code linear of dimension t.
GhMatrix sylvester(const FieldPtr& f, int t);

// Generators v_1..v_h of the row space of sylvester(f, h):
// v_i[c] = elem_order[(c / q^(h-i)) mod q].
std::vector<Word> sylvester_generators(const FieldPtr& f, int h);

// Block matrix with block (i,j) = h[i][j] + bs[i]; bs must hold one block
// matrix per row of h, all of equal order over h's field.
GhMatrix kronecker(const GhMatrix& h, const std::vector<GhMatrix>& bs);

// A switching step: rows of the host matrix partition into cosets of
// K = span(kernel_generators); the coset of coset_reps[j] gets
// block_vectors[j] added to each of its rows.  Block vectors are 0/1 words
// supported on exactly one group of columns on which all of K coincides.
struct SwitchPlan {
    std::vector<Word> kernel_generators;
    std::vector<Word> coset_reps;
    std::vector<Word> block_vectors;
};

GhMatrix switch_cosets(const GhMatrix& h, const SwitchPlan& plan);

// Matrix of order q^h whose code has kernel dimension exactly k.  Feasible
// k: {1,...,h+1}, except q=3, h=2 where only {2,3} occur.  Requires q > 2,
// h >= 2.
GhMatrix build_kernel_target(const FieldPtr& f, int h, int k);

// Seeded variant: from a matrix H(q,s) with s > 1 not a multiple of q and
// q prime, builds order q^h*s with kernel dimension exactly k, feasible
// k: {1,...,h}.
GhMatrix build_kernel_target(const FieldPtr& f, int h, int k, const GhMatrix& seed);

// Matrix of order q^h whose code has kernel dimension k and rank r, via
// r-h-1 switches on sylvester(f, h).  Feasible: ceil((h+2)/2) <= k <= h and
// r in {h+2, ..., k + q^(h+1-k) - 1}.
GhMatrix build_rank_kernel_target(const FieldPtr& f, int h, int k, int r);

} // namespace ghkit
