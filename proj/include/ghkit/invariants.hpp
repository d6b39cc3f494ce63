#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghkit/gh_code.hpp"
#include "ghkit/gh_matrix.hpp"

namespace ghkit {

// Everything the bound checks need, computed in one pass over a matrix.
// n = p^t * s with p not dividing s; h = t/e when that is an integer,
// otherwise -1 and the h-indexed bounds are reported as not applicable.
struct InvariantProfile {
    int q = 0, p = 0, e = 1;
    long long lambda = 0, n = 0;
    int t = 0;
    long long s = 1;
    int h = -1;
    int rank = 0, ker = 0;       // dimensions over GF(q)
    int rank_p = 0, ker_p = 0;   // dimensions over GF(p)
    Rational ker_p_units;        // ker_p / e, the kernel bound's middle term
    bool self_orthogonal = false; // span of the rows against itself
    bool self_dual = false;       // the full code equals its dual
    int min_distance = 0;
    bool dual_has_one = false; // 1 in the dual of the row span
    bool dual_has_e1 = false;  // (1,0,...,0) in the dual of the row span
};

// Profile of a valid matrix (normalized internally first).  The
// rank/kernel identities between row code and full code are asserted;
// a violation throws logic_error.
InvariantProfile profile(const GhMatrix& m);

enum class BoundStatus { pass, fail, not_applicable };

struct BoundVerdict {
    std::string id;
    BoundStatus status = BoundStatus::not_applicable;
    std::string detail;
};

// Evaluate every published bound against a profile, hypothesis-gated.
// Order and ids are fixed: kernel-range, rank-max, rank-half,
// self-orthogonal, rank-window, rank-for-kernel, kernel-max, self-dual,
// dual-one, dual-unit.
std::vector<BoundVerdict> verify_bounds(const InvariantProfile& p);

struct NoneqCertificate {
    std::string invariant; // first differing invariant name
    long long a = 0, b = 0;
};

// First invariant separating the two matrices (rank, ker, rank_p, ker_p,
// min_distance, in that order), or nothing when all agree; agreement never
// implies equivalence.  Requires equal (q, n).
std::optional<NoneqCertificate> nonequivalence_certificate(const GhMatrix& a, const GhMatrix& b);

} // namespace ghkit
