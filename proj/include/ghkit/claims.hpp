#pragma once

#include <string>
#include <vector>

#include "ghkit/field.hpp"

namespace ghkit {

struct ClaimResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

// Property sweeps over a battery of constructed matrices for field f and
// tower heights up to h: construction validity, the rank/kernel identities
// between row code and full code, the Kronecker-sum formulas, the target
// builders over their feasible grids, kernel puncturing, serial/parallel
// agreement, and an aggregate row per published bound.  Row ids and order
// are fixed; every row passes on a healthy build.
std::vector<ClaimResult> verify_claims(const FieldPtr& f, int h);

} // namespace ghkit
