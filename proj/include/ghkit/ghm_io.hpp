#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ghkit/gh_matrix.hpp"
#include "ghkit/invariants.hpp"

namespace ghkit {

// Malformed .ghm input (bad header, parameter mismatch, out-of-range body).
class ghm_parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Text format:
//   ghm 1
//   q=<q> p=<p> e=<e> lambda=<lambda> n=<n>
//   poly=<c0,c1,...,ce>          (required iff e > 1)
//   <n lines of n space-separated integers in [0, q)>
// Shape is validated on parse; GH-ness is not (run is_gh explicitly).
GhMatrix parse_ghm(const std::string& text);
std::string write_ghm(const GhMatrix& m);

GhMatrix read_ghm_file(const std::string& path);
void write_ghm_file(const GhMatrix& m, const std::string& path);

// Profile report with its bound verdicts; fixed key order for stable output.
nlohmann::ordered_json inv_json(const InvariantProfile& p, const std::vector<BoundVerdict>& verdicts);
std::string inv_text(const InvariantProfile& p, const std::vector<BoundVerdict>& verdicts);

const char* bound_status_name(BoundStatus s); // "pass" / "fail" / "not_applicable"

} // namespace ghkit
