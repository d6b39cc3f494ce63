#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "ghkit/gh_matrix.hpp"

namespace ghkit {

// One indexed matrix; the non-file fields form its invariant profile.
struct CatalogRow {
    std::string file;
    int q = 0;
    long long lambda = 0, n = 0;
    int rank = 0, ker = 0, rank_p = 0, ker_p = 0;
    bool self_orthogonal = false;
    int min_distance = 0;

    auto profile_key() const {
        return std::tie(q, lambda, n, rank, ker, rank_p, ker_p, self_orthogonal, min_distance);
    }
    auto sort_key() const { return std::tie(q, n, rank, ker, file); }
};

CatalogRow catalog_row(const std::string& file, const GhMatrix& m);

// Tab-separated index with a header row, sorted by (q, n, rank, ker, file).
std::string format_catalog(std::vector<CatalogRow> rows);
std::vector<CatalogRow> parse_catalog(const std::string& text);

void write_catalog_file(const std::string& path, std::vector<CatalogRow> rows);
std::vector<CatalogRow> read_catalog_file(const std::string& path);

// Rows bucketed by identical profile, buckets in sorted order.  Matrices in
// one bucket share every indexed invariant; that never certifies
// equivalence, it only means no certificate separates them.
std::vector<std::vector<CatalogRow>> profile_groups(std::vector<CatalogRow> rows);

} // namespace ghkit
