#include "ghkit/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ghkit/invariants.hpp"

namespace ghkit {

namespace {

const char* kHeader = "file\tq\tlambda\tn\trank\tker\trank_p\tker_p\tself_orthogonal\tmin_distance";

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

CatalogRow catalog_row(const std::string& file, const GhMatrix& m) {
    InvariantProfile p = profile(m);
    CatalogRow r;
    r.file = file;
    r.q = p.q;
    r.lambda = p.lambda;
    r.n = p.n;
    r.rank = p.rank;
    r.ker = p.ker;
    r.rank_p = p.rank_p;
    r.ker_p = p.ker_p;
    r.self_orthogonal = p.self_orthogonal;
    r.min_distance = p.min_distance;
    return r;
}

std::string format_catalog(std::vector<CatalogRow> rows) {
    std::sort(rows.begin(), rows.end(),
              [](const CatalogRow& a, const CatalogRow& b) { return a.sort_key() < b.sort_key(); });
    std::ostringstream out;
    out << kHeader << "\n";
    for (const CatalogRow& r : rows) {
        out << r.file << "\t" << r.q << "\t" << r.lambda << "\t" << r.n << "\t" << r.rank << "\t"
            << r.ker << "\t" << r.rank_p << "\t" << r.ker_p << "\t" << (r.self_orthogonal ? 1 : 0)
            << "\t" << r.min_distance << "\n";
    }
    return out.str();
}

std::vector<CatalogRow> parse_catalog(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::runtime_error("catalog index has an unexpected header");
    std::vector<CatalogRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f = split_tabs(line);
        if (f.size() != 10) throw std::runtime_error("catalog row has " + std::to_string(f.size()) + " fields");
        CatalogRow r;
        r.file = f[0];
        r.q = std::stoi(f[1]);
        r.lambda = std::stoll(f[2]);
        r.n = std::stoll(f[3]);
        r.rank = std::stoi(f[4]);
        r.ker = std::stoi(f[5]);
        r.rank_p = std::stoi(f[6]);
        r.ker_p = std::stoi(f[7]);
        r.self_orthogonal = f[8] == "1";
        r.min_distance = std::stoi(f[9]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_catalog_file(const std::string& path, std::vector<CatalogRow> rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << format_catalog(std::move(rows));
    if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<CatalogRow> read_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

std::vector<std::vector<CatalogRow>> profile_groups(std::vector<CatalogRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const CatalogRow& a, const CatalogRow& b) {
        if (a.profile_key() != b.profile_key()) return a.profile_key() < b.profile_key();
        return a.file < b.file;
    });
    std::vector<std::vector<CatalogRow>> groups;
    for (CatalogRow& r : rows) {
        if (groups.empty() || groups.back().front().profile_key() != r.profile_key())
            groups.emplace_back();
        groups.back().push_back(std::move(r));
    }
    return groups;
}

} // namespace ghkit
