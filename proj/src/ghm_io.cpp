#include "ghkit/ghm_io.hpp"

#include <fstream>
#include <sstream>

namespace ghkit {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

long long parse_int(const std::string& tok, const char* what) {
    size_t pos = 0;
    long long v;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ghm_parse_error(std::string("bad integer for ") + what + ": '" + tok + "'");
    }
    if (pos != tok.size() || v < 0)
        throw ghm_parse_error(std::string("bad integer for ") + what + ": '" + tok + "'");
    return v;
}

long long keyed_int(std::istringstream& in, const char* key) {
    std::string tok;
    if (!(in >> tok)) throw ghm_parse_error(std::string("missing parameter ") + key);
    std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ghm_parse_error(std::string("expected parameter ") + key + "=..., found '" + tok + "'");
    return parse_int(tok.substr(prefix.size()), key);
}

} // namespace

GhMatrix parse_ghm(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != "ghm 1")
        throw ghm_parse_error("unsupported header (expected 'ghm 1')");
    if (lines.size() < 2) throw ghm_parse_error("missing parameter line");

    std::istringstream params(lines[1]);
    long long q = keyed_int(params, "q");
    long long p = keyed_int(params, "p");
    long long e = keyed_int(params, "e");
    long long lambda = keyed_int(params, "lambda");
    long long n = keyed_int(params, "n");
    std::string extra;
    if (params >> extra) throw ghm_parse_error("trailing tokens on the parameter line");

    long long pe = 1;
    for (long long i = 0; i < e; ++i) pe *= p;
    if (pe != q) throw ghm_parse_error("q does not equal p^e");
    if (n != q * lambda) throw ghm_parse_error("n does not equal q*lambda");

    size_t body = 2;
    std::vector<int> poly;
    if (body < lines.size() && lines[body].rfind("poly=", 0) == 0) {
        std::string coeff_list = lines[body].substr(5);
        std::istringstream ps(coeff_list);
        std::string tok;
        while (std::getline(ps, tok, ',')) poly.push_back((int)parse_int(tok, "poly coefficient"));
        if ((long long)poly.size() != e + 1)
            throw ghm_parse_error("defining polynomial needs e+1 coefficients");
        ++body;
    } else if (e > 1) {
        throw ghm_parse_error("poly line is required when e > 1");
    }

    FieldPtr f = poly.empty() ? field_new((int)p, (int)e) : field_new((int)p, (int)e, poly);

    if ((long long)(lines.size() - body) != n)
        throw ghm_parse_error("expected " + std::to_string(n) + " rows, found " +
                              std::to_string(lines.size() - body));
    std::vector<Elem> cells;
    cells.reserve((size_t)n * n);
    for (long long i = 0; i < n; ++i) {
        std::istringstream rs(lines[body + i]);
        std::string tok;
        long long cols = 0;
        while (rs >> tok) {
            long long v = parse_int(tok, "matrix entry");
            if (v >= q) throw ghm_parse_error("matrix entry " + std::to_string(v) + " is outside F_q");
            cells.push_back((Elem)v);
            ++cols;
        }
        if (cols != n)
            throw ghm_parse_error("row " + std::to_string(i) + " has " + std::to_string(cols) +
                                  " entries, expected " + std::to_string(n));
    }
    return GhMatrix(f, (int)n, std::move(cells));
}

std::string write_ghm(const GhMatrix& m) {
    const Field& f = *m.field();
    std::ostringstream out;
    out << "ghm 1\n";
    out << "q=" << f.q() << " p=" << f.p() << " e=" << f.e() << " lambda=" << m.lambda()
        << " n=" << m.n() << "\n";
    if (f.e() > 1) {
        out << "poly=";
        for (size_t i = 0; i < f.poly().size(); ++i) out << (i ? "," : "") << (int)f.poly()[i];
        out << "\n";
    }
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) out << (j ? " " : "") << (int)m.at(i, j);
        out << "\n";
    }
    return out.str();
}

GhMatrix read_ghm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ghm(buf.str());
}

void write_ghm_file(const GhMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << write_ghm(m);
    if (!out) throw std::runtime_error("failed writing " + path);
}

const char* bound_status_name(BoundStatus s) {
    switch (s) {
    case BoundStatus::pass: return "pass";
    case BoundStatus::fail: return "fail";
    default: return "not_applicable";
    }
}

nlohmann::ordered_json inv_json(const InvariantProfile& p, const std::vector<BoundVerdict>& verdicts) {
    nlohmann::ordered_json j;
    j["q"] = p.q;
    j["lambda"] = p.lambda;
    j["n"] = p.n;
    j["rank"] = p.rank;
    j["ker"] = p.ker;
    j["rank_p_int"] = p.rank_p;
    j["ker_p_int"] = p.ker_p;
    j["ker_p_q_units"] = p.ker_p_units.str();
    j["self_orthogonal"] = p.self_orthogonal;
    j["self_dual"] = p.self_dual;
    j["min_distance"] = p.min_distance;
    nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
    for (const BoundVerdict& v : verdicts) {
        nlohmann::ordered_json b;
        b["id"] = v.id;
        b["status"] = bound_status_name(v.status);
        b["detail"] = v.detail;
        bounds.push_back(std::move(b));
    }
    j["bounds"] = std::move(bounds);
    return j;
}

std::string inv_text(const InvariantProfile& p, const std::vector<BoundVerdict>& verdicts) {
    std::ostringstream out;
    out << "q=" << p.q << " lambda=" << p.lambda << " n=" << p.n << "\n";
    out << "rank " << p.rank << "  ker " << p.ker << "\n";
    out << "rank_p " << p.rank_p << "  ker_p " << p.ker_p << " (" << p.ker_p_units.str()
        << " in GF(q) units)\n";
    out << "self-orthogonal " << (p.self_orthogonal ? "yes" : "no") << "  self-dual "
        << (p.self_dual ? "yes" : "no") << "\n";
    out << "min distance " << p.min_distance << "\n";
    out << "bounds:\n";
    for (const BoundVerdict& v : verdicts) {
        std::string status = v.status == BoundStatus::pass   ? "PASS"
                             : v.status == BoundStatus::fail ? "FAIL"
                                                             : "n/a ";
        std::string id = v.id;
        if (id.size() < 16) id.append(16 - id.size(), ' ');
        out << "  " << status << "  " << id << " " << v.detail << "\n";
    }
    return out.str();
}

} // namespace ghkit
