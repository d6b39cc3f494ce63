// Command-line front end: generate, inspect, catalog, and sweep GH matrices.
#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghkit/catalog.hpp"
#include "ghkit/claims.hpp"
#include "ghkit/construct.hpp"
#include "ghkit/gh_code.hpp"
#include "ghkit/gh_matrix.hpp"
#include "ghkit/ghm_io.hpp"
#include "ghkit/invariants.hpp"
#include "ghkit/linear.hpp"

namespace fs = std::filesystem;
using namespace ghkit;

namespace {

// q -> GF(p^e); rejects non-prime-powers and unsupported sizes as usage errors.
FieldPtr field_for_q(int q) {
    if (q < 2) throw std::runtime_error("q must be at least 2");
    int p = 2;
    while (q % p) ++p;
    long long t = 1;
    int e = 0;
    while (t < q) {
        t *= p;
        ++e;
    }
    if (t != q) throw std::runtime_error("q must be a prime power");
    try {
        return field_new(p, e);
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(ex.what());
    }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_gen_sylvester(int q, int t, const std::string& out) {
    GhMatrix m = sylvester(field_for_q(q), t);
    write_ghm_file(m, out);
    std::cout << "wrote " << out << ": order " << m.n() << ", lambda " << m.lambda() << "\n";
    return 0;
}

int cmd_gen_kron(const std::string& hfile, const std::vector<std::string>& bfiles,
                 const std::string& out) {
    GhMatrix h = read_ghm_file(hfile);
    h.ensure_valid();
    std::vector<GhMatrix> bs;
    for (const std::string& bf : bfiles) {
        GhMatrix b = read_ghm_file(bf);
        b.ensure_valid();
        bs.push_back(std::move(b));
    }
    if (bs.size() == 1 && h.n() > 1) bs.assign(size_t(h.n()), bs.front());
    if (int(bs.size()) != h.n())
        throw std::runtime_error("-B needs one file or exactly " + std::to_string(h.n()));
    GhMatrix m = kronecker(h, bs);
    write_ghm_file(m, out);
    std::cout << "wrote " << out << ": order " << m.n() << ", lambda " << m.lambda() << "\n";
    return 0;
}

int cmd_gen_target(int q, int h, int k, std::optional<int> rank,
                   const std::string& seedfile, const std::string& out) {
    FieldPtr f = field_for_q(q);
    GhMatrix m = [&] {
        if (rank) return build_rank_kernel_target(f, h, k, *rank);
        if (!seedfile.empty()) {
            GhMatrix seed = read_ghm_file(seedfile);
            return build_kernel_target(f, h, k, seed);
        }
        return build_kernel_target(f, h, k);
    }();
    write_ghm_file(m, out);
    std::cout << "wrote " << out << ": order " << m.n() << ", lambda " << m.lambda() << "\n";
    return 0;
}

int cmd_check(const std::string& file) {
    GhMatrix m = read_ghm_file(file);
    ValidityReport r = is_gh(m);
    if (!r.valid) {
        std::cout << "gh: invalid (rows " << r.row_a << " and " << r.row_b << ")\n";
        return 1;
    }
    std::cout << "gh: valid\n";
    std::cout << "normalized: " << yesno(is_normalized(m)) << "\n";
    std::cout << "self_orthogonal: " << yesno(is_self_orthogonal(f_code(m))) << "\n";
    return 0;
}

int cmd_inv(const std::string& file, bool json) {
    GhMatrix m = read_ghm_file(file);
    InvariantProfile p = profile(m);
    std::vector<BoundVerdict> verdicts = verify_bounds(p);
    if (json)
        std::cout << inv_json(p, verdicts).dump(2) << "\n";
    else
        std::cout << inv_text(p, verdicts);
    for (const BoundVerdict& v : verdicts)
        if (v.status == BoundStatus::fail) return 1;
    return 0;
}

int cmd_puncture(const std::string& file, std::optional<int> index, const std::string& out) {
    GhMatrix m = read_ghm_file(file);
    m.ensure_valid();
    GhMatrix nm = normalize(m);
    Code c = c_code(nm);
    LinearBasis k = kernel_q(c);
    RrefBuilder ones(nm.field(), k.length);
    ones.insert(Word(size_t(k.length), 1));
    LinearBasis one_span = ones.take();

    Word v;
    if (index) {
        if (*index < 0 || *index >= k.dim())
            throw std::runtime_error("--vector index out of range (kernel dimension " +
                                     std::to_string(k.dim()) + ")");
        v = k.rows[size_t(*index)];
        if (one_span.contains(v))
            throw std::runtime_error("the selected kernel vector lies in <1>; pick another index");
    } else {
        const Word* best = nullptr;
        for (const Word& w : k.rows)
            if (!one_span.contains(w) && (!best || w < *best)) best = &w;
        if (!best) {
            std::cerr << "error: the kernel has no vector outside <1>; nothing to puncture\n";
            return 1;
        }
        v = *best;
    }

    Code punctured = puncture_by_kernel(c, v);
    GhMatrix pm = gh_code_matrix(punctured);
    write_ghm_file(pm, out);
    std::cout << "wrote " << out << ": order " << pm.n() << ", ker " << ker_q(punctured) << "\n";
    return 0;
}

int cmd_catalog_add(const std::string& dir) {
    fs::path d(dir);
    if (!fs::is_directory(d)) throw std::runtime_error(dir + " is not a directory");
    std::vector<std::string> names;
    for (const fs::directory_entry& ent : fs::directory_iterator(d))
        if (ent.is_regular_file() && ent.path().extension() == ".ghm")
            names.push_back(ent.path().filename().string());
    std::sort(names.begin(), names.end());
    std::vector<CatalogRow> rows;
    for (const std::string& name : names) {
        try {
            rows.push_back(catalog_row(name, read_ghm_file((d / name).string())));
        } catch (const std::invalid_argument& ex) {
            throw std::invalid_argument(name + ": " + ex.what());
        }
    }
    fs::path index = d / "catalog.tsv";
    write_catalog_file(index.string(), std::move(rows));
    std::cout << "indexed " << names.size() << " matrices in " << index.string() << "\n";
    return 0;
}

int cmd_catalog_list(const std::string& dir) {
    std::cout << format_catalog(read_catalog_file((fs::path(dir) / "catalog.tsv").string()));
    return 0;
}

int cmd_catalog_dedup(const std::string& dir) {
    auto groups = profile_groups(read_catalog_file((fs::path(dir) / "catalog.tsv").string()));
    std::cout << "profile groups (equivalence undecided within a group):\n";
    int gi = 0;
    for (const auto& g : groups) {
        const CatalogRow& r = g.front();
        std::cout << "group " << ++gi << ": q=" << r.q << " lambda=" << r.lambda << " n=" << r.n
                  << " rank=" << r.rank << " ker=" << r.ker << " rank_p=" << r.rank_p
                  << " ker_p=" << r.ker_p << " self_orthogonal=" << (r.self_orthogonal ? 1 : 0)
                  << " min_distance=" << r.min_distance << "\n";
        for (const CatalogRow& row : g) std::cout << "  " << row.file << "\n";
    }
    return 0;
}

int cmd_claims(int q, int h) {
    std::vector<ClaimResult> rows = verify_claims(field_for_q(q), h);
    size_t width = 0;
    for (const ClaimResult& r : rows) width = std::max(width, r.id.size());
    int passed = 0;
    for (const ClaimResult& r : rows) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id
                  << std::string(width - r.id.size() + 2, ' ') << r.detail << "\n";
        passed += r.pass ? 1 : 0;
    }
    std::cout << "claims: " << rows.size() << " checked, " << passed << " passed\n";
    return passed == int(rows.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Hadamard matrix toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    // gen
    CLI::App* gen = app.add_subcommand("gen", "generate a matrix and write it as .ghm");
    gen->require_subcommand(1);

    int sy_q = 0, sy_t = 1;
    std::string sy_out;
    CLI::App* sy = gen->add_subcommand("sylvester", "t-fold Kronecker power of s_q");
    sy->add_option("--q", sy_q, "field size (prime power)")->required();
    sy->add_option("--t", sy_t, "tower height, order q^t")->required();
    sy->add_option("-o,--out", sy_out, "output file")->required();
    sy->callback([&] { action = [&] { return cmd_gen_sylvester(sy_q, sy_t, sy_out); }; });

    std::string kr_host, kr_out;
    std::vector<std::string> kr_blocks;
    CLI::App* kr = gen->add_subcommand("kron", "Kronecker sum of a host and block matrices");
    kr->add_option("-H,--host", kr_host, "host matrix file")->required();
    kr->add_option("-B,--blocks", kr_blocks, "block file, or one file per host row")
        ->required()
        ->delimiter(',');
    kr->add_option("-o,--out", kr_out, "output file")->required();
    kr->callback([&] { action = [&] { return cmd_gen_kron(kr_host, kr_blocks, kr_out); }; });

    int tg_q = 0, tg_h = 0, tg_k = 0, tg_rank = 0;
    std::string tg_seed, tg_out;
    CLI::App* tg = gen->add_subcommand("target", "build a matrix hitting target invariants");
    tg->set_help_flag("--help", "print help");
    tg->add_option("--q", tg_q, "field size (prime power)")->required();
    tg->add_option("--h", tg_h, "tower height, order q^h")->required();
    tg->add_option("--kernel", tg_k, "target kernel dimension")->required();
    CLI::Option* tg_rank_opt = tg->add_option("--rank", tg_rank, "target rank (switching builder)");
    CLI::Option* tg_seed_opt =
        tg->add_option("--seed", tg_seed, "seed matrix H(q,s) file (seeded builder)");
    tg_rank_opt->excludes(tg_seed_opt);
    tg->add_option("-o,--out", tg_out, "output file")->required();
    tg->callback([&] {
        action = [&, has_rank = tg_rank_opt->count() > 0] {
            return cmd_gen_target(tg_q, tg_h, tg_k,
                                  has_rank ? std::optional<int>(tg_rank) : std::nullopt, tg_seed,
                                  tg_out);
        };
    });

    // check
    std::string ck_file;
    CLI::App* ck = app.add_subcommand("check", "GH validity, normalization, self-orthogonality");
    ck->add_option("file", ck_file, "matrix file")->required();
    ck->callback([&] { action = [&] { return cmd_check(ck_file); }; });

    // inv
    std::string iv_file;
    bool iv_json = false;
    CLI::App* iv = app.add_subcommand("inv", "invariant profile and bound verdicts");
    iv->add_option("file", iv_file, "matrix file")->required();
    iv->add_flag("--json", iv_json, "machine-readable report");
    iv->callback([&] { action = [&] { return cmd_inv(iv_file, iv_json); }; });

    // puncture
    std::string pu_file, pu_out;
    int pu_index = 0;
    bool pu_auto = false;
    CLI::App* pu = app.add_subcommand("puncture", "puncture the code by a kernel vector");
    pu->add_option("file", pu_file, "matrix file")->required();
    CLI::Option* pu_vec = pu->add_option("--vector", pu_index, "kernel basis vector index");
    CLI::Option* pu_auto_opt =
        pu->add_flag("--auto", pu_auto, "least kernel basis vector outside <1> (default)");
    pu_vec->excludes(pu_auto_opt);
    pu->add_option("-o,--out", pu_out, "output file")->required();
    pu->callback([&] {
        action = [&, has_vec = pu_vec->count() > 0] {
            return cmd_puncture(pu_file, has_vec ? std::optional<int>(pu_index) : std::nullopt,
                                pu_out);
        };
    });

    // catalog
    CLI::App* cat = app.add_subcommand("catalog", "maintain a directory index of matrices");
    cat->require_subcommand(1);
    std::string cat_dir;
    CLI::App* cat_add = cat->add_subcommand("add", "index every .ghm file in the directory");
    cat_add->add_option("dir", cat_dir, "directory")->required();
    cat_add->callback([&] { action = [&] { return cmd_catalog_add(cat_dir); }; });
    CLI::App* cat_list = cat->add_subcommand("list", "print the index");
    cat_list->add_option("dir", cat_dir, "directory")->required();
    cat_list->callback([&] { action = [&] { return cmd_catalog_list(cat_dir); }; });
    CLI::App* cat_dedup = cat->add_subcommand("dedup", "group index rows by full profile");
    cat_dedup->add_option("dir", cat_dir, "directory")->required();
    cat_dedup->callback([&] { action = [&] { return cmd_catalog_dedup(cat_dir); }; });

    // verify-claims
    int vc_q = 0, vc_h = 2;
    CLI::App* vc = app.add_subcommand("verify-claims", "run the library's property sweeps");
    vc->set_help_flag("--help", "print help");
    vc->add_option("--q", vc_q, "field size (prime power)")->required();
    vc->add_option("--h", vc_h, "largest tower height to sweep")->required();
    vc->callback([&] { action = [&] { return cmd_claims(vc_q, vc_h); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!action) return 2;

    try {
        return action();
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ghm_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
