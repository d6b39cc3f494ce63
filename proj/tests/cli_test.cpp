#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "ghkit/construct.hpp"
#include "ghkit/ghm_io.hpp"
#include "fixtures.hpp"

using namespace ghkit;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string output; // stdout and stderr combined
};

RunResult run_tool(const std::string& args) {
    std::string cmd = std::string(GHTOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path work_dir() {
    fs::path d = fs::temp_directory_path() / "ghkit_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("gen sylvester writes a loadable matrix") {
    fs::path dir = work_dir();
    std::string out = (dir / "s9.ghm").string();
    RunResult r = run_tool("gen sylvester --q 3 --t 2 -o " + out);
    CAPTURE(r.output);
    REQUIRE(r.code == 0);
    REQUIRE(has(r.output, "order 9, lambda 3"));
    REQUIRE(read_ghm_file(out) == sylvester(field_new(3, 1), 2));

    RunResult chk = run_tool("check " + out);
    REQUIRE(chk.code == 0);
    REQUIRE(has(chk.output, "gh: valid"));
    REQUIRE(has(chk.output, "normalized: yes"));

    REQUIRE(run_tool("gen sylvester --q 6 --t 2 -o " + (dir / "x.ghm").string()).code == 2);
}

TEST_CASE("gen target reproduces the order-9 fixture and rejects infeasible kernels") {
    fs::path dir = work_dir();
    std::string out = (dir / "t.ghm").string();
    RunResult r = run_tool("gen target --q 3 --h 2 --kernel 2 -o " + out);
    CAPTURE(r.output);
    REQUIRE(r.code == 0);
    REQUIRE(read_ghm_file(out) == fixture_order9_ker2());

    RunResult bad = run_tool("gen target --q 3 --h 2 --kernel 1 -o " + (dir / "no.ghm").string());
    REQUIRE(bad.code == 1);
    REQUIRE(has(bad.output, "realizable"));
    REQUIRE(!fs::exists(dir / "no.ghm"));

    // --rank and --seed are mutually exclusive
    write_ghm_file(fixture_order6_ker1(), (dir / "seed.ghm").string());
    RunResult both = run_tool("gen target --q 3 --h 2 --kernel 2 --rank 4 --seed " +
                              (dir / "seed.ghm").string() + " -o " + (dir / "no2.ghm").string());
    REQUIRE(both.code == 2);

    RunResult seeded = run_tool("gen target --q 3 --h 2 --kernel 1 --seed " +
                                (dir / "seed.ghm").string() + " -o " + (dir / "s18.ghm").string());
    CAPTURE(seeded.output);
    REQUIRE(seeded.code == 0);
    REQUIRE(has(seeded.output, "order 18"));

    RunResult ranked = run_tool("gen target --q 4 --h 2 --kernel 2 --rank 5 -o " +
                                (dir / "r5.ghm").string());
    REQUIRE(ranked.code == 0);
    GhMatrix m = read_ghm_file((dir / "r5.ghm").string());
    REQUIRE(rank_q(c_code(m)) == 5);
}

TEST_CASE("inv reports invariants and verdicts deterministically") {
    fs::path dir = work_dir();
    std::string out = (dir / "t.ghm").string();
    REQUIRE(run_tool("gen target --q 3 --h 2 --kernel 2 -o " + out).code == 0);

    RunResult a = run_tool("inv --json " + out);
    REQUIRE(a.code == 0);
    nlohmann::json j = nlohmann::json::parse(a.output);
    REQUIRE(j["rank"] == 4);
    REQUIRE(j["ker"] == 2);
    REQUIRE(j["min_distance"] == 6);
    REQUIRE(j["bounds"].size() == 10);

    RunResult b = run_tool("inv --json " + out);
    REQUIRE(b.output == a.output); // byte-identical across runs

    RunResult text = run_tool("inv " + out);
    REQUIRE(text.code == 0);
    REQUIRE(has(text.output, "rank 4  ker 2"));
    REQUIRE(!has(text.output, "FAIL"));
}

TEST_CASE("check flags a corrupted matrix with its first bad row pair") {
    fs::path dir = work_dir();
    std::string path = (dir / "bad.ghm").string();
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("ghm 1\nq=3 p=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n0 2 2\n", f);
        fclose(f);
    }
    RunResult r = run_tool("check " + path);
    REQUIRE(r.code == 1);
    REQUIRE(has(r.output, "gh: invalid (rows 0 and 2)"));

    REQUIRE(run_tool("check " + (dir / "absent.ghm").string()).code == 2);
    std::string garbled = (dir / "garbled.ghm").string();
    {
        FILE* f = fopen(garbled.c_str(), "w");
        fputs("not a matrix\n", f);
        fclose(f);
    }
    REQUIRE(run_tool("check " + garbled).code == 2);
}

TEST_CASE("puncture reduces the kernel by one") {
    fs::path dir = work_dir();
    std::string big = (dir / "s9.ghm").string();
    REQUIRE(run_tool("gen sylvester --q 3 --t 2 -o " + big).code == 0);
    std::string small = (dir / "p3.ghm").string();
    RunResult r = run_tool("puncture " + big + " -o " + small);
    CAPTURE(r.output);
    REQUIRE(r.code == 0);
    REQUIRE(has(r.output, "order 3, ker 2"));
    REQUIRE(read_ghm_file(small) == s_q(field_new(3, 1)));

    // a trivial kernel leaves nothing to puncture
    std::string six = (dir / "six.ghm").string();
    write_ghm_file(fixture_order6_ker1(), six);
    REQUIRE(run_tool("puncture " + six + " -o " + (dir / "no.ghm").string()).code == 1);

    REQUIRE(run_tool("puncture --vector 9 " + big + " -o " + (dir / "no2.ghm").string()).code == 2);
}

TEST_CASE("catalog indexes, lists and groups") {
    fs::path dir = work_dir();
    write_ghm_file(fixture_order9_ker2(), (dir / "a.ghm").string());
    write_ghm_file(fixture_order6_ker1(), (dir / "b.ghm").string());
    // an equivalent transform of the order-9 fixture: same profile, new file
    GhMatrix moved = normalize(apply_moves(fixture_order9_ker2(),
                                           {Move::row_perm_of({1, 0, 2, 3, 4, 5, 6, 7, 8})}));
    write_ghm_file(moved, (dir / "c.ghm").string());

    RunResult add = run_tool("catalog add " + dir.string());
    CAPTURE(add.output);
    REQUIRE(add.code == 0);
    REQUIRE(has(add.output, "indexed 3 matrices"));
    REQUIRE(fs::exists(dir / "catalog.tsv"));

    RunResult list = run_tool("catalog list " + dir.string());
    REQUIRE(list.code == 0);
    REQUIRE(has(list.output, "a.ghm\t3\t3\t9\t4\t2"));
    REQUIRE(has(list.output, "b.ghm\t3\t2\t6\t5\t1"));

    RunResult dedup = run_tool("catalog dedup " + dir.string());
    CAPTURE(dedup.output);
    REQUIRE(dedup.code == 0);
    REQUIRE(has(dedup.output, "profile groups"));
    REQUIRE(has(dedup.output, "group 1:"));
    REQUIRE(has(dedup.output, "group 2:"));
    REQUIRE(!has(dedup.output, "group 3:")); // a.ghm and c.ghm share a profile

    REQUIRE(run_tool("catalog list " + (dir / "missing").string()).code == 2);
}

TEST_CASE("gen kron multiplies orders") {
    fs::path dir = work_dir();
    std::string host = (dir / "s3.ghm").string();
    std::string block = (dir / "six.ghm").string();
    write_ghm_file(s_q(field_new(3, 1)), host);
    write_ghm_file(fixture_order6_ker1(), block);
    std::string out = (dir / "k18.ghm").string();
    RunResult r = run_tool("gen kron -H " + host + " -B " + block + " -o " + out);
    CAPTURE(r.output);
    REQUIRE(r.code == 0);
    REQUIRE(has(r.output, "order 18, lambda 6"));
    GhMatrix m = read_ghm_file(out);
    REQUIRE(is_gh(m).valid);

    // one file or exactly one per host row
    RunResult wrong = run_tool("gen kron -H " + host + " -B " + block + "," + block + " -o " +
                               (dir / "no.ghm").string());
    REQUIRE(wrong.code == 2);
    RunResult three = run_tool("gen kron -H " + host + " -B " + block + "," + block + "," + block +
                               " -o " + (dir / "k18b.ghm").string());
    REQUIRE(three.code == 0);
    REQUIRE(read_ghm_file((dir / "k18b.ghm").string()) == m);
}

TEST_CASE("verify-claims passes and usage errors exit 2") {
    RunResult r = run_tool("verify-claims --q 3 --h 2");
    CAPTURE(r.output);
    REQUIRE(r.code == 0);
    REQUIRE(has(r.output, "claims:"));
    REQUIRE(!has(r.output, "FAIL"));

    REQUIRE(run_tool("").code == 2);
    REQUIRE(run_tool("frobnicate").code == 2);
    REQUIRE(run_tool("gen sylvester --q 3").code == 2);       // missing --t and -o
    REQUIRE(run_tool("gen sylvester --q 3 --t 2").code == 2); // missing -o
    REQUIRE(run_tool("verify-claims --q 3").code == 2);
}
