#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "ghkit/catalog.hpp"
#include "ghkit/construct.hpp"
#include "ghkit/ghm_io.hpp"
#include "fixtures.hpp"

using namespace ghkit;
namespace fs = std::filesystem;

namespace {
fs::path temp_dir() {
    fs::path d = fs::temp_directory_path() / "ghkit_io_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}
} // namespace

TEST_CASE("canonical text for a prime-field matrix") {
    GhMatrix s3 = s_q(field_new(3, 1));
    REQUIRE(write_ghm(s3) == "ghm 1\n"
                             "q=3 p=3 e=1 lambda=1 n=3\n"
                             "0 0 0\n"
                             "0 1 2\n"
                             "0 2 1\n");
}

TEST_CASE("canonical text for an extension-field matrix includes the polynomial") {
    GhMatrix s4 = s_q(field_new(2, 2));
    std::string text = write_ghm(s4);
    REQUIRE(text == "ghm 1\n"
                    "q=4 p=2 e=2 lambda=1 n=4\n"
                    "poly=1,1,1\n"
                    "0 0 0 0\n"
                    "0 1 2 3\n"
                    "0 2 3 1\n"
                    "0 3 1 2\n");
    GhMatrix back = parse_ghm(text);
    REQUIRE(back == s4);
    REQUIRE(back.field()->poly() == std::vector<int>{1, 1, 1});
}

TEST_CASE("parse-write round trip is the identity on generated matrices") {
    std::vector<GhMatrix> ms;
    ms.push_back(fixture_order9_ker2());
    ms.push_back(fixture_order6_ker1());
    ms.push_back(sylvester(field_new(2, 2), 2));
    ms.push_back(sylvester(field_new(5, 1), 2));
    ms.push_back(sylvester(field_new(3, 3), 1));
    ms.push_back(build_rank_kernel_target(field_new(2, 2), 2, 2, 5));
    for (const GhMatrix& m : ms) {
        std::string text = write_ghm(m);
        GhMatrix back = parse_ghm(text);
        REQUIRE(back == m);
        REQUIRE(write_ghm(back) == text); // bit-exact the second time around too
    }
}

TEST_CASE("parser rejections") {
    const char* good = "ghm 1\nq=3 p=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n0 2 1\n";
    REQUIRE_NOTHROW(parse_ghm(good));
    auto bad = [](const std::string& s) { REQUIRE_THROWS_AS(parse_ghm(s), ghm_parse_error); };
    bad("");
    bad("ghm 2\nq=3 p=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n0 2 1\n");
    bad("ghm 1\n");
    bad("ghm 1\nq=3 p=3 e=1 lambda=1\n");                                // missing n
    bad("ghm 1\nq=3 x=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n0 2 1\n");       // wrong key
    bad("ghm 1\nq=3 p=3 e=1 lambda=1 n=3 z=9\n0 0 0\n0 1 2\n0 2 1\n");   // trailing token
    bad("ghm 1\nq=9 p=3 e=1 lambda=3 n=9\n");                            // q != p^e
    bad("ghm 1\nq=3 p=3 e=1 lambda=1 n=4\n");                            // n != q*lambda
    bad("ghm 1\nq=4 p=2 e=2 lambda=1 n=4\n0 0 0 0\n0 1 2 3\n0 2 3 1\n0 3 1 2\n"); // missing poly
    bad("ghm 1\nq=4 p=2 e=2 lambda=1 n=4\npoly=1,1\n0 0 0 0\n0 1 2 3\n0 2 3 1\n0 3 1 2\n");
    bad("ghm 1\nq=3 p=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n");              // short body
    bad("ghm 1\nq=3 p=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n0 2 1\n0 0 0\n");// extra row
    bad("ghm 1\nq=3 p=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n0 2 3\n");       // entry out of range
    bad("ghm 1\nq=3 p=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n0 2\n");         // short row
    bad("ghm 1\nq=3 p=3 e=1 lambda=1 n=3\n0 0 0\n0 1 2\n0 2 1 0\n");     // long row
    bad("ghm 1\nq=3 p=3 e=1 lambda=1 n=x\n0 0 0\n0 1 2\n0 2 1\n");       // non-numeric
    // a primitive-polynomial failure surfaces as invalid_argument from field construction
    REQUIRE_THROWS_AS(
        parse_ghm("ghm 1\nq=4 p=2 e=2 lambda=1 n=4\npoly=1,0,1\n0 0 0 0\n0 1 2 3\n0 2 3 1\n0 3 1 2\n"),
        std::invalid_argument);
    // an explicit poly line for e = 1 is allowed and vetted like any other
    REQUIRE(parse_ghm("ghm 1\nq=3 p=3 e=1 lambda=1 n=3\npoly=1,1\n0 0 0\n0 1 2\n0 2 1\n") ==
            s_q(field_new(3, 1)));
    REQUIRE_THROWS_AS(parse_ghm("ghm 1\nq=3 p=3 e=1 lambda=1 n=3\npoly=0,1\n0 0 0\n0 1 2\n0 2 1\n"),
                      std::invalid_argument);
}

TEST_CASE("file round trip") {
    fs::path dir = temp_dir();
    GhMatrix m = fixture_order9_ker2();
    std::string path = (dir / "m.ghm").string();
    write_ghm_file(m, path);
    REQUIRE(read_ghm_file(path) == m);
    REQUIRE_THROWS_AS(read_ghm_file((dir / "absent.ghm").string()), std::runtime_error);
}

TEST_CASE("invariant report as json has a fixed key order and stable bytes") {
    InvariantProfile p = profile(fixture_order9_ker2());
    std::vector<BoundVerdict> vs = verify_bounds(p);
    nlohmann::ordered_json j = inv_json(p, vs);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys == std::vector<std::string>{"q", "lambda", "n", "rank", "ker", "rank_p_int",
                                             "ker_p_int", "ker_p_q_units", "self_orthogonal",
                                             "self_dual", "min_distance", "bounds"});
    REQUIRE(j["q"] == 3);
    REQUIRE(j["lambda"] == 3);
    REQUIRE(j["n"] == 9);
    REQUIRE(j["rank"] == 4);
    REQUIRE(j["ker"] == 2);
    REQUIRE(j["rank_p_int"] == 4);
    REQUIRE(j["ker_p_int"] == 2);
    REQUIRE(j["ker_p_q_units"] == "2");
    REQUIRE(j["self_orthogonal"] == true);
    REQUIRE(j["self_dual"] == false);
    REQUIRE(j["min_distance"] == 6);
    REQUIRE(j["bounds"].size() == 10);
    for (const auto& b : j["bounds"]) {
        REQUIRE(b.contains("id"));
        REQUIRE(b.contains("status"));
        REQUIRE(b.contains("detail"));
        REQUIRE(b["status"] != "fail");
    }
    // byte-identical on repeated computation
    REQUIRE(inv_json(profile(fixture_order9_ker2()), verify_bounds(p)).dump(2) == j.dump(2));
}

TEST_CASE("invariant report as text") {
    InvariantProfile p = profile(fixture_order6_ker1());
    std::string t = inv_text(p, verify_bounds(p));
    REQUIRE(t.find("q=3 lambda=2 n=6") != std::string::npos);
    REQUIRE(t.find("rank 5  ker 1") != std::string::npos);
    REQUIRE(t.find("min distance 4") != std::string::npos);
    REQUIRE(t.find("FAIL") == std::string::npos);
    REQUIRE(std::string(bound_status_name(BoundStatus::pass)) == "pass");
    REQUIRE(std::string(bound_status_name(BoundStatus::fail)) == "fail");
    REQUIRE(std::string(bound_status_name(BoundStatus::not_applicable)) == "not_applicable");
}

TEST_CASE("catalog formatting sorts rows and round-trips") {
    CatalogRow a = catalog_row("b_order9.ghm", fixture_order9_ker2());
    CatalogRow b = catalog_row("a_order6.ghm", fixture_order6_ker1());
    CatalogRow c = catalog_row("c_table3.ghm", s_q(field_new(3, 1)));
    std::string text = format_catalog({a, b, c});
    REQUIRE(text ==
            "file\tq\tlambda\tn\trank\tker\trank_p\tker_p\tself_orthogonal\tmin_distance\n"
            "c_table3.ghm\t3\t1\t3\t2\t2\t2\t2\t0\t2\n"
            "a_order6.ghm\t3\t2\t6\t5\t1\t5\t1\t0\t4\n"
            "b_order9.ghm\t3\t3\t9\t4\t2\t4\t2\t1\t6\n");
    std::vector<CatalogRow> rows = parse_catalog(text);
    REQUIRE(rows.size() == 3);
    REQUIRE(format_catalog(rows) == text);
    REQUIRE(rows[0].file == "c_table3.ghm");
    REQUIRE(rows[2].profile_key() == a.profile_key());

    REQUIRE_THROWS_AS(parse_catalog("file\tq\n"), std::runtime_error);
    REQUIRE_THROWS_AS(parse_catalog(text + "short\trow\n"), std::runtime_error);
}

TEST_CASE("catalog files and profile groups") {
    fs::path dir = temp_dir();
    std::string path = (dir / "catalog.tsv").string();
    CatalogRow a = catalog_row("one.ghm", fixture_order9_ker2());
    CatalogRow b = catalog_row("two.ghm", fixture_order9_ker2()); // same profile, other file
    CatalogRow c = catalog_row("six.ghm", fixture_order6_ker1());
    write_catalog_file(path, {a, b, c});
    std::vector<CatalogRow> rows = read_catalog_file(path);
    REQUIRE(rows.size() == 3);
    std::vector<std::vector<CatalogRow>> groups = profile_groups(rows);
    REQUIRE(groups.size() == 2);
    REQUIRE(groups[0].size() == 1); // order 6 sorts first
    REQUIRE(groups[0][0].file == "six.ghm");
    REQUIRE(groups[1].size() == 2);
    REQUIRE(groups[1][0].file == "one.ghm");
    REQUIRE(groups[1][1].file == "two.ghm");
    REQUIRE_THROWS_AS(read_catalog_file((dir / "absent.tsv").string()), std::runtime_error);
}
