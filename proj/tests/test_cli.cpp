#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "modulilog/cli_app.hpp"
#include "modulilog/json_io.hpp"

#include "oracles.hpp"

using namespace modulilog;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("partition and face JSON round-trips, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : facets(n)) {
            const auto j = partition_json(p);
            CHECK(partition_from_json(nlohmann::json::parse(j.dump())) == p);
        }
        for (const auto& v : vertices(n)) {
            const auto j = face_json(v);
            CHECK(face_from_json(nlohmann::json::parse(j.dump())) == v);
        }
    }
}

TEST_CASE("partition JSON accepts the co-part and canonicalizes") {
    const nlohmann::json j = {{"n", 2}, {"part", {"s2", "1", "inf"}}};
    const auto p = partition_from_json(j);
    CHECK(p == partition_from_json(nlohmann::json{{"n", 2}, {"part", {"0", "s1"}}}));
}

TEST_CASE("complex JSON forms") {
    CHECK(complex_from_json(nlohmann::json::parse("0.5")) == std::complex<double>(0.5));
    CHECK(complex_from_json(nlohmann::json::parse(R"({"re":1.0,"im":-2.0})")) ==
          std::complex<double>(1.0, -2.0));
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"("nope")")), Error);
}

TEST_CASE("facets subcommand emits five pentagon components") {
    const auto r = run({"facets", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 5);
    CHECK(j[0]["n"] == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const auto first = run({"check-avoidance", "--n", "2", "--a", "0.5,0;0.3,0"});
    const auto second = run({"check-avoidance", "--n", "2", "--a", "0.5,0;0.3,0"});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);

    const auto sweep1 = run({"check-avoidance", "--n", "2", "--sweep", "5", "--seed", "11"});
    const auto sweep2 = run({"check-avoidance", "--n", "2", "--sweep", "5", "--seed", "11"});
    REQUIRE(sweep1.code == 0);
    CHECK(sweep1.out == sweep2.out);
}

TEST_CASE("avoidance report schema") {
    const auto r = run({"check-avoidance", "--n", "2", "--a", "0.5,0;0.3,0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key :
         {"n", "a", "flags_ok", "boundary_components", "nonboundary", "faces_checked",
          "violations"})
        CHECK(j.contains(key));
    CHECK(j["violations"].empty());
    CHECK(j["faces_checked"].get<long>() == 10);
}

TEST_CASE("value outputs carry the documented keys") {
    const auto r = run({"mzv", "--index", "2", "--tol", "1e-6"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("value"));
    CHECK(j.contains("est_error"));
    CHECK(j.contains("terms_or_panels"));
    CHECK(std::abs(j["value"]["re"].get<double>() - 1.6449341) <= 2e-6);

    const auto quad = run({"itint", "--a", "2;0", "--tol", "1e-8"});
    REQUIRE(quad.code == 0);
    const auto qj = nlohmann::json::parse(quad.out);
    CHECK(std::abs(qj["value"]["re"].get<double>() + oracles::li2_half_closed()) <= 1e-6);
}

TEST_CASE("polylog subcommand with complex arguments") {
    const auto r = run({"polylog", "--index", "2", "--x", "0.3,0.4", "--tol", "1e-8"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].contains("re"));
    CHECK(j["value"].contains("im"));
}

TEST_CASE("period matrix subcommand formats") {
    const auto json_run = run({"period-matrix", "--z", "0.5,0", "--tol", "1e-8"});
    REQUIRE(json_run.code == 0);
    const auto j = nlohmann::json::parse(json_run.out);
    CHECK(j["size"] == 3);
    CHECK(j["rows"].size() == 3);
    CHECK(j["entries"].size() == 3);

    const auto table_run = run({"period-matrix", "--z", "0.5,0", "--format", "table"});
    REQUIRE(table_run.code == 0);
    CHECK(table_run.out.find("entries") != std::string::npos);
}

TEST_CASE("dimension jump subcommand") {
    const auto r = run({"dimension-jump", "--z-seq", "0.9;0.99", "--tol", "1e-7"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["samples"].size() == 2);
    CHECK(j["limit"]["size"] == 2);
}

TEST_CASE("vertex-image and contract subcommands") {
    const auto img = run({"vertex-image", "--n", "2", "--family", "0,s1;0,s1,s2", "--i", "1"});
    REQUIRE(img.code == 0);
    CHECK(nlohmann::json::parse(img.out)["image"] == "0");

    const auto con = run({"contract", "--n", "2", "--family", "0,s1;0,s1,s2", "--s", "s2"});
    REQUIRE(con.code == 0);
    const auto cj = nlohmann::json::parse(con.out);
    CHECK(cj["collapsed"] == 0);
    CHECK(cj["merged"] == 1);

    const auto part = run({"contract", "--n", "2", "--part", "s1,s2", "--s", "s2"});
    REQUIRE(part.code == 0);
    CHECK(nlohmann::json::parse(part.out)["collapses"] == true);
}

TEST_CASE("divisor-a subcommand") {
    const auto r = run({"divisor-a", "--n", "2", "--a", "2,0;0,0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["boundary_components"].size() == 4);
    CHECK(j["nonboundary"].size() == 1);
}

TEST_CASE("csv and dot renderings") {
    const auto csv = run({"facets", "--n", "1", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.find("n,part") == 0);

    const auto dot = run({"vertices", "--n", "2", "--format", "dot"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("graph stasheff_b2") != std::string::npos);
}

TEST_CASE("exit codes") {
    SUBCASE("usage errors exit 2") {
        CHECK(run({"no-such-command"}).code == 2);
        CHECK(run({"facets"}).code == 2); // missing --n
        CHECK(run({"contract", "--n", "2", "--s", "s1"}).code == 2);
    }
    SUBCASE("domain errors exit 1 with structured stderr") {
        const auto r = run({"itint", "--a", "0;2,0", "--tol", "1e-6"});
        CHECK(r.code == 1);
        const auto j = nlohmann::json::parse(r.err);
        CHECK(j["error"]["code"] == "precondition");
    }
    SUBCASE("help exits 0") {
        CHECK(run({"--help"}).code == 0);
    }
}

TEST_CASE("environment variable sets the default tolerance") {
    setenv("MODULILOG_TOL", "1e-4", 1);
    const auto loose = run({"mzv", "--index", "2"});
    unsetenv("MODULILOG_TOL");
    const auto tight = run({"mzv", "--index", "2", "--tol", "1e-7"});
    REQUIRE(loose.code == 0);
    REQUIRE(tight.code == 0);
    const auto lj = nlohmann::json::parse(loose.out);
    const auto tj = nlohmann::json::parse(tight.out);
    CHECK(lj["terms_or_panels"].get<long>() < tj["terms_or_panels"].get<long>());
}
