#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "test_util.hpp"

using nlohmann::json;

TEST_CASE("orbit-dim: stable JSON bytes and exit codes") {
    auto r = run_cli("orbit-dim \"Sp(4)\" \"2^2\" --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"dim\":6,\"gk\":3,\"odd_parts\":0}\n");

    auto table = run_cli("orbit-dim \"Sp(4)\" \"2^2\"");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("dim 6") != std::string::npos);

    auto invalid = run_cli("orbit-dim \"Sp(4)\" \"3 1\"");
    CHECK(invalid.exit_code == 2);

    auto bad_group = run_cli("orbit-dim \"Sp(3)\" \"3\"");
    CHECK(bad_group.exit_code == 2);

    auto missing = run_cli("orbit-dim \"Sp(4)\"");
    CHECK(missing.exit_code == 2);

    auto unknown = run_cli("no-such-command");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("filtration: documented keys") {
    auto r = run_cli("filtration \"Sp(4)\" \"2^2\" --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "{\"weights\":[1,1],\"dim_n1\":3,\"dim_n2\":3,\"histogram\":{\"0\":1,\"2\":3}}\n");

    auto gl = run_cli("filtration \"GL(3)\" \"2 1\" --format json");
    REQUIRE(gl.exit_code == 0);
    auto doc = json::parse(gl.output);
    CHECK(doc["weights"] == json::array({1, 0, -1}));
    CHECK(doc["dim_n1"] == 3);
    CHECK(doc["dim_n2"] == 1);
}

TEST_CASE("orbit-list with a GK cap") {
    auto r = run_cli("orbit-list \"Sp(4)\" --max-gk 3 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.output);
    CHECK(doc["group"] == "Sp(4)");
    REQUIRE(doc["orbits"].size() == 3);
    CHECK(doc["orbits"][0]["partition"] == "2^2");
    CHECK(doc["orbits"][0]["gk"] == 3);
    CHECK(doc["orbits"][2]["partition"] == "1^4");
}

TEST_CASE("levi-dim and eisenstein-dim") {
    auto levi = run_cli("levi-dim \"Sp(8)\" 4 --format json");
    REQUIRE(levi.exit_code == 0);
    CHECK(json::parse(levi.output)["radical_dim"] == 10);

    auto klingen = run_cli("levi-dim \"Sp(4)\" 1 --classical-factor --format json");
    REQUIRE(klingen.exit_code == 0);
    CHECK(json::parse(klingen.output)["radical_dim"] == 3);

    auto overfull = run_cli("levi-dim \"Sp(4)\" 3");
    CHECK(overfull.exit_code == 2);

    auto eis = run_cli("eisenstein-dim \"GL(5)\" 4,1 --inducing-gk 0 --format json");
    REQUIRE(eis.exit_code == 0);
    auto doc = json::parse(eis.output);
    CHECK(doc["kind"] == "eisenstein");
    CHECK(doc["value"] == 4);

    auto klingen_eis = run_cli(
        "eisenstein-dim \"GSp(4)\" 1 --classical-factor --inducing-gk 1 --format json");
    REQUIRE(klingen_eis.exit_code == 0);
    CHECK(json::parse(klingen_eis.output)["value"] == 4);
}

TEST_CASE("search: dim6 reproduction through the CLI") {
    auto r = run_cli("search --dim6 m=1,k=3,r=2 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.output);
    CHECK(doc["group"] == "Sp(16)");
    CHECK(doc["target_gk"] == 56);
    std::vector<std::string> solutions = doc["solutions"];
    auto has = [&solutions](const std::string& s) {
        return std::find(solutions.begin(), solutions.end(), s) != solutions.end();
    };
    CHECK(has("6^2 2^2"));
    CHECK(has("6 5^2"));
    CHECK(has("8 3^2 2"));
    CHECK(has("8 4 2 1^2"));

    auto filtered =
        run_cli("search --dim6 m=1,k=3,r=2 --even-mult --even-parts --minimal-p --format json");
    REQUIRE(filtered.exit_code == 0);
    auto fdoc = json::parse(filtered.output);
    CHECK(fdoc["solutions"] == json::array({"6^2 2^2"}));

    auto by_gk = run_cli("search --group \"Sp(4)\" --gk 3 --format json");
    REQUIRE(by_gk.exit_code == 0);
    CHECK(json::parse(by_gk.output)["solutions"] == json::array({"2^2"}));

    auto bad = run_cli("search --gk 3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("catalog: exit codes and export") {
    auto all = run_cli("catalog --all");
    CHECK(all.exit_code == 0);

    auto negative = run_cli("catalog --id pgsp4-siegel-classical --format json");
    CHECK(negative.exit_code == 0); // unbalanced as expected
    auto doc = json::parse(negative.output);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["balanced"] == false);
    CHECK(doc[0]["expected"] == false);

    auto exported = run_cli("catalog export --id hecke");
    REQUIRE(exported.exit_code == 0);
    auto rows = json::parse(exported.output);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["id"] == "hecke");
    CHECK(rows[0]["lhs"] == 1);
    CHECK(rows[0]["rhs"] == 1);

    auto ranged = run_cli("catalog --id cfgk-doubling --range 1..3 --format json");
    REQUIRE(ranged.exit_code == 0);
    CHECK(json::parse(ranged.output).size() == 9);

    auto listed = run_cli("catalog list --format json");
    REQUIRE(listed.exit_code == 0);
    CHECK(json::parse(listed.output).size() == 22);

    auto unknown = run_cli("catalog --id zzz");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("check: descriptor files and expectation exit codes") {
    const char* path = "cli_test_spec.json";
    {
        std::ofstream out(path);
        out << R"json({
            "name": "wo-model",
            "mode": "extended",
            "lhs_groups": ["PGSp(4)"],
            "rhs_functionals": [
                {"kind": "explicit_period", "args": {"reductive_dim": 3, "unipotent_dim": 4}},
                {"kind": "eisenstein", "args": {"inducing_dim": 0, "radical_dim": 3}}
            ],
            "expected_balanced": true
        })json";
    }
    auto r = run_cli(std::string("check --spec ") + path + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"name\":\"wo-model\",\"lhs\":10,\"rhs\":10,\"deficit\":0,\"balanced\":true}\n");

    {
        std::ofstream out(path);
        out << R"json({
            "name": "wo-model",
            "mode": "extended",
            "lhs_groups": ["PGSp(4)"],
            "rhs_functionals": [
                {"kind": "explicit_period", "args": {"reductive_dim": 3, "unipotent_dim": 4}},
                {"kind": "eisenstein", "args": {"inducing_dim": 0, "radical_dim": 3}}
            ],
            "expected_balanced": false
        })json";
    }
    auto mismatch = run_cli(std::string("check --spec ") + path);
    CHECK(mismatch.exit_code == 1);

    {
        std::ofstream out(path);
        out << "{ not json";
    }
    auto bad = run_cli(std::string("check --spec ") + path);
    CHECK(bad.exit_code == 2);

    auto missing = run_cli("check --spec does-not-exist.json");
    CHECK(missing.exit_code == 2);
    std::remove(path);
}

TEST_CASE("predict-theta, lemma71 and cfgk commands") {
    auto p = run_cli("predict-theta --n 2 --k 3 --format json");
    REQUIRE(p.exit_code == 0);
    CHECK(p.output ==
          "{\"n\":2,\"k\":3,\"sigma_gk\":6,\"vanishing_predicted\":false,"
          "\"generic_compatible\":true}\n");

    auto sweep = run_cli("predict-theta --n 3 --sweep 5 --format json");
    REQUIRE(sweep.exit_code == 0);
    auto rows = json::parse(sweep.output);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0]["vanishing_predicted"] == true);
    CHECK(rows[2]["generic_compatible"] == true);

    auto lemma = run_cli("lemma71 --m 1 --k 3 --r 2 --format json");
    REQUIRE(lemma.exit_code == 0);
    CHECK(json::parse(lemma.output)["balanced"] == true);

    auto lemma_sweep = run_cli("lemma71 --sweep 4 --format json");
    REQUIRE(lemma_sweep.exit_code == 0);
    auto summary = json::parse(lemma_sweep.output);
    CHECK(summary["points"] == 4 * 4 * 3);
    CHECK(summary["all_balanced"] == true);

    auto cf = run_cli("cfgk --n 1 --k 2 --format json");
    REQUIRE(cf.exit_code == 0);
    auto cfdoc = json::parse(cf.output);
    CHECK(cfdoc["lhs"] == 17);
    CHECK(cfdoc["rhs"] == 17);
    CHECK(cfdoc["balanced"] == true);

    auto cf_sweep = run_cli("cfgk --sweep 4 --format json");
    REQUIRE(cf_sweep.exit_code == 0);
    CHECK(json::parse(cf_sweep.output)["all_balanced"] == true);

    auto usage = run_cli("cfgk --n 1");
    CHECK(usage.exit_code == 2);

    auto theta_usage = run_cli("predict-theta --n 2");
    CHECK(theta_usage.exit_code == 2);
}
