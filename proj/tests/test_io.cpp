#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "opuc/fixtures.hpp"
#include "opuc/io.hpp"

using namespace opuc;
using nlohmann::json;

TEST_CASE("theory round-trips through json") {
    const Theory t = fixture_theory("appendix-c");
    const json doc = theory_to_json(t);
    const Theory back = theory_from_json(doc);
    REQUIRE(back.num_observables() == t.num_observables());
    REQUIRE(back.num_preparations() == t.num_preparations());
    for (int o = 0; o < t.num_observables(); ++o)
        for (int p = 0; p < t.num_preparations(); ++p)
            CHECK(back.stats[o][p] == t.stats[o][p]);
    REQUIRE(back.decompositions.count("X") == 1);
    CHECK(back.decompositions.at("X")[0].terms.size() == 2);
}

TEST_CASE("schema errors name the offending field") {
    json doc = theory_to_json(fixture_theory("c-bit"));
    doc["preparations"][0]["stats"]["X"] = {0.9, 0.3};
    try {
        theory_from_json(doc);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("preparations[0]") != std::string::npos);
        CHECK(msg.find("X") != std::string::npos);
    }

    json missing = doc;
    missing.erase("observables");
    CHECK_THROWS_AS(theory_from_json(missing), SchemaError);
}

TEST_CASE("load_theory validates files on disk") {
    const std::string good_path = "io_test_good.json";
    write_file(good_path, theory_to_json(fixture_theory("diamond")).dump(2));
    const Theory t = load_theory(good_path);
    CHECK(t.num_preparations() == 4);
    std::remove(good_path.c_str());

    const std::string bad_path = "io_test_bad.json";
    write_file(bad_path, "{ not json");
    CHECK_THROWS_AS(load_theory(bad_path), SchemaError);
    std::remove(bad_path.c_str());
    CHECK_THROWS_AS(load_theory("does_not_exist.json"), SchemaError);
}

TEST_CASE("reports serialize deterministically and round-trip 12 digits") {
    MeasureReport r;
    r.name = "rac-ind";
    r.value = 0.41421356237309515;
    r.scalars["p_s"] = 0.8535533905932737;
    const std::string a = to_json(r).dump();
    const std::string b = to_json(r).dump();
    CHECK(a == b);
    const json parsed = json::parse(a);
    char lhs[32], rhs[32];
    std::snprintf(lhs, sizeof lhs, "%.12g", parsed["value"].get<double>());
    std::snprintf(rhs, sizeof rhs, "%.12g", r.value);
    CHECK(std::string(lhs) == rhs);
}

TEST_CASE("csv has a mandatory header row") {
    const auto csv = csv_table({{{"n_z", 0.0}, {"lhs", 1.0}, {"rhs", 1.0}},
                                {{"n_z", 0.5}, {"lhs", 0.9}, {"rhs", 1.0}}});
    CHECK(csv.rfind("n_z,lhs,rhs\n", 0) == 0);
    CHECK(csv.find("0.5,0.9,1\n") != std::string::npos);
}

TEST_CASE("svg renders the set, the inscribed square and the corners") {
    const auto diamond = statistics_set(fixture_theory("diamond"), 0, 1);
    const std::string svg = svg_statistics_set(diamond);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // inscribed square
    CHECK(svg.find("#c62828") != std::string::npos);           // corners excluded
    CHECK(svg.find("</svg>") != std::string::npos);
}
