#include <catch2/catch_amalgamated.hpp>

#include "nakalg/enumerate.hpp"
#include "nakalg/serialization.hpp"

using namespace nakalg;

TEST_CASE("linear enumeration counts are catalan numbers") {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
    for (int n = 1; n <= 12; ++n) {
        const auto v = enumerate_linear(n);
        CHECK(static_cast<long>(v.size()) == catalan[n - 1]);
    }
    const auto three = enumerate_linear(3);
    REQUIRE(three.size() == 2);
    CHECK(three[0].c == std::vector<long>({2, 2, 1}));
    CHECK(three[1].c == std::vector<long>({3, 2, 1}));
    CHECK(enumerate_linear(1)[0].c == std::vector<long>({1}));
    // every emitted series validates
    for (const KupischSeries& k : enumerate_linear(7)) CHECK_NOTHROW(Nakayama::from(k));
}

TEST_CASE("cyclic enumeration") {
    const auto one = enumerate_cyclic(1, 3);
    REQUIRE(one.size() == 2);
    CHECK(one[0].c == std::vector<long>({2}));
    CHECK(one[1].c == std::vector<long>({3}));
    const auto two = enumerate_cyclic(2, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].c == std::vector<long>({2, 2}));

    // the recorded counterexample series are reachable
    const auto four = enumerate_cyclic(4, 6);
    CHECK(std::find_if(four.begin(), four.end(), [](const KupischSeries& k) {
              return k.c == std::vector<long>({2, 4, 3, 3});
          }) != four.end());
    const auto five = enumerate_cyclic(5, 6);
    CHECK(std::find_if(five.begin(), five.end(), [](const KupischSeries& k) {
              return k.c == std::vector<long>({2, 2, 3, 2, 3});
          }) != five.end());
    for (const KupischSeries& k : four) CHECK_NOTHROW(Nakayama::from(k));

    // rotation dedup keeps one representative per orbit
    const auto all = enumerate_cyclic(4, 4);
    const auto reps = enumerate_cyclic(4, 4, true);
    CHECK(reps.size() < all.size());
    for (const KupischSeries& k : all) {
        bool covered = false;
        for (const KupischSeries& r : reps)
            for (int s = 0; s < 4 && !covered; ++s) {
                std::vector<long> rot(4);
                for (int i = 0; i < 4; ++i) rot[static_cast<size_t>((i + s) % 4)] = r.c[static_cast<size_t>(i)];
                covered = rot == k.c;
            }
        CHECK(covered);
    }
}

TEST_CASE("kupisch text and json forms") {
    const KupischSeries k = parse_kupisch("linear:4,4,3,2,1");
    CHECK(k.orientation == Orientation::Linear);
    CHECK(k.c == std::vector<long>({4, 4, 3, 2, 1}));
    CHECK(kupisch_str(k) == "linear:4,4,3,2,1");
    CHECK(kupisch_from_json(kupisch_json(k)) == k);
    CHECK(parse_kupisch("cyclic:2,3,3").orientation == Orientation::Cyclic);
    CHECK_THROWS_AS(parse_kupisch("4,4,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_kupisch("spiral:2,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_kupisch("linear:4,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_kupisch("linear:"), std::invalid_argument);
}

TEST_CASE("quiver json round trip") {
    const Json j = Json::parse(R"({"vertices":3,
        "arrows":[{"name":"a","from":1,"to":2},{"name":"b","from":2,"to":3}],
        "relations":[["a","b"]]})");
    const MonomialPresentation p = quiver_from_json(j);
    CHECK(p.vertices == 3);
    REQUIRE(p.arrows.size() == 2);
    CHECK(p.arrows[1].name == "b");
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0] == std::vector<std::string>({"a", "b"}));
    CHECK(quiver_from_json(quiver_json(p)).arrows[0].to == 2);
    CHECK_THROWS(quiver_from_json(Json::parse(R"({"arrows":[]})")));
}

TEST_CASE("report json schema") {
    const AlgebraReport r = build_report(Nakayama::linear({4, 4, 3, 2, 1}));
    const Json j = report_json(r);
    for (const char* key : {"algebra", "cartan", "coxeter", "coxeter_permutation", "ringel",
                            "ar_permutation", "e", "del", "grade", "auslander_gorenstein",
                            "auslander_regular", "methods_agreed"})
        CHECK(j.contains(key));
    CHECK(j["algebra"] == "linear:4,4,3,2,1");
    CHECK(j["cartan"][0][0] == "1");       // matrices hold decimal strings
    CHECK(j["coxeter"][2][0] == "-1");
    CHECK(j["coxeter_permutation"] == Json::array({5, 3, 4, 1, 2}));
    CHECK(j["ringel"] == Json::array({5, 3, 4, 1, 2}));
    CHECK(j["ar_permutation"].is_null());
    CHECK(j["e"] == Json::array({2, 1, 1, 0, 0}));
    CHECK(j["del"] == j["e"]);
    CHECK(j["grade"] == Json::array({2, 1, 1, 0, 0}));
    CHECK(j["auslander_gorenstein"] == false);
    CHECK(j["auslander_regular"] == false);
    CHECK(j["methods_agreed"] == true);

    // infinite global dimension: coxeter fields are null, grade can be "inf"
    const Json inf = report_json(build_report(Nakayama::cyclic({3, 3, 3})));
    CHECK(inf["coxeter"].is_null());
    CHECK(inf["coxeter_permutation"].is_null());
    CHECK(inf["auslander_gorenstein"] == true);
    CHECK(inf["auslander_regular"] == false);
}

TEST_CASE("csv flattening") {
    const AlgebraReport r = build_report(Nakayama::linear({2, 1}));
    CHECK(report_csv_header() ==
          "algebra,coxeter_permutation,ringel,ar_permutation,e,del,grade,"
          "auslander_gorenstein,auslander_regular,methods_agreed");
    CHECK(report_csv_row(r) == "linear:2,1,2;1,2;1,2;1,1;0,1;0,1;0,true,true,true");
}

TEST_CASE("identity report for the semisimple algebra") {
    const Json j = report_json(build_report(Nakayama::linear({1})));
    CHECK(j["coxeter_permutation"] == Json::array({1}));
    CHECK(j["ringel"] == Json::array({1}));
    CHECK(j["ar_permutation"] == Json::array({1}));
    CHECK(j["auslander_regular"] == true);
}

TEST_CASE("auslander regular counts, frozen after the first certified run") {
    // no closed formula is known; these are regression goldens produced by
    // the three-way certified decision
    const long golden[] = {1, 1, 2, 4, 9, 21, 50, 121, 297};
    for (int n = 1; n <= 9; ++n) {
        long tally = 0;
        for (const KupischSeries& k : enumerate_linear(n))
            if (decide_auslander_regular_linear(Nakayama::from(k)).decision) ++tally;
        CHECK(tally == golden[n - 1]);
    }
}
