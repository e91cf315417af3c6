#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sset/build.hpp"
#include "sset/errors.hpp"
#include "sset/fixtures.hpp"
#include "sset/json_io.hpp"

using namespace sset;

TEST_CASE("set round trip preserves the presentation") {
    for (const SSetPtr& X : {std_simplex(3), boundary(2).object,
                             product(std_simplex(1), std_simplex(1)).object, empty_sset()}) {
        Json j = sset_to_json(*X);
        SSetPtr back = sset_from_json(j);
        CHECK(back->name() == X->name());
        CHECK(back->same_presentation(*X));
        CHECK(canonical_dump(sset_to_json(*back)) == canonical_dump(j));
    }
}

TEST_CASE("writers emit canonical order, readers accept any") {
    SSetPtr d2 = std_simplex(2);
    Json j = sset_to_json(*d2);
    // simplices sorted by (dim, id)
    const auto& arr = j["simplices"];
    for (std::size_t i = 1; i < arr.size(); ++i) {
        int da = arr[i - 1]["dim"].get<int>(), db = arr[i]["dim"].get<int>();
        CHECK((da < db || (da == db && arr[i - 1]["id"].get<std::string>() <
                                           arr[i]["id"].get<std::string>())));
    }
    // shuffle and reparse
    Json shuffled = j;
    std::reverse(shuffled["simplices"].begin(), shuffled["simplices"].end());
    SSetPtr back = sset_from_json(shuffled);
    CHECK(back->same_presentation(*d2));
    CHECK(canonical_dump(sset_to_json(*back)) == canonical_dump(j));
}

TEST_CASE("map round trip") {
    SimplicialMap p = discrete_cover(std_simplex(1), 2);
    Json j = map_to_json(p);
    SimplicialMap back = map_from_json(j, p.domain(), p.codomain());
    CHECK(back == p);
    CHECK(canonical_dump(map_to_json(back)) == canonical_dump(j));
}

TEST_CASE("parse errors name the offending field") {
    CHECK_THROWS_WITH_AS(sset_from_json(Json{{"name", "x"}}), doctest::Contains("simplices"),
                         ParseError);
    CHECK_THROWS_WITH_AS(
        sset_from_json(Json{{"name", "x"},
                            {"simplices", Json::array({Json{{"id", "a"}, {"dim", 0}}})}}),
        doctest::Contains("faces"), ParseError);
    Json bad_expr = Json{
        {"name", "x"},
        {"simplices",
         Json::array({Json{{"id", "a"}, {"dim", 0}, {"faces", Json::array()}},
                      Json{{"id", "e"},
                           {"dim", 1},
                           {"faces", Json::array({Json{{"collapse", Json::array()}},
                                                  Json{{"collapse", Json::array()},
                                                       {"target", "a"}}})}}})}};
    CHECK_THROWS_WITH_AS(sset_from_json(bad_expr), doctest::Contains("target"), ParseError);

    SimplicialMap p = discrete_cover(std_simplex(0), 2);
    Json mj = map_to_json(p);
    mj["domain"] = "elsewhere";
    CHECK_THROWS_AS(map_from_json(mj, p.domain(), p.codomain()), ParseError);
}

TEST_CASE("collapse lists must be ascending") {
    Json j = Json{
        {"name", "x"},
        {"simplices",
         Json::array(
             {Json{{"id", "a"}, {"dim", 0}, {"faces", Json::array()}},
              Json{{"id", "e"},
                   {"dim", 2},
                   {"faces",
                    Json::array({Json{{"collapse", {1, 0}}, {"target", "a"}},
                                 Json{{"collapse", {0, 1}}, {"target", "a"}},
                                 Json{{"collapse", {0, 1}}, {"target", "a"}}})}}})}};
    CHECK_THROWS_AS(sset_from_json(j), ParseError);
}
