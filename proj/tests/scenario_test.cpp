#include <doctest.h>

#include <json.hpp>

#include "ruled/errors.hpp"
#include "ruled/linear_system.hpp"
#include "ruled/scenario.hpp"

using namespace ruled;
using nlohmann::json;

namespace {

json basic_doc() {
    return json::parse(R"({
      "curve": {
        "genus": 1,
        "points": ["P", "Q"],
        "classes": [
          {"name": "gh", "residual": 2, "h0": 2, "effective": true},
          {"name": "b3", "coeffs": {"P": 1}, "residual": 2}
        ],
        "aliases": []
      },
      "surfaces": {
        "S":  {"form": "decomposable", "e_class": {"coeffs": {"P": -1}}},
        "S2": {"form": "chain", "anchor": "S", "steps": [{"P": "Q", "position": "OnX1"}]}
      },
      "systems": {
        "H": {"m": 1, "b": "b3"}
      }
    })");
}

} // namespace

TEST_CASE("scenario loading") {
    Scenario sc = load_scenario(basic_doc());
    CHECK(sc.curve->genus() == 1);
    CHECK(sc.curve->has_point("P"));
    // opaque class: symbol of the declared degree, tabulated h0
    CHECK(sc.curve->degree(Divisor::point("gh")) == 2);
    CHECK(sc.curve->h0(Divisor::point("gh")).value() == 2);
    // shorthand class: alias to its expansion
    CHECK(sc.curve->canonical(Divisor::point("b3")) ==
          Divisor::point("P") + Divisor::generic(2));

    const RuledSurface& s = sc.surface("S");
    CHECK(s.e() == 1);
    const RuledSurface& s2 = sc.surface("S2");
    CHECK(s2.e() == 0);
    CHECK(s2.is_chain());

    const PicClass& h = sc.system("H");
    CHECK(h.m == 1);
    CHECK(sc.curve->degree(h.b) == 3);
    CHECK(s.scroll_degree({1, sc.curve->canonical(h.b)}) == 5);
}

TEST_CASE("alias declared separately") {
    json doc = basic_doc();
    doc["curve"]["classes"].push_back({{"name", "K"}, {"residual", 2}, {"h0", 2}});
    doc["curve"]["aliases"].push_back(json::array({"K", "gh"}));
    Scenario sc = load_scenario(doc);
    // tabulation lands on the canonical (rewritten) key
    CHECK(sc.curve->canonical(Divisor::point("K")) == Divisor::point("gh"));
    CHECK(sc.curve->h0(Divisor::point("K")).value() == 2);
}

TEST_CASE("bad scenarios are rejected") {
    json doc = basic_doc();
    doc["curve"]["classes"].push_back(
        {{"name", "bad"}, {"coeffs", {{"nosuch", 1}}}, {"residual", 0}});
    CHECK_THROWS_AS(load_scenario(doc), ScenarioError);

    json doc2 = basic_doc();
    doc2["surfaces"]["S3"] = {{"form", "chain"}, {"anchor", "missing"}, {"steps", json::array()}};
    CHECK_THROWS_AS(load_scenario(doc2), ScenarioError);

    json doc3 = basic_doc();
    doc3["curve"]["classes"][0]["h0"] = 9; // violates the curve invariants
    CHECK_THROWS_AS(load_scenario(doc3), ScenarioError);

    CHECK_THROWS_AS(load_scenario(json::object()), ScenarioError);
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/path.json"), ScenarioError);
}

TEST_CASE("loaded systems classify like hand-built ones") {
    Scenario sc = load_scenario(basic_doc());
    const RuledSurface& s = sc.surface("S");
    LinearSystemReport r = classify(s, sc.system("H"));
    // b3 = P + <2>: degree 3, nonspecial on genus 1; twists give 3 + 2
    CHECK(r.h0.value() == 5);
    CHECK(r.degree == 5);
}
