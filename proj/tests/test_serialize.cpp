#include "ice/serialize.hpp"
#include "ice/verifier.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ice;

TEST_CASE("coefficient schemas")
{
    CHECK(coeff_json(CycNum(Rat(18), Rat(0))).dump() == R"({"p":"18","q":"0"})");
    CHECK(coeff_json(CycNum(Rat(1, 3), Rat(-2, 3))).dump() == R"({"p":"1/3","q":"-2/3"})");
    CHECK(coeff_json(CycInt(Int(-1), Int(2))).dump() == R"({"p":"-1","q":"2"})");
    GenericCoeff g = GenericCoeff::monomial(2, Int(1)) + GenericCoeff::monomial(-2, Int(-1));
    CHECK(coeff_json(g).dump() == R"({"a_terms":[[-2,"-1"],[2,"1"]]})"); // sorted by exponent
}

TEST_CASE("polynomial schema is canonical")
{
    auto f = sigma_monomial<GenericCoeff>(1, {{VarId::x(1), 1}, {VarId::y(1), -1}});
    njson j = poly_json(f);
    CHECK(j["mode"] == "generic-a");
    CHECK(j["vars"] == njson::array({"x1", "y1"}));
    REQUIRE(j["terms"].size() == 2);
    // ascending lexicographic order on exponent vectors
    CHECK(j["terms"][0]["exps"] == njson::array({-1, 1}));
    CHECK(j["terms"][1]["exps"] == njson::array({1, -1}));
    // byte-identical across rebuilds
    CHECK(poly_json(f).dump() == j.dump());
}

TEST_CASE("state and partition schemas")
{
    std::vector<VarId> xs{VarId::x(1)}, ys{VarId::y(1)};
    IceGraph g = build_dwbc(1, xs, ys);
    auto states = enumerate_states(g);
    REQUIRE(states.size() == 1);
    njson s = state_json(g, states[0]);
    CHECK(s["model"] == "dwbc");
    CHECK(s["n"] == 1);
    CHECK(s["edges"].size() == 4);
    for (const auto& e : s["edges"]) {
        CHECK(e.contains("id"));
        CHECK(e.contains("dir"));
    }

    auto r = partition_function<GenericCoeff>(g);
    njson p = partition_json(g, r);
    CHECK(p["model"] == "dwbc");
    CHECK(p["state_count"] == 1);
    CHECK(p["Z"]["terms"].size() == 1);
    CHECK_FALSE(p.contains("split"));

    IceGraph ht = build_ht_even(1, {}, VarId::aux(1), VarId::aux(2), ys);
    njson ph = partition_json(ht, partition_function<GenericCoeff>(ht));
    CHECK(ph["model"] == "ht-even");
    REQUIRE(ph.contains("split"));
    CHECK(ph["split"].contains("or1"));
    CHECK(ph["split"].contains("or2"));
}

TEST_CASE("check report schema")
{
    auto r = check_loop_identity();
    njson j = r.to_json();
    CHECK(j["check"] == "loop-identity");
    CHECK(j["verdict"] == "pass");
    CHECK(j["witness"].is_null());
    CHECK(j.contains("elapsed_ms"));
    auto bad = check_spec_identities(CoeffMode::GenericA);
    njson jb = bad.to_json();
    CHECK(jb["verdict"] == "fail");
    CHECK_FALSE(jb["witness"].is_null());
}

TEST_CASE("evaluation point schema")
{
    EvalPoint pt;
    pt.set(VarId::x(1), CycNum(Rat(2), Rat(0)));
    pt.set(VarId::aux(2), CycNum(Rat(0), Rat(1)));
    njson j = point_json(pt);
    CHECK(j["x1"]["p"] == "2");
    CHECK(j["y"]["q"] == "1");
}
