#include "ice/asm_matrix.hpp"
#include "ice/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ice;

namespace {

std::vector<VarId> xv(int n)
{
    std::vector<VarId> v;
    for (int i = 1; i <= n; ++i)
        v.push_back(VarId::x(i));
    return v;
}
std::vector<VarId> yv(int n)
{
    std::vector<VarId> v;
    for (int i = 1; i <= n; ++i)
        v.push_back(VarId::y(i));
    return v;
}

long long count_states(const IceGraph& g)
{
    long long k = 0;
    for_each_state(g, [&](const IceState&) { ++k; });
    return k;
}

} // namespace

TEST_CASE("domain-wall state counts match the monotone-triangle oracle")
{
    const long long expect[] = {1, 2, 7, 42, 429, 7436};
    for (int n = 1; n <= 6; ++n) {
        IceGraph g = build_dwbc(n, xv(n), yv(n));
        long long c = count_states(g);
        CHECK(c == expect[n - 1]);
        CHECK(Int(c) == asm_count_oracle(n));
    }
    CHECK(asm_count_oracle(1) == 1);
    CHECK(asm_count_oracle(3) == 7);
    CHECK(asm_count_oracle(6) == 7436);
}

TEST_CASE("builder size validation")
{
    CHECK_THROWS_AS(build_dwbc(0, {}, {}), SizeMismatchError);
    CHECK_THROWS_AS(build_dwbc(2, xv(1), yv(2)), SizeMismatchError);
    CHECK_THROWS_AS(build_ht_even(0, {}, VarId::aux(1), VarId::aux(2), {}), SizeMismatchError);
    CHECK_THROWS_AS(build_ht_odd(-1, {}, VarId::aux(1), VarId::aux(2), {}), SizeMismatchError);
    CHECK_THROWS_AS(build_ht_odd(2, xv(1), VarId::aux(1), VarId::aux(2), yv(2)),
                    SizeMismatchError);
}

TEST_CASE("every enumerated state satisfies the ice rule and the boundary")
{
    for (int n = 1; n <= 4; ++n) {
        IceGraph g = build_dwbc(n, xv(n), yv(n));
        for_each_state(g, [&](const IceState& s) {
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK_NOTHROW(g.orientation(s, v)); // throws unless 2-in-2-out
            for (int e = 0; e < g.edge_count(); ++e) {
                const auto& ed = g.edge(e);
                if (ed.fixed_toward_b.has_value())
                    CHECK((s.dir[static_cast<std::size_t>(e)] != 0) == *ed.fixed_toward_b);
            }
        });
    }
}

TEST_CASE("enumeration order is deterministic")
{
    IceGraph g = build_dwbc(3, xv(3), yv(3));
    auto a = enumerate_states(g);
    auto b = enumerate_states(g);
    REQUIRE(a.size() == 7);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].dir == b[i].dir);
}

TEST_CASE("half-turn quotient state counts equal the symmetric-filter counts")
{
    const long long even_expect[] = {2, 10, 140};
    for (int n = 1; n <= 3; ++n) {
        IceGraph g = build_ht_even(n, xv(n - 1), VarId::aux(1), VarId::aux(2), yv(n));
        long long c = count_states(g);
        CHECK(c == even_expect[n - 1]);
        CHECK(Int(c) == ht_symmetric_asm_count(2 * n));
    }
    const long long odd_expect[] = {3, 25};
    for (int n = 1; n <= 2; ++n) {
        IceGraph g = build_ht_odd(n, xv(n), VarId::aux(1), VarId::aux(2), yv(n));
        long long c = count_states(g);
        CHECK(c == odd_expect[n - 1]);
        CHECK(Int(c) == ht_symmetric_asm_count(2 * n + 1));
    }
    // order-1 quotient: the bare bend with a single state
    IceGraph g0 = build_ht_odd(0, {}, VarId::aux(1), VarId::aux(2), {});
    CHECK(count_states(g0) == 1);
    CHECK(ht_symmetric_asm_count(1) == 1);
}

TEST_CASE("the odd-model center admits only the two flow-through orientations")
{
    for (int n = 1; n <= 2; ++n) {
        IceGraph g = build_ht_odd(n, xv(n), VarId::aux(1), VarId::aux(2), yv(n));
        REQUIRE(g.center_vertex >= 0);
        CHECK_FALSE(g.vertex(g.center_vertex).weighted);
        for_each_state(g, [&](const IceState& s) {
            auto o = g.orientation(s, g.center_vertex);
            CHECK((o == VertexOrientation::O1 || o == VertexOrientation::O2));
            CHECK(g.split_is_or1(s) == (o == VertexOrientation::O1));
        });
    }
}

TEST_CASE("state to matrix and back is the identity")
{
    for (int n = 1; n <= 4; ++n) {
        IceGraph g = build_dwbc(n, xv(n), yv(n));
        for_each_state(g, [&](const IceState& s) {
            AsmMatrix m = state_to_asm(g, s);
            IceState s2 = asm_to_state(g, m);
            CHECK(s.dir == s2.dir);
            CHECK(state_to_asm(g, s2) == m);
        });
    }
}

TEST_CASE("size-1 and size-3 bijection values")
{
    IceGraph g1 = build_dwbc(1, xv(1), yv(1));
    auto states = enumerate_states(g1);
    REQUIRE(states.size() == 1);
    CHECK(state_to_asm(g1, states[0]).at(1, 1) == 1);

    // the unique 3x3 matrix with a -1, reachable from its entry pattern
    IceGraph g3 = build_dwbc(3, xv(3), yv(3));
    AsmMatrix center_minus(3, {0, 1, 0, 1, -1, 1, 0, 1, 0});
    IceState s = asm_to_state(g3, center_minus);
    CHECK(g3.orientation(s, g3.vertex_at(2, 2)) == VertexOrientation::O2);
    CHECK(state_to_asm(g3, s) == center_minus);
}

TEST_CASE("invalid matrices are rejected")
{
    CHECK_THROWS_AS(AsmMatrix(2, {1, 1, 0, 0}), InvalidAsmError);
    CHECK_THROWS_AS(AsmMatrix(2, {1, 0, 0, -1}), InvalidAsmError);
    CHECK_THROWS_AS(AsmMatrix(1, {2}), InvalidAsmError);
    CHECK_NOTHROW(AsmMatrix(2, {1, 0, 0, 1}));

    IceGraph ht = build_ht_even(1, {}, VarId::aux(1), VarId::aux(2), yv(1));
    auto states = enumerate_states(ht);
    CHECK_THROWS_AS(state_to_asm(ht, states[0]), NotDwbcGraphError);
}

TEST_CASE("matrix text format")
{
    AsmMatrix m(3, {0, 1, 0, 1, -1, 1, 0, 1, 0});
    CHECK(m.to_text() == "0 1 0\n1 -1 1\n0 1 0\n");
    CHECK(m.ht_symmetric());
    AsmMatrix asym(3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    CHECK(!asym.ht_symmetric());
}

TEST_CASE("tangle validation")
{
    TangleSpec spec;
    spec.vertices.push_back({ParamMonomial{0, {{VarId::aux(3), 1}}}, true});
    spec.externals = {{0, Slot::W}, {0, Slot::S}};
    CHECK_THROWS_AS(build_tangle(spec), MalformedSpecError); // E, N unfilled
    spec.edges.emplace_back(0, Slot::E, 0, Slot::N);
    CHECK_NOTHROW(build_tangle(spec));
    TangleSpec bad = spec;
    bad.edges.emplace_back(0, Slot::W, 0, Slot::S); // slots already used
    CHECK_THROWS_AS(build_tangle(bad), MalformedSpecError);
    TangleSpec oob = spec;
    oob.externals.push_back({3, Slot::W});
    CHECK_THROWS_AS(build_tangle(oob), MalformedSpecError);
}

TEST_CASE("a vertex-free tangle has exactly the empty state")
{
    IceGraph g = build_tangle(TangleSpec{});
    CHECK(count_states(g) == 1);
}

TEST_CASE("loop tangle with fixed externals")
{
    TangleSpec spec;
    spec.vertices.push_back({ParamMonomial{0, {{VarId::aux(1), 1}}}, true});
    spec.edges.emplace_back(0, Slot::E, 0, Slot::N);
    spec.externals = {{0, Slot::W}, {0, Slot::S}};
    IceGraph g = build_tangle(spec);
    g.fix_boundary(g.external_edges[0], false); // in
    g.fix_boundary(g.external_edges[1], true);  // out
    CHECK(count_states(g) == 2);                // the arc is free
}
