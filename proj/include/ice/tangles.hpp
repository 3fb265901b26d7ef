#ifndef ICE_TANGLES_HPP
#define ICE_TANGLES_HPP

#include "ice/graph.hpp"

#include <array>
#include <vector>

namespace ice {

// ---------------------------------------------------------------------------
// Yang-Baxter tangles: three strands A, B, C crossing pairwise, braid word
// s1 s2 s1 on the left and s2 s1 s2 on the right.  Each crossing carries one
// of the declared parameters x, y, z; the identity holds when x y z = 1/a.
//
// A crossing is a square-ice vertex: the strand chosen as "numerator" enters
// at W and leaves at E, the other enters at S and leaves at N, and the vertex
// parameter is the crossing's declared variable.  Which strand is numerator
// at each crossing (and which variable sits on which strand pair) is fixed
// below; the configuration was pinned by requiring the identity to hold on
// all 64 external orientation assignments, and the production check
// re-verifies exactly that.
// ---------------------------------------------------------------------------

struct YbeConfig {
    // strand pairs in the order (A,B), (A,C), (B,C) -> Aux variable index
    std::array<int, 3> label{1, 2, 3};
    // Per crossing (in braid order): true picks the rising strand (the one
    // entering from the lower braid position) as the W-E line of the vertex,
    // with the other line running N to S; false is the 90-degree twist of
    // that picture.  Pinned by the 64-assignment identity search: the middle
    // crossing is rising-horizontal, the outer two are not, on both sides.
    std::array<bool, 3> lhs_rising_horizontal{false, true, false};
    std::array<bool, 3> rhs_rising_horizontal{false, true, false};
};

struct YangBaxterTangles {
    IceGraph lhs, rhs; // externals ordered A-in, B-in, C-in, A-out, B-out, C-out
};

namespace detail {

struct YbeCrossing {
    int pair;   // 0 = (A,B), 1 = (A,C), 2 = (B,C)
    int rising; // the strand entering from the lower braid position
};

inline IceGraph ybe_side(const std::array<YbeCrossing, 3>& crossings,
                         const std::array<int, 3>& label,
                         const std::array<bool, 3>& rising_horizontal)
{
    auto pair_strands = [](int p) -> std::pair<int, int> {
        switch (p) {
        case 0: return {0, 1};
        case 1: return {0, 2};
        default: return {1, 2};
        }
    };

    TangleSpec spec;
    for (int k = 0; k < 3; ++k)
        spec.vertices.push_back(TangleSpec::VertexSpec{
            ParamMonomial{0, {{VarId::aux(label[static_cast<std::size_t>(
                                   crossings[static_cast<std::size_t>(k)].pair)]),
                               1}}},
            true});

    // Slot of a strand's entering/leaving edge at crossing k.  When the
    // rising strand is horizontal it runs W -> E and the falling strand runs
    // N -> S; otherwise the falling strand runs W -> E and the rising one
    // S -> N.
    auto enter_slot = [&](int strand, int k) {
        bool rising = strand == crossings[static_cast<std::size_t>(k)].rising;
        bool rh = rising_horizontal[static_cast<std::size_t>(k)];
        if (rising)
            return rh ? Slot::W : Slot::S;
        return rh ? Slot::N : Slot::W;
    };
    auto leave_slot = [&](int strand, int k) {
        bool rising = strand == crossings[static_cast<std::size_t>(k)].rising;
        bool rh = rising_horizontal[static_cast<std::size_t>(k)];
        if (rising)
            return rh ? Slot::E : Slot::N;
        return rh ? Slot::S : Slot::E;
    };

    std::array<std::vector<int>, 3> path; // crossings hit by each strand, in order
    for (int k = 0; k < 3; ++k) {
        auto [s1, s2] = pair_strands(crossings[static_cast<std::size_t>(k)].pair);
        path[static_cast<std::size_t>(s1)].push_back(k);
        path[static_cast<std::size_t>(s2)].push_back(k);
    }

    for (int s = 0; s < 3; ++s)
        spec.edges.emplace_back(path[static_cast<std::size_t>(s)][0],
                                leave_slot(s, path[static_cast<std::size_t>(s)][0]),
                                path[static_cast<std::size_t>(s)][1],
                                enter_slot(s, path[static_cast<std::size_t>(s)][1]));
    for (int s = 0; s < 3; ++s)
        spec.externals.emplace_back(path[static_cast<std::size_t>(s)][0],
                                    enter_slot(s, path[static_cast<std::size_t>(s)][0]));
    for (int s = 0; s < 3; ++s)
        spec.externals.emplace_back(path[static_cast<std::size_t>(s)][1],
                                    leave_slot(s, path[static_cast<std::size_t>(s)][1]));
    return build_tangle(spec);
}

} // namespace detail

inline YangBaxterTangles build_yang_baxter_tangles(const YbeConfig& cfg = YbeConfig{})
{
    // Strands A, B, C at braid positions 1 (top), 2, 3; the braid word is
    // s1 s2 s1 on the left and s2 s1 s2 on the right.  The rising strand of
    // each crossing comes from the braid geometry.
    const std::array<detail::YbeCrossing, 3> lhs_cross{{{0, 1}, {1, 2}, {2, 2}}};
    const std::array<detail::YbeCrossing, 3> rhs_cross{{{2, 2}, {1, 2}, {0, 1}}};
    return YangBaxterTangles{detail::ybe_side(lhs_cross, cfg.label, cfg.lhs_rising_horizontal),
                             detail::ybe_side(rhs_cross, cfg.label, cfg.rhs_rising_horizontal)};
}

// ---------------------------------------------------------------------------
// The one-crossing loop tangle: a crossing of parameter z whose right ends
// are joined by a U-turn arc.  Externals are the top-left (W) and bottom-left
// (S) stubs, in that order.
// ---------------------------------------------------------------------------
inline IceGraph build_loop_tangle()
{
    TangleSpec spec;
    spec.vertices.push_back(TangleSpec::VertexSpec{ParamMonomial{0, {{VarId::aux(3), 1}}}, true});
    spec.edges.emplace_back(0, Slot::E, 0, Slot::N); // the arc
    spec.externals = {{0, Slot::W}, {0, Slot::S}};
    return build_tangle(spec);
}

// ---------------------------------------------------------------------------
// Row-pair tangles for the exchange identities: two horizontal lines of
// parameters (bottom, top) crossing `width` vertical lines y_1..y_width, the
// two left stubs fixed inward.  With an arc, the right ends are joined by a
// U-turn (the parameter change happens on the arc); without, the right stubs
// stay free and the caller fixes them per equation.
// ---------------------------------------------------------------------------
struct RowPairTangle {
    IceGraph g;
    std::vector<int> column_stubs; // bottom 1..w then top 1..w
    int right_bottom = -1, right_top = -1; // only without arc
};

inline RowPairTangle build_row_pair(VarId bottom, VarId top, int width, bool with_arc)
{
    if (width < 1)
        throw SizeMismatchError("build_row_pair: width must be >= 1");
    RowPairTangle out;
    IceGraph& g = out.g;
    g.kind = ModelKind::Tangle;
    std::vector<int> brow, trow;
    for (int k = 1; k <= width; ++k)
        brow.push_back(g.add_vertex(ParamMonomial::ratio(bottom, VarId::y(k))));
    for (int k = 1; k <= width; ++k)
        trow.push_back(g.add_vertex(ParamMonomial::ratio(top, VarId::y(k))));

    g.add_boundary(brow[0], Slot::W, false); // inward
    g.add_boundary(trow[0], Slot::W, false);
    for (int k = 0; k + 1 < width; ++k) {
        g.add_edge(brow[static_cast<std::size_t>(k)], Slot::E,
                   brow[static_cast<std::size_t>(k) + 1], Slot::W);
        g.add_edge(trow[static_cast<std::size_t>(k)], Slot::E,
                   trow[static_cast<std::size_t>(k) + 1], Slot::W);
    }
    for (int k = 0; k < width; ++k) {
        int s = g.add_boundary(brow[static_cast<std::size_t>(k)], Slot::S, std::nullopt);
        out.column_stubs.push_back(s);
    }
    for (int k = 0; k < width; ++k) {
        g.add_edge(brow[static_cast<std::size_t>(k)], Slot::N, trow[static_cast<std::size_t>(k)],
                   Slot::S);
        int s = g.add_boundary(trow[static_cast<std::size_t>(k)], Slot::N, std::nullopt);
        out.column_stubs.push_back(s);
    }
    if (with_arc) {
        int e = g.add_edge(brow[static_cast<std::size_t>(width) - 1], Slot::E,
                           trow[static_cast<std::size_t>(width) - 1], Slot::E);
        g.mark_param_change(e);
    } else {
        out.right_bottom = g.add_boundary(brow[static_cast<std::size_t>(width) - 1], Slot::E,
                                          std::nullopt);
        out.right_top = g.add_boundary(trow[static_cast<std::size_t>(width) - 1], Slot::E,
                                       std::nullopt);
    }
    g.validate();
    return out;
}

} // namespace ice

#endif
