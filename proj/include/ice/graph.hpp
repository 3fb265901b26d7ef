#ifndef ICE_GRAPH_HPP
#define ICE_GRAPH_HPP

#include "ice/errors.hpp"
#include "ice/laurent.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ice {

// Slots of a tetravalent vertex.  The W-E pair belongs to the line whose
// parameter is the numerator of the vertex parameter, N-S to the denominator.
enum class Slot : std::uint8_t { W = 0, E = 1, N = 2, S = 3 };

// The six ice-rule orientations, in the weight table's order:
// O1 (+1) and O2 (-1) carry sigma(a^2), O3/O4 sigma(a t), O5/O6 sigma(a tbar).
enum class VertexOrientation : std::uint8_t { O1, O2, O3, O4, O5, O6 };

enum class WeightClass : std::uint8_t { SigmaA2, SigmaAT, SigmaATbar };

inline WeightClass weight_class(VertexOrientation o)
{
    switch (o) {
    case VertexOrientation::O1:
    case VertexOrientation::O2: return WeightClass::SigmaA2;
    case VertexOrientation::O3:
    case VertexOrientation::O4: return WeightClass::SigmaAT;
    default: return WeightClass::SigmaATbar;
    }
}

inline int asm_entry(VertexOrientation o)
{
    if (o == VertexOrientation::O1)
        return 1;
    if (o == VertexOrientation::O2)
        return -1;
    return 0;
}

// The two orientation conventions related by transposition.  Boundary stubs
// are always the domain-wall picture (horizontal stubs in, vertical stubs
// out, which fixes the ASM bijection of the weight table); the transposition
// freedom that remains is which of the two lines at a crossing is the
// numerator of the vertex parameter.  RowOverColumn gives t = row/col.  The
// calibration test pins the candidate consistent with the specialization
// recursions.
enum class LineConvention : std::uint8_t { RowOverColumn, ColumnOverRow };

enum class ModelKind : std::uint8_t { Dwbc, HtEven, HtOdd, Tangle };

// Vertex parameter t as a unit monomial a^k * prod vars^e.
struct ParamMonomial {
    int a_exp = 0;
    std::vector<VarPow> vars;

    static ParamMonomial ratio(VarId num, VarId den)
    {
        if (num == den)
            return ParamMonomial{0, {}};
        return ParamMonomial{0, {{num, 1}, {den, -1}}};
    }

    ParamMonomial inverse() const
    {
        ParamMonomial out{-a_exp, vars};
        for (auto& [v, e] : out.vars)
            e = -e;
        return out;
    }
};

// One orientation assignment; dir[e] is 1 when edge e flows toward its b end.
struct IceState {
    std::vector<std::uint8_t> dir;
};

class IceGraph {
public:
    struct Edge {
        int vertex_a = -1;                    // always a real vertex
        int vertex_b = -1;                    // -1 for a boundary stub
        std::optional<bool> fixed_toward_b;   // boundary constraint, if any
    };

    struct Vertex {
        std::array<int, 4> slot_edge{-1, -1, -1, -1};
        std::array<bool, 4> slot_end_b{false, false, false, false};
        ParamMonomial param;
        bool weighted = true;
    };

    // ---- construction -------------------------------------------------------

    int add_vertex(ParamMonomial param, bool weighted = true)
    {
        vertices_.push_back(Vertex{{-1, -1, -1, -1}, {false, false, false, false},
                                   std::move(param), weighted});
        return static_cast<int>(vertices_.size()) - 1;
    }

    int add_edge(int va, Slot sa, int vb, Slot sb)
    {
        int e = static_cast<int>(edges_.size());
        edges_.push_back(Edge{va, vb, std::nullopt});
        attach(va, sa, e, false);
        attach(vb, sb, e, true);
        return e;
    }

    // The odd-model center bend: the edge fills one slot of the regular
    // neighbor and two opposite slots of the center vertex.
    int add_doubled_edge(int v_regular, Slot s_regular, int v_center, Slot s1, Slot s2)
    {
        int e = static_cast<int>(edges_.size());
        edges_.push_back(Edge{v_regular, v_center, std::nullopt});
        attach(v_regular, s_regular, e, false);
        attach(v_center, s1, e, true);
        attach(v_center, s2, e, true);
        return e;
    }

    int add_boundary(int v, Slot s, std::optional<bool> pointing_out)
    {
        int e = static_cast<int>(edges_.size());
        // For a stub the b end is the outside, so "points out" is toward b.
        edges_.push_back(Edge{v, -1, pointing_out});
        attach(v, s, e, false);
        return e;
    }

    // A stub occupying two identified slots of the same vertex (the center of
    // the size-1 half-turn quotient).
    int add_doubled_boundary(int v, Slot s1, Slot s2, std::optional<bool> pointing_out)
    {
        int e = static_cast<int>(edges_.size());
        edges_.push_back(Edge{v, -1, pointing_out});
        attach(v, s1, e, false);
        attach(v, s2, e, false);
        return e;
    }

    void fix_boundary(int e, std::optional<bool> pointing_out)
    {
        if (edges_.at(static_cast<std::size_t>(e)).vertex_b != -1)
            throw MalformedSpecError("fix_boundary: edge is not a boundary stub");
        edges_[static_cast<std::size_t>(e)].fixed_toward_b = pointing_out;
    }

    void set_split_edge(int e, bool or1_toward_b)
    {
        split_edge_ = e;
        split_or1_toward_b_ = or1_toward_b;
    }

    void mark_param_change(int e) { param_change_edges_.insert(e); }

    void validate() const
    {
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            for (int s = 0; s < 4; ++s)
                if (vertices_[v].slot_edge[static_cast<std::size_t>(s)] < 0)
                    throw MalformedSpecError("vertex " + std::to_string(v) +
                                             " has an unfilled slot");
    }

    // ---- access -------------------------------------------------------------

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int split_edge() const { return split_edge_; }
    bool split_or1_toward_b() const { return split_or1_toward_b_; }
    const std::set<int>& param_change_edges() const { return param_change_edges_; }

    bool incoming_at(const IceState& s, int v, Slot slot) const
    {
        const Vertex& vx = vertices_[static_cast<std::size_t>(v)];
        int e = vx.slot_edge[static_cast<std::size_t>(slot)];
        bool end_b = vx.slot_end_b[static_cast<std::size_t>(slot)];
        bool toward_b = s.dir[static_cast<std::size_t>(e)] != 0;
        return toward_b == end_b;
    }

    VertexOrientation orientation(const IceState& s, int v) const
    {
        int pattern = 0;
        for (int k = 0; k < 4; ++k)
            pattern = (pattern << 1) | (incoming_at(s, v, static_cast<Slot>(k)) ? 1 : 0);
        switch (pattern) { // bits are (W,E,N,S)
        case 0b1100: return VertexOrientation::O1;
        case 0b0011: return VertexOrientation::O2;
        case 0b0101: return VertexOrientation::O3;
        case 0b1010: return VertexOrientation::O4;
        case 0b1001: return VertexOrientation::O5;
        case 0b0110: return VertexOrientation::O6;
        default:
            throw MalformedSpecError("state violates the ice rule at vertex " +
                                     std::to_string(v));
        }
    }

    // Split-edge orientation: true when the designated edge takes its or1
    // direction in this state.
    bool split_is_or1(const IceState& s) const
    {
        bool toward_b = s.dir[static_cast<std::size_t>(split_edge_)] != 0;
        return toward_b == split_or1_toward_b_;
    }

    // ---- model metadata -------------------------------------------------------

    ModelKind kind = ModelKind::Tangle;
    LineConvention convention = LineConvention::RowOverColumn;
    int n = 0;                       // model size parameter
    std::vector<VarId> xs, ys;       // row / column variables
    std::optional<VarId> var_x, var_y;
    int grid_cols = 0, grid_rows = 0;
    std::vector<int> grid;           // vertex id at (col, row), -1 where absent
    int center_vertex = -1;
    std::vector<int> external_edges; // free tangle stubs, in declaration order

    int vertex_at(int col, int row) const // 1-based
    {
        return grid[static_cast<std::size_t>((row - 1) * grid_cols + (col - 1))];
    }

private:
    void attach(int v, Slot s, int e, bool end_b)
    {
        Vertex& vx = vertices_.at(static_cast<std::size_t>(v));
        if (vx.slot_edge[static_cast<std::size_t>(s)] != -1)
            throw MalformedSpecError("slot already occupied on vertex " + std::to_string(v));
        vx.slot_edge[static_cast<std::size_t>(s)] = e;
        vx.slot_end_b[static_cast<std::size_t>(s)] = end_b;
    }

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    int split_edge_ = -1;
    bool split_or1_toward_b_ = true;
    std::set<int> param_change_edges_;
};

// ---------------------------------------------------------------------------
// Model builders
// ---------------------------------------------------------------------------

namespace detail {

// Boundary stubs of the domain-wall picture: horizontal in, vertical out.
inline constexpr bool kHorizontalStubOut = false;
inline constexpr bool kVerticalStubOut = true;

inline ParamMonomial vertex_param(VarId row, VarId col, LineConvention lc)
{
    return lc == LineConvention::RowOverColumn ? ParamMonomial::ratio(row, col)
                                               : ParamMonomial::ratio(col, row);
}

} // namespace detail

// n x n grid with domain-wall boundary; row i (bottom to top) carries xs[i-1],
// column j (left to right) carries ys[j-1].
inline IceGraph build_dwbc(int n, const std::vector<VarId>& xs, const std::vector<VarId>& ys,
                           LineConvention lc = LineConvention::RowOverColumn)
{
    if (n < 1)
        throw SizeMismatchError("build_dwbc: size must be >= 1");
    if (static_cast<int>(xs.size()) != n || static_cast<int>(ys.size()) != n)
        throw SizeMismatchError("build_dwbc: need n row and n column variables");

    IceGraph g;
    g.kind = ModelKind::Dwbc;
    g.convention = lc;
    g.n = n;
    g.xs = xs;
    g.ys = ys;
    g.grid_cols = n;
    g.grid_rows = n;
    g.grid.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = g.add_vertex(detail::vertex_param(xs[static_cast<std::size_t>(i - 1)],
                                                      ys[static_cast<std::size_t>(j - 1)], lc));
            g.grid[static_cast<std::size_t>((i - 1) * n + (j - 1))] = v;
        }

    const bool hout = detail::kHorizontalStubOut;
    const bool vout = detail::kVerticalStubOut;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = g.vertex_at(j, i);
            if (j == 1)
                g.add_boundary(v, Slot::W, hout);
            if (i == 1)
                g.add_boundary(v, Slot::S, vout);
            if (j < n)
                g.add_edge(v, Slot::E, g.vertex_at(j + 1, i), Slot::W);
            else
                g.add_boundary(v, Slot::E, hout);
            if (i < n)
                g.add_edge(v, Slot::N, g.vertex_at(j, i + 1), Slot::S);
            else
                g.add_boundary(v, Slot::N, vout);
        }
    g.validate();
    return g;
}

// Half-turn quotient of the 2n x 2n domain-wall grid, cut right of column n:
// 2n rows by n columns, U-turn arcs pairing row i with row 2n+1-i on the right.
// Rows carry xs[0..n-2], then x, then y, then the xs mirrored; the central arc
// (between the x and y rows) is the parameter change and the split edge, whose
// or1 orientation points from the x row to the y row ("up").
inline IceGraph build_ht_even(int n, const std::vector<VarId>& xs, VarId x, VarId y,
                              const std::vector<VarId>& ys,
                              LineConvention lc = LineConvention::RowOverColumn)
{
    if (n < 1)
        throw SizeMismatchError("build_ht_even: size must be >= 1");
    if (static_cast<int>(xs.size()) != n - 1 || static_cast<int>(ys.size()) != n)
        throw SizeMismatchError("build_ht_even: need n-1 x-variables and n y-variables");

    IceGraph g;
    g.kind = ModelKind::HtEven;
    g.convention = lc;
    g.n = n;
    g.xs = xs;
    g.ys = ys;
    g.var_x = x;
    g.var_y = y;
    g.grid_cols = n;
    g.grid_rows = 2 * n;
    g.grid.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * n), -1);

    auto row_param = [&](int i) -> VarId {
        if (i < n)
            return xs[static_cast<std::size_t>(i - 1)];
        if (i == n)
            return x;
        if (i == n + 1)
            return y;
        return xs[static_cast<std::size_t>(2 * n - i)]; // row i carries x_{2n+1-i}
    };

    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = g.add_vertex(
                detail::vertex_param(row_param(i), ys[static_cast<std::size_t>(j - 1)], lc));
            g.grid[static_cast<std::size_t>((i - 1) * n + (j - 1))] = v;
        }

    const bool hout = detail::kHorizontalStubOut;
    const bool vout = detail::kVerticalStubOut;
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = g.vertex_at(j, i);
            if (j == 1)
                g.add_boundary(v, Slot::W, hout);
            if (i == 1)
                g.add_boundary(v, Slot::S, vout);
            if (j < n)
                g.add_edge(v, Slot::E, g.vertex_at(j + 1, i), Slot::W);
            if (i < 2 * n)
                g.add_edge(v, Slot::N, g.vertex_at(j, i + 1), Slot::S);
            else
                g.add_boundary(v, Slot::N, vout);
        }
    // U-turn arcs on the right; arcs carry no weight factor.
    for (int i = 1; i <= n; ++i) {
        int e = g.add_edge(g.vertex_at(n, i), Slot::E, g.vertex_at(n, 2 * n + 1 - i), Slot::E);
        if (i == n) {
            g.set_split_edge(e, /*or1_toward_b=*/true); // or1 = toward the y row
            g.mark_param_change(e);
        }
    }
    g.validate();
    return g;
}

// Half-turn quotient of the (2n+1) x (2n+1) domain-wall grid: n full columns
// of height 2n+1, the lower half of the central column (parameter y), and the
// half-turn-fixed center where the x row bends into the y column.  The two
// center-adjacent edges along the bent line are identified, so the center has
// one doubled horizontal edge and one doubled vertical edge and admits only
// the O1/O2 flow patterns.  The bend is a parameter change, not a crossing,
// and carries no weight.  The split edge is the doubled horizontal edge; its
// or1 orientation points into the center (the O1 flow).
inline IceGraph build_ht_odd(int n, const std::vector<VarId>& xs, VarId x, VarId y,
                             const std::vector<VarId>& ys,
                             LineConvention lc = LineConvention::RowOverColumn)
{
    if (n < 0)
        throw SizeMismatchError("build_ht_odd: size must be >= 0");
    if (static_cast<int>(xs.size()) != n || static_cast<int>(ys.size()) != n)
        throw SizeMismatchError("build_ht_odd: need n x-variables and n y-variables");

    if (n == 0) {
        // Order-1 quotient: only the bend, whose identified stub pairs carry
        // the boundary orientations.  The single state has the O1 flow.
        IceGraph g;
        g.kind = ModelKind::HtOdd;
        g.convention = lc;
        g.n = 0;
        g.var_x = x;
        g.var_y = y;
        g.grid_cols = 1;
        g.grid_rows = 1;
        int c = g.add_vertex(detail::vertex_param(x, y, lc), /*weighted=*/false);
        g.grid = {c};
        g.center_vertex = c;
        int eh = g.add_doubled_boundary(c, Slot::W, Slot::E, detail::kHorizontalStubOut);
        g.add_doubled_boundary(c, Slot::S, Slot::N, detail::kVerticalStubOut);
        g.set_split_edge(eh, /*or1_toward_b=*/false); // or1 = flow into the bend
        g.mark_param_change(eh);
        g.validate();
        return g;
    }

    IceGraph g;
    g.kind = ModelKind::HtOdd;
    g.convention = lc;
    g.n = n;
    g.xs = xs;
    g.ys = ys;
    g.var_x = x;
    g.var_y = y;
    g.grid_cols = n + 1;
    g.grid_rows = 2 * n + 1;
    g.grid.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(2 * n + 1), -1);

    auto row_param = [&](int i) -> VarId {
        if (i <= n)
            return xs[static_cast<std::size_t>(i - 1)];
        if (i == n + 1)
            return x;
        return xs[static_cast<std::size_t>(2 * n + 1 - i)];
    };

    for (int i = 1; i <= 2 * n + 1; ++i) {
        for (int j = 1; j <= n; ++j) {
            int v = g.add_vertex(
                detail::vertex_param(row_param(i), ys[static_cast<std::size_t>(j - 1)], lc));
            g.grid[static_cast<std::size_t>((i - 1) * (n + 1) + (j - 1))] = v;
        }
        if (i <= n) {
            int v = g.add_vertex(detail::vertex_param(row_param(i), y, lc));
            g.grid[static_cast<std::size_t>((i - 1) * (n + 1) + n)] = v;
        } else if (i == n + 1) {
            int v = g.add_vertex(detail::vertex_param(x, y, lc), /*weighted=*/false);
            g.grid[static_cast<std::size_t>((i - 1) * (n + 1) + n)] = v;
            g.center_vertex = v;
        }
    }

    const bool hout = detail::kHorizontalStubOut;
    const bool vout = detail::kVerticalStubOut;
    for (int i = 1; i <= 2 * n + 1; ++i) {
        int east_col = i <= n + 1 ? n + 1 : n; // last vertex of the row
        for (int j = 1; j <= east_col; ++j) {
            int v = g.vertex_at(j, i);
            if (j == 1)
                g.add_boundary(v, Slot::W, hout);
            if (i == 1)
                g.add_boundary(v, Slot::S, vout);
            if (j < east_col) {
                if (j == n && i == n + 1)
                    g.add_doubled_edge(v, Slot::E, g.center_vertex, Slot::W, Slot::E);
                else
                    g.add_edge(v, Slot::E, g.vertex_at(j + 1, i), Slot::W);
            }
            if (j <= n) {
                if (i < 2 * n + 1)
                    g.add_edge(v, Slot::N, g.vertex_at(j, i + 1), Slot::S);
                else
                    g.add_boundary(v, Slot::N, vout);
            } else if (i < n) { // central column, below the center
                g.add_edge(v, Slot::N, g.vertex_at(n + 1, i + 1), Slot::S);
            } else if (i == n) {
                g.add_doubled_edge(v, Slot::N, g.center_vertex, Slot::S, Slot::N);
            }
        }
    }
    // Arcs pair the east stubs of the central column (rows 1..n) with the east
    // stubs of column n (rows n+2..2n+1).
    for (int i = 1; i <= n; ++i)
        g.add_edge(g.vertex_at(n + 1, i), Slot::E, g.vertex_at(n, 2 * n + 2 - i), Slot::E);

    // Split on the horizontal center edge; or1 = flow into the center.
    {
        const auto& cv = g.vertex(g.center_vertex);
        int eh = cv.slot_edge[static_cast<std::size_t>(Slot::W)];
        g.set_split_edge(eh, /*or1_toward_b=*/true);
        g.mark_param_change(eh);
    }
    g.validate();
    return g;
}

// Explicit small graphs for the local identities.
struct TangleSpec {
    struct VertexSpec {
        ParamMonomial param;
        bool weighted = true;
    };
    std::vector<VertexSpec> vertices;
    // (va, slot_a, vb, slot_b) internal edges, arcs included
    std::vector<std::tuple<int, Slot, int, Slot>> edges;
    // free external stubs, in the order the checks will index them
    std::vector<std::pair<int, Slot>> externals;
};

inline IceGraph build_tangle(const TangleSpec& spec)
{
    IceGraph g;
    g.kind = ModelKind::Tangle;
    for (const auto& vs : spec.vertices)
        g.add_vertex(vs.param, vs.weighted);
    for (const auto& [va, sa, vb, sb] : spec.edges) {
        if (va < 0 || va >= g.vertex_count() || vb < 0 || vb >= g.vertex_count())
            throw MalformedSpecError("build_tangle: edge endpoint out of range");
        g.add_edge(va, sa, vb, sb);
    }
    for (const auto& [v, s] : spec.externals) {
        if (v < 0 || v >= g.vertex_count())
            throw MalformedSpecError("build_tangle: external endpoint out of range");
        g.external_edges.push_back(g.add_boundary(v, s, std::nullopt));
    }
    g.validate();
    return g;
}

// ---------------------------------------------------------------------------
// State enumeration: backtracking over edges in id order (the builders create
// edges row-major), trying the toward-b direction first (b ends point up or
// right), with unit propagation of the ice rule.
// ---------------------------------------------------------------------------

namespace detail {

struct Incidence {
    int vertex;
    bool end_b;
};

struct SearchContext {
    const IceGraph* g;
    std::vector<std::vector<Incidence>> edge_incidences; // per edge
    std::vector<std::vector<int>> vertex_edges;          // slot edges per vertex
};

inline SearchContext make_context(const IceGraph& g)
{
    SearchContext ctx;
    ctx.g = &g;
    ctx.edge_incidences.resize(static_cast<std::size_t>(g.edge_count()));
    ctx.vertex_edges.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& vx = g.vertex(v);
        for (int s = 0; s < 4; ++s) {
            int e = vx.slot_edge[static_cast<std::size_t>(s)];
            ctx.edge_incidences[static_cast<std::size_t>(e)].push_back(
                Incidence{v, vx.slot_end_b[static_cast<std::size_t>(s)]});
            ctx.vertex_edges[static_cast<std::size_t>(v)].push_back(e);
        }
    }
    return ctx;
}

struct SearchNode {
    std::vector<std::int8_t> dir; // -1 undecided, 0 toward a, 1 toward b
    std::vector<std::int8_t> n_in, n_out;
};

// Sets an edge direction and propagates forced decisions; false on dead end.
inline bool assign_and_propagate(const SearchContext& ctx, SearchNode& node, int e0, bool toward_b)
{
    std::vector<std::pair<int, bool>> queue{{e0, toward_b}};
    while (!queue.empty()) {
        auto [e, d] = queue.back();
        queue.pop_back();
        auto& cur = node.dir[static_cast<std::size_t>(e)];
        if (cur != -1) {
            if (cur != static_cast<std::int8_t>(d))
                return false;
            continue;
        }
        cur = static_cast<std::int8_t>(d);
        for (const auto& inc : ctx.edge_incidences[static_cast<std::size_t>(e)]) {
            bool incoming = (d == inc.end_b);
            auto& cnt = incoming ? node.n_in[static_cast<std::size_t>(inc.vertex)]
                                 : node.n_out[static_cast<std::size_t>(inc.vertex)];
            if (++cnt > 2)
                return false;
            if (cnt == 2) {
                // remaining undecided slots of this vertex flow the other way
                for (int e2 : ctx.vertex_edges[static_cast<std::size_t>(inc.vertex)]) {
                    if (node.dir[static_cast<std::size_t>(e2)] != -1)
                        continue;
                    const auto& incs = ctx.edge_incidences[static_cast<std::size_t>(e2)];
                    for (const auto& inc2 : incs) {
                        if (inc2.vertex != inc.vertex)
                            continue;
                        // force e2 so that it is NOT `incoming` at this vertex
                        queue.emplace_back(e2, incoming ? !inc2.end_b : inc2.end_b);
                        break;
                    }
                }
            }
        }
    }
    return true;
}

inline void search(const SearchContext& ctx, SearchNode node,
                   const std::function<void(const IceState&)>& yield)
{
    int branch_edge = -1;
    for (std::size_t e = 0; e < node.dir.size(); ++e)
        if (node.dir[e] == -1) {
            branch_edge = static_cast<int>(e);
            break;
        }
    if (branch_edge < 0) {
        IceState s;
        s.dir.resize(node.dir.size());
        for (std::size_t e = 0; e < node.dir.size(); ++e)
            s.dir[e] = static_cast<std::uint8_t>(node.dir[e]);
        yield(s);
        return;
    }
    for (bool d : {true, false}) {
        SearchNode child = node;
        if (assign_and_propagate(ctx, child, branch_edge, d))
            search(ctx, std::move(child), yield);
    }
}

} // namespace detail

inline void for_each_state(const IceGraph& g, const std::function<void(const IceState&)>& yield)
{
    auto ctx = detail::make_context(g);
    detail::SearchNode root;
    root.dir.assign(static_cast<std::size_t>(g.edge_count()), -1);
    root.n_in.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    root.n_out.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (ed.fixed_toward_b.has_value() &&
            !detail::assign_and_propagate(ctx, root, e, *ed.fixed_toward_b))
            return;
    }
    detail::search(ctx, std::move(root), yield);
}

inline std::vector<IceState> enumerate_states(const IceGraph& g)
{
    std::vector<IceState> out;
    for_each_state(g, [&](const IceState& s) { out.push_back(s); });
    return out;
}

} // namespace ice

#endif
