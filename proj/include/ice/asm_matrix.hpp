#ifndef ICE_ASM_MATRIX_HPP
#define ICE_ASM_MATRIX_HPP

#include "ice/errors.hpp"
#include "ice/graph.hpp"
#include "ice/numbers.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace ice {

// Square {-1,0,1} matrix whose nonzero entries alternate in sign and sum to 1
// along every row and column.  Rows are stored top to bottom.
class AsmMatrix {
public:
    AsmMatrix(int n, std::vector<int> entries) : n_(n), m_(std::move(entries))
    {
        if (n < 1 || m_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw InvalidAsmError("AsmMatrix: bad dimensions");
        if (!valid())
            throw InvalidAsmError("AsmMatrix: alternating-sign conditions violated");
    }

    int n() const { return n_; }
    int at(int r, int c) const // 1-based
    {
        return m_[static_cast<std::size_t>((r - 1) * n_ + (c - 1))];
    }

    bool ht_symmetric() const
    {
        for (int r = 1; r <= n_; ++r)
            for (int c = 1; c <= n_; ++c)
                if (at(r, c) != at(n_ + 1 - r, n_ + 1 - c))
                    return false;
        return true;
    }

    std::string to_text() const
    {
        std::ostringstream os;
        for (int r = 1; r <= n_; ++r) {
            for (int c = 1; c <= n_; ++c) {
                if (c > 1)
                    os << ' ';
                os << at(r, c);
            }
            os << '\n';
        }
        return os.str();
    }

    friend bool operator==(const AsmMatrix& u, const AsmMatrix& v)
    {
        return u.n_ == v.n_ && u.m_ == v.m_;
    }

    static bool entries_valid(int n, const std::vector<int>& m)
    {
        auto ok_line = [&](auto get) {
            int sum = 0, last = -1; // next nonzero must be +1
            for (int k = 1; k <= n; ++k) {
                int e = get(k);
                if (e != -1 && e != 0 && e != 1)
                    return false;
                if (e != 0) {
                    if (e == last)
                        return false;
                    last = e;
                    sum += e;
                }
            }
            return sum == 1;
        };
        for (int r = 1; r <= n; ++r)
            if (!ok_line([&](int c) { return m[static_cast<std::size_t>((r - 1) * n + (c - 1))]; }))
                return false;
        for (int c = 1; c <= n; ++c)
            if (!ok_line([&](int r) { return m[static_cast<std::size_t>((r - 1) * n + (c - 1))]; }))
                return false;
        return true;
    }

private:
    bool valid() const { return entries_valid(n_, m_); }

    int n_;
    std::vector<int> m_;
};

// Orientation classes of a domain-wall state map to matrix entries through
// the weight table: O1 -> +1, O2 -> -1, the four others -> 0.  Grid row i
// counts from the bottom, matrix row r from the top.
inline AsmMatrix state_to_asm(const IceGraph& g, const IceState& s)
{
    if (g.kind != ModelKind::Dwbc)
        throw NotDwbcGraphError("state_to_asm: not a domain-wall grid");
    int n = g.n;
    std::vector<int> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int r = n + 1 - i;
            m[static_cast<std::size_t>((r - 1) * n + (j - 1))] =
                asm_entry(g.orientation(s, g.vertex_at(j, i)));
        }
    return AsmMatrix(n, std::move(m));
}

// Inverse bijection: edge orientations are recovered from partial sums.
// Horizontally, the edge right of a cell flows east iff the row sum so far is
// zero; vertically, the edge above a cell (in grid coordinates) flows north
// iff the column sum from the bottom row up to it is one.
inline IceState asm_to_state(const IceGraph& g, const AsmMatrix& a)
{
    if (g.kind != ModelKind::Dwbc)
        throw NotDwbcGraphError("asm_to_state: not a domain-wall grid");
    int n = g.n;
    if (a.n() != n)
        throw SizeMismatchError("asm_to_state: size mismatch");

    IceState s;
    s.dir.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = g.vertex_at(j, i);
            const auto& vx = g.vertex(v);
            int r = n + 1 - i;
            int row_sum = 0, col_sum = 0;
            for (int c = 1; c <= j; ++c)
                row_sum += a.at(r, c);
            for (int i2 = 1; i2 <= i; ++i2)
                col_sum += a.at(n + 1 - i2, j);
            bool east_flows_east = row_sum == 0;
            bool north_flows_up = col_sum == 1;
            // E slot: flow east means away from this vertex, toward the b end.
            {
                int e = vx.slot_edge[static_cast<std::size_t>(Slot::E)];
                bool end_b = vx.slot_end_b[static_cast<std::size_t>(Slot::E)];
                bool outgoing = east_flows_east;
                s.dir[static_cast<std::size_t>(e)] =
                    static_cast<std::uint8_t>(outgoing ? !end_b : end_b);
            }
            {
                int e = vx.slot_edge[static_cast<std::size_t>(Slot::N)];
                bool end_b = vx.slot_end_b[static_cast<std::size_t>(Slot::N)];
                bool outgoing = north_flows_up;
                s.dir[static_cast<std::size_t>(e)] =
                    static_cast<std::uint8_t>(outgoing ? !end_b : end_b);
            }
            if (j == 1) {
                int e = vx.slot_edge[static_cast<std::size_t>(Slot::W)];
                s.dir[static_cast<std::size_t>(e)] = 0; // stub flows in (toward a)
            }
            if (i == 1) {
                int e = vx.slot_edge[static_cast<std::size_t>(Slot::S)];
                s.dir[static_cast<std::size_t>(e)] = 1; // stub flows out (toward b)
            }
        }
    return s;
}

// Number of n x n alternating sign matrices, computed by dynamic programming
// over monotone triangles (strict Gelfand patterns): row k of the triangle is
// a strictly increasing k-subset of {1..n}, consecutive rows interlace.  This
// is fully independent of the ice-state enumerator.
inline Int asm_count_oracle(int n)
{
    if (n < 1)
        throw SizeMismatchError("asm_count_oracle: size must be >= 1");
    using Row = std::vector<int>;
    std::map<Row, Int> layer;
    for (int v = 1; v <= n; ++v)
        layer[Row{v}] = 1;
    for (int k = 2; k <= n; ++k) {
        std::map<Row, Int> next;
        // enumerate strictly increasing k-subsets of {1..n}
        Row t(static_cast<std::size_t>(k));
        std::function<void(int, int)> rec = [&](int pos, int min_v) {
            if (pos == k) {
                Int total = 0;
                for (const auto& [prev, cnt] : layer) {
                    bool ok = true; // t[0] <= prev[0] <= t[1] <= ... <= t[k-1]
                    for (int i = 0; i + 1 < k && ok; ++i)
                        ok = t[static_cast<std::size_t>(i)] <= prev[static_cast<std::size_t>(i)] &&
                             prev[static_cast<std::size_t>(i)] <= t[static_cast<std::size_t>(i) + 1];
                    if (ok)
                        total += cnt;
                }
                if (total != 0)
                    next[t] = total;
                return;
            }
            for (int v = min_v; v <= n; ++v) {
                t[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 1);
        layer = std::move(next);
    }
    Row full(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        full[static_cast<std::size_t>(v - 1)] = v;
    auto it = layer.find(full);
    return it == layer.end() ? Int(0) : it->second;
}

// Brute-force count of half-turn symmetric ASMs of order m, by filtering the
// full domain-wall state list.  Test oracle for the quotient-graph counts.
inline Int ht_symmetric_asm_count(int m)
{
    std::vector<VarId> xs, ys;
    for (int i = 1; i <= m; ++i) {
        xs.push_back(VarId::x(i));
        ys.push_back(VarId::y(i));
    }
    IceGraph g = build_dwbc(m, xs, ys);
    Int count = 0;
    for_each_state(g, [&](const IceState& s) {
        if (state_to_asm(g, s).ht_symmetric())
            ++count;
    });
    return count;
}

} // namespace ice

#endif
