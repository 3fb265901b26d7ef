#ifndef ICE_PARTITION_HPP
#define ICE_PARTITION_HPP

#include "ice/asm_matrix.hpp"
#include "ice/graph.hpp"
#include "ice/laurent.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace ice {

// All variables a graph's vertex parameters mention, sorted.
inline std::vector<VarId> model_vars(const IceGraph& g)
{
    std::set<VarId> vs;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const auto& [var, e] : g.vertex(v).param.vars)
            vs.insert(var);
    return {vs.begin(), vs.end()};
}

inline int weighted_vertex_count(const IceGraph& g)
{
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.vertex(v).weighted)
            ++k;
    return k;
}

// ---------------------------------------------------------------------------
// WeightTable: orientation -> weight, per vertex.  O1/O2 carry sigma(a^2),
// O3/O4 sigma(a t) and O5/O6 sigma(a tbar), with t the vertex parameter.
// All weights are pre-aligned on one common variable set so that state
// products never re-align.
// ---------------------------------------------------------------------------
template <class C>
class WeightTable {
public:
    explicit WeightTable(const IceGraph& g) : vars_(model_vars(g))
    {
        weights_.resize(static_cast<std::size_t>(g.vertex_count()));
        auto a2 = sigma_monomial<C>(2, {}).aligned_to(vars_);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!g.vertex(v).weighted)
                continue;
            const ParamMonomial& t = g.vertex(v).param;
            ParamMonomial tbar = t.inverse();
            weights_[static_cast<std::size_t>(v)] = {
                a2,
                sigma_monomial<C>(1 + t.a_exp, t.vars).aligned_to(vars_),
                sigma_monomial<C>(1 + tbar.a_exp, tbar.vars).aligned_to(vars_)};
        }
    }

    const std::vector<VarId>& vars() const { return vars_; }

    const LaurentPoly<C>& weight(int v, VertexOrientation o) const
    {
        return (*weights_[static_cast<std::size_t>(v)])[static_cast<std::size_t>(weight_class(o))];
    }

    const LaurentPoly<C>& weight(int v, WeightClass wc) const
    {
        return (*weights_[static_cast<std::size_t>(v)])[static_cast<std::size_t>(wc)];
    }

    LaurentPoly<C> one() const
    {
        return LaurentPoly<C>::constant(C(1)).aligned_to(vars_);
    }

private:
    std::vector<VarId> vars_;
    std::vector<std::optional<std::array<LaurentPoly<C>, 3>>> weights_;
};

template <class C>
LaurentPoly<C> state_weight(const IceGraph& g, const WeightTable<C>& wt, const IceState& s)
{
    LaurentPoly<C> w = wt.one();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex(v).weighted)
            continue;
        w *= wt.weight(v, g.orientation(s, v));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Exact symbolic partition function by state enumeration; the reference path
// for every model.  When the graph designates a split edge, the two restricted
// sums are returned as well, keyed by its or1/or2 orientations.
// ---------------------------------------------------------------------------
template <class C>
struct PartitionResult {
    LaurentPoly<C> value;
    std::optional<std::array<LaurentPoly<C>, 2>> split;
    long long state_count = 0;
};

template <class C>
PartitionResult<C> partition_function(const IceGraph& g)
{
    WeightTable<C> wt(g);
    PartitionResult<C> out;
    out.value = LaurentPoly<C>(wt.vars());
    bool has_split = g.split_edge() >= 0;
    if (has_split)
        out.split = {LaurentPoly<C>(wt.vars()), LaurentPoly<C>(wt.vars())};
    for_each_state(g, [&](const IceState& s) {
        LaurentPoly<C> w = state_weight(g, wt, s);
        if (has_split)
            (*out.split)[g.split_is_or1(s) ? 0 : 1] += std::move(w);
        else
            out.value += std::move(w);
        ++out.state_count;
    });
    if (has_split)
        out.value = (*out.split)[0] + (*out.split)[1];
    return out;
}

// The two split summands as (or1, or2); requires a designated split edge.
template <class C>
std::array<LaurentPoly<C>, 2> split_partition(const IceGraph& g)
{
    if (g.split_edge() < 0)
        throw MalformedSpecError("split_partition: graph has no split edge");
    return *partition_function<C>(g).split;
}

// ---------------------------------------------------------------------------
// Numeric path: the same sums evaluated exactly at a point, with a = omega6.
// Used by the randomized identity checks, where full symbolic expansion is
// unnecessary.
// ---------------------------------------------------------------------------
inline CycNum param_value(const ParamMonomial& t, const EvalPoint& pt)
{
    CycNum v = CycNum::a_power(t.a_exp);
    for (const auto& [var, e] : t.vars) {
        const CycNum* x = pt.find(var);
        if (x == nullptr)
            throw UnboundVariableError("param_value: unbound variable " + var.name());
        v *= x->pow(e);
    }
    return v;
}

struct NumericWeights {
    std::vector<std::array<CycNum, 3>> w; // per vertex: sigma(a^2), sigma(a t), sigma(a tbar)

    NumericWeights(const IceGraph& g, const EvalPoint& pt)
    {
        CycNum a2 = sigma(CycNum::a_power(2));
        w.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!g.vertex(v).weighted)
                continue;
            CycNum t = param_value(g.vertex(v).param, pt);
            CycNum a = CycNum::omega();
            w[static_cast<std::size_t>(v)] = {a2, sigma(a * t), sigma(a * t.inv())};
        }
    }
};

struct PartitionValue {
    CycNum value;
    std::optional<std::array<CycNum, 2>> split;
    long long state_count = 0;
};

inline PartitionValue partition_value(const IceGraph& g, const EvalPoint& pt)
{
    NumericWeights nw(g, pt);
    PartitionValue out;
    bool has_split = g.split_edge() >= 0;
    if (has_split)
        out.split = {CycNum(0), CycNum(0)};
    for_each_state(g, [&](const IceState& s) {
        CycNum w(1);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!g.vertex(v).weighted)
                continue;
            w *= nw.w[static_cast<std::size_t>(v)][static_cast<std::size_t>(
                weight_class(g.orientation(s, v)))];
        }
        out.value += w;
        if (has_split)
            (*out.split)[g.split_is_or1(s) ? 0 : 1] += w;
        ++out.state_count;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Transfer-matrix accelerator for the domain-wall grid: row-by-row
// contraction over the 2^n orientation profiles of the vertical edges.
// Produces exactly the enumeration value.
// ---------------------------------------------------------------------------
namespace detail {

// Per column step: given the west-flowing bit h (1 = east) and the bit below
// (1 = north), the two ice-rule completions (h', above-bit) and their weight
// classes.  Pass-through states keep h' + above = h + below.
struct TmStep {
    int h_out;
    int above;
    WeightClass wc;
};

inline std::array<std::vector<TmStep>, 4> tm_steps()
{
    std::array<std::vector<TmStep>, 4> table; // index (h<<1)|below
    table[0b00] = {TmStep{0, 0, WeightClass::SigmaATbar}};
    table[0b11] = {TmStep{1, 1, WeightClass::SigmaATbar}};
    table[0b10] = {TmStep{1, 0, WeightClass::SigmaAT}, TmStep{0, 1, WeightClass::SigmaA2}};
    table[0b01] = {TmStep{1, 0, WeightClass::SigmaA2}, TmStep{0, 1, WeightClass::SigmaAT}};
    return table;
}

} // namespace detail

template <class C>
LaurentPoly<C> transfer_matrix_partition(const IceGraph& g)
{
    if (g.kind != ModelKind::Dwbc)
        throw NotDwbcGraphError("transfer_matrix_partition: not a domain-wall grid");
    const int n = g.n;
    WeightTable<C> wt(g);
    const auto steps = detail::tm_steps();

    // domain-wall boundary: enter with all verticals down and the horizontal
    // flowing east, leave with all verticals up and the horizontal blocked
    const unsigned start_profile = 0u;
    const unsigned end_profile = (1u << n) - 1u;
    const int h_in = 1;
    const int h_exit = 0;

    std::vector<LaurentPoly<C>> acc(1u << n, LaurentPoly<C>(wt.vars()));
    acc[start_profile] = wt.one();

    for (int i = 1; i <= n; ++i) {
        std::vector<LaurentPoly<C>> next(1u << n, LaurentPoly<C>(wt.vars()));
        for (unsigned below = 0; below < (1u << n); ++below) {
            if (acc[below].is_zero())
                continue;
            LaurentPoly<C> src = std::move(acc[below]);
            // row weights per reachable above-profile, kept small before the
            // single big multiply
            std::map<unsigned, LaurentPoly<C>> row_weight;
            struct Frame {
                int j;
                int h;
                unsigned above;
                LaurentPoly<C> w;
            };
            std::vector<Frame> stack{Frame{1, h_in, 0u, wt.one()}};
            while (!stack.empty()) {
                Frame f = std::move(stack.back());
                stack.pop_back();
                if (f.j > n) {
                    if (f.h == h_exit) {
                        auto it = row_weight.find(f.above);
                        if (it == row_weight.end())
                            row_weight.emplace(f.above, std::move(f.w));
                        else
                            it->second += f.w;
                    }
                    continue;
                }
                int b = (below >> (f.j - 1)) & 1;
                for (const auto& st : steps[static_cast<std::size_t>((f.h << 1) | b)]) {
                    Frame nf{f.j + 1, st.h_out,
                             f.above | (static_cast<unsigned>(st.above) << (f.j - 1)),
                             f.w * wt.weight(g.vertex_at(f.j, i), st.wc)};
                    stack.push_back(std::move(nf));
                }
            }
            for (auto& [above, rw] : row_weight)
                next[above] += src * rw;
        }
        acc = std::move(next);
    }
    return acc[end_profile];
}

inline CycNum transfer_matrix_value(const IceGraph& g, const EvalPoint& pt)
{
    if (g.kind != ModelKind::Dwbc)
        throw NotDwbcGraphError("transfer_matrix_value: not a domain-wall grid");
    const int n = g.n;
    NumericWeights nw(g, pt);
    const auto steps = detail::tm_steps();

    // domain-wall boundary: enter with all verticals down and the horizontal
    // flowing east, leave with all verticals up and the horizontal blocked
    const unsigned start_profile = 0u;
    const unsigned end_profile = (1u << n) - 1u;
    const int h_in = 1;
    const int h_exit = 0;

    std::vector<CycNum> acc(1u << n, CycNum(0));
    acc[start_profile] = CycNum(1);
    for (int i = 1; i <= n; ++i) {
        std::vector<CycNum> next(1u << n, CycNum(0));
        for (unsigned below = 0; below < (1u << n); ++below) {
            if (acc[below].is_zero())
                continue;
            struct Frame {
                int j;
                int h;
                unsigned above;
                CycNum w;
            };
            std::vector<Frame> stack{Frame{1, h_in, 0u, CycNum(1)}};
            while (!stack.empty()) {
                Frame f = std::move(stack.back());
                stack.pop_back();
                if (f.j > n) {
                    if (f.h == h_exit)
                        next[f.above] += acc[below] * f.w;
                    continue;
                }
                int b = (below >> (f.j - 1)) & 1;
                for (const auto& st : steps[static_cast<std::size_t>((f.h << 1) | b)]) {
                    int v = g.vertex_at(f.j, i);
                    stack.push_back(Frame{
                        f.j + 1, st.h_out,
                        f.above | (static_cast<unsigned>(st.above) << (f.j - 1)),
                        f.w * nw.w[static_cast<std::size_t>(v)][static_cast<std::size_t>(st.wc)]});
                }
            }
        }
        acc = std::move(next);
    }
    return acc[end_profile];
}

// ---------------------------------------------------------------------------
// Specialization prefactors.
// ---------------------------------------------------------------------------

// A = prod_{2<=k<=N} sigma(a x_k ybar_1) * prod_{1<=k<=N} sigma(a^2 y_1 ybar_k)
template <class C>
LaurentPoly<C> spec_factor_A(const std::vector<VarId>& xs, const std::vector<VarId>& ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw IndexRangeError("spec_factor_A: need equally many x and y variables");
    auto f = LaurentPoly<C>::constant(C(1));
    for (std::size_t k = 1; k < xs.size(); ++k)
        f *= sigma_monomial<C>(1, {{xs[k], 1}, {ys[0], -1}});
    for (std::size_t k = 0; k < ys.size(); ++k)
        f *= sigma_monomial<C>(2, {{ys[0], 1}, {ys[k], -1}});
    return f;
}

// Abar = prod_{2<=k<=N} sigma(a y_1 xbar_k) * prod_{1<=k<=N} sigma(a^2 y_k ybar_1)
template <class C>
LaurentPoly<C> spec_factor_Abar(const std::vector<VarId>& xs, const std::vector<VarId>& ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw IndexRangeError("spec_factor_Abar: need equally many x and y variables");
    auto f = LaurentPoly<C>::constant(C(1));
    for (std::size_t k = 1; k < xs.size(); ++k)
        f *= sigma_monomial<C>(1, {{ys[0], 1}, {xs[k], -1}});
    for (std::size_t k = 0; k < ys.size(); ++k)
        f *= sigma_monomial<C>(2, {{ys[k], 1}, {ys[0], -1}});
    return f;
}

enum class HtFactorKind { A_H1, Abar_H1, A_H0, Abar_H0 };

// The four half-turn prefactors.  For A_H1/Abar_H1 pass the full X_N and Y_N
// (the distinguished variable is xs[0]); for A_H0/Abar_H0 pass X_{N-1} and the
// full Y_N (distinguished ys[0]).
template <class C>
LaurentPoly<C> spec_factor_ht(HtFactorKind kind, const std::vector<VarId>& xs,
                              const std::vector<VarId>& ys)
{
    auto f = LaurentPoly<C>::constant(C(1));
    switch (kind) {
    case HtFactorKind::A_H1:
        if (xs.size() != ys.size() || xs.empty())
            throw IndexRangeError("spec_factor_ht: A_H1 needs |X| == |Y| >= 1");
        for (std::size_t k = 0; k < xs.size(); ++k)
            f *= sigma_monomial<C>(2, {{xs[0], 1}, {xs[k], -1}});
        for (std::size_t k = 0; k < ys.size(); ++k)
            f *= sigma_monomial<C>(1, {{ys[k], 1}, {xs[0], -1}});
        return f;
    case HtFactorKind::Abar_H1:
        if (xs.size() != ys.size() || xs.empty())
            throw IndexRangeError("spec_factor_ht: Abar_H1 needs |X| == |Y| >= 1");
        for (std::size_t k = 0; k < xs.size(); ++k)
            f *= sigma_monomial<C>(2, {{xs[k], 1}, {xs[0], -1}});
        for (std::size_t k = 0; k < ys.size(); ++k)
            f *= sigma_monomial<C>(1, {{xs[0], 1}, {ys[k], -1}});
        return f;
    case HtFactorKind::A_H0:
        if (xs.size() + 1 != ys.size())
            throw IndexRangeError("spec_factor_ht: A_H0 needs |X| == |Y| - 1");
        for (std::size_t k = 0; k < xs.size(); ++k)
            f *= sigma_monomial<C>(1, {{xs[k], 1}, {ys[0], -1}});
        for (std::size_t k = 0; k < ys.size(); ++k)
            f *= sigma_monomial<C>(2, {{ys[0], 1}, {ys[k], -1}});
        return f;
    default:
        if (xs.size() + 1 != ys.size())
            throw IndexRangeError("spec_factor_ht: Abar_H0 needs |X| == |Y| - 1");
        for (std::size_t k = 0; k < xs.size(); ++k)
            f *= sigma_monomial<C>(1, {{ys[0], 1}, {xs[k], -1}});
        for (std::size_t k = 0; k < ys.size(); ++k)
            f *= sigma_monomial<C>(2, {{ys[k], 1}, {ys[0], -1}});
        return f;
    }
}

// ---------------------------------------------------------------------------
// Zero-entry weight rule in matrix coordinates, for the calibrated standard
// convention: with h the row partial sum through the cell and v the column
// partial sum through it, equal partial sums give the sigma(a xbar y) class
// and unequal ones sigma(a x ybar).  Verified against the orientation path by
// the calibration tests.
// ---------------------------------------------------------------------------
inline WeightClass dwbc_zero_class(bool h_eq_v)
{
    return h_eq_v ? WeightClass::SigmaATbar : WeightClass::SigmaAT;
}

template <class C>
LaurentPoly<C> asm_weight(const IceGraph& g, const WeightTable<C>& wt, const AsmMatrix& a)
{
    if (g.kind != ModelKind::Dwbc)
        throw NotDwbcGraphError("asm_weight: not a domain-wall grid");
    int n = g.n;
    LaurentPoly<C> w = wt.one();
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            int v = g.vertex_at(c, n + 1 - r);
            if (a.at(r, c) != 0) {
                w *= wt.weight(v, WeightClass::SigmaA2);
                continue;
            }
            int h = 0, vv = 0;
            for (int c2 = 1; c2 <= c; ++c2)
                h += a.at(r, c2);
            for (int r2 = 1; r2 <= r; ++r2)
                vv += a.at(r2, c);
            w *= wt.weight(v, dwbc_zero_class(h == vv));
        }
    return w;
}

} // namespace ice

#endif
