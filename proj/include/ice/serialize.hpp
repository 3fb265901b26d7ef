#ifndef ICE_SERIALIZE_HPP
#define ICE_SERIALIZE_HPP

#include "ice/asm_matrix.hpp"
#include "ice/cyclotomic.hpp"
#include "ice/graph.hpp"
#include "ice/laurent.hpp"
#include "ice/partition.hpp"

#include <json.hpp>

#include <string>

namespace ice {

using njson = nlohmann::ordered_json;

inline njson coeff_json(const CycNum& c)
{
    return njson{{"p", rat_to_string(c.p())}, {"q", rat_to_string(c.q())}};
}

inline njson coeff_json(const CycInt& c)
{
    return njson{{"p", c.p().str()}, {"q", c.q().str()}};
}

inline njson coeff_json(const GenericCoeff& c)
{
    njson terms = njson::array();
    for (const auto& [e, v] : c.terms())
        terms.push_back(njson::array({e, v.str()}));
    return njson{{"a_terms", terms}};
}

template <class C>
njson poly_json(const LaurentPoly<C>& f)
{
    njson vars = njson::array();
    for (const auto& v : f.vars())
        vars.push_back(v.name());
    njson terms = njson::array();
    for (const auto& t : f.terms()) {
        njson exps = njson::array();
        for (auto e : t.exps)
            exps.push_back(static_cast<int>(e));
        terms.push_back(njson{{"exps", exps}, {"coeff", coeff_json(t.coeff)}});
    }
    return njson{{"mode", to_string(coeff_traits<C>::mode)}, {"vars", vars}, {"terms", terms}};
}

inline njson point_json(const EvalPoint& pt)
{
    njson out = njson::object();
    for (const auto& [v, c] : pt.assignment())
        out[v.name()] = coeff_json(c);
    return out;
}

inline const char* model_name(ModelKind k)
{
    switch (k) {
    case ModelKind::Dwbc: return "dwbc";
    case ModelKind::HtEven: return "ht-even";
    case ModelKind::HtOdd: return "ht-odd";
    default: return "tangle";
    }
}

inline njson state_json(const IceGraph& g, const IceState& s)
{
    njson edges = njson::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        bool toward_b = s.dir[static_cast<std::size_t>(e)] != 0;
        std::string head;
        if (toward_b)
            head = ed.vertex_b >= 0 ? "v" + std::to_string(ed.vertex_b) : "out";
        else
            head = "v" + std::to_string(ed.vertex_a);
        edges.push_back(njson{{"id", e}, {"dir", head}});
    }
    return njson{{"model", model_name(g.kind)}, {"n", g.n}, {"edges", edges}};
}

template <class C>
njson partition_json(const IceGraph& g, const PartitionResult<C>& r)
{
    njson out{{"model", model_name(g.kind)},
              {"n", g.n},
              {"mode", to_string(coeff_traits<C>::mode)},
              {"Z", poly_json(r.value)}};
    if (r.split)
        out["split"] = njson{{"or1", poly_json((*r.split)[0])}, {"or2", poly_json((*r.split)[1])}};
    out["state_count"] = r.state_count;
    return out;
}

} // namespace ice

#endif
