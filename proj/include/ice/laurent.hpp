#ifndef ICE_LAURENT_HPP
#define ICE_LAURENT_HPP

#include "ice/cyclotomic.hpp"
#include "ice/errors.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ice {

// ---------------------------------------------------------------------------
// Variables.  X/Y are the row/column families x_i, y_i; Aux holds the free
// tangle and half-turn parameters (x, y, z, w).
// ---------------------------------------------------------------------------
enum class VarKind : std::uint8_t { X, Y, Aux };

struct VarId {
    VarKind kind{VarKind::X};
    int index{1};

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string name() const
    {
        static const char* aux_names[] = {"x", "y", "z", "w"};
        switch (kind) {
        case VarKind::X: return "x" + std::to_string(index);
        case VarKind::Y: return "y" + std::to_string(index);
        default:
            if (index >= 1 && index <= 4)
                return aux_names[index - 1];
            return "t" + std::to_string(index);
        }
    }

    static VarId x(int i) { return VarId{VarKind::X, i}; }
    static VarId y(int i) { return VarId{VarKind::Y, i}; }
    static VarId aux(int i) { return VarId{VarKind::Aux, i}; }

    static std::optional<VarId> parse(const std::string& s)
    {
        if (s == "x") return aux(1);
        if (s == "y") return aux(2);
        if (s == "z") return aux(3);
        if (s == "w") return aux(4);
        if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'y')) {
            for (std::size_t i = 1; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i])))
                    return std::nullopt;
            int idx = std::stoi(s.substr(1));
            if (idx < 1)
                return std::nullopt;
            return s[0] == 'x' ? x(idx) : y(idx);
        }
        return std::nullopt;
    }
};

using Exp = std::int16_t;
using ExpVec = boost::container::small_vector<Exp, 12>;

inline bool exp_less(const ExpVec& u, const ExpVec& v)
{
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i])
            return u[i] < v[i];
    }
    return false;
}

// One variable with an integer exponent; products of these describe the unit
// monomials used for substitutions and vertex parameters.
using VarPow = std::pair<VarId, int>;

enum class Parity : std::uint8_t { Even, Odd, Mixed };

struct StructureInfo {
    bool centered{};
    Parity parity{};
};

// ---------------------------------------------------------------------------
// Exact point for randomized identity testing; all values are invertible.
// ---------------------------------------------------------------------------
class EvalPoint {
public:
    void set(VarId v, CycNum value)
    {
        if (value.is_zero())
            throw ZeroDivisionError("EvalPoint: value of " + v.name() + " must be nonzero");
        assignment_[v] = std::move(value);
    }

    const CycNum* find(VarId v) const
    {
        auto it = assignment_.find(v);
        return it == assignment_.end() ? nullptr : &it->second;
    }

    const std::map<VarId, CycNum>& assignment() const { return assignment_; }

private:
    std::map<VarId, CycNum> assignment_;
};

// ---------------------------------------------------------------------------
// Sparse multivariate Laurent polynomial over coefficients C (CycNum in
// Omega6 mode, GenericCoeff in GenericA mode).  Terms are kept sorted in
// ascending lexicographic order of their exponent vectors, with no zero
// coefficients, so representation and serialization are canonical.
// ---------------------------------------------------------------------------
template <class C>
class LaurentPoly {
public:
    struct Term {
        ExpVec exps;
        C coeff;
    };

    LaurentPoly() = default;

    explicit LaurentPoly(std::vector<VarId> vars) : vars_(std::move(vars))
    {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    }

    static CoeffMode mode() { return coeff_traits<C>::mode; }

    static LaurentPoly constant(C c)
    {
        LaurentPoly f;
        if (!c.is_zero())
            f.terms_.push_back(Term{ExpVec{}, std::move(c)});
        return f;
    }

    static LaurentPoly monomial(C c, const std::vector<VarPow>& m)
    {
        LaurentPoly f;
        for (const auto& [v, e] : m)
            f.vars_.push_back(v);
        std::sort(f.vars_.begin(), f.vars_.end());
        f.vars_.erase(std::unique(f.vars_.begin(), f.vars_.end()), f.vars_.end());
        if (c.is_zero())
            return f;
        ExpVec e(f.vars_.size(), 0);
        for (const auto& [v, k] : m) {
            auto it = std::lower_bound(f.vars_.begin(), f.vars_.end(), v);
            e[static_cast<std::size_t>(it - f.vars_.begin())] += static_cast<Exp>(k);
        }
        f.terms_.push_back(Term{std::move(e), std::move(c)});
        f.drop_zero_exponent_only();
        return f;
    }

    static LaurentPoly variable(VarId v, int exp = 1)
    {
        return monomial(C(1), {{v, exp}});
    }

    const std::vector<VarId>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        if (terms_.empty())
            return true;
        if (terms_.size() != 1)
            return false;
        for (Exp e : terms_[0].exps)
            if (e != 0)
                return false;
        return true;
    }

    C constant_value() const
    {
        if (is_zero())
            return C(0);
        return terms_[0].coeff;
    }

    // Re-embeds this polynomial on a superset of its variables.
    LaurentPoly aligned_to(const std::vector<VarId>& target) const
    {
        if (target == vars_)
            return *this;
        LaurentPoly out;
        out.vars_ = target;
        std::vector<int> pos(vars_.size(), -1);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
            if (it == target.end() || *it != vars_[i])
                throw UnboundVariableError("aligned_to: target misses " + vars_[i].name());
            pos[i] = static_cast<int>(it - target.begin());
        }
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            ExpVec e(target.size(), 0);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                e[static_cast<std::size_t>(pos[i])] = t.exps[i];
            out.terms_.push_back(Term{std::move(e), t.coeff});
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& s, const Term& t) { return exp_less(s.exps, t.exps); });
        return out;
    }

    static std::vector<VarId> var_union(const std::vector<VarId>& u, const std::vector<VarId>& v)
    {
        std::vector<VarId> out;
        out.reserve(u.size() + v.size());
        std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
        return out;
    }

    // Removes variables that no stored term uses.
    LaurentPoly pruned() const
    {
        std::vector<bool> used(vars_.size(), false);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (t.exps[i] != 0)
                    used[i] = true;
        std::vector<VarId> keep;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i])
                keep.push_back(vars_[i]);
        if (keep.size() == vars_.size())
            return *this;
        LaurentPoly out;
        out.vars_ = std::move(keep);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            ExpVec e;
            e.reserve(out.vars_.size());
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (used[i])
                    e.push_back(t.exps[i]);
            out.terms_.push_back(Term{std::move(e), t.coeff});
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& s, const Term& t) { return exp_less(s.exps, t.exps); });
        return out;
    }

    friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g)
    {
        if (f.vars_ == g.vars_)
            return merged(f, g, false);
        auto u = var_union(f.vars_, g.vars_);
        return merged(f.aligned_to(u), g.aligned_to(u), false);
    }

    friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g)
    {
        if (f.vars_ == g.vars_)
            return merged(f, g, true);
        auto u = var_union(f.vars_, g.vars_);
        return merged(f.aligned_to(u), g.aligned_to(u), true);
    }

    LaurentPoly operator-() const
    {
        LaurentPoly out;
        out.vars_ = vars_;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            out.terms_.push_back(Term{t.exps, -t.coeff});
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g)
    {
        if (f.vars_ == g.vars_)
            return product(f, g);
        auto u = var_union(f.vars_, g.vars_);
        return product(f.aligned_to(u), g.aligned_to(u));
    }

    LaurentPoly operator*(const C& c) const
    {
        LaurentPoly out;
        out.vars_ = vars_;
        if (c.is_zero())
            return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C cc = t.coeff * c;
            if (!cc.is_zero())
                out.terms_.push_back(Term{t.exps, std::move(cc)});
        }
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& g) { return add_in_place(LaurentPoly(g), false); }
    LaurentPoly& operator+=(LaurentPoly&& g) { return add_in_place(std::move(g), false); }
    LaurentPoly& operator-=(const LaurentPoly& g) { return add_in_place(LaurentPoly(g), true); }
    LaurentPoly& operator-=(LaurentPoly&& g) { return add_in_place(std::move(g), true); }
    LaurentPoly& operator*=(const LaurentPoly& g) { *this = *this * g; return *this; }

    // Merge g into this, moving both term lists (no coefficient copies).
    LaurentPoly& add_in_place(LaurentPoly&& g, bool negate)
    {
        if (vars_ != g.vars_) {
            auto u = var_union(vars_, g.vars_);
            if (u != vars_)
                *this = aligned_to(u);
            if (u != g.vars_)
                g = g.aligned_to(u);
        }
        if (g.terms_.empty())
            return *this;
        if (terms_.empty()) {
            terms_ = std::move(g.terms_);
            if (negate)
                for (auto& t : terms_)
                    t.coeff = -t.coeff;
            return *this;
        }
        std::vector<Term> out;
        out.reserve(terms_.size() + g.terms_.size());
        auto it = terms_.begin(), jt = g.terms_.begin();
        while (it != terms_.end() && jt != g.terms_.end()) {
            if (exp_less(it->exps, jt->exps))
                out.push_back(std::move(*it++));
            else if (exp_less(jt->exps, it->exps)) {
                if (negate)
                    jt->coeff = -jt->coeff;
                out.push_back(std::move(*jt++));
            } else {
                C c = negate ? C(it->coeff - jt->coeff) : C(it->coeff + jt->coeff);
                if (!c.is_zero())
                    out.push_back(Term{std::move(it->exps), std::move(c)});
                ++it;
                ++jt;
            }
        }
        for (; it != terms_.end(); ++it)
            out.push_back(std::move(*it));
        for (; jt != g.terms_.end(); ++jt) {
            if (negate)
                jt->coeff = -jt->coeff;
            out.push_back(std::move(*jt));
        }
        terms_ = std::move(out);
        return *this;
    }

    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g)
    {
        if (f.vars_ == g.vars_)
            return same_terms(f, g);
        auto u = var_union(f.vars_, g.vars_);
        return same_terms(f.aligned_to(u), g.aligned_to(u));
    }
    friend bool operator!=(const LaurentPoly& f, const LaurentPoly& g) { return !(f == g); }

    // ---- structural queries ------------------------------------------------

    int var_position(VarId v) const
    {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v)
            return -1;
        return static_cast<int>(it - vars_.begin());
    }

    // Minimum and maximum exponent of v; (0,0) when v is absent.
    std::pair<int, int> degree_range(VarId v) const
    {
        if (terms_.empty())
            throw EmptyPolynomialError("degree_range: zero polynomial");
        int p = var_position(v);
        if (p < 0)
            return {0, 0};
        int lo = terms_[0].exps[static_cast<std::size_t>(p)];
        int hi = lo;
        for (const auto& t : terms_) {
            int e = t.exps[static_cast<std::size_t>(p)];
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        return {lo, hi};
    }

    StructureInfo structure(VarId v) const
    {
        if (terms_.empty())
            throw EmptyPolynomialError("structure: zero polynomial");
        auto [lo, hi] = degree_range(v);
        StructureInfo info;
        info.centered = (lo == -hi);
        int p = var_position(v);
        int residue = p < 0 ? 0 : ((terms_[0].exps[static_cast<std::size_t>(p)] % 2) + 2) % 2;
        info.parity = residue == 0 ? Parity::Even : Parity::Odd;
        if (p >= 0) {
            for (const auto& t : terms_) {
                int r = ((t.exps[static_cast<std::size_t>(p)] % 2) + 2) % 2;
                if (r != residue) {
                    info.parity = Parity::Mixed;
                    break;
                }
            }
        }
        return info;
    }

    LaurentPoly swap_vars(VarId u, VarId v) const
    {
        auto aligned = *this;
        if (var_position(u) < 0 || var_position(v) < 0)
            aligned = aligned_to(var_union(vars_, {std::min(u, v), std::max(u, v)}));
        int pu = aligned.var_position(u), pv = aligned.var_position(v);
        LaurentPoly out;
        out.vars_ = aligned.vars_;
        out.terms_.reserve(aligned.terms_.size());
        for (const auto& t : aligned.terms_) {
            ExpVec e = t.exps;
            std::swap(e[static_cast<std::size_t>(pu)], e[static_cast<std::size_t>(pv)]);
            out.terms_.push_back(Term{std::move(e), t.coeff});
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& s, const Term& t) { return exp_less(s.exps, t.exps); });
        return out;
    }

    bool is_symmetric(VarId u, VarId v) const { return *this == swap_vars(u, v); }

    bool is_symmetric_set(const std::vector<VarId>& vs) const
    {
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            if (!is_symmetric(vs[i], vs[i + 1]))
                return false;
        return true;
    }

    // Replaces v by the unit coeff * m; v disappears from the variable set.
    LaurentPoly substitute(VarId v, const C& coeff, const std::vector<VarPow>& m) const
    {
        int p = var_position(v);
        if (p < 0)
            return *this;
        std::vector<VarId> rest;
        for (VarId w : vars_)
            if (w != v)
                rest.push_back(w);
        LaurentPoly out(rest);
        std::map<int, C> coeff_pows; // exponent -> coeff^exponent
        for (const auto& t : terms_) {
            int k = t.exps[static_cast<std::size_t>(p)];
            auto it = coeff_pows.find(k);
            if (it == coeff_pows.end())
                it = coeff_pows.emplace(k, coeff.pow(k)).first;
            C c = t.coeff * it->second;
            if (c.is_zero())
                continue;
            std::vector<VarPow> mono;
            mono.reserve(rest.size() + m.size());
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (static_cast<int>(i) != p && t.exps[i] != 0)
                    mono.emplace_back(vars_[i], t.exps[i]);
            for (const auto& [w, e] : m)
                mono.emplace_back(w, e * k);
            out += monomial(std::move(c), mono);
        }
        return out;
    }

    LaurentPoly substitute(VarId v, const LaurentPoly& replacement) const
    {
        if (replacement.terms_.size() != 1)
            throw NonUnitSubstitutionError("substitute: replacement must be a single monomial");
        const Term& t = replacement.terms_[0];
        std::vector<VarPow> m;
        for (std::size_t i = 0; i < replacement.vars_.size(); ++i)
            if (t.exps[i] != 0)
                m.emplace_back(replacement.vars_[i], t.exps[i]);
        return substitute(v, t.coeff, m);
    }

    // ---- evaluation ---------------------------------------------------------

    CycNum evaluate(const EvalPoint& pt) const
        requires(!std::is_same_v<C, GenericCoeff>)
    {
        if constexpr (std::is_same_v<C, CycNum>)
            return evaluate_impl(pt, [](const C& c) { return c; });
        else
            return evaluate_impl(pt, [](const C& c) { return to_rational(c); });
    }

    // Generic-mode polynomials additionally need a value for a.
    CycNum evaluate(const EvalPoint& pt, const CycNum& a_value) const
        requires std::is_same_v<C, GenericCoeff>
    {
        return evaluate_impl(pt, [&](const C& c) { return c.evaluate(a_value); });
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty())
                s += " + ";
            s += "(" + t.coeff.to_string() + ")";
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (t.exps[i] == 0)
                    continue;
                s += "*" + vars_[i].name();
                if (t.exps[i] != 1)
                    s += "^" + std::to_string(t.exps[i]);
            }
        }
        return s;
    }

    // Raw term access used by the serializers; exponent order matches vars().
    const Term& term(std::size_t i) const { return terms_[i]; }

private:
    template <class CoeffEval>
    CycNum evaluate_impl(const EvalPoint& pt, CoeffEval coeff_value) const
    {
        std::vector<const CycNum*> vals(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            vals[i] = pt.find(vars_[i]);
            if (vals[i] == nullptr)
                throw UnboundVariableError("evaluate: unbound variable " + vars_[i].name());
            if (vals[i]->is_zero())
                throw ZeroDivisionError("evaluate: zero value for " + vars_[i].name());
        }
        CycNum out;
        for (const auto& t : terms_) {
            CycNum v = coeff_value(t.coeff);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (t.exps[i] != 0)
                    v *= vals[i]->pow(t.exps[i]);
            out += v;
        }
        return out;
    }

    static bool same_terms(const LaurentPoly& f, const LaurentPoly& g)
    {
        if (f.terms_.size() != g.terms_.size())
            return false;
        for (std::size_t i = 0; i < f.terms_.size(); ++i)
            if (f.terms_[i].exps != g.terms_[i].exps || !(f.terms_[i].coeff == g.terms_[i].coeff))
                return false;
        return true;
    }

    // Merge of two aligned sorted term lists (subtraction when negate).
    static LaurentPoly merged(const LaurentPoly& f, const LaurentPoly& g, bool negate)
    {
        LaurentPoly out;
        out.vars_ = f.vars_;
        out.terms_.reserve(f.terms_.size() + g.terms_.size());
        auto it = f.terms_.begin(), jt = g.terms_.begin();
        while (it != f.terms_.end() && jt != g.terms_.end()) {
            if (exp_less(it->exps, jt->exps))
                out.terms_.push_back(*it++);
            else if (exp_less(jt->exps, it->exps)) {
                out.terms_.push_back(Term{jt->exps, negate ? -jt->coeff : jt->coeff});
                ++jt;
            } else {
                C c = negate ? C(it->coeff - jt->coeff) : C(it->coeff + jt->coeff);
                if (!c.is_zero())
                    out.terms_.push_back(Term{it->exps, std::move(c)});
                ++it;
                ++jt;
            }
        }
        out.terms_.insert(out.terms_.end(), it, f.terms_.end());
        for (; jt != g.terms_.end(); ++jt)
            out.terms_.push_back(Term{jt->exps, negate ? -jt->coeff : jt->coeff});
        return out;
    }

    // Aligned product.  A small factor produces one sorted shifted stream per
    // term, pairwise-merged as a balanced tree with term moves; genuinely
    // large pairs fall back to a single sort pass.
    static LaurentPoly product(const LaurentPoly& f, const LaurentPoly& g)
    {
        LaurentPoly out;
        out.vars_ = f.vars_;
        if (f.terms_.empty() || g.terms_.empty())
            return out;
        const LaurentPoly& big = f.terms_.size() >= g.terms_.size() ? f : g;
        const LaurentPoly& small = f.terms_.size() >= g.terms_.size() ? g : f;
        if (small.terms_.size() <= 64) {
            std::vector<LaurentPoly> streams;
            streams.reserve(small.terms_.size());
            for (const auto& s : small.terms_) {
                LaurentPoly shifted;
                shifted.vars_ = f.vars_;
                shifted.terms_.reserve(big.terms_.size());
                for (const auto& b : big.terms_) {
                    C c = b.coeff * s.coeff;
                    if (c.is_zero())
                        continue;
                    ExpVec e = b.exps;
                    for (std::size_t i = 0; i < e.size(); ++i)
                        e[i] = static_cast<Exp>(e[i] + s.exps[i]);
                    shifted.terms_.push_back(Term{std::move(e), std::move(c)});
                }
                streams.push_back(std::move(shifted));
            }
            while (streams.size() > 1) {
                std::vector<LaurentPoly> reduced;
                reduced.reserve((streams.size() + 1) / 2);
                for (std::size_t k = 0; k + 1 < streams.size(); k += 2) {
                    streams[k].add_in_place(std::move(streams[k + 1]), false);
                    reduced.push_back(std::move(streams[k]));
                }
                if (streams.size() % 2 == 1)
                    reduced.push_back(std::move(streams.back()));
                streams = std::move(reduced);
            }
            return streams.empty() ? out : std::move(streams[0]);
        }
        std::vector<Term> acc;
        acc.reserve(big.terms_.size() * small.terms_.size());
        for (const auto& s : small.terms_)
            for (const auto& b : big.terms_) {
                C c = b.coeff * s.coeff;
                if (c.is_zero())
                    continue;
                ExpVec e = b.exps;
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = static_cast<Exp>(e[i] + s.exps[i]);
                acc.push_back(Term{std::move(e), std::move(c)});
            }
        std::sort(acc.begin(), acc.end(),
                  [](const Term& s, const Term& t) { return exp_less(s.exps, t.exps); });
        out.terms_.reserve(acc.size());
        for (auto& t : acc) {
            if (!out.terms_.empty() && out.terms_.back().exps == t.exps) {
                out.terms_.back().coeff += t.coeff;
                if (out.terms_.back().coeff.is_zero())
                    out.terms_.pop_back();
            } else {
                out.terms_.push_back(std::move(t));
            }
        }
        return out;
    }

    void drop_zero_exponent_only()
    {
        // monomial() can be handed exponent zero; prune so that x^0 == 1
        // has an empty variable set.
        *this = pruned();
    }

    std::vector<VarId> vars_;
    std::vector<Term> terms_;
};

using GenericPoly = LaurentPoly<GenericCoeff>;
using Omega6Poly = LaurentPoly<CycInt>; // symbolic omega6 work stays in Z[a]

// sigma(u) = u - 1/u for a unit monomial u = a^k * prod vars^e.
template <class C>
LaurentPoly<C> sigma_monomial(int a_exp, const std::vector<VarPow>& m)
{
    using Traits = coeff_traits<C>;
    auto pos = LaurentPoly<C>::monomial(Traits::a_power(a_exp), m);
    std::vector<VarPow> minv;
    minv.reserve(m.size());
    for (const auto& [v, e] : m)
        minv.emplace_back(v, -e);
    auto neg = LaurentPoly<C>::monomial(Traits::a_power(-a_exp), minv);
    return pos - neg;
}

// sigma of an arbitrary invertible one-term polynomial.
template <class C>
LaurentPoly<C> sigma(const LaurentPoly<C>& t)
{
    if (t.terms().size() != 1)
        throw ZeroDivisionError("sigma: argument must be a single invertible monomial");
    const auto& term = t.term(0);
    if (!coeff_traits<C>::is_invertible(term.coeff))
        throw ZeroDivisionError("sigma: coefficient is not invertible");
    std::vector<VarPow> minv;
    for (std::size_t i = 0; i < t.vars().size(); ++i)
        if (term.exps[i] != 0)
            minv.emplace_back(t.vars()[i], -term.exps[i]);
    return t - LaurentPoly<C>::monomial(term.coeff.pow(-1), minv);
}

} // namespace ice

#endif
