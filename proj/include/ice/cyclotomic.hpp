#ifndef ICE_CYCLOTOMIC_HPP
#define ICE_CYCLOTOMIC_HPP

#include "ice/errors.hpp"
#include "ice/numbers.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ice {

// Coefficient domain of a polynomial: either the global parameter `a` is kept
// as an indeterminate (GenericA), or it is pinned to the sixth root of unity
// omega6 = exp(i*pi/3), where a^2 = a - 1 (Omega6).
enum class CoeffMode : std::uint8_t { GenericA, Omega6 };

inline const char* to_string(CoeffMode m)
{
    return m == CoeffMode::GenericA ? "generic-a" : "omega6";
}

namespace detail {
inline std::string scalar_to_string(const Rat& r) { return rat_to_string(r); }
inline std::string scalar_to_string(const Int& i) { return i.str(); }
} // namespace detail

// ---------------------------------------------------------------------------
// BasicCyc<S>: element p + q*a of the ring S[a] with a^2 = a - 1 (a = omega6).
// With S = Rat this is the field Q(a); with S = Int it is the subring Z[a],
// the integer fast path used for symbolic work (weights never divide).
// Every value is kept reduced to the basis {1, a}; equality is (p,q) equality.
// ---------------------------------------------------------------------------
template <class S>
class BasicCyc {
public:
    BasicCyc() : p_(0), q_(0) {}
    BasicCyc(int v) : p_(v), q_(0) {}   // NOLINT(google-explicit-constructor)
    BasicCyc(S p, S q) : p_(std::move(p)), q_(std::move(q)) {}

    static BasicCyc omega() { return BasicCyc(S(0), S(1)); }

    // a^k, using a^2 = a - 1 (hence a^3 = -1, a^6 = 1).
    static BasicCyc a_power(long k)
    {
        long r = k % 6;
        if (r < 0)
            r += 6;
        switch (r) {
        case 0: return BasicCyc(S(1), S(0));
        case 1: return BasicCyc(S(0), S(1));
        case 2: return BasicCyc(S(-1), S(1));
        case 3: return BasicCyc(S(-1), S(0));
        case 4: return BasicCyc(S(0), S(-1));
        default: return BasicCyc(S(1), S(-1));
        }
    }

    const S& p() const { return p_; }
    const S& q() const { return q_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_one() const { return p_ == 1 && q_ == 0; }

    friend BasicCyc operator+(const BasicCyc& u, const BasicCyc& v)
    {
        return BasicCyc(u.p_ + v.p_, u.q_ + v.q_);
    }
    friend BasicCyc operator-(const BasicCyc& u, const BasicCyc& v)
    {
        return BasicCyc(u.p_ - v.p_, u.q_ - v.q_);
    }
    BasicCyc operator-() const { return BasicCyc(-p_, -q_); }

    // (p + qa)(r + sa) = pr + (ps + qr)a + qs a^2, and a^2 = a - 1.
    friend BasicCyc operator*(const BasicCyc& u, const BasicCyc& v)
    {
        S cross = u.q_ * v.q_;
        return BasicCyc(u.p_ * v.p_ - cross, u.p_ * v.q_ + u.q_ * v.p_ + cross);
    }

    BasicCyc& operator+=(const BasicCyc& v) { p_ += v.p_; q_ += v.q_; return *this; }
    BasicCyc& operator-=(const BasicCyc& v) { p_ -= v.p_; q_ -= v.q_; return *this; }
    BasicCyc& operator*=(const BasicCyc& v) { *this = *this * v; return *this; }

    friend bool operator==(const BasicCyc& u, const BasicCyc& v)
    {
        return u.p_ == v.p_ && u.q_ == v.q_;
    }
    friend bool operator!=(const BasicCyc& u, const BasicCyc& v) { return !(u == v); }

    // The norm N(p + qa) = p^2 + pq + q^2 (conjugate is p + q - qa).
    S norm() const { return p_ * p_ + p_ * q_ + q_ * q_; }

    // Multiplicative inverse; over Z[a] only the units +-a^k are invertible.
    BasicCyc inv() const
    {
        if (is_zero())
            throw ZeroDivisionError("BasicCyc: inverse of zero");
        S n = norm();
        if constexpr (std::is_same_v<S, Rat>) {
            return BasicCyc((p_ + q_) / n, -q_ / n);
        } else {
            if (n != 1)
                throw ZeroDivisionError("BasicCyc<Int>: inverse requires a unit");
            return BasicCyc(p_ + q_, -q_);
        }
    }

    bool is_unit() const
    {
        if constexpr (std::is_same_v<S, Rat>)
            return !is_zero();
        else
            return norm() == 1;
    }

    BasicCyc pow(long k) const
    {
        if (k < 0)
            return inv().pow(-k);
        BasicCyc base = *this, acc = BasicCyc(1);
        for (unsigned long e = static_cast<unsigned long>(k); e != 0; e >>= 1) {
            if (e & 1UL)
                acc *= base;
            base *= base;
        }
        return acc;
    }

    std::string to_string() const
    {
        if (q_ == 0)
            return detail::scalar_to_string(p_);
        std::string s;
        if (p_ != 0)
            s = detail::scalar_to_string(p_) + (q_ > 0 ? "+" : "");
        if (q_ == 1)
            s += "a";
        else if (q_ == -1)
            s += "-a";
        else
            s += detail::scalar_to_string(q_) + "*a";
        return s;
    }

private:
    S p_, q_;
};

using CycNum = BasicCyc<Rat>; // the field, for exact point evaluation
using CycInt = BasicCyc<Int>; // integer fast path for symbolic omega6 work

inline CycNum to_rational(const CycInt& u) { return CycNum(Rat(u.p()), Rat(u.q())); }

template <class S>
BasicCyc<S> sigma(const BasicCyc<S>& u)
{
    return u - u.inv();
}

// ---------------------------------------------------------------------------
// GenericCoeff: Laurent polynomial in the indeterminate `a` over Z, stored as
// a sorted (exponent, coefficient) list without zero coefficients.  No
// relation is imposed on a, so statements proved in this mode hold for every
// value of the global parameter.
// ---------------------------------------------------------------------------
class GenericCoeff {
public:
    using Term = std::pair<int, Int>;

    GenericCoeff() = default;
    GenericCoeff(int v)   // NOLINT(google-explicit-constructor)
    {
        if (v != 0)
            terms_.emplace_back(0, v);
    }
    explicit GenericCoeff(Int v)
    {
        if (v != 0)
            terms_.emplace_back(0, std::move(v));
    }

    static GenericCoeff a_power(long k)
    {
        GenericCoeff g;
        g.terms_.emplace_back(static_cast<int>(k), 1);
        return g;
    }

    static GenericCoeff monomial(long k, Int c)
    {
        GenericCoeff g;
        if (c != 0)
            g.terms_.emplace_back(static_cast<int>(k), std::move(c));
        return g;
    }

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const
    {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
    }

    // Units of Z[a, 1/a] are +-a^k.
    bool is_unit() const
    {
        return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
    }

    GenericCoeff inv() const
    {
        if (!is_unit())
            throw ZeroDivisionError("GenericCoeff: inverse requires a unit +-a^k");
        GenericCoeff g;
        g.terms_.emplace_back(-terms_[0].first, terms_[0].second);
        return g;
    }

    friend GenericCoeff operator+(const GenericCoeff& u, const GenericCoeff& v)
    {
        GenericCoeff out;
        out.terms_.reserve(u.terms_.size() + v.terms_.size());
        auto it = u.terms_.begin(), jt = v.terms_.begin();
        while (it != u.terms_.end() && jt != v.terms_.end()) {
            if (it->first < jt->first)
                out.terms_.push_back(*it++);
            else if (jt->first < it->first)
                out.terms_.push_back(*jt++);
            else {
                Int c = it->second + jt->second;
                if (c != 0)
                    out.terms_.emplace_back(it->first, std::move(c));
                ++it;
                ++jt;
            }
        }
        out.terms_.insert(out.terms_.end(), it, u.terms_.end());
        out.terms_.insert(out.terms_.end(), jt, v.terms_.end());
        return out;
    }

    GenericCoeff operator-() const
    {
        GenericCoeff out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            out.terms_.emplace_back(t.first, -t.second);
        return out;
    }

    friend GenericCoeff operator-(const GenericCoeff& u, const GenericCoeff& v)
    {
        return u + (-v);
    }

    friend GenericCoeff operator*(const GenericCoeff& u, const GenericCoeff& v)
    {
        GenericCoeff out;
        if (u.is_zero() || v.is_zero())
            return out;
        // Schoolbook convolution; operands in this codebase are tiny.
        std::vector<Term> acc;
        acc.reserve(u.terms_.size() * v.terms_.size());
        for (const auto& ut : u.terms_)
            for (const auto& vt : v.terms_)
                acc.emplace_back(ut.first + vt.first, ut.second * vt.second);
        std::sort(acc.begin(), acc.end(),
                  [](const Term& s, const Term& t) { return s.first < t.first; });
        for (auto& t : acc) {
            if (!out.terms_.empty() && out.terms_.back().first == t.first)
                out.terms_.back().second += t.second;
            else
                out.terms_.push_back(std::move(t));
            if (out.terms_.back().second == 0)
                out.terms_.pop_back();
        }
        return out;
    }

    GenericCoeff& operator+=(const GenericCoeff& v) { *this = *this + v; return *this; }
    GenericCoeff& operator-=(const GenericCoeff& v) { *this = *this - v; return *this; }
    GenericCoeff& operator*=(const GenericCoeff& v) { *this = *this * v; return *this; }

    friend bool operator==(const GenericCoeff& u, const GenericCoeff& v)
    {
        return u.terms_ == v.terms_;
    }
    friend bool operator!=(const GenericCoeff& u, const GenericCoeff& v)
    {
        return !(u == v);
    }

    GenericCoeff pow(long k) const
    {
        if (k < 0)
            return inv().pow(-k);
        GenericCoeff base = *this, acc = GenericCoeff(1);
        for (unsigned long e = static_cast<unsigned long>(k); e != 0; e >>= 1) {
            if (e & 1UL)
                acc *= base;
            base *= base;
        }
        return acc;
    }

    // Value at a := v in the Omega6 field.
    CycNum evaluate(const CycNum& v) const
    {
        CycNum out;
        for (const auto& t : terms_) {
            CycNum c(Rat(t.second), Rat(0));
            out += c * v.pow(t.first);
        }
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty() && t.second > 0)
                s += "+";
            if (t.first == 0)
                s += t.second.str();
            else {
                if (t.second == -1)
                    s += "-";
                else if (t.second != 1)
                    s += t.second.str() + "*";
                s += "a";
                if (t.first != 1)
                    s += "^" + std::to_string(t.first);
            }
        }
        return s;
    }

private:
    std::vector<Term> terms_;
};

inline GenericCoeff sigma(const GenericCoeff& u) { return u - u.inv(); }

// ---------------------------------------------------------------------------
// Coefficient traits: bind each coefficient type to its mode and provide the
// image of a^k in that ring.
// ---------------------------------------------------------------------------
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<CycNum> {
    static constexpr CoeffMode mode = CoeffMode::Omega6;
    static CycNum a_power(long k) { return CycNum::a_power(k); }
    static bool is_invertible(const CycNum& c) { return !c.is_zero(); }
};

template <>
struct coeff_traits<CycInt> {
    static constexpr CoeffMode mode = CoeffMode::Omega6;
    static CycInt a_power(long k) { return CycInt::a_power(k); }
    static bool is_invertible(const CycInt& c) { return c.is_unit(); }
};

template <>
struct coeff_traits<GenericCoeff> {
    static constexpr CoeffMode mode = CoeffMode::GenericA;
    static GenericCoeff a_power(long k) { return GenericCoeff::a_power(k); }
    static bool is_invertible(const GenericCoeff& c) { return c.is_unit(); }
};

} // namespace ice

#endif
