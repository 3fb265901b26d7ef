#ifndef ICE_NUMBERS_HPP
#define ICE_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ice {

// Plain (non expression-template) arbitrary precision integers and rationals.
// Small values of cpp_int live inline, which keeps polynomial coefficient
// traffic allocation-free in the common case.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline std::string rat_to_string(const Rat& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "-p" or "p/q".
inline Rat rat_from_string(const std::string& s)
{
    return Rat(s);
}

} // namespace ice

#endif
