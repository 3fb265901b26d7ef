#include "ice/laurent.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ice;

namespace {

const VarId vx1 = VarId::x(1);
const VarId vx2 = VarId::x(2);
const VarId vy1 = VarId::y(1);
const VarId vax = VarId::aux(1);

GenericPoly random_poly(std::mt19937_64& rng, std::vector<VarId> vars, int nterms)
{
    GenericPoly f(vars);
    for (int t = 0; t < nterms; ++t) {
        std::vector<VarPow> mono;
        for (VarId v : vars)
            mono.emplace_back(v, static_cast<int>(rng() % 7) - 3);
        long aexp = static_cast<long>(rng() % 5) - 2;
        Int c(static_cast<long>(rng() % 9) - 4);
        f += GenericPoly::monomial(GenericCoeff::monomial(aexp, c), mono);
    }
    return f;
}

CycNum rand_value(std::mt19937_64& rng)
{
    for (;;) {
        int p = static_cast<int>(rng() % 19) - 9, q = static_cast<int>(rng() % 19) - 9;
        if (p != 0 || q != 0)
            return CycNum(Rat(p), Rat(q));
    }
}

} // namespace

TEST_CASE("variable naming and parsing")
{
    CHECK(vx1.name() == "x1");
    CHECK(VarId::y(12).name() == "y12");
    CHECK(VarId::aux(2).name() == "y");
    CHECK(VarId::parse("x3") == VarId::x(3));
    CHECK(VarId::parse("y") == VarId::aux(2));
    CHECK(VarId::parse("z") == VarId::aux(3));
    CHECK(!VarId::parse("q7").has_value());
    CHECK(!VarId::parse("x0").has_value());
}

TEST_CASE("basic arithmetic")
{
    auto f = GenericPoly::variable(vx1) - GenericPoly::variable(vx1, -1);
    auto g = GenericPoly::variable(vx1) + GenericPoly::variable(vx1, -1);
    CHECK(f * g == GenericPoly::variable(vx1, 2) - GenericPoly::variable(vx1, -2));
    CHECK(f + GenericPoly{} == f);
    CHECK((f - f).is_zero());
    CHECK(f * GenericCoeff(2) == f + f);
}

TEST_CASE("sigma product expansion")
{
    // sigma(a vx1/vy1) * sigma(a vy1/vx1) = a^2 + a^-2 - vx1^2 vy1^-2 - vx1^-2 vy1^2
    auto f = sigma_monomial<GenericCoeff>(1, {{vx1, 1}, {vy1, -1}});
    auto g = sigma_monomial<GenericCoeff>(1, {{vx1, -1}, {vy1, 1}});
    auto expect =
        GenericPoly::constant(GenericCoeff::a_power(2) + GenericCoeff::a_power(-2)) -
        GenericPoly::monomial(GenericCoeff(1), {{vx1, 2}, {vy1, -2}}) -
        GenericPoly::monomial(GenericCoeff(1), {{vx1, -2}, {vy1, 2}});
    CHECK(f * g == expect);
    CHECK((f * g).size() == 3); // the two constant products merge
}

TEST_CASE("substitution replaces a variable by a unit monomial")
{
    auto f = sigma_monomial<GenericCoeff>(1, {{vx1, 1}, {vy1, -1}});
    // vx1 := vy1 collapses to the constant sigma(a)
    auto c = f.substitute(vx1, GenericCoeff(1), {{vy1, 1}});
    CHECK(c == GenericPoly::constant(GenericCoeff::a_power(1) - GenericCoeff::a_power(-1)));
    // vx1 := abar vy1 kills it: sigma(1) = 0
    CHECK(f.substitute(vx1, GenericCoeff::a_power(-1), {{vy1, 1}}).is_zero());
    // an exponent -2 occurrence picks up coefficient a^-2
    auto h = GenericPoly::monomial(GenericCoeff(1), {{vax, -2}});
    auto sub = h.substitute(vax, GenericCoeff::a_power(1), {{vy1, 1}});
    CHECK(sub == GenericPoly::monomial(GenericCoeff::a_power(-2), {{vy1, -2}}));
    // multi-term replacements are rejected
    auto two_terms = GenericPoly::variable(vy1) + GenericPoly::constant(GenericCoeff(1));
    CHECK_THROWS_AS(f.substitute(vx1, two_terms), NonUnitSubstitutionError);
}

TEST_CASE("degree range, centering, parity")
{
    auto s = sigma_monomial<GenericCoeff>(1, {{vx1, 1}, {vy1, -1}});
    CHECK(s.degree_range(vx1) == std::pair<int, int>(-1, 1));
    CHECK(s.degree_range(vx2) == std::pair<int, int>(0, 0)); // absent variable
    auto st = s.structure(vx1);
    CHECK(st.centered);
    CHECK(st.parity == Parity::Odd);

    auto c = GenericPoly::constant(GenericCoeff(5));
    CHECK(c.degree_range(vx1) == std::pair<int, int>(0, 0));

    auto mixed = GenericPoly::variable(vx1) + GenericPoly::variable(vx1, 2);
    auto stm = mixed.structure(vx1);
    CHECK(!stm.centered);
    CHECK(stm.parity == Parity::Mixed);

    CHECK_THROWS_AS(GenericPoly{}.degree_range(vx1), EmptyPolynomialError);
    CHECK_THROWS_AS(GenericPoly{}.structure(vx1), EmptyPolynomialError);
}

TEST_CASE("symmetry queries")
{
    auto f = GenericPoly::monomial(GenericCoeff(1), {{vx1, 1}, {vy1, 1}}) +
             GenericPoly::monomial(GenericCoeff(1), {{vx1, -1}, {vy1, -1}});
    CHECK(f.is_symmetric(vx1, vy1));
    auto s = sigma_monomial<GenericCoeff>(1, {{vx1, 1}, {vy1, -1}});
    CHECK(!s.is_symmetric(vx1, vy1));
    // is_symmetric(f, u, v) iff f - swap(f) == 0
    CHECK((f - f.swap_vars(vx1, vy1)).is_zero());
    CHECK(!(s - s.swap_vars(vx1, vy1)).is_zero());
    CHECK(f.is_symmetric_set({vx1, vy1}));
}

TEST_CASE("evaluation")
{
    Omega6Poly s = sigma_monomial<CycInt>(0, {{vx1, 1}});
    EvalPoint pt;
    pt.set(vx1, CycNum(1));
    CHECK(s.evaluate(pt) == CycNum(0));

    CHECK_THROWS_AS(pt.set(vy1, CycNum(0)), ZeroDivisionError);
    EvalPoint empty;
    CHECK_THROWS_AS(s.evaluate(empty), UnboundVariableError);

    // evaluation is a ring homomorphism on random pairs
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        auto f = random_poly(rng, {vx1, vy1}, 4);
        auto g = random_poly(rng, {vx1, vy1}, 4);
        EvalPoint p;
        p.set(vx1, rand_value(rng));
        p.set(vy1, rand_value(rng));
        CycNum av = rand_value(rng);
        CHECK((f * g).evaluate(p, av) == f.evaluate(p, av) * g.evaluate(p, av));
        CHECK((f + g).evaluate(p, av) == f.evaluate(p, av) + g.evaluate(p, av));
    }
}

TEST_CASE("substitution commutes with arithmetic and evaluation")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        auto f = random_poly(rng, {vx1, vx2, vy1}, 4);
        auto g = random_poly(rng, {vx1, vx2, vy1}, 4);
        long k = static_cast<long>(rng() % 3) - 1;
        GenericCoeff c = GenericCoeff::a_power(k);
        std::vector<VarPow> m{{vy1, 1}};
        CHECK((f * g).substitute(vx1, c, m) == f.substitute(vx1, c, m) * g.substitute(vx1, c, m));
        CHECK((f + g).substitute(vx1, c, m) == f.substitute(vx1, c, m) + g.substitute(vx1, c, m));

        // evaluate(subst(f, v := c*m), pt) = evaluate(f, pt + v -> c*m(pt))
        EvalPoint pt;
        CycNum yv = rand_value(rng), x2v = rand_value(rng), av = rand_value(rng);
        pt.set(vy1, yv);
        pt.set(vx2, x2v);
        EvalPoint ext = pt;
        ext.set(vx1, av.pow(k) * yv);
        CHECK(f.substitute(vx1, c, m).evaluate(pt, av) == f.evaluate(ext, av));
    }
}

TEST_CASE("degree range of a product adds componentwise")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        auto f = random_poly(rng, {vx1, vy1}, 3);
        auto g = random_poly(rng, {vx1, vy1}, 3);
        if (f.is_zero() || g.is_zero())
            continue;
        auto [flo, fhi] = f.degree_range(vx1);
        auto [glo, ghi] = g.degree_range(vx1);
        auto [plo, phi] = (f * g).degree_range(vx1);
        CHECK(plo == flo + glo);
        CHECK(phi == fhi + ghi);
    }
}

TEST_CASE("variable alignment takes the union")
{
    auto f = GenericPoly::variable(vx1);
    auto g = GenericPoly::variable(vy1);
    auto h = f + g;
    CHECK(h.vars() == std::vector<VarId>{vx1, vy1});
    // equality across different declared variable sets
    auto f2 = f.aligned_to({vx1, vy1});
    CHECK(f2 == f);
    CHECK(f2.pruned().vars() == std::vector<VarId>{vx1});
}

TEST_CASE("sigma of a one-term polynomial")
{
    auto t = GenericPoly::monomial(GenericCoeff::a_power(2), {{vx1, 1}});
    CHECK(sigma(t) == sigma_monomial<GenericCoeff>(2, {{vx1, 1}}));
    auto bad = GenericPoly::monomial(GenericCoeff(2), {{vx1, 1}});
    CHECK_THROWS_AS(sigma(bad), ZeroDivisionError);
    CHECK_THROWS_AS(sigma(GenericPoly::variable(vx1) + GenericPoly::variable(vy1)),
                    ZeroDivisionError);
}
