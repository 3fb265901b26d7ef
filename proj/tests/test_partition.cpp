#include "ice/partition.hpp"
#include "ice/verifier.hpp"

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

EvalPoint all_ones(const IceGraph& g)
{
    EvalPoint pt;
    for (VarId v : model_vars(g))
        pt.set(v, CycNum(1));
    return pt;
}

const VarId x = VarId::aux(1);
const VarId y = VarId::aux(2);

} // namespace

TEST_CASE("weight table classes")
{
    IceGraph g = build_dwbc(2, xv(2), yv(2));
    WeightTable<GenericCoeff> wt(g);
    int v = g.vertex_at(1, 1);
    // O3/O4 share sigma(a t), O5/O6 share sigma(a tbar), O1/O2 sigma(a^2)
    CHECK(wt.weight(v, VertexOrientation::O3) == wt.weight(v, VertexOrientation::O4));
    CHECK(wt.weight(v, VertexOrientation::O5) == wt.weight(v, VertexOrientation::O6));
    CHECK(wt.weight(v, VertexOrientation::O1) == wt.weight(v, VertexOrientation::O2));
    CHECK(wt.weight(v, VertexOrientation::O1) ==
          sigma_monomial<GenericCoeff>(2, {}).aligned_to(wt.vars()));
    CHECK(wt.weight(v, VertexOrientation::O3) ==
          sigma_monomial<GenericCoeff>(1, {{VarId::x(1), 1}, {VarId::y(1), -1}})
              .aligned_to(wt.vars()));
    CHECK(wt.weight(v, VertexOrientation::O5) ==
          sigma_monomial<GenericCoeff>(1, {{VarId::x(1), -1}, {VarId::y(1), 1}})
              .aligned_to(wt.vars()));
}

TEST_CASE("Z(1) is sigma(a^2)")
{
    IceGraph g = build_dwbc(1, xv(1), yv(1));
    auto z = partition_function<GenericCoeff>(g);
    CHECK(z.state_count == 1);
    CHECK(z.value == sigma_monomial<GenericCoeff>(2, {}).aligned_to(z.value.vars()));
    CHECK(transfer_matrix_partition<GenericCoeff>(g) == z.value);
}

TEST_CASE("Z(2) at the all-ones point is 18")
{
    IceGraph g = build_dwbc(2, xv(2), yv(2));
    auto pv = partition_value(g, all_ones(g));
    CHECK(pv.value == CycNum(18));
    CHECK(pv.state_count == 2);
    // the symbolic polynomial evaluates to the same value
    auto z = partition_function<CycInt>(g).value;
    CHECK(z.evaluate(all_ones(g)) == CycNum(18));
}

TEST_CASE("weight collapse at the homogeneous point")
{
    CycNum collapse = sigma(CycNum::a_power(2));
    for (int n = 1; n <= 4; ++n) {
        IceGraph g = build_dwbc(n, xv(n), yv(n));
        auto pv = partition_value(g, all_ones(g));
        CHECK(pv.value == collapse.pow(n * n) * CycNum(Rat(asm_count_oracle(n)), Rat(0)));
    }
}

TEST_CASE("transfer matrix equals enumeration")
{
    for (int n = 1; n <= 4; ++n) {
        IceGraph g = build_dwbc(n, xv(n), yv(n));
        CHECK(transfer_matrix_partition<GenericCoeff>(g) ==
              partition_function<GenericCoeff>(g).value);
    }
    IceGraph ht = build_ht_even(1, {}, x, y, yv(1));
    CHECK_THROWS_AS(transfer_matrix_partition<GenericCoeff>(ht), NotDwbcGraphError);
    EvalPoint pt = all_ones(ht);
    CHECK_THROWS_AS(transfer_matrix_value(ht, pt), NotDwbcGraphError);
}

TEST_CASE("split sums to the whole")
{
    for (int n = 1; n <= 2; ++n) {
        IceGraph g = build_ht_even(n, xv(n - 1), x, y, yv(n));
        auto r = partition_function<GenericCoeff>(g);
        REQUIRE(r.split.has_value());
        CHECK((*r.split)[0] + (*r.split)[1] == r.value);
        IceGraph o = build_ht_odd(n, xv(n), x, y, yv(n));
        auto ro = partition_function<GenericCoeff>(o);
        REQUIRE(ro.split.has_value());
        CHECK((*ro.split)[0] + (*ro.split)[1] == ro.value);
    }
    IceGraph g = build_dwbc(2, xv(2), yv(2));
    CHECK_THROWS_AS(split_partition<GenericCoeff>(g), MalformedSpecError);
}

TEST_CASE("frozen half-turn split values at the smallest sizes")
{
    const VarId x1 = VarId::x(1), y1 = VarId::y(1);
    auto a2 = sigma_monomial<GenericCoeff>(2, {});
    {
        IceGraph g = build_ht_even(1, {}, x, y, {y1});
        auto sp = split_partition<GenericCoeff>(g);
        CHECK(sp[0] == a2 * sigma_monomial<GenericCoeff>(1, {{x, 1}, {y1, -1}}));      // up
        CHECK(sp[1] == a2 * sigma_monomial<GenericCoeff>(1, {{y, -1}, {y1, 1}}));      // down
    }
    {
        IceGraph g = build_ht_odd(1, {x1}, x, y, {y1});
        auto sp = split_partition<GenericCoeff>(g);
        auto se = a2 * (sigma_monomial<GenericCoeff>(1, {{x, -1}, {y1, 1}}) *
                            sigma_monomial<GenericCoeff>(1, {{x1, -1}, {y1, 1}}) *
                            sigma_monomial<GenericCoeff>(1, {{x1, -1}, {y, 1}}) +
                        sigma_monomial<GenericCoeff>(1, {{x1, 1}, {y1, -1}}) *
                            sigma_monomial<GenericCoeff>(1, {{x, 1}, {y1, -1}}) *
                            sigma_monomial<GenericCoeff>(1, {{x1, 1}, {y, -1}}));
        auto nw = a2 * a2 * sigma_monomial<GenericCoeff>(1, {{x1, 1}, {y1, -1}}) *
                  sigma_monomial<GenericCoeff>(1, {{x1, -1}, {y1, 1}});
        CHECK(sp[0] == se);
        CHECK(sp[1] == nw);
    }
}

TEST_CASE("specialization prefactors")
{
    const VarId y1 = VarId::y(1);
    auto a2 = sigma_monomial<GenericCoeff>(2, {});
    // N = 1: empty first product leaves sigma(a^2 y1/y1) = sigma(a^2)
    CHECK(spec_factor_A<GenericCoeff>(xv(1), yv(1)) == a2);
    CHECK(spec_factor_Abar<GenericCoeff>(xv(1), yv(1)) == a2);
    CHECK(spec_factor_ht<GenericCoeff>(HtFactorKind::A_H0, {}, yv(1)) == a2);
    CHECK(spec_factor_ht<GenericCoeff>(HtFactorKind::A_H1, xv(1), yv(1)) ==
          a2 * sigma_monomial<GenericCoeff>(1, {{y1, 1}, {VarId::x(1), -1}}));
    CHECK(spec_factor_ht<GenericCoeff>(HtFactorKind::Abar_H1, xv(1), yv(1)) ==
          a2 * sigma_monomial<GenericCoeff>(1, {{VarId::x(1), 1}, {y1, -1}}));
    CHECK_THROWS_AS(spec_factor_A<GenericCoeff>(xv(2), yv(3)), IndexRangeError);
    CHECK_THROWS_AS(spec_factor_ht<GenericCoeff>(HtFactorKind::A_H0, xv(2), yv(2)),
                    IndexRangeError);

    // the four half-turn prefactors at the all-ones point, omega6:
    // sigma(a) = sigma(a^2) = 2a - 1 and sigma(1) = 0 collapse each factor
    {
        EvalPoint ones;
        ones.set(VarId::x(1), CycNum(1));
        ones.set(y1, CycNum(1));
        CycNum c = sigma(CycNum::a_power(2));
        auto at_ones = [&](HtFactorKind k, const std::vector<VarId>& fx,
                           const std::vector<VarId>& fy) {
            return spec_factor_ht<CycInt>(k, fx, fy).evaluate(ones);
        };
        CHECK(at_ones(HtFactorKind::A_H1, xv(1), yv(1)) == c * c);    // -3
        CHECK(at_ones(HtFactorKind::Abar_H1, xv(1), yv(1)) == c * c);
        CHECK(at_ones(HtFactorKind::A_H0, {}, yv(1)) == c);           // 2a - 1
        CHECK(at_ones(HtFactorKind::Abar_H0, {}, yv(1)) == c);
    }

    // the x2,y2-dependent part of A at N=2 under the special value:
    // sigma(a x2 / y1) sigma(a^2 y1 / y2) = sigma(a x2 / y1) sigma(a y2 / y1),
    // symmetric under x2 <-> y2
    const VarId x2 = VarId::x(2), y2 = VarId::y(2);
    auto part = sigma_monomial<CycInt>(1, {{x2, 1}, {y1, -1}}) *
                sigma_monomial<CycInt>(2, {{y1, 1}, {y2, -1}});
    auto rewritten = sigma_monomial<CycInt>(1, {{x2, 1}, {y1, -1}}) *
                     sigma_monomial<CycInt>(1, {{y2, 1}, {y1, -1}});
    CHECK(part == rewritten);
    CHECK(part.is_symmetric(x2, y2));
}

TEST_CASE("matrix-coordinate weights match orientation weights")
{
    for (int n = 2; n <= 3; ++n) {
        IceGraph g = build_dwbc(n, xv(n), yv(n));
        WeightTable<GenericCoeff> wt(g);
        for_each_state(g, [&](const IceState& s) {
            CHECK(asm_weight(g, wt, state_to_asm(g, s)) == state_weight(g, wt, s));
        });
    }
}

TEST_CASE("numeric path agrees with symbolic evaluation at random points")
{
    RandomSource rs(404);
    for (int n = 2; n <= 3; ++n) {
        IceGraph g = build_dwbc(n, xv(n), yv(n));
        auto z = partition_function<CycInt>(g).value;
        for (int t = 0; t < 5; ++t) {
            EvalPoint pt = rs.point(model_vars(g));
            CycNum expect = z.evaluate(pt);
            CHECK(partition_value(g, pt).value == expect);
            CHECK(transfer_matrix_value(g, pt) == expect);
        }
    }
}
