#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellcob/flops.hpp"

using namespace ellcob;

namespace {

MultiPoly hclass(const VarietyData& z, int idx) {
    return MultiPoly::variable(z.ring.context(), idx);
}

FlopDatum integer_datum(const VarietyData& z, const std::vector<std::vector<int>>& mults) {
    // mults[k] = coefficients of each degree-1 generator for root k.
    const Ctx& ctx = z.ring.context();
    std::vector<MultiPoly> roots;
    for (const auto& m : mults) {
        MultiPoly r(ctx);
        for (std::size_t j = 0; j < m.size(); ++j)
            r += Rational(m[j]) * MultiPoly::variable(ctx, static_cast<int>(j));
        roots.push_back(r);
    }
    return make_flop_datum(z, roots[0], roots[1], roots[2], roots[3]);
}

}  // namespace

TEST_CASE("trivial datum: symmetric sides, zero bracket") {
    VarietyData pt = projective_space(0);
    MultiPoly zero(pt.ring.context());
    FlopDatum f = make_flop_datum(pt, zero, zero, zero, zero);
    CHECK(f.total_dimension() == 3);
    CHECK(s_n_flop_formula(f, 3) == Rational(0));
    CHECK(s_n_flop_geometric(f, 3) == Rational(0));
    auto [x1, x2] = flop_difference_varieties(f);
    CHECK(x1.dimension == 3);
    CHECK(x2.dimension == 3);
    CHECK(s_n(x1) == s_n(x2));
    for (const Partition& I : partitions_of(3))
        CHECK(tangent_chern_number(x1, I) == tangent_chern_number(x2, I));
}

TEST_CASE("datum validation") {
    VarietyData z = projective_space(2, "x");
    const Ctx& ctx = z.ring.context();
    MultiPoly h = hclass(z, 0), zero(ctx);
    CHECK_THROWS_AS(make_flop_datum(z, h * h, zero, zero, zero), std::domain_error);
    Ctx other = make_context({"t"}, {1});
    CHECK_THROWS_AS(make_flop_datum(z, MultiPoly::variable(other, 0), zero, zero, zero),
                    std::domain_error);
    FlopDatum f = make_flop_datum(z, h, zero, zero, zero);
    CHECK_THROWS_AS(s_n_flop_formula(f, 4), std::domain_error);
    CHECK_THROWS_AS(s_n_flop_geometric(f, 6), std::domain_error);
}

TEST_CASE("A = B gives zero for all data; swap is antisymmetric") {
    VarietyData z = projective_space(2, "x");
    MultiPoly h = hclass(z, 0), zero(z.ring.context());
    for (int u = -2; u <= 2; ++u)
        for (int v = -2; v <= 2; ++v) {
            FlopDatum f = make_flop_datum(z, Rational(u) * h, Rational(v) * h,
                                          Rational(u) * h, Rational(v) * h);
            CHECK(s_n_flop_formula(f, 5) == Rational(0));
        }
    FlopDatum f = make_flop_datum(z, h, zero, Rational(2) * h, -h);
    CHECK(s_n_flop_formula(f, 5) == Rational(-40));  // frozen discriminating value
    CHECK(s_n_flop_formula(swapped(f), 5) == Rational(40));
    CHECK(s_n_flop_geometric(swapped(f), 5) == Rational(40));
}

TEST_CASE("formula matches geometry on a fixed grid") {
    // dim Z = 1 makes every bracket vanish; check both routes return zero.
    VarietyData p1 = projective_space(1, "x");
    MultiPoly h1 = hclass(p1, 0);
    for (int b1 = -2; b1 <= 2; ++b1)
        for (int b2 = -2; b2 <= b1; ++b2) {
            FlopDatum f = make_flop_datum(p1, h1, -h1, Rational(b1) * h1,
                                          Rational(b2) * h1);
            CHECK(s_n_flop_formula(f, 4) == Rational(0));
            CHECK(s_n_flop_geometric(f, 4) == Rational(0));
        }
    // dim Z = 2: non-trivial values, exhaustive small grid on both surfaces.
    for (int which : {0, 1}) {
        VarietyData z = which == 0
                            ? projective_space(2, "x")
                            : product(projective_space(1, "x"), projective_space(1, "y"));
        const Ctx& ctx = z.ring.context();
        int gens = static_cast<int>(ctx->size());
        std::vector<MultiPoly> pool;
        for (int c0 = -1; c0 <= 1; ++c0)
            for (int c1 = -1; c1 <= (gens > 1 ? 1 : -1); ++c1) {
                MultiPoly r = Rational(c0) * MultiPoly::variable(ctx, 0);
                if (gens > 1) r += Rational(c1) * MultiPoly::variable(ctx, 1);
                pool.push_back(r);
            }
        MultiPoly zero(ctx);
        for (const MultiPoly& ra : pool)
            for (const MultiPoly& rb : pool) {
                FlopDatum f = make_flop_datum(z, ra, zero, rb, -rb + ra);
                CHECK(s_n_flop_formula(f, 5) == s_n_flop_geometric(f, 5));
            }
    }
}

TEST_CASE("formula matches geometry on seeded random data") {
    std::mt19937 rng(20260826);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<VarietyData> bases;
    bases.push_back(projective_space(0));
    bases.push_back(projective_space(1, "x"));
    bases.push_back(projective_space(2, "x"));
    bases.push_back(product(projective_space(1, "x"), projective_space(1, "y")));
    bases.push_back(projective_space(3, "x"));
    for (int trial = 0; trial < 20; ++trial) {
        const VarietyData& z = bases[trial % bases.size()];
        const Ctx& ctx = z.ring.context();
        std::vector<std::vector<int>> mults(4, std::vector<int>(ctx->size()));
        for (auto& m : mults)
            for (auto& c : m) c = coef(rng);
        FlopDatum f = integer_datum(z, mults);
        int n = f.total_dimension();
        CHECK(s_n_flop_formula(f, n) == s_n_flop_geometric(f, n));
    }
}

TEST_CASE("genus kernel: flop differences vanish under phi") {
    GenusSeries g = curve_log(krichever_curve(), 7);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coef(-2, 2);

    VarietyData pt = projective_space(0);
    MultiPoly zpt(pt.ring.context());
    CHECK(flop_ideal_probe(make_flop_datum(pt, zpt, zpt, zpt, zpt), g).value.is_zero());

    std::vector<VarietyData> bases;
    bases.push_back(projective_space(1, "x"));
    bases.push_back(projective_space(2, "x"));
    bases.push_back(product(projective_space(1, "x"), projective_space(1, "y")));
    bases.push_back(projective_space(3, "x"));
    bases.push_back(product(projective_space(2, "x"), projective_space(2, "y")));
    for (const VarietyData& z : bases) {
        const Ctx& ctx = z.ring.context();
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<std::vector<int>> mults(4, std::vector<int>(ctx->size()));
            for (auto& m : mults)
                for (auto& c : m) c = coef(rng);
            FlopDatum f = integer_datum(z, mults);
            EllElement probe = flop_ideal_probe(f, g);
            CHECK(probe.value.is_zero());
            CHECK(probe.degree == -f.total_dimension());
        }
    }
}
