#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellcob/multipoly.hpp"
#include "ellcob/partition.hpp"
#include "ellcob/symmfunc.hpp"
#include "ellcob/truncseries.hpp"

using namespace ellcob;

namespace {

MultiPoly random_poly(const Ctx& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(0, 3), num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    MultiPoly p(ctx);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        MultiPoly::Exponents e(ctx->size());
        for (auto& x : e) x = expo(rng);
        p += MultiPoly::monomial(ctx, e, Rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(2, 4), b(1, 3);
    CHECK(a.str() == "1/2");
    CHECK((a + b).str() == "5/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a - a).is_zero());
    CHECK((Rational(-3, 6)).str() == "-1/2");
    CHECK(Rational::from_string("7/21") == Rational(1, 3));
    CHECK(Rational(5, 1).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(binomial(6, 3) == Rational(20));
    CHECK(binomial(4, 7).is_zero());
}

TEST_CASE("polynomial products: monomials, annihilator, binomial expansion") {
    Ctx ctx = make_context({"a2", "x"}, {2, 1});
    MultiPoly a2 = MultiPoly::variable(ctx, "a2");
    MultiPoly x = MultiPoly::variable(ctx, "x");
    MultiPoly one = MultiPoly::constant(ctx, Rational(1));

    CHECK((a2 * a2).str() == "a2^2");
    CHECK((x * MultiPoly(ctx)).is_zero());

    MultiPoly p = (one + x).pow(2) * (one + x);
    MultiPoly cube = one + Rational(3) * x + Rational(3) * x.pow(2) + x.pow(3);
    CHECK(p == cube);
    CHECK(p.str() == "1 + 3*x + 3*x^2 + x^3");
}

TEST_CASE("canonical serialization format") {
    Ctx ctx = make_context({"a1", "a2", "a3", "a4"}, {1, 2, 3, 4});
    MultiPoly a2 = MultiPoly::variable(ctx, "a2");
    MultiPoly a4 = MultiPoly::variable(ctx, "a4");
    MultiPoly p = Rational(24) * a2 + Rational(1, 2) * a4.pow(2);
    CHECK(p.str() == "24*a2 + 1/2*a4^2");
    CHECK((Rational(-1) * a2 + a4).str() == "-a2 + a4");
    CHECK((a2 - Rational(1, 3) * a4).str() == "a2 - 1/3*a4");
    CHECK(MultiPoly(ctx).str() == "0");
}

TEST_CASE("ring axioms on randomized polynomials") {
    Ctx ctx = make_context({"u", "v", "w"}, {1, 2, 1});
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly a = random_poly(ctx, rng);
        MultiPoly b = random_poly(ctx, rng);
        MultiPoly c = random_poly(ctx, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("context mismatch is rejected") {
    Ctx c1 = make_context({"x"});
    Ctx c2 = make_context({"y"});
    MultiPoly a = MultiPoly::variable(c1, 0);
    MultiPoly b = MultiPoly::variable(c2, 0);
    CHECK_THROWS_AS(a * b, ContextError);
    CHECK_THROWS_AS(a + b, ContextError);
}

TEST_CASE("weighted degree bookkeeping") {
    Ctx ctx = make_context({"a1", "a2", "a3"}, {1, 2, 3});
    MultiPoly p = MultiPoly::variable(ctx, "a1").pow(2) * MultiPoly::variable(ctx, "a3");
    CHECK(p.degree() == 5);
    CHECK(p.is_homogeneous(5));
    MultiPoly q = p + MultiPoly::variable(ctx, "a2");
    CHECK(q.homogeneous_part(2) == MultiPoly::variable(ctx, "a2"));
    CHECK(q.truncate_weight(2) == MultiPoly::variable(ctx, "a2"));
}

TEST_CASE("series reversion: identity, frozen oracle, involution") {
    Ctx ctx = make_context({"a"}, {1});
    const int N = 8;
    TruncSeries t = TruncSeries::identity(ctx, N);
    CHECK(t.reverse() == t);

    // f = t + t^2  ->  g = t - t^2 + 2t^3 - 5t^4 (mod t^5): iterated
    // substitution oracle, Catalan signs.
    TruncSeries f = TruncSeries::identity(ctx, 4);
    f.set(2, MultiPoly::constant(ctx, Rational(1)));
    TruncSeries g = f.reverse();
    CHECK(g[0].is_zero());
    CHECK(g[1].constant_term() == Rational(1));
    CHECK(g[2].constant_term() == Rational(-1));
    CHECK(g[3].constant_term() == Rational(2));
    CHECK(g[4].constant_term() == Rational(-5));
    CHECK((f.compose(g)) == TruncSeries::identity(ctx, 4));
    CHECK((g.compose(f)) == TruncSeries::identity(ctx, 4));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        TruncSeries h = TruncSeries::identity(ctx, N);
        MultiPoly a = MultiPoly::variable(ctx, 0);
        for (int k = 2; k <= N; ++k) {
            MultiPoly coeff = MultiPoly::constant(ctx, Rational(num(rng), den(rng)));
            if (k % 2) coeff += a * Rational(num(rng));
            h.set(k, coeff);
        }
        CHECK(h.reverse().reverse() == h);
        CHECK(h.compose(h.reverse()) == TruncSeries::identity(ctx, N));
    }

    // Non-unit rational linear coefficient is allowed; zero is not.
    TruncSeries s2 = TruncSeries::identity(ctx, 4).scaled(Rational(2));
    CHECK(s2.compose(s2.reverse()) == TruncSeries::identity(ctx, 4));
    TruncSeries bad(ctx, 4);
    bad.set(2, MultiPoly::constant(ctx, Rational(1)));
    CHECK_THROWS_AS(bad.reverse(), std::domain_error);
}

TEST_CASE("series inverse, exp, integral, derivative") {
    Ctx ctx = make_context({"a"}, {1});
    const int N = 10;
    MultiPoly a = MultiPoly::variable(ctx, 0);

    // geometric series: 1/(1 - t)
    TruncSeries f = TruncSeries::constant(ctx, Rational(1), N);
    f.set(1, MultiPoly::constant(ctx, Rational(-1)));
    TruncSeries inv = f.inverse();
    for (int k = 0; k <= N; ++k) CHECK(inv[k].constant_term() == Rational(1));
    CHECK(f * inv == TruncSeries::constant(ctx, Rational(1), N));

    // exp(t) has coefficients 1/k!
    TruncSeries e = TruncSeries::identity(ctx, N).exponential();
    Rational fact(1);
    for (int k = 1; k <= N; ++k) {
        fact *= Rational(k);
        CHECK(e[k].constant_term() == Rational(1) / fact);
    }
    CHECK(e.derivative()[N - 1] == e[N - 1]);

    // exp with a polynomial coefficient: exp(a*t) = sum a^k t^k / k!
    TruncSeries at = TruncSeries::identity(ctx, 5).scaled(a);
    TruncSeries ea = at.exponential();
    CHECK(ea[3] == a.pow(3) * Rational(1, 6));
    CHECK(TruncSeries::identity(ctx, 5).integral()[2].constant_term() == Rational(1, 2));

    CHECK_THROWS_AS(TruncSeries::identity(ctx, 4).inverse(), std::domain_error);
    CHECK_THROWS_AS(TruncSeries::constant(ctx, Rational(1), 4).exponential(),
                    std::domain_error);
}

TEST_CASE("newton power sums in the elementary basis") {
    using namespace ellcob::symm;
    Ctx c2 = make_context({"c1", "c2", "c3"}, {1, 2, 3});
    MultiPoly c1v = MultiPoly::variable(c2, "c1");
    MultiPoly c2v = MultiPoly::variable(c2, "c2");
    MultiPoly c3v = MultiPoly::variable(c2, "c3");

    CHECK(power_sums_from_elementary({c1v}, 1) == c1v);
    CHECK(power_sums_from_elementary({c1v, c2v}, 2) == c1v.pow(2) - Rational(2) * c2v);
    CHECK(power_sums_from_elementary({c1v, c2v, c3v}, 3) ==
          c1v.pow(3) - Rational(3) * c1v * c2v + Rational(3) * c3v);
    CHECK_THROWS_AS(power_sums_from_elementary({c1v}, 0), std::domain_error);

    // Universal Newton polynomial agrees with direct expansion in k formal
    // roots for all n <= k <= 6.
    for (int k = 1; k <= 6; ++k) {
        Ctx rc = root_context(k);
        std::vector<MultiPoly> xs;
        for (int i = 0; i < k; ++i) xs.push_back(MultiPoly::variable(rc, i));
        for (int n = 1; n <= k; ++n) {
            std::vector<MultiPoly> es;
            for (int j = 1; j <= n; ++j) es.push_back(elementary_in_roots(j, xs));
            MultiPoly direct(rc);
            for (int i = 0; i < k; ++i) direct += xs[i].pow(n);
            CHECK(power_sums_from_elementary(es, n) == direct);
        }
    }
}

TEST_CASE("monomial symmetric functions in the elementary basis") {
    using namespace ellcob::symm;
    // m_(1,1) = e2, m_(2) = e1^2 - 2e2, m_(2,1) = e1*e2 - 3e3.
    Ctx e2ctx = elementary_context(2);
    CHECK(monomial_in_elementary(Partition({1, 1})) ==
          MultiPoly::variable(e2ctx, "e2").map_to(e2ctx));
    CHECK(monomial_in_elementary(Partition({2})).str() == "e1^2 - 2*e2");
    CHECK(monomial_in_elementary(Partition({2, 1})).str() == "e1*e2 - 3*e3");

    // Round trip: expanding the e-basis expression in roots returns m_I.
    for (int w = 1; w <= 6; ++w) {
        Ctx rc = root_context(w);
        std::vector<MultiPoly> xs;
        for (int i = 0; i < w; ++i) xs.push_back(MultiPoly::variable(rc, i));
        for (const Partition& I : partitions_of(w)) {
            MultiPoly expr = monomial_in_elementary(I);
            MultiPoly expanded(rc);
            for (const auto& [e, c] : expr.terms()) {
                MultiPoly term = MultiPoly::constant(rc, c);
                for (std::size_t j = 0; j < e.size(); ++j)
                    for (int rep = 0; rep < e[j]; ++rep)
                        term *= elementary_in_roots(static_cast<int>(j) + 1, xs);
                expanded += term;
            }
            CHECK(expanded == monomial_in_roots(I, xs));
        }
    }
}

TEST_CASE("partition enumeration and counting") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    CHECK(partitions_of(10).size() == 42);
    CHECK_THROWS_AS(partitions_of(-1), std::domain_error);
    CHECK_THROWS_AS(partition_count(-2), std::domain_error);

    // Enumeration agrees with the pentagonal recurrence for n <= 50
    // (enumerate only up to 30 to keep the test quick; the recurrence is
    // checked against known values beyond that).
    for (int n = 0; n <= 30; ++n)
        CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n));
    CHECK(partition_count(50) == 204226);

    CHECK(Partition({3, 1}).merged(Partition({2, 2})) == Partition({3, 2, 2, 1}));
    CHECK(Partition({2, 2, 1}).multiplicity(2) == 2);
    CHECK(Partition({3, 1}).str() == "[3,1]");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}
