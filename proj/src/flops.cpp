#include "ellcob/flops.hpp"

#include <stdexcept>

namespace ellcob {

namespace {

void check_root(const MultiPoly& r, const Ctx& ctx) {
    if (!same_context(r.context(), ctx))
        throw std::domain_error("flop datum: root not in Z's ring");
    if (!r.is_zero() && !r.is_homogeneous(1))
        throw std::domain_error("flop datum: root must be a degree-1 class");
}

// P_{P(A)}(B (x) O_{P(A)}(-1) (+) O) for A with roots (a1, a2) and B with
// roots (b1, b2); c1(O_{P(A)}(-1)) = -zeta for the bundle's new generator.
VarietyData one_side(const VarietyData& z, const MultiPoly& a1, const MultiPoly& a2,
                     const MultiPoly& b1, const MultiPoly& b2) {
    BundleData a_bundle{2, {z.ring.normal_form(a1 + a2), z.ring.normal_form(a1 * a2)}};
    VarietyData pa = projective_bundle(z, a_bundle);
    const Ctx& ctx = pa.ring.context();
    MultiPoly zeta = MultiPoly::variable(ctx, static_cast<int>(ctx->size()) - 1);
    MultiPoly r1 = b1.map_to(ctx) - zeta;
    MultiPoly r2 = b2.map_to(ctx) - zeta;
    BundleData v{3,
                 {pa.ring.normal_form(r1 + r2), pa.ring.normal_form(r1 * r2),
                  MultiPoly(ctx)}};
    return projective_bundle(pa, v);
}

}  // namespace

FlopDatum make_flop_datum(VarietyData z, MultiPoly a1, MultiPoly a2, MultiPoly b1,
                          MultiPoly b2) {
    const Ctx& ctx = z.ring.context();
    for (const MultiPoly* r : {&a1, &a2, &b1, &b2}) check_root(*r, ctx);
    return FlopDatum{std::move(z), std::move(a1), std::move(a2), std::move(b1),
                     std::move(b2)};
}

FlopDatum swapped(const FlopDatum& f) { return FlopDatum{f.z, f.b1, f.b2, f.a1, f.a2}; }

std::pair<VarietyData, VarietyData> flop_difference_varieties(const FlopDatum& f) {
    return {one_side(f.z, f.a1, f.a2, f.b1, f.b2),
            one_side(f.z, f.b1, f.b2, f.a1, f.a2)};
}

Rational s_n_flop_formula(const FlopDatum& f, int n) {
    if (n != f.total_dimension())
        throw std::domain_error("s_n_flop_formula: n must equal dim Z + 3");
    const Ctx& ctx = f.z.ring.context();
    auto pm = [](int i) { return (i % 2) ? Rational(-1) : Rational(1); };
    MultiPoly acc(ctx);
    int m = n - 3;
    for (int i1 = 0; i1 <= m; ++i1)
        for (int i2 = 0; i2 + i1 <= m; ++i2)
            for (int i3 = 0; i3 + i2 + i1 <= m; ++i3) {
                int i4 = m - i1 - i2 - i3;
                Rational w = pm(i2) * binomial(n - 1, i1) +
                             pm(i1) * binomial(n - 1, i2) -
                             pm(i4) * binomial(n - 1, i3) -
                             pm(i3) * binomial(n - 1, i4);
                if (w == Rational(0)) continue;
                acc += f.a1.pow(i1) * f.a2.pow(i2) * f.b1.pow(i3) * f.b2.pow(i4) * w;
            }
    return f.z.integrate(acc);
}

Rational s_n_flop_geometric(const FlopDatum& f, int n) {
    if (n != f.total_dimension())
        throw std::domain_error("s_n_flop_geometric: n must equal dim Z + 3");
    auto [x1, x2] = flop_difference_varieties(f);
    return s_n(x1) - s_n(x2);
}

EllElement flop_ideal_probe(const FlopDatum& f, const GenusSeries& g) {
    auto [x1, x2] = flop_difference_varieties(f);
    MultiPoly diff = genus_of_variety(x1, g).value - genus_of_variety(x2, g).value;
    return EllElement{std::move(diff), -f.total_dimension()};
}

}  // namespace ellcob
