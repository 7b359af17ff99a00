#include "ellcob/verify.hpp"

#include <random>
#include <sstream>

#include "ellcob/adams.hpp"
#include "ellcob/lazard.hpp"
#include "ellcob/symmfunc.hpp"

namespace ellcob::verify {

namespace {

std::string rat(const Rational& r) { return r.str(); }

// The three anchor Chern-number tables (tangent numbers in the elementary
// basis) and their genus values.
std::map<Partition, Rational> anchor_w2() {
    return monomial_numbers_from_elementary(
        2, {{Partition({1, 1}), Rational(0)}, {Partition({2}), Rational(24)}});
}
std::map<Partition, Rational> anchor_w3() {
    return monomial_numbers_from_elementary(3, {{Partition({1, 1, 1}), Rational(0)},
                                                {Partition({2, 1}), Rational(0)},
                                                {Partition({3}), Rational(2)}});
}
std::map<Partition, Rational> anchor_w4() {
    return monomial_numbers_from_elementary(4, {{Partition({1, 1, 1, 1}), Rational(0)},
                                                {Partition({2, 1, 1}), Rational(0)},
                                                {Partition({2, 2}), Rational(2)},
                                                {Partition({3, 1}), Rational(0)},
                                                {Partition({4}), Rational(6)}});
}

// Root = sum of coef[i] * (i-th context variable) in z's ring.
MultiPoly combo_root(const VarietyData& z, const std::vector<int>& coef) {
    const Ctx& ctx = z.ring.context();
    MultiPoly r(ctx);
    for (std::size_t i = 0; i < coef.size() && i < ctx->size(); ++i)
        if (coef[i] != 0)
            r = r + MultiPoly::variable(ctx, static_cast<int>(i)) * Rational(coef[i]);
    return r;
}

}  // namespace

CheckResult genus_anchors(const GenusSeries& g) {
    CheckResult r{"genus-anchors", true, ""};
    struct Anchor {
        int dim;
        std::map<Partition, Rational> numbers;
        std::string expect;
    };
    const Anchor anchors[] = {{2, anchor_w2(), "24*a2"},
                              {3, anchor_w3(), "a3"},
                              {4, anchor_w4(), "6*a2^2 - a4"}};
    std::ostringstream os;
    for (const Anchor& a : anchors) {
        std::string got = genus_of_chern_numbers(a.dim, a.numbers, g).value.str();
        if (got != a.expect) {
            r.pass = false;
            os << " dim " << a.dim << ": got " << got << ", want " << a.expect << ";";
        }
    }
    r.detail = r.pass ? "3/3 anchors" : os.str();
    return r;
}

CheckResult star_values(long p) {
    CheckResult r{"star-values", true, ""};
    struct Item {
        int n;
        std::map<Partition, Rational> numbers;
        long expect;
    };
    const Item items[] = {{2, anchor_w2(), -48}, {3, anchor_w3(), 6}, {4, anchor_w4(), -20}};
    std::ostringstream os;
    for (const Item& it : items) {
        Rational s = it.numbers.at(Partition({it.n}));
        if (s != Rational(it.expect)) {
            r.pass = false;
            os << " s_" << it.n << " = " << rat(s) << ", want " << it.expect << ";";
        } else if (!star_condition(it.n, s, p)) {
            r.pass = false;
            os << " s_" << it.n << " = " << rat(s) << " fails (*);";
        }
    }
    r.detail = r.pass ? "s_2=-48 s_3=6 s_4=-20, all pass (*)" : os.str();
    return r;
}

std::vector<FlopDatum> flop_test_data(unsigned seed, int random_count) {
    std::vector<FlopDatum> out;

    VarietyData pt = projective_space(0);
    MultiPoly z0(pt.ring.context());
    out.push_back(make_flop_datum(pt, z0, z0, z0, z0));

    // P^1 and P^2: all four roots are c*h with c in [-2,2]; P^1xP^1 uses
    // c*(h1+h2).
    std::vector<VarietyData> grid_bases = {projective_space(1), projective_space(2),
                                           product(projective_space(1, "h1"), projective_space(1, "h2"))};
    for (const VarietyData& z : grid_bases) {
        const Ctx& ctx = z.ring.context();
        MultiPoly h(ctx);
        for (std::size_t i = 0; i < ctx->size(); ++i)
            h = h + MultiPoly::variable(ctx, static_cast<int>(i));
        for (int c1 = -2; c1 <= 2; ++c1)
            for (int c2 = -2; c2 <= 2; ++c2)
                for (int c3 = -2; c3 <= 2; ++c3)
                    for (int c4 = -2; c4 <= 2; ++c4)
                        out.push_back(make_flop_datum(z, h * Rational(c1), h * Rational(c2),
                                                      h * Rational(c3), h * Rational(c4)));
    }

    // Seeded random data with fully mixed roots, bases up to dimension 4.
    std::vector<VarietyData> pool = {projective_space(0),
                                     projective_space(1),
                                     projective_space(2),
                                     projective_space(3),
                                     product(projective_space(1, "h1"), projective_space(1, "h2")),
                                     product(projective_space(2, "h1"), projective_space(1, "h2")),
                                     product(projective_space(2, "h1"), projective_space(2, "h2"))};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick_base(0, static_cast<int>(pool.size()) - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int t = 0; t < random_count; ++t) {
        const VarietyData& z = pool[static_cast<std::size_t>(pick_base(rng))];
        std::size_t k = z.ring.context()->size();
        auto root = [&] {
            std::vector<int> c(k);
            for (auto& v : c) v = coef(rng);
            return combo_root(z, c);
        };
        MultiPoly a1 = root(), a2 = root(), b1 = root(), b2 = root();
        out.push_back(make_flop_datum(z, a1, a2, b1, b2));
    }
    return out;
}

CheckResult flop_formula(const std::vector<FlopDatum>& data) {
    CheckResult r{"flop-formula", true, ""};
    for (std::size_t i = 0; i < data.size(); ++i) {
        int n = data[i].total_dimension();
        Rational lhs = s_n_flop_formula(data[i], n);
        Rational rhs = s_n_flop_geometric(data[i], n);
        if (lhs != rhs) {
            r.pass = false;
            std::ostringstream os;
            os << "datum " << i << " (n=" << n << "): formula " << rat(lhs) << " != geometric "
               << rat(rhs);
            r.detail = os.str();
            return r;
        }
    }
    r.detail = std::to_string(data.size()) + " data, formula == geometric";
    return r;
}

CheckResult flop_kernel(const std::vector<FlopDatum>& data, const GenusSeries& g, int max_dim) {
    CheckResult r{"flop-kernel", true, ""};
    std::size_t checked = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i].total_dimension() > max_dim) continue;
        ++checked;
        EllElement probe = flop_ideal_probe(data[i], g);
        if (!probe.value.is_zero()) {
            r.pass = false;
            std::ostringstream os;
            os << "datum " << i << ": phi(X1)-phi(X2) = " << probe.value.str();
            r.detail = os.str();
            return r;
        }
    }
    r.detail = std::to_string(checked) + " probes, all zero";
    return r;
}

CheckResult calabi_yau() {
    CheckResult r{"calabi-yau", true, ""};
    int checked = 0;
    for (int r1 = 1; r1 <= 4 && r.pass; ++r1)
        for (int r2 = 0; r2 <= 4 && r.pass; ++r2)
            for (int r3 = 0; r3 <= 4 && r.pass; ++r3) {
                if (r2 == 0 && r3 != 0) continue;
                std::vector<int> n = {r1};
                if (r2 > 0) n.push_back(r2);
                if (r3 > 0) n.push_back(r3);
                std::vector<int> d;
                for (int v : n) d.push_back(v + 1);
                VarietyData h = multiproj_hypersurface(n, d);
                ++checked;
                if (!is_calabi_yau(h)) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "multidegree-(n_i+1) hypersurface with n = (";
                    for (int v : n) os << v << ",";
                    os << ") has c_1 != 0";
                    r.detail = os.str();
                }
            }
    if (r.pass) r.detail = std::to_string(checked) + " hypersurfaces, c_1 = 0";
    return r;
}

CheckResult generator_witnesses(long p) {
    CheckResult r{"generators", true, ""};
    std::ostringstream os;
    for (int n = 2; n <= 10; ++n) {
        GeneratorReport rep = generator_search(n, p);
        if (!rep.passes || !star_condition(n, rep.s, p)) {
            r.pass = false;
            os << " n=" << n << ": no witness (best s = " << rat(rep.s) << ");";
        }
    }
    r.detail = r.pass ? "witnesses for n = 2..10" : os.str();
    return r;
}

CheckResult e2_poincare() {
    CheckResult r{"e2-poincare", true, ""};
    for (long l : {3L, 5L, 7L}) {
        GeneratorTable mgl = e2_generators(Theory::MGL, l, 20);
        GeneratorTable msl = e2_generators(Theory::MSL, l, 20);
        for (int u = 0; u <= 20; ++u) {
            long pu = partition_count(u);
            long pu2 = pu - (u >= 1 ? partition_count(u - 1) : 0);
            if (poincare_count(mgl, u) != pu || poincare_count(msl, u) != pu2) {
                r.pass = false;
                std::ostringstream os;
                os << "l=" << l << " u=" << u << ": MGL " << poincare_count(mgl, u) << " vs "
                   << pu << ", MSL " << poincare_count(msl, u) << " vs " << pu2;
                r.detail = os.str();
                return r;
            }
        }
    }
    r.detail = "MGL = p(u), MSL = p(u) - p(u-1), u <= 20, l in {3,5,7}";
    return r;
}

CheckResult msl_degrees() {
    CheckResult r{"msl-degrees", true, ""};
    for (long l : {3L, 5L, 7L}) {
        try {
            msl_generator_degrees(l, 30);  // throws on any structural defect
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = "l=" + std::to_string(l) + ": " + e.what();
            return r;
        }
    }
    r.detail = "one generator per degree 2..30, none in degree 1, l in {3,5,7}";
    return r;
}

CheckResult koszul_dims() {
    CheckResult r{"koszul", true, ""};
    for (int m = 1; m <= 4; ++m) {
        KoszulComplex k{3, m, 6, 30};
        auto dims = koszul_ext_dims(k);
        // Everything on the diagonal p - s = 2q (so t = 2u only).
        for (const auto& [bd, cnt] : dims)
            if (bd.p - bd.s != 2 * bd.q || cnt < 1) {
                r.pass = false;
                r.detail = "off-diagonal entry at s=" + std::to_string(bd.s);
                return r;
            }
        // Independent multiset oracle: enumerate count vectors directly.
        std::map<Bidegree, long> oracle;
        std::vector<int> counts(static_cast<std::size_t>(m), 0);
        std::vector<long> pw(static_cast<std::size_t>(m));
        long v = 1;
        for (int i = 0; i < m; ++i, v *= 3) pw[i] = v;
        auto walk = [&](auto&& self, int i) -> void {
            if (i == m) {
                int s = 0, p = 0, q = 0;
                for (int j = 0; j < m; ++j) {
                    s += counts[static_cast<std::size_t>(j)];
                    p += counts[static_cast<std::size_t>(j)] * static_cast<int>(2 * pw[j] - 1);
                    q += counts[static_cast<std::size_t>(j)] * static_cast<int>(pw[j] - 1);
                }
                if (s <= 6 && q <= 30) oracle[Bidegree{s, p, q}] += 1;
                return;
            }
            for (int c = 0; c <= 6; ++c) {
                counts[static_cast<std::size_t>(i)] = c;
                self(self, i + 1);
            }
            counts[static_cast<std::size_t>(i)] = 0;
        };
        walk(walk, 0);
        if (dims != oracle) {
            r.pass = false;
            r.detail = "m=" + std::to_string(m) + ": Sym^s multiset counts disagree";
            return r;
        }
        // Query interface vanishes strictly above t = 2u.
        for (int s = 0; s <= 4; ++s)
            for (int u = 0; u <= 6; ++u)
                if (koszul_ext_dim(k, s, 2 * u + 1, u) != 0 ||
                    koszul_ext_dim(k, s, 2 * u + 2, u) != 0) {
                    r.pass = false;
                    r.detail = "nonzero above the diagonal t = 2u";
                    return r;
                }
    }
    r.detail = "diagonal Sym^s counts match, t > 2u vanishes, m <= 4, u <= 30";
    return r;
}

CheckResult pushforward_oracle() {
    CheckResult r{"pushforward", true, ""};
    std::vector<VarietyData> bases = {projective_space(1), projective_space(2),
                                      projective_space(3),
                                      product(projective_space(1, "h1"), projective_space(1, "h2")),
                                      product(projective_space(1, "h1"), projective_space(2, "h2"))};
    int checked = 0;
    for (const VarietyData& base : bases) {
        const Ctx& bctx = base.ring.context();
        // Deterministic split-root pools built from the hyperplane classes.
        std::vector<MultiPoly> pool = {MultiPoly(bctx), MultiPoly::variable(bctx, 0),
                                       MultiPoly::variable(bctx, 0) * Rational(-1),
                                       MultiPoly::variable(bctx, 0) * Rational(2)};
        if (bctx->size() > 1) {
            pool.push_back(MultiPoly::variable(bctx, 1));
            pool.push_back(MultiPoly::variable(bctx, 0) - MultiPoly::variable(bctx, 1));
        }
        for (int rank = 1; rank <= 3; ++rank) {
            for (std::size_t start = 0; start + rank <= pool.size(); ++start) {
                std::vector<MultiPoly> roots(pool.begin() + static_cast<long>(start),
                                             pool.begin() + static_cast<long>(start) + rank);
                BundleData v;
                v.rank = rank;
                for (int j = 1; j <= rank; ++j)
                    v.chern.push_back(base.ring.normal_form(symm::elementary_in_roots(j, roots)));
                VarietyData pb = projective_bundle(base, v);
                const Ctx& pctx = pb.ring.context();
                int zi = static_cast<int>(pctx->size()) - 1;
                MultiPoly zeta = MultiPoly::variable(pctx, zi);
                MultiPoly extra = MultiPoly::variable(pctx, 0);  // a base factor
                for (int a = 0; a <= rank - 1 + base.dimension; ++a) {
                    // Chern-root expansion: pi_*(zeta^a) = h_{a-rank+1}(-roots),
                    // the complete homogeneous sum over exponent vectors.
                    int mdeg = a - rank + 1;
                    MultiPoly oracle(pctx);
                    if (mdeg == 0) oracle = MultiPoly::constant(pctx, Rational(1));
                    if (mdeg > 0) {
                        std::vector<int> expo(static_cast<std::size_t>(rank), 0);
                        auto walk = [&](auto&& self, int i, int left) -> void {
                            if (i == rank - 1) {
                                expo[static_cast<std::size_t>(i)] = left;
                                MultiPoly term = MultiPoly::constant(pctx, Rational(1));
                                for (int j = 0; j < rank; ++j) {
                                    MultiPoly x =
                                        roots[static_cast<std::size_t>(j)].map_to(pctx) *
                                        Rational(-1);
                                    for (int q = 0; q < expo[static_cast<std::size_t>(j)]; ++q)
                                        term = term * x;
                                }
                                oracle = oracle + term;
                                return;
                            }
                            for (int c = 0; c <= left; ++c) {
                                expo[static_cast<std::size_t>(i)] = c;
                                self(self, i + 1, left - c);
                            }
                        };
                        walk(walk, 0, mdeg);
                    }
                    for (const MultiPoly& fac :
                         {MultiPoly::constant(pctx, Rational(1)), extra}) {
                        MultiPoly expr = fac;
                        for (int q = 0; q < a; ++q) expr = expr * zeta;
                        MultiPoly got =
                            pushforward_proj_bundle(expr, v, zi, base.dimension + 1);
                        MultiPoly want = oracle * fac;
                        ++checked;
                        if (!pb.ring.normal_form(got - want).is_zero()) {
                            r.pass = false;
                            std::ostringstream os;
                            os << "rank " << rank << ", zeta^" << a
                               << ": Segre pushforward != Chern-root expansion";
                            r.detail = os.str();
                            return r;
                        }
                    }
                }
            }
        }
    }
    r.detail = std::to_string(checked) + " pushforwards match the Chern-root expansion";
    return r;
}

CheckResult log_power_sum_identity(unsigned seed, int trials) {
    CheckResult r{"log-power-sum", true, ""};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(1, 8), num(-9, 9), den(1, 3);
    Ctx dummy = make_context({"t"}, {1});
    for (int t = 0; t < trials; ++t) {
        int n = deg(rng);
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        c[0] = Rational(1);
        for (int i = 1; i <= n; ++i)
            c[static_cast<std::size_t>(i)] = Rational(num(rng), den(rng));
        // lg = log(c), coefficient-wise to order n.
        std::vector<Rational> lg(static_cast<std::size_t>(n) + 1, Rational(0));
        std::vector<Rational> upow(c.begin(), c.end());  // (c-1)^m, m = 1 first
        upow[0] = Rational(0);
        std::vector<Rational> u = upow;
        for (int m = 1; m <= n; ++m) {
            Rational sgn((m % 2 == 1) ? 1 : -1, m);
            for (int k = 0; k <= n; ++k)
                lg[static_cast<std::size_t>(k)] =
                    lg[static_cast<std::size_t>(k)] + sgn * upow[static_cast<std::size_t>(k)];
            // upow *= u
            std::vector<Rational> next(static_cast<std::size_t>(n) + 1, Rational(0));
            for (int i = 0; i <= n; ++i)
                for (int j = 0; i + j <= n; ++j)
                    next[static_cast<std::size_t>(i + j)] =
                        next[static_cast<std::size_t>(i + j)] +
                        upow[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)];
            upow = next;
        }
        // p_n from Newton's identities on the same numeric classes.
        std::vector<MultiPoly> e;
        for (int i = 1; i <= n; ++i)
            e.push_back(MultiPoly::constant(dummy, c[static_cast<std::size_t>(i)]));
        MultiPoly pn = symm::power_sums_from_elementary(e, n);
        // (-1)^n * n * [log c(-T)]_n with log c(-T) = -log c(T).
        Rational lhs = lg[static_cast<std::size_t>(n)] * Rational((n % 2 == 0) ? -n : n);
        Rational rhs = pn.is_zero() ? Rational(0) : pn.terms().begin()->second;
        if (lhs != rhs) {
            r.pass = false;
            std::ostringstream os;
            os << "trial " << t << " (n=" << n << "): " << rat(lhs) << " != " << rat(rhs);
            r.detail = os.str();
            return r;
        }
    }
    r.detail = std::to_string(trials) + " assignments, identity holds";
    return r;
}

CheckResult image_ring(const GenusSeries& g, long p) {
    CheckResult r{"image-ring", true, ""};
    std::ostringstream os;
    // Calabi-Yau hypersurfaces of small dimension.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> cy = {
        {{1}, {2}}, {{2}, {3}}, {{3}, {4}}, {{4}, {5}},
        {{2, 1}, {3, 2}}, {{1, 1, 1}, {2, 2, 2}}, {{2, 2}, {3, 3}}};
    for (const auto& [n, d] : cy) {
        EllElement e = genus_of_variety(multiproj_hypersurface(n, d), g);
        if (!image_membership(e, p)) {
            r.pass = false;
            os << " CY hypersurface phi = " << e.value.str() << " not in image;";
        }
    }
    // Flop-difference classes lie in the kernel, hence trivially in the image.
    std::vector<FlopDatum> flops = flop_test_data(7u, 3);
    for (std::size_t i = 0; i < flops.size(); i += 700) {
        EllElement e = flop_ideal_probe(flops[i], g);
        if (!image_membership(e, p)) {
            r.pass = false;
            os << " flop class " << i << " not in image;";
        }
    }
    EllElement p1 = genus_of_variety(projective_space(1), g);
    if (image_membership(p1, p)) {
        r.pass = false;
        os << " phi(P^1) = " << p1.value.str() << " wrongly accepted;";
    }
    r.detail = r.pass ? "CY and flop classes in Z[1/2][3a2,a3,a4]; phi(P^1) rejected"
                      : os.str();
    return r;
}

}  // namespace ellcob::verify
