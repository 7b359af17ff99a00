#include "ellcob/chern.hpp"

#include <set>

#include "ellcob/symmfunc.hpp"

namespace ellcob {

CohRing::CohRing(Ctx ctx, std::vector<GenRelation> rels, MultiPoly::Exponents top)
    : ctx_(std::move(ctx)), rels_(std::move(rels)), top_(std::move(top)) {
    if (rels_.size() != ctx_->size() || top_.size() != ctx_->size())
        throw std::invalid_argument("CohRing: generator/relation/top size mismatch");
    for (std::size_t i = 0; i < rels_.size(); ++i) {
        if (rels_[i].power < 1)
            throw std::invalid_argument("CohRing: relation power must be >= 1");
        if (top_[i] >= rels_[i].power)
            throw std::invalid_argument("CohRing: top monomial not in normal form");
    }
}

int CohRing::top_degree() const {
    int d = 0;
    for (std::size_t i = 0; i < top_.size(); ++i) d += top_[i] * ctx_->weights[i];
    return d;
}

MultiPoly CohRing::normal_form(MultiPoly p) const {
    // Relations of generator i only involve generators < i and lower powers
    // of i, so a single last-to-first sweep with a per-generator fixpoint
    // terminates.
    for (int i = static_cast<int>(ctx_->size()) - 1; i >= 0; --i) {
        const int power = rels_[i].power;
        bool again = true;
        while (again) {
            again = false;
            MultiPoly next(ctx_);
            for (const auto& [e, c] : p.terms()) {
                if (e[i] < power) {
                    next += MultiPoly::monomial(ctx_, e, c);
                    continue;
                }
                MultiPoly::Exponents rest = e;
                rest[i] -= power;
                next += MultiPoly::monomial(ctx_, rest, c) * rels_[i].rhs;
                again = true;
            }
            p = std::move(next);
        }
    }
    return p;
}

Rational CohRing::integrate(const MultiPoly& p) const {
    return normal_form(p).coeff(top_);
}

std::vector<MultiPoly> VarietyData::tangent_chern() const {
    std::vector<MultiPoly> c;
    for (int i = 1; i <= dimension; ++i) c.push_back(tangent_total.homogeneous_part(i));
    return c;
}

std::vector<MultiPoly> VarietyData::virtual_chern() const {
    const Ctx& ctx = ring.context();
    MultiPoly u = tangent_total - MultiPoly::constant(ctx, Rational(1));
    MultiPoly inv = MultiPoly::constant(ctx, Rational(1));
    MultiPoly upow = MultiPoly::constant(ctx, Rational(1));
    Rational sign(1);
    for (int k = 1; k <= dimension; ++k) {
        upow = ring.normal_form(upow * u).truncate_weight(dimension);
        sign = -sign;
        inv += upow * sign;
    }
    std::vector<MultiPoly> c;
    for (int i = 1; i <= dimension; ++i) c.push_back(inv.homogeneous_part(i));
    return c;
}

VarietyData projective_space(int n, const std::string& var) {
    if (n < 0) throw std::domain_error("projective_space: n must be >= 0");
    Ctx ctx = make_context({var});
    CohRing ring(ctx, {GenRelation{n + 1, MultiPoly(ctx)}}, {n});
    MultiPoly x = MultiPoly::variable(ctx, 0);
    MultiPoly one = MultiPoly::constant(ctx, Rational(1));
    MultiPoly ct = ring.normal_form((one + x).pow(n + 1)).truncate_weight(n);
    return VarietyData{n, std::move(ring), std::move(ct), one};
}

VarietyData product(const VarietyData& x, const VarietyData& y) {
    const Ctx& cx = x.ring.context();
    const Ctx& cy = y.ring.context();
    std::set<std::string> seen(cx->names.begin(), cx->names.end());
    for (const auto& n : cy->names)
        if (!seen.insert(n).second)
            throw ContextError("product: variable name collision: " + n);

    std::vector<std::string> names = cx->names;
    names.insert(names.end(), cy->names.begin(), cy->names.end());
    std::vector<int> weights = cx->weights;
    weights.insert(weights.end(), cy->weights.begin(), cy->weights.end());
    Ctx ctx = make_context(std::move(names), std::move(weights));

    std::vector<GenRelation> rels;
    for (const auto& r : x.ring.relations()) rels.push_back({r.power, r.rhs.map_to(ctx)});
    for (const auto& r : y.ring.relations()) rels.push_back({r.power, r.rhs.map_to(ctx)});
    MultiPoly::Exponents top = x.ring.top_monomial();
    top.insert(top.end(), y.ring.top_monomial().begin(), y.ring.top_monomial().end());

    int dim = x.dimension + y.dimension;
    CohRing ring(ctx, std::move(rels), std::move(top));
    MultiPoly ct = ring.normal_form(x.tangent_total.map_to(ctx) * y.tangent_total.map_to(ctx))
                       .truncate_weight(dim);
    MultiPoly fund = ring.normal_form(x.fundamental.map_to(ctx) * y.fundamental.map_to(ctx));
    return VarietyData{dim, std::move(ring), std::move(ct), std::move(fund)};
}

VarietyData multiproj_hypersurface(const std::vector<int>& n, const std::vector<int>& d) {
    if (n.size() != d.size() || n.empty())
        throw std::invalid_argument("multiproj_hypersurface: n/d length mismatch");
    int dim = -1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 1) throw std::domain_error("multiproj_hypersurface: n_i must be >= 1");
        if (d[i] < 0) throw std::domain_error("multiproj_hypersurface: d_i must be >= 0");
        dim += n[i];
    }
    if (dim < 0) throw std::domain_error("multiproj_hypersurface: negative dimension");

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n.size(); ++i) names.push_back("x" + std::to_string(i + 1));
    Ctx ctx = make_context(std::move(names));
    std::vector<GenRelation> rels;
    MultiPoly::Exponents top;
    for (int ni : n) {
        rels.push_back({ni + 1, MultiPoly(ctx)});
        top.push_back(ni);
    }
    CohRing ring(ctx, std::move(rels), std::move(top));

    MultiPoly one = MultiPoly::constant(ctx, Rational(1));
    MultiPoly h(ctx);
    MultiPoly ambient = one;
    for (std::size_t i = 0; i < n.size(); ++i) {
        MultiPoly xi = MultiPoly::variable(ctx, static_cast<int>(i));
        h += Rational(d[i]) * xi;
        ambient = ring.normal_form(ambient * (one + xi).pow(n[i] + 1)).truncate_weight(dim);
    }
    // c(T_H) = prod (1+x_j)^{n_j+1} / (1+h), adjunction along H.
    MultiPoly hinv = one;
    MultiPoly hpow = one;
    Rational sign(1);
    for (int k = 1; k <= dim; ++k) {
        hpow = ring.normal_form(hpow * h).truncate_weight(dim);
        sign = -sign;
        hinv += hpow * sign;
    }
    MultiPoly ct = ring.normal_form(ambient * hinv).truncate_weight(dim);
    MultiPoly fund = ring.normal_form(h);
    return VarietyData{dim, std::move(ring), std::move(ct), std::move(fund)};
}

VarietyData projective_bundle(const VarietyData& base, const BundleData& v,
                              const std::string& zeta_name) {
    if (v.rank < 1) throw std::domain_error("projective_bundle: rank must be >= 1");
    const Ctx& bc = base.ring.context();
    std::string zn = zeta_name;
    if (zn.empty()) {
        zn = "z";
        for (int k = 2; bc->index_of(zn) >= 0; ++k) zn = "z" + std::to_string(k);
    } else if (bc->index_of(zn) >= 0) {
        throw ContextError("projective_bundle: zeta name collision: " + zn);
    }

    std::vector<std::string> names = bc->names;
    names.push_back(zn);
    std::vector<int> weights = bc->weights;
    weights.push_back(1);
    Ctx ctx = make_context(std::move(names), std::move(weights));
    int zi = static_cast<int>(ctx->size()) - 1;
    MultiPoly zeta = MultiPoly::variable(ctx, zi);

    std::vector<GenRelation> rels;
    for (const auto& r : base.ring.relations()) rels.push_back({r.power, r.rhs.map_to(ctx)});
    MultiPoly rhs(ctx);
    for (int k = 1; k <= v.rank; ++k)
        rhs -= v.chern_class(k, bc).map_to(ctx) * zeta.pow(v.rank - k);
    rels.push_back({v.rank, rhs});

    MultiPoly::Exponents top = base.ring.top_monomial();
    top.push_back(v.rank - 1);

    int dim = base.dimension + v.rank - 1;
    CohRing ring(ctx, std::move(rels), std::move(top));

    // Relative Euler sequence: c(T_rel) = c(V (x) O(1)) with
    // c_k(V (x) L) = sum_j C(rank-j, k-j) c_j(V) zeta^{k-j}.
    MultiPoly rel_total(ctx);
    for (int k = 0; k <= v.rank; ++k)
        for (int j = 0; j <= k; ++j)
            rel_total += binomial(v.rank - j, k - j) * v.chern_class(j, bc).map_to(ctx) *
                         zeta.pow(k - j);
    MultiPoly ct =
        ring.normal_form(base.tangent_total.map_to(ctx) * rel_total).truncate_weight(dim);
    MultiPoly fund = ring.normal_form(base.fundamental.map_to(ctx));
    return VarietyData{dim, std::move(ring), std::move(ct), std::move(fund)};
}

MultiPoly segre_class(const BundleData& v, int j, const Ctx& ctx, int bound) {
    if (j < 0) return MultiPoly(ctx);
    MultiPoly one = MultiPoly::constant(ctx, Rational(1));
    MultiPoly u(ctx);
    for (const auto& c : v.chern) u += c.map_to(ctx);
    MultiPoly inv = one;
    MultiPoly upow = one;
    Rational sign(1);
    for (int k = 1; k <= bound; ++k) {
        upow = (upow * u).truncate_weight(bound);
        sign = -sign;
        inv += upow * sign;
    }
    return inv.homogeneous_part(j);
}

MultiPoly pushforward_proj_bundle(const MultiPoly& expr, const BundleData& v,
                                  int zeta_index, int bound) {
    const Ctx& ctx = expr.context();
    MultiPoly out(ctx);
    for (const auto& [e, c] : expr.terms()) {
        int k = e[zeta_index];
        MultiPoly::Exponents rest = e;
        rest[zeta_index] = 0;
        MultiPoly s = segre_class(v, k - v.rank + 1, ctx, bound);
        out += MultiPoly::monomial(ctx, rest, c) * s;
    }
    return out;
}

MultiPoly conner_floyd_class(const Partition& I, const std::vector<MultiPoly>& chern,
                             const Ctx& ctx) {
    if (I.empty()) return MultiPoly::constant(ctx, Rational(1));
    MultiPoly expr = symm::monomial_in_elementary(I);
    MultiPoly out(ctx);
    for (const auto& [e, c] : expr.terms()) {
        MultiPoly term = MultiPoly::constant(ctx, c);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (j >= chern.size()) {
                term = MultiPoly(ctx);
                break;
            }
            term *= chern[j].pow(e[j]);
        }
        out += term;
    }
    return out;
}

Rational chern_number(const VarietyData& x, const Partition& I) {
    if (I.weight() != x.dimension)
        throw std::domain_error("chern_number: partition weight != dimension");
    return x.integrate(conner_floyd_class(I, x.virtual_chern(), x.ring.context()));
}

Rational tangent_chern_number(const VarietyData& x, const Partition& I) {
    if (I.weight() != x.dimension)
        throw std::domain_error("tangent_chern_number: partition weight != dimension");
    return x.integrate(conner_floyd_class(I, x.tangent_chern(), x.ring.context()));
}

Rational s_n(const VarietyData& x) {
    if (x.dimension == 0) return x.integrate(MultiPoly::constant(x.ring.context(), Rational(1)));
    return x.integrate(symm::power_sums_from_elementary(x.tangent_chern(), x.dimension));
}

Rational s_n_via_log(const VarietyData& x) {
    const Ctx& ctx = x.ring.context();
    int n = x.dimension;
    if (n == 0) return x.integrate(MultiPoly::constant(ctx, Rational(1)));
    // log c(-T) = sum (-1)^{k-1} u^k / k with u = c(-T) - 1; then
    // s_n = (-1)^n . n . [log c(-T)]_n.
    MultiPoly u(ctx);
    auto vc = x.virtual_chern();
    for (const auto& c : vc) u += c;
    MultiPoly logc(ctx);
    MultiPoly upow = MultiPoly::constant(ctx, Rational(1));
    Rational sign(-1);
    for (int k = 1; k <= n; ++k) {
        upow = x.ring.normal_form(upow * u).truncate_weight(n);
        sign = -sign;
        logc += upow * (sign / Rational(k));
    }
    Rational outer = (n % 2 == 0) ? Rational(n) : Rational(-n);
    return x.integrate(logc.homogeneous_part(n)) * outer;
}

bool is_calabi_yau(const VarietyData& x) {
    return x.tangent_total.homogeneous_part(1).is_zero();
}

}  // namespace ellcob
