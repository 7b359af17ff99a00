#include "ellcob/symmfunc.hpp"

#include <algorithm>
#include <map>

namespace ellcob::symm {

Ctx elementary_context(int n) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= n; ++i) {
        names.push_back("e" + std::to_string(i));
        weights.push_back(i);
    }
    return make_context(std::move(names), std::move(weights));
}

Ctx root_context(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make_context(std::move(names));
}

MultiPoly power_sum_in_elementary(int n) {
    if (n < 1) throw std::domain_error("power_sum_in_elementary: n must be >= 1");
    Ctx ctx = elementary_context(n);
    std::vector<MultiPoly> e = {MultiPoly::constant(ctx, Rational(1))};
    for (int i = 1; i <= n; ++i) e.push_back(MultiPoly::variable(ctx, i - 1));
    // p_k = e1 p_{k-1} - e2 p_{k-2} + ... + (-1)^{k-1} k e_k
    std::vector<MultiPoly> p = {MultiPoly::constant(ctx, Rational(0))};
    for (int k = 1; k <= n; ++k) {
        MultiPoly pk(ctx);
        Rational sign(1);
        for (int j = 1; j < k; ++j) {
            pk += e[j] * p[k - j] * sign;
            sign = -sign;
        }
        pk += e[k] * (sign * Rational(k));
        p.push_back(pk);
    }
    return p[n];
}

MultiPoly power_sums_from_elementary(const std::vector<MultiPoly>& e, int n) {
    if (n < 1) throw std::domain_error("power_sums_from_elementary: n must be >= 1");
    if (e.empty()) throw std::invalid_argument("power_sums_from_elementary: no classes");
    const Ctx& ctx = e[0].context();
    auto ei = [&](int i) -> MultiPoly {
        return i <= static_cast<int>(e.size()) ? e[i - 1] : MultiPoly(ctx);
    };
    std::vector<MultiPoly> p = {MultiPoly::constant(ctx, Rational(0))};
    for (int k = 1; k <= n; ++k) {
        MultiPoly pk(ctx);
        Rational sign(1);
        for (int j = 1; j < k; ++j) {
            pk += ei(j) * p[k - j] * sign;
            sign = -sign;
        }
        pk += ei(k) * (sign * Rational(k));
        p.push_back(pk);
    }
    return p[n];
}

MultiPoly elementary_in_roots(int j, const std::vector<MultiPoly>& xs) {
    if (xs.empty()) throw std::invalid_argument("elementary_in_roots: no roots");
    const Ctx& ctx = xs[0].context();
    int k = static_cast<int>(xs.size());
    if (j < 0 || j > k) return MultiPoly(ctx);
    if (j == 0) return MultiPoly::constant(ctx, Rational(1));
    // ej[i] = e_j of the first i roots, built by the product recurrence.
    std::vector<MultiPoly> ej(j + 1, MultiPoly(ctx));
    ej[0] = MultiPoly::constant(ctx, Rational(1));
    for (int i = 0; i < k; ++i)
        for (int d = std::min(j, i + 1); d >= 1; --d) ej[d] += ej[d - 1] * xs[i];
    return ej[j];
}

MultiPoly monomial_in_roots(const Partition& I, const std::vector<MultiPoly>& xs) {
    if (xs.empty()) throw std::invalid_argument("monomial_in_roots: no roots");
    const Ctx& ctx = xs[0].context();
    int k = static_cast<int>(xs.size());
    if (static_cast<int>(I.parts().size()) > k)
        throw std::invalid_argument("monomial_in_roots: more parts than roots");
    if (I.parts().empty()) return MultiPoly::constant(ctx, Rational(1));
    std::vector<int> expo(k, 0);
    std::copy(I.parts().begin(), I.parts().end(), expo.begin());
    std::sort(expo.begin(), expo.end());
    MultiPoly sum(ctx);
    do {
        MultiPoly term = MultiPoly::constant(ctx, Rational(1));
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < expo[i]; ++c) term *= xs[i];
        sum += term;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return sum;
}

namespace {

// Conjugate partition: lambda'_j = #{i : lambda_i >= j}.
std::vector<int> conjugate(const std::vector<int>& lambda) {
    std::vector<int> out;
    for (int j = 1; !lambda.empty() && j <= lambda[0]; ++j) {
        int count = 0;
        for (int part : lambda)
            if (part >= j) ++count;
        out.push_back(count);
    }
    return out;
}

}  // namespace

MultiPoly monomial_in_elementary(const Partition& I) {
    static std::map<Partition, MultiPoly> cache;
    auto hit = cache.find(I);
    if (hit != cache.end()) return hit->second;

    int w = I.weight();
    if (w == 0) {
        Ctx ectx = elementary_context(1);
        return cache.emplace(I, MultiPoly::constant(ectx, Rational(1))).first->second;
    }
    Ctx ectx = elementary_context(w);
    Ctx rctx = root_context(w);
    std::vector<MultiPoly> xs;
    for (int i = 0; i < w; ++i) xs.push_back(MultiPoly::variable(rctx, i));

    MultiPoly remainder = monomial_in_roots(I, xs);
    MultiPoly result(ectx);
    while (!remainder.is_zero()) {
        // Lex-greatest exponent vector of a symmetric polynomial is weakly
        // decreasing; its conjugate names the elementary monomial with the
        // same leading term and unit coefficient.
        auto lead = remainder.terms().rbegin();
        std::vector<int> lambda = lead->first;
        while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
        Rational c = lead->second;
        std::vector<int> mu = conjugate(lambda);
        MultiPoly eprod_roots = MultiPoly::constant(rctx, Rational(1));
        MultiPoly::Exponents eexp(w, 0);
        for (int part : mu) {
            eprod_roots *= elementary_in_roots(part, xs);
            eexp[part - 1] += 1;
        }
        result += MultiPoly::monomial(ectx, eexp, c);
        remainder -= eprod_roots * c;
    }
    return cache.emplace(I, std::move(result)).first->second;
}

std::map<Partition, Rational> in_monomial_basis(const MultiPoly& e_expr, int w) {
    if (w < 1) throw std::domain_error("in_monomial_basis: w must be >= 1");
    Ctx rctx = root_context(w);
    std::vector<MultiPoly> xs;
    for (int i = 0; i < w; ++i) xs.push_back(MultiPoly::variable(rctx, i));
    MultiPoly expanded(rctx);
    for (const auto& [e, c] : e_expr.terms()) {
        MultiPoly term = MultiPoly::constant(rctx, c);
        for (std::size_t j = 0; j < e.size(); ++j)
            for (int rep = 0; rep < e[j]; ++rep)
                term *= elementary_in_roots(static_cast<int>(j) + 1, xs);
        expanded += term;
    }
    // Each m_I contributes its sorted (weakly decreasing) exponent vector
    // exactly once; read those off.
    std::map<Partition, Rational> out;
    for (const auto& [e, c] : expanded.terms()) {
        bool sorted = true;
        for (std::size_t i = 1; i < e.size(); ++i) sorted = sorted && e[i] <= e[i - 1];
        if (!sorted) continue;
        std::vector<int> parts;
        for (int x : e)
            if (x > 0) parts.push_back(x);
        out[Partition(parts)] = c;
    }
    return out;
}

}  // namespace ellcob::symm
