#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellcob/rational.hpp"

namespace ellcob {

struct ContextError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ordered set of named symbols with integer weights (the weighted degree of
// each symbol).  Shared immutably between all polynomials over it.
struct VarContext {
    std::vector<std::string> names;
    std::vector<int> weights;

    VarContext() = default;
    VarContext(std::vector<std::string> n, std::vector<int> w)
        : names(std::move(n)), weights(std::move(w)) {
        if (names.size() != weights.size())
            throw std::invalid_argument("VarContext: names/weights size mismatch");
    }

    std::size_t size() const { return names.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using Ctx = std::shared_ptr<const VarContext>;

inline Ctx make_context(std::vector<std::string> names, std::vector<int> weights) {
    return std::make_shared<const VarContext>(std::move(names), std::move(weights));
}

// All variables of weight 1.
inline Ctx make_context(std::vector<std::string> names) {
    std::vector<int> w(names.size(), 1);
    return make_context(std::move(names), std::move(w));
}

inline bool same_context(const Ctx& a, const Ctx& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names == b->names && a->weights == b->weights;
}

// Sparse multivariate polynomial with exact rational coefficients.  Zero
// coefficients are never stored; exponent vectors always have the context's
// length.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(Ctx ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw ContextError("MultiPoly: null context");
    }

    static MultiPoly constant(Ctx ctx, const Rational& c) {
        MultiPoly p(std::move(ctx));
        if (!c.is_zero()) p.terms_[Exponents(p.ctx_->size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(Ctx ctx, int index) {
        MultiPoly p(std::move(ctx));
        if (index < 0 || index >= static_cast<int>(p.ctx_->size()))
            throw std::out_of_range("MultiPoly::variable: bad index");
        Exponents e(p.ctx_->size(), 0);
        e[index] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    static MultiPoly variable(const Ctx& ctx, const std::string& name) {
        int i = ctx->index_of(name);
        if (i < 0) throw ContextError("MultiPoly::variable: unknown name " + name);
        return variable(ctx, i);
    }

    static MultiPoly monomial(Ctx ctx, Exponents e, const Rational& c) {
        MultiPoly p(std::move(ctx));
        if (e.size() != p.ctx_->size())
            throw ContextError("MultiPoly::monomial: exponent length mismatch");
        if (!c.is_zero()) p.terms_[std::move(e)] = c;
        return p;
    }

    const Ctx& context() const { return ctx_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    Rational constant_term() const {
        auto it = terms_.find(Exponents(ctx_->size(), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int term_weight(const Exponents& e) const {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ctx_->weights[i];
        return d;
    }

    // Max weighted degree over stored terms; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, term_weight(e));
        return d;
    }

    bool is_homogeneous(int d) const {
        for (const auto& [e, c] : terms_)
            if (term_weight(e) != d) return false;
        return true;
    }

    MultiPoly homogeneous_part(int d) const {
        MultiPoly r(ctx_);
        for (const auto& [e, c] : terms_)
            if (term_weight(e) == d) r.terms_[e] = c;
        return r;
    }

    MultiPoly truncate_weight(int d) const {
        MultiPoly r(ctx_);
        for (const auto& [e, c] : terms_)
            if (term_weight(e) <= d) r.terms_[e] = c;
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(ctx_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(e, -c);
            if (!fresh) {
                it->second -= c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.ctx_);
        Exponents e(a.ctx_->size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto [it, fresh] = r.terms_.try_emplace(e, ca * cb);
                if (!fresh) {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly operator*(const Rational& c) const {
        MultiPoly r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

    MultiPoly pow(int n) const {
        if (n < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
        MultiPoly r = constant(ctx_, Rational(1));
        MultiPoly base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    // Like pow but drops terms of weighted degree > bound at each step.
    MultiPoly pow_truncated(int n, int bound) const {
        MultiPoly r = constant(ctx_, Rational(1));
        MultiPoly base = truncate_weight(bound);
        for (int i = 0; i < n; ++i) r = (r * base).truncate_weight(bound);
        return r;
    }

    // Substitute variable `index` by `value` (same context).
    MultiPoly substitute(int index, const MultiPoly& value) const {
        check(value);
        MultiPoly r(ctx_);
        std::vector<MultiPoly> powers = {constant(ctx_, Rational(1))};
        for (const auto& [e, c] : terms_) {
            int k = e[index];
            while (static_cast<int>(powers.size()) <= k)
                powers.push_back(powers.back() * value);
            Exponents rest = e;
            rest[index] = 0;
            r += monomial(ctx_, rest, c) * powers[k];
        }
        return r;
    }

    // Map into a (usually larger) context by variable names.
    MultiPoly map_to(const Ctx& target) const {
        std::vector<int> where(ctx_->size());
        for (std::size_t i = 0; i < ctx_->size(); ++i) {
            int j = target->index_of(ctx_->names[i]);
            if (j < 0) throw ContextError("MultiPoly::map_to: missing variable " +
                                          ctx_->names[i]);
            where[i] = j;
        }
        MultiPoly r(target);
        for (const auto& [e, c] : terms_) {
            Exponents f(target->size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
            r.terms_[f] = c;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Inverse of str(): parse canonical text form against a known context.
    static MultiPoly from_string(const Ctx& ctx, const std::string& s);

    // Canonical text form: terms in graded-lex order, coefficients as
    // num/den strings, e.g. "24*a2 + 1/2*a4^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Exponents, Rational>*> order;
        for (const auto& t : terms_) order.push_back(&t);
        std::sort(order.begin(), order.end(), [this](auto* a, auto* b) {
            int wa = term_weight(a->first), wb = term_weight(b->first);
            if (wa != wb) return wa < wb;
            return a->first > b->first;  // lex within a grade: e1^2 before e2
        });
        std::string out;
        for (const auto* t : order) {
            std::string s = term_str(t->first, t->second);
            if (out.empty()) {
                out = s;
            } else if (s[0] == '-') {
                out += " - " + s.substr(1);
            } else {
                out += " + " + s;
            }
        }
        return out;
    }

private:
    void check(const MultiPoly& o) const {
        if (!same_context(ctx_, o.ctx_))
            throw ContextError("MultiPoly: mismatched variable contexts");
    }

    std::string term_str(const Exponents& e, const Rational& c) const {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) return c.str();
        if (c == Rational(1)) return mono;
        if (c == Rational(-1)) return "-" + mono;
        return c.str() + "*" + mono;
    }

    Ctx ctx_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace ellcob
