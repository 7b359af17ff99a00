#pragma once

#include <vector>

#include "ellcob/multipoly.hpp"

namespace ellcob {

// Univariate power series truncated at order N: coefficients 0..N are
// MultiPoly over a shared context.  Operations never look past N.
class TruncSeries {
public:
    TruncSeries(Ctx coeff_ctx, int order)
        : ctx_(std::move(coeff_ctx)), coeffs_(order + 1, MultiPoly(ctx_)) {
        if (order < 1) throw std::domain_error("TruncSeries: order must be >= 1");
    }

    static TruncSeries zero(Ctx ctx, int order) { return TruncSeries(std::move(ctx), order); }

    static TruncSeries identity(Ctx ctx, int order) {
        TruncSeries s(std::move(ctx), order);
        s.coeffs_[1] = MultiPoly::constant(s.ctx_, Rational(1));
        return s;
    }

    static TruncSeries constant(Ctx ctx, const Rational& c, int order) {
        TruncSeries s(std::move(ctx), order);
        s.coeffs_[0] = MultiPoly::constant(s.ctx_, c);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Ctx& context() const { return ctx_; }

    const MultiPoly& operator[](int k) const { return coeffs_.at(k); }
    void set(int k, MultiPoly p) { coeffs_.at(k) = std::move(p); }

    bool is_zero() const;

    TruncSeries operator-() const;
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const MultiPoly& c) const;
    TruncSeries scaled(const Rational& c) const;

    // Multiply by t^k (drop overflowing coefficients).
    TruncSeries shifted_up(int k) const;
    // Divide by t^k; the low k coefficients must vanish.
    TruncSeries shifted_down(int k) const;

    // Constant coefficient must be a nonzero rational.
    TruncSeries inverse() const;

    // this(inner); inner must have zero constant term.
    TruncSeries compose(const TruncSeries& inner) const;

    // Compositional inverse g with this(g(t)) = t mod t^{N+1}.
    // Requires zero constant term and linear coefficient a nonzero rational.
    TruncSeries reverse() const;

    TruncSeries derivative() const;
    // Antiderivative with zero constant term.
    TruncSeries integral() const;
    // exp of a series with zero constant term.
    TruncSeries exponential() const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void check(const TruncSeries& o) const;

    Ctx ctx_;
    std::vector<MultiPoly> coeffs_;
};

}  // namespace ellcob
