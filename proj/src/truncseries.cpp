#include "ellcob/truncseries.hpp"

namespace ellcob {

void TruncSeries::check(const TruncSeries& o) const {
    if (!same_context(ctx_, o.ctx_))
        throw ContextError("TruncSeries: mismatched coefficient contexts");
    if (order() != o.order())
        throw std::invalid_argument("TruncSeries: mismatched truncation orders");
}

bool TruncSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check(o);
    TruncSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check(o);
    TruncSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check(o);
    TruncSeries r(ctx_, order());
    for (int i = 0; i <= order(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const MultiPoly& c) const {
    TruncSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * c;
    return r;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
    TruncSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * c;
    return r;
}

TruncSeries TruncSeries::shifted_up(int k) const {
    if (k < 0) throw std::domain_error("TruncSeries::shifted_up: negative shift");
    TruncSeries r(ctx_, order());
    for (int i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

TruncSeries TruncSeries::shifted_down(int k) const {
    if (k < 0) throw std::domain_error("TruncSeries::shifted_down: negative shift");
    for (int i = 0; i < k && i <= order(); ++i)
        if (!coeffs_[i].is_zero())
            throw std::domain_error("TruncSeries::shifted_down: nonzero low coefficient");
    TruncSeries r(ctx_, order());
    for (int i = k; i <= order(); ++i) r.coeffs_[i - k] = coeffs_[i];
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (!coeffs_[0].is_constant() || coeffs_[0].is_zero())
        throw std::domain_error("TruncSeries::inverse: constant term must be a nonzero rational");
    Rational c0 = coeffs_[0].constant_term();
    TruncSeries r(ctx_, order());
    r.coeffs_[0] = MultiPoly::constant(ctx_, Rational(1) / c0);
    // r_n = -(1/c0) * sum_{j=1..n} a_j r_{n-j}
    for (int n = 1; n <= order(); ++n) {
        MultiPoly acc(ctx_);
        for (int j = 1; j <= n; ++j) acc += coeffs_[j] * r.coeffs_[n - j];
        r.coeffs_[n] = acc * (Rational(-1) / c0);
    }
    return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
    check(inner);
    if (!inner.coeffs_[0].is_zero())
        throw std::domain_error("TruncSeries::compose: inner constant term must vanish");
    // Horner: r = a_N; r = r*inner + a_k for k = N-1 .. 0.
    TruncSeries r = constant(ctx_, Rational(0), order());
    for (int k = order(); k >= 0; --k) {
        r = r * inner;
        r.coeffs_[0] += coeffs_[k];
    }
    return r;
}

TruncSeries TruncSeries::reverse() const {
    if (!coeffs_[0].is_zero())
        throw std::domain_error("TruncSeries::reverse: constant term must vanish");
    if (!coeffs_[1].is_constant() || coeffs_[1].is_zero())
        throw std::domain_error("TruncSeries::reverse: linear coefficient must be a nonzero rational");
    Rational a1 = coeffs_[1].constant_term();
    // Normalize to unit linear coefficient: f(t) = a1 * F(t), reverse(f)(t) = G(t/a1)
    // where G = reverse(F).  Done coefficient-wise at the end.
    TruncSeries F = scaled(Rational(1) / a1);
    TruncSeries g = identity(ctx_, order());
    // Newton-free fixed point: g <- g - (F(g) - t); gains one valid order per pass.
    for (int pass = 0; pass < order(); ++pass) {
        TruncSeries err = F.compose(g) - identity(ctx_, order());
        if (err.is_zero()) break;
        g = g - err;
    }
    TruncSeries r(ctx_, order());
    Rational scale(1);
    for (int k = 0; k <= order(); ++k) {
        r.coeffs_[k] = g.coeffs_[k] * scale;
        scale /= a1;
    }
    return r;
}

TruncSeries TruncSeries::derivative() const {
    TruncSeries r(ctx_, order());
    for (int k = 1; k <= order(); ++k) r.coeffs_[k - 1] = coeffs_[k] * Rational(k);
    return r;
}

TruncSeries TruncSeries::integral() const {
    TruncSeries r(ctx_, order());
    for (int k = 0; k < order(); ++k)
        r.coeffs_[k + 1] = coeffs_[k] * (Rational(1) / Rational(k + 1));
    return r;
}

TruncSeries TruncSeries::exponential() const {
    if (!coeffs_[0].is_zero())
        throw std::domain_error("TruncSeries::exponential: constant term must vanish");
    // E' = f' E  =>  (n+1) E_{n+1} = sum_{j=0..n} (j+1) a_{j+1} E_{n-j}
    TruncSeries r = constant(ctx_, Rational(1), order());
    for (int n = 0; n < order(); ++n) {
        MultiPoly acc(ctx_);
        for (int j = 0; j <= n; ++j) {
            if (j + 1 > order()) break;
            acc += coeffs_[j + 1] * r.coeffs_[n - j] * Rational(j + 1);
        }
        r.coeffs_[n + 1] = acc * (Rational(1) / Rational(n + 1));
    }
    return r;
}

}  // namespace ellcob
