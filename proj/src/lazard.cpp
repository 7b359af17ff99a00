#include "ellcob/lazard.hpp"

#include <algorithm>
#include <set>

namespace ellcob {

void CobClass::set(int degree, const Partition& I, const Rational& v) {
    if (I.weight() != degree)
        throw std::domain_error("CobClass::set: partition weight != degree");
    if (v.is_zero())
        components_[degree].erase(I);
    else
        components_[degree][I] = v;
    if (components_[degree].empty()) components_.erase(degree);
}

Rational CobClass::entry(int degree, const Partition& I) const {
    auto d = components_.find(degree);
    if (d == components_.end()) return Rational(0);
    auto it = d->second.find(I);
    return it == d->second.end() ? Rational(0) : it->second;
}

bool CobClass::is_zero() const { return components_.empty(); }

CobClass CobClass::operator+(const CobClass& o) const {
    CobClass out = *this;
    for (const auto& [deg, m] : o.components_)
        for (const auto& [I, v] : m) out.set(deg, I, out.entry(deg, I) + v);
    return out;
}

CobClass CobClass::operator-(const CobClass& o) const {
    CobClass out = *this;
    for (const auto& [deg, m] : o.components_)
        for (const auto& [I, v] : m) out.set(deg, I, out.entry(deg, I) - v);
    return out;
}

CobClass CobClass::scaled(const Rational& k) const {
    CobClass out;
    if (k.is_zero()) return out;
    for (const auto& [deg, m] : components_)
        for (const auto& [I, v] : m) out.set(deg, I, v * k);
    out.label = label;
    return out;
}

CobClass b_class(const VarietyData& x) {
    CobClass out;
    for (const Partition& I : partitions_of(x.dimension)) {
        Rational v = chern_number(x, I);
        if (!v.is_integer())
            throw std::runtime_error("b_class: non-integral Chern number at " + I.str());
        out.set(x.dimension, I, v);
    }
    return out;
}

CobClass cob_mul(const CobClass& a, const CobClass& b) {
    CobClass out;
    for (const auto& [da, ma] : a.components())
        for (const auto& [Ia, va] : ma)
            for (const auto& [db, mb] : b.components())
                for (const auto& [Ib, vb] : mb) {
                    Partition K = Ia.merged(Ib);
                    out.set(da + db, K, out.entry(da + db, K) + va * vb);
                }
    return out;
}

Rational s_n_of_class(const CobClass& c, int n) {
    if (n == 0) return c.entry(0, Partition());
    return c.entry(n, Partition({n}));
}

namespace {

bool is_prime(long m) {
    if (m < 2) return false;
    for (long q = 2; q * q <= m; ++q)
        if (m % q == 0) return false;
    return true;
}

// The odd prime l with m = l^i (i >= 1), or 0 if m is not such a power.
long odd_prime_power_base(long m) {
    if (m < 3 || m % 2 == 0) return 0;
    long q = 3;
    while (q * q <= m && m % q != 0) q += 2;
    if (q * q > m) q = m;  // m itself is prime
    long v = m;
    while (v % q == 0) v /= q;
    return v == 1 ? q : 0;
}

std::vector<long> mandated_primes(int n) {
    std::set<long> ls;
    if (long l = odd_prime_power_base(n); l) ls.insert(l);
    if (long l = odd_prime_power_base(n + 1); l) ls.insert(l);
    return {ls.begin(), ls.end()};
}

}  // namespace

bool star_condition(int n, const Rational& s, long p) {
    if (!s.is_integer()) throw std::domain_error("star_condition: s must be integral");
    if (p != 1 && !is_prime(p))
        throw std::domain_error("star_condition: p must be 1 or prime");
    if (s.is_zero()) return false;
    mpz_class m = abs(s.num());
    for (long l : mandated_primes(n)) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(l))) return false;
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(l));
    }
    while (mpz_even_p(m.get_mpz_t())) m /= 2;
    if (p > 1)
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) m /= p;
    return m == 1;
}

Rational s_n_hypersurface(const std::vector<int>& nvec, const std::vector<int>& d) {
    if (nvec.size() != d.size() || nvec.empty())
        throw std::invalid_argument("s_n_hypersurface: n/d length mismatch");
    int n = -1;
    for (int ni : nvec) n += ni;
    if (n < 1) throw std::domain_error("s_n_hypersurface: dimension must be >= 1");
    const int r = static_cast<int>(nvec.size());

    // p_n(T_H) = sum_j (n_j+1) x_j^n - h^n (K-theoretic additivity of power
    // sums along the Euler sequences and adjunction); integrate against h.
    // Part A: coefficient of prod x_i^{n_i} in (sum_j (n_j+1) x_j^n) . h.
    Rational a(0);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            bool match = true;
            for (int i = 0; i < r; ++i) {
                int want = (i == j ? n : 0) + (i == k ? 1 : 0);
                match = match && nvec[i] == want;
            }
            if (match) a += Rational(nvec[j] + 1) * Rational(d[k]);
        }
    // Part B: coefficient of prod x_i^{n_i} in h^{n+1} (note sum n_i = n+1)
    // is the multinomial (n+1)! / prod n_i! times prod d_i^{n_i}.
    Rational b(1);
    mpz_class multinom = 1;
    int consumed = 0;
    for (int i = 0; i < r; ++i) {
        consumed += nvec[i];
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(consumed),
                     static_cast<unsigned long>(nvec[i]));
        multinom *= bin;
        mpz_class dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d[i]),
                      static_cast<unsigned long>(nvec[i]));
        b *= Rational(dp);
    }
    return a - Rational(multinom) * b;
}

namespace {

// Weakly decreasing factor-dimension tuples with at most `maxlen` parts,
// each part <= maxpart, summing to total; reverse-lex like partitions_of.
void dim_tuples(int total, int maxpart, int maxlen, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (total == 0) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == maxlen) return;
    for (int p = std::min(total, maxpart); p >= 1; --p) {
        cur.push_back(p);
        dim_tuples(total - p, p, maxlen, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GeneratorReport generator_search(int degree, long p) {
    if (degree < 2)
        throw std::domain_error("generator_search: generators start in degree 2");

    GeneratorReport rep;
    rep.degree = degree;
    {
        std::string form;
        for (long l : mandated_primes(degree)) form += std::to_string(l) + "*";
        form += "2^a";
        if (p > 1) form += "*" + std::to_string(p) + "^b";
        rep.required_form = form;
    }

    // Candidate family in deterministic order: P^degree first, then
    // hypersurfaces with r <= 3, n_i <= degree+1, d_i <= degree+2.
    std::vector<WitnessTerm> terms;
    std::vector<Rational> values;
    terms.push_back({1, "projective_space", {degree}, {}});
    values.push_back(Rational(degree + 1));

    std::vector<std::vector<int>> nchoices;
    std::vector<int> cur;
    dim_tuples(degree + 1, degree + 1, 3, cur, nchoices);
    for (const auto& nvec : nchoices) {
        const int r = static_cast<int>(nvec.size());
        std::vector<int> d(r, 0);
        while (true) {
            values.push_back(s_n_hypersurface(nvec, d));
            terms.push_back({1, "multiproj_hypersurface", nvec, d});
            int i = r - 1;
            while (i >= 0 && d[i] == degree + 2) d[i--] = 0;
            if (i < 0) break;
            ++d[i];
        }
    }

    // Single candidates with multiplicities 1..4 (star is sign-insensitive).
    for (std::size_t i = 0; i < values.size(); ++i)
        for (long k = 1; k <= 4; ++k) {
            Rational s = values[i] * Rational(k);
            if (star_condition(degree, s, p)) {
                rep.s = s;
                rep.witness = {terms[i]};
                rep.witness[0].coeff = k;
                rep.passes = true;
                return rep;
            }
        }

    // Pairs with coefficients in [-4, 4]; dedupe candidates by value so the
    // quadratic loop runs over distinct s_n values only (first occurrence
    // keeps the canonical witness).
    std::vector<std::size_t> firsts;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (seen.insert(values[i].str()).second) firsts.push_back(i);
    for (std::size_t a = 0; a < firsts.size(); ++a)
        for (std::size_t b = a + 1; b < firsts.size(); ++b)
            for (long ka = 1; ka <= 4; ++ka)
                for (long kb = -4; kb <= 4; ++kb) {
                    if (kb == 0) continue;
                    Rational s = values[firsts[a]] * Rational(ka) +
                                 values[firsts[b]] * Rational(kb);
                    if (!star_condition(degree, s, p)) continue;
                    rep.s = s;
                    WitnessTerm ta = terms[firsts[a]], tb = terms[firsts[b]];
                    ta.coeff = ka;
                    tb.coeff = kb;
                    rep.witness = {ta, tb};
                    rep.passes = true;
                    return rep;
                }

    mpz_class g = 0;
    for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.num().get_mpz_t());
    rep.best_gcd = Rational(g);
    rep.passes = false;
    return rep;
}

}  // namespace ellcob
