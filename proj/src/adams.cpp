#include "ellcob/adams.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ellcob {

namespace {

bool odd_prime(long l) {
    if (l < 3 || l % 2 == 0) return false;
    for (long d = 3; d * d <= l; d += 2)
        if (l % d == 0) return false;
    return true;
}

void require_odd_prime(long l) {
    if (!odd_prime(l)) throw std::domain_error("adams: l must be an odd prime");
}

// part == l^s - 1 for some s >= 1.
bool is_lpow_minus_one(long part, long l) {
    long v = part + 1;
    if (v < l) return false;
    while (v % l == 0) v /= l;
    return v == 1;
}

// part == l^r for some r >= 0.
bool is_lpow(long part, long l) {
    long v = part;
    if (v < 1) return false;
    while (v % l == 0) v /= l;
    return v == 1;
}


std::vector<std::pair<int, int>> part_multiplicities(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (int part : p.parts()) {
        if (!out.empty() && out.back().first == part)
            ++out.back().second;
        else
            out.emplace_back(part, 1);
    }
    return out;
}

}  // namespace

bool is_l_adic(const Partition& p, long l) {
    require_odd_prime(l);
    for (int part : p.parts())
        if (is_lpow_minus_one(part, l)) return true;
    return false;
}

bool is_l_admissible(const Partition& p, long l) {
    require_odd_prime(l);
    for (const auto& [part, mult] : part_multiplicities(p))
        if (is_lpow(part, l) && mult != 1 && mult != l) return false;
    return true;
}

bool is_l_admissible_mod(const Partition& p, long l) {
    require_odd_prime(l);
    for (const auto& [part, mult] : part_multiplicities(p))
        if (is_lpow(part, l) && mult % l != 0) return false;
    return true;
}

GeneratorTable e2_generators(Theory theory, long l, int max_weight) {
    require_odd_prime(l);
    if (max_weight < 0) throw std::domain_error("e2_generators: max_weight < 0");
    GeneratorTable t{theory, l, max_weight, {}};
    // h'_r at weight l^r - 1 in homological degree 1, both theories.
    long w = 1;  // l^r
    for (int r = 0; w - 1 <= max_weight; ++r, w *= l)
        t.generators.push_back(E2Generator{
            "h'_" + std::to_string(r),
            Bidegree{1, static_cast<int>(2 * w - 1), static_cast<int>(w - 1)},
            static_cast<int>(w - 1)});
    for (int k = 1; k <= max_weight; ++k) {
        if (is_lpow_minus_one(k, l)) continue;  // replaced by h'_r
        if (theory == Theory::MSL && is_lpow(k, l)) continue;
        t.generators.push_back(
            E2Generator{"z_(" + std::to_string(2 * k) + ")", Bidegree{0, 2 * k, k}, k});
    }
    if (theory == Theory::MSL) {
        // The weights l^{r+1} dropped from the z-range reappear through a
        // distinguished degree-0 generator.
        long v = l;  // l^{r+1}
        for (int r = 0; v <= max_weight; ++r, v *= l)
            t.generators.push_back(E2Generator{
                "z_(w_" + std::to_string(r) + ")",
                Bidegree{0, static_cast<int>(2 * v), static_cast<int>(v)},
                static_cast<int>(v)});
    }
    std::sort(t.generators.begin(), t.generators.end(),
              [](const E2Generator& a, const E2Generator& b) {
                  return std::tie(a.weight, a.name) < std::tie(b.weight, b.name);
              });
    return t;
}

long poincare_count(const GeneratorTable& t, int u) {
    if (u < 0 || u > t.max_weight)
        throw std::domain_error("poincare_count: weight out of range");
    std::vector<long> ways(static_cast<std::size_t>(u) + 1, 0);
    ways[0] = 1;
    for (const E2Generator& g : t.generators) {
        if (g.weight < 1) continue;
        for (int j = g.weight; j <= u; ++j) ways[j] += ways[j - g.weight];
    }
    return ways[u];
}

std::vector<int> msl_generator_degrees(long l, int max_weight) {
    GeneratorTable t = e2_generators(Theory::MSL, l, max_weight);
    std::vector<int> degrees;
    for (const E2Generator& g : t.generators)
        if (g.weight >= 1) degrees.push_back(g.weight);
    std::sort(degrees.begin(), degrees.end());
    std::vector<int> expected;
    for (int d = 2; d <= max_weight; ++d) expected.push_back(d);
    if (degrees != expected)
        throw std::runtime_error(
            "msl_generator_degrees: table is not one generator per degree >= 2");
    return degrees;
}

std::map<Bidegree, long> koszul_ext_dims(const KoszulComplex& k) {
    require_odd_prime(k.l);
    if (k.m < 0 || k.max_s < 0 || k.max_u < 0)
        throw std::domain_error("koszul_ext_dims: bounds must be nonnegative");
    std::map<Bidegree, long> out;
    // Multisets of Q-generators: choose counts per r, smallest index first.
    std::vector<long> pw(static_cast<std::size_t>(k.m));  // l^r
    long v = 1;
    for (int r = 0; r < k.m; ++r, v *= k.l) pw[r] = v;
    // Iterative depth-first enumeration over count vectors.
    std::vector<int> counts(static_cast<std::size_t>(k.m), 0);
    auto record = [&](int s, int p, int q) {
        if (q <= k.max_u) out[Bidegree{s, p, q}] += 1;
    };
    // Recursive lambda over generator index.
    auto rec = [&](auto&& self, int r, int s, int p, int q) -> void {
        if (q > k.max_u || s > k.max_s) return;
        if (r == k.m) {
            record(s, p, q);
            return;
        }
        int pr = static_cast<int>(2 * pw[r] - 1);
        int qr = static_cast<int>(pw[r] - 1);
        for (int c = 0; s + c <= k.max_s; ++c) {
            int q2 = q + c * qr;
            if (q2 > k.max_u) break;
            self(self, r + 1, s + c, p + c * pr, q2);
        }
    };
    rec(rec, 0, 0, 0, 0);
    return out;
}

long koszul_ext_dim(const KoszulComplex& k, int s, int t, int u) {
    if (t != 2 * u) return 0;  // everything lives on the diagonal p - s = 2q
    auto dims = koszul_ext_dims(k);
    auto it = dims.find(Bidegree{s, s + t, u});
    return it == dims.end() ? 0 : it->second;
}

std::vector<std::pair<Partition, Partition>> coproduct_partition(const Partition& p) {
    // Enumerate sub-multisets by per-value count vectors.
    std::vector<std::pair<int, int>> mult = part_multiplicities(p);
    std::vector<int> take(mult.size(), 0);
    std::set<std::pair<Partition, Partition>> seen;
    bool done = false;
    while (!done) {
        std::vector<int> left, right;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            for (int c = 0; c < take[i]; ++c) left.push_back(mult[i].first);
            for (int c = take[i]; c < mult[i].second; ++c) right.push_back(mult[i].first);
        }
        Partition a(left), b(right);
        if (b < a) std::swap(a, b);
        seen.emplace(std::move(a), std::move(b));
        // odometer
        done = true;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            if (take[i] < mult[i].second) {
                ++take[i];
                std::fill(take.begin(), take.begin() + static_cast<long>(i), 0);
                done = false;
                break;
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace ellcob
