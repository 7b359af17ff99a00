#pragma once

#include <string>
#include <vector>

#include "ellcob/flops.hpp"
#include "ellcob/genus.hpp"

namespace ellcob::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample / summary, deterministic
};

// Anchor values of the calibrated genus in dimensions 2, 3, 4.
CheckResult genus_anchors(const GenusSeries& g);

// s_2 = -48, s_3 = 6, s_4 = -20 on the anchor classes, all passing (*) at p.
CheckResult star_values(long p);

// Fixed flop grid over Z in {pt, P^1, P^2, P^1xP^1} with split-root
// coefficients in [-2,2], plus `random_count` seeded random data over bases
// up to dimension 4.
std::vector<FlopDatum> flop_test_data(unsigned seed, int random_count);

// s_n_flop_formula == s_n_flop_geometric on every datum.
CheckResult flop_formula(const std::vector<FlopDatum>& data);

// phi(X1) - phi(X2) == 0 on every datum of total dimension <= max_dim.
CheckResult flop_kernel(const std::vector<FlopDatum>& data, const GenusSeries& g,
                        int max_dim = 7);

// c_1 = 0 for every multidegree-(n_i + 1) hypersurface, r <= 3, n_i <= 4.
CheckResult calabi_yau();

// generator_search finds a witness passing (*) for every 2 <= n <= 10.
CheckResult generator_witnesses(long p);

// Diagonal Poincare counts match the partition oracles for u <= 20,
// l in {3,5,7}.
CheckResult e2_poincare();

// MSL table: one generator per degree 2..30, none in degree 1, l in {3,5,7}.
CheckResult msl_degrees();

// Koszul Ext: vanishing above the diagonal and Sym^s multiset counts for
// m <= 4 Q-generators, u <= 30.
CheckResult koszul_dims();

// Segre-based pushforward equals the Chern-root expansion for split bundles
// of rank <= 3 over bases of dimension <= 3.
CheckResult pushforward_oracle();

// (-1)^n * n * [log c(-T)]_n == p_n(T) for `trials` seeded random class
// assignments with n <= 8.
CheckResult log_power_sum_identity(unsigned seed, int trials);

// phi of CY hypersurfaces and flop-difference classes lies in
// Z[1/2][3a2,a3,a4]; phi(P^1) does not.
CheckResult image_ring(const GenusSeries& g, long p);

}  // namespace ellcob::verify
