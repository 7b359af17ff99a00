#pragma once

#include <map>
#include <string>

#include "ellcob/chern.hpp"
#include "ellcob/lazard.hpp"
#include "ellcob/multipoly.hpp"
#include "ellcob/partition.hpp"
#include "ellcob/truncseries.hpp"

namespace ellcob {

// Context {a1, a2, a3, a4} with weight(a_i) = i (cohomological grading; the
// coefficient-ring degree is the negative of the weighted degree).
Ctx ell_context();

// y^2 + mu1 xy + mu3 y = x^3 + mu2 x^2 + mu4 x + mu6 with the fixed
// substitutions mu_i in Z[a1..a4, 1/2].
struct WeierstrassCurve {
    Ctx ctx;
    MultiPoly mu1, mu2, mu3, mu4, mu6;
};

WeierstrassCurve krichever_curve();

// Homogeneous element of Ell = Z[a1,a2,a3,a4/2]; degree is -(weighted deg).
struct EllElement {
    MultiPoly value;
    int degree = 0;
};

EllElement make_ell(MultiPoly value);

struct GenusSeries {
    TruncSeries log;          // l(t), coefficients in Q[a1..a4]
    TruncSeries exp;          // f = l^{-1}
    TruncSeries char_series;  // Q(u) = u / f(u)
    std::string convention;   // calibrated chart / sign choice, stable
    int order = 0;

    // m-basis coefficient of the multiplicative sequence K_n at partition I:
    // the product of char_series coefficients over the parts of I.
    MultiPoly K_coeff(const Partition& I) const;
    // All of K_n as a partition-indexed table.
    std::map<Partition, MultiPoly> K_table(int n) const;
};

// Expand the curve at the origin of the group law, integrate the invariant
// differential, and build the genus series; the chart sign and the mu4
// cross-term sign are calibrated against the three fixed anchor values (a
// calibration failure throws).  If cache_dir is nonempty, the K table is
// written to / validated against a file keyed by (N, convention).
GenusSeries curve_log(const WeierstrassCurve& curve, int N,
                      const std::string& cache_dir = "");

// Tangent Chern numbers in the monomial-symmetric basis from numbers given
// on products of Chern classes: e_numbers maps the partition (j1 >= j2...)
// to the number of c_{j1} c_{j2} ... (all partitions of dim required).
std::map<Partition, Rational> monomial_numbers_from_elementary(
    int dim, const std::map<Partition, Rational>& e_numbers);

// Monomial-basis numbers of T from the monomial-basis numbers of -T
// (universal total-class inversion in each degree).
std::map<Partition, Rational> tangent_numbers_from_virtual(
    int dim, const std::map<Partition, Rational>& virt);

// phi via the multiplicative sequence paired against tangent numbers given
// in the monomial-symmetric basis (all partitions of dim).
EllElement genus_of_chern_numbers(int dim,
                                  const std::map<Partition, Rational>& tangent_m_numbers,
                                  const GenusSeries& g);

EllElement genus_of_variety(const VarietyData& x, const GenusSeries& g);

// phi on a b-class (sum over graded components; -T numbers are converted to
// tangent numbers first).
EllElement genus_of_class(const CobClass& c, const GenusSeries& g);

// Membership in Z[1/2p][3a2, a3, a4]: no a1, and after rewriting a2^k
// coefficients q -> q/3^k all denominators factor over {2, p}.
bool image_membership(const EllElement& e, long p);

// "(3*a2)"-basis rendering used by the CLI when membership holds.
std::string image_ring_form(const EllElement& e);

}  // namespace ellcob
