#pragma once

#include <map>
#include <vector>

#include "ellcob/multipoly.hpp"
#include "ellcob/partition.hpp"

namespace ellcob::symm {

// Context with variables e1..en, where ei carries weight i.
Ctx elementary_context(int n);

// Context with n weight-1 root variables x1..xn.
Ctx root_context(int n);

// The power sum p_n written in e1..en (Newton's identities).  Result lives
// in elementary_context(n); use map_to to move it into a larger context.
MultiPoly power_sum_in_elementary(int n);

// Newton's identities applied to concrete classes: p_n with e_i taken from
// the given sequence (entries beyond its length are treated as zero; all
// entries share one context).
MultiPoly power_sums_from_elementary(const std::vector<MultiPoly>& e, int n);

// Elementary symmetric polynomial e_j of the given roots (all from one
// context); e_0 = 1.
MultiPoly elementary_in_roots(int j, const std::vector<MultiPoly>& xs);

// Monomial symmetric polynomial m_I expanded in k >= len(I) roots: the sum
// of all distinct permutations of the exponent vector of I.
MultiPoly monomial_in_roots(const Partition& I, const std::vector<MultiPoly>& xs);

// m_I written in the elementary basis e1..e_{|I|} (Gauss elimination on
// lex-leading terms, working with |I| formal roots).  Cached per partition.
MultiPoly monomial_in_elementary(const Partition& I);

// Expand a symmetric expression given as a polynomial in e1..e_k into the
// monomial symmetric basis: coefficients of m_I by partition.  `w` bounds
// the weight (number of formal roots used; must be >= the expression's
// weighted degree for a faithful expansion).
std::map<Partition, Rational> in_monomial_basis(const MultiPoly& e_expr, int w);

}  // namespace ellcob::symm
