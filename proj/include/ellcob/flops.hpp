#pragma once

#include <utility>

#include "ellcob/chern.hpp"
#include "ellcob/genus.hpp"

namespace ellcob {

// Classical flop datum: smooth singular locus Z carrying split rank-2
// bundles A and B, each given by two degree-1 Chern roots in Z's ring.
// The flopped varieties have dimension n = dim Z + 3.
struct FlopDatum {
    VarietyData z;
    MultiPoly a1, a2;  // roots of A
    MultiPoly b1, b2;  // roots of B

    int total_dimension() const { return z.dimension + 3; }
};

// Validates that the roots are degree-1 elements of z's ring (or zero).
FlopDatum make_flop_datum(VarietyData z, MultiPoly a1, MultiPoly a2, MultiPoly b1,
                          MultiPoly b2);

FlopDatum swapped(const FlopDatum& f);

// The two sides of the cobordism identity
// [X1 - X2] = P_{P(A)}(B (x) O_{P(A)}(-1) (+) O) - P_{P(B)}(A (x) O_{P(B)}(-1) (+) O):
// both iterated projective bundles as varieties of dimension dim Z + 3.
std::pair<VarietyData, VarietyData> flop_difference_varieties(const FlopDatum& f);

// Closed-form s_n([X1 - X2]): the quadruple sum over i1+i2+i3+i4 = n-3 of
// a1^i1 a2^i2 b1^i3 b2^i4 with bracket
// (-1)^i2 C(n-1,i1) + (-1)^i1 C(n-1,i2) - (-1)^i4 C(n-1,i3) - (-1)^i3 C(n-1,i4),
// integrated over Z.
Rational s_n_flop_formula(const FlopDatum& f, int n);

// The same number through the constructed bundle varieties.
Rational s_n_flop_geometric(const FlopDatum& f, int n);

// phi(X1) - phi(X2); exactly zero is the kernel property under test.
EllElement flop_ideal_probe(const FlopDatum& f, const GenusSeries& g);

}  // namespace ellcob
