#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ellcob/partition.hpp"

namespace ellcob {

// (homological degree, first motivic degree, weight); diagonal entries have
// p = 2q + s.
struct Bidegree {
    int s = 0;
    int p = 0;
    int q = 0;

    friend bool operator==(const Bidegree& a, const Bidegree& b) {
        return a.s == b.s && a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const Bidegree& a, const Bidegree& b) {
        return std::tie(a.s, a.p, a.q) < std::tie(b.s, b.p, b.q);
    }
};

enum class Theory { MGL, MSL };

struct E2Generator {
    std::string name;
    Bidegree bidegree;
    int weight = 0;
};

struct GeneratorTable {
    Theory theory = Theory::MGL;
    long l = 3;
    int max_weight = 0;
    std::vector<E2Generator> generators;
};

// Some part equals l^s - 1 for s >= 1.
bool is_l_adic(const Partition& p, long l);

// Literal reading: for every r >= 0, the multiplicity of the part l^r
// divides l (so lies in {0, 1, l}); parts that are not powers of l are
// unconstrained.
bool is_l_admissible(const Partition& p, long l);
// Variant reading: every such multiplicity is divisible by l (0 mod l).
bool is_l_admissible_mod(const Partition& p, long l);

// Polynomial generator table of the diagonal E2 page up to max_weight:
// MGL gets h'_r at weight l^r - 1 plus one z per weight k != l^r - 1;
// MSL drops the z's at weights l^r and l^r - 1 and regains weight l^{r+1}
// through a distinguished generator.
GeneratorTable e2_generators(Theory theory, long l, int max_weight);

// Number of monomials of total weight u in the positive-weight generators.
long poincare_count(const GeneratorTable& t, int u);

// Sorted positive generator weights of the MSL table; exactly one per
// degree >= 2 and none in degree 1, enforced as a structural check.
std::vector<int> msl_generator_degrees(long l, int max_weight);

// Koszul complex data over the exterior algebra on Q_0..Q_{m-1}, with
// Q_r of bidegree (2l^r - 1, l^r - 1) in homological degree 1.
struct KoszulComplex {
    long l = 3;
    int m = 1;      // number of Q-generators
    int max_s = 0;  // bound on homological degree
    int max_u = 0;  // bound on weight
};

// Ext dimensions within the bounds: the count of size-s multisets of
// Q-generators per bidegree (the differentials of the dualized complex
// vanish, so Ext^s is Sym^s of the dual space).  Every nonzero entry
// satisfies p - s = 2q; dimensions vanish strictly above that diagonal.
std::map<Bidegree, long> koszul_ext_dims(const KoszulComplex& k);
// Single-bidegree query with the diagonal vanishing built in.
long koszul_ext_dim(const KoszulComplex& k, int s, int t, int u);

// Unordered splittings (P1, P2) with P1 merged P2 = p, each once; a
// non-diagonal entry stands for the symmetrized tensor P1 x P2 + P2 x P1,
// the diagonal splitting is counted once.
std::vector<std::pair<Partition, Partition>> coproduct_partition(const Partition& p);

}  // namespace ellcob
