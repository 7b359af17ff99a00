#pragma once

#include <string>
#include <vector>

#include "ellcob/multipoly.hpp"
#include "ellcob/partition.hpp"

namespace ellcob {

// One relation g^power = rhs for a degree-1 ring generator; rhs is a normal
// form involving only earlier generators and lower powers of g (rhs = 0 for
// plain nilpotency, or the Grothendieck relation of a projective bundle).
struct GenRelation {
    int power;
    MultiPoly rhs;
};

// Finite graded ring presented by ordered degree-1 generators with one
// reduction relation each.  Every element has a unique normal form over the
// monomial basis { prod g_i^{e_i} : e_i < power_i }; integration reads off
// the coefficient of the designated top monomial.
class CohRing {
public:
    CohRing(Ctx ctx, std::vector<GenRelation> rels, MultiPoly::Exponents top);

    const Ctx& context() const { return ctx_; }
    const std::vector<GenRelation>& relations() const { return rels_; }
    const MultiPoly::Exponents& top_monomial() const { return top_; }
    int top_degree() const;

    MultiPoly normal_form(MultiPoly p) const;
    // Coefficient of the top monomial in the normal form (0 off-top).
    Rational integrate(const MultiPoly& p) const;

private:
    Ctx ctx_;
    std::vector<GenRelation> rels_;
    MultiPoly::Exponents top_;
};

struct BundleData {
    int rank = 0;
    std::vector<MultiPoly> chern;  // c_1..c_rank, ring elements in normal form

    MultiPoly chern_class(int k, const Ctx& ctx) const {
        if (k == 0) return MultiPoly::constant(ctx, Rational(1));
        if (k < 0 || k > rank) return MultiPoly(ctx);
        return chern[k - 1];
    }
    MultiPoly total(const Ctx& ctx) const {
        MultiPoly t = MultiPoly::constant(ctx, Rational(1));
        for (const auto& c : chern) t += c;
        return t;
    }
};

// A variety modeled by its cohomology ring, total tangent Chern class, and
// integration functional.  `fundamental` is the class integration pairs
// against (the hypersurface class h for hypersurface models, 1 otherwise).
struct VarietyData {
    int dimension = 0;
    CohRing ring;
    MultiPoly tangent_total;  // c(T), normal form, truncated at `dimension`
    MultiPoly fundamental;

    Rational integrate(const MultiPoly& a) const {
        return ring.integrate(a * fundamental);
    }
    // c_1(T)..c_dim(T).
    std::vector<MultiPoly> tangent_chern() const;
    // c_1(-T)..c_dim(-T): total-class inversion truncated at `dimension`.
    std::vector<MultiPoly> virtual_chern() const;
};

VarietyData projective_space(int n, const std::string& var = "x");
VarietyData product(const VarietyData& x, const VarietyData& y);

// Smooth hypersurface of multidegree d in P^{n_1} x ... x P^{n_r}, modeled
// in the ambient ring with integration against the hypersurface class.
VarietyData multiproj_hypersurface(const std::vector<int>& n, const std::vector<int>& d);

// P(V) over `base` with zeta = c1(O(1)), relation
// zeta^r = -sum_{k=1..r} c_k(V) zeta^{r-k}, normalized so that
// pi_*(zeta^{r-1}) = 1.  An empty zeta_name picks a fresh one.
VarietyData projective_bundle(const VarietyData& base, const BundleData& v,
                              const std::string& zeta_name = "");

// Segre class s_j(V) = degree-j part of 1/c(V), truncated at weight `bound`.
MultiPoly segre_class(const BundleData& v, int j, const Ctx& ctx, int bound);

// pi_* for P(V): expr is a ring element of the bundle variety with
// zeta = generator `zeta_index`; pi_*(zeta^k . b) = b . s_{k-rank+1}(V).
MultiPoly pushforward_proj_bundle(const MultiPoly& expr, const BundleData& v,
                                  int zeta_index, int bound);

// Conner-Floyd (monomial symmetric) class m_I evaluated on the Chern
// classes e_1, e_2, ... of a (possibly virtual) bundle.
MultiPoly conner_floyd_class(const Partition& I, const std::vector<MultiPoly>& chern,
                             const Ctx& ctx);

// deg c_I(-T_X): Chern numbers of the virtual tangent bundle.
Rational chern_number(const VarietyData& x, const Partition& I);
// deg c_I(T_X): the tangent variant used by the section-6 tables.
Rational tangent_chern_number(const VarietyData& x, const Partition& I);

// s_n(X) = integral of p_n(T_X), n = dim X, via Newton's identities.
Rational s_n(const VarietyData& x);
// Same number through the log identity: (-1)^n . n . [log c(-T)]_n.
Rational s_n_via_log(const VarietyData& x);

bool is_calabi_yau(const VarietyData& x);

}  // namespace ellcob
