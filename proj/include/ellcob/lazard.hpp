#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellcob/chern.hpp"
#include "ellcob/partition.hpp"
#include "ellcob/rational.hpp"

namespace ellcob {

// Graded cobordism class recorded by its Conner-Floyd Chern numbers: the
// degree-n component maps each partition of n to the number c_I(-T) (the
// b-class coefficients of section 4).
class CobClass {
public:
    CobClass() = default;

    static CobClass unit() {
        CobClass c;
        c.components_[0][Partition()] = Rational(1);
        return c;
    }

    const std::map<int, std::map<Partition, Rational>>& components() const {
        return components_;
    }
    std::string label;  // free-form description of where the class came from

    void set(int degree, const Partition& I, const Rational& v);
    Rational entry(int degree, const Partition& I) const;
    bool is_zero() const;

    CobClass operator+(const CobClass& o) const;
    CobClass operator-(const CobClass& o) const;
    CobClass scaled(const Rational& k) const;
    friend bool operator==(const CobClass& a, const CobClass& b) {
        return a.components_ == b.components_;
    }

private:
    std::map<int, std::map<Partition, Rational>> components_;
};

// b(X): Chern numbers of -T_X over all partitions of dim X.  Values must
// come out integral; a non-integral number signals an internal defect.
CobClass b_class(const VarietyData& x);

// b_I . b_J = b_{I u J}: convolve components, merging partitions.
CobClass cob_mul(const CobClass& a, const CobClass& b);

// Coefficient at the length-one partition (n): the s_n Chern number of -T.
Rational s_n_of_class(const CobClass& c, int n);

// Condition (*): |s| = (product of mandated odd primes) . 2^a . p^b, where
// an odd prime l is mandated whenever n or n+1 is a positive power of l.
bool star_condition(int n, const Rational& s, long p);

struct WitnessTerm {
    long coeff;
    std::string kind;  // "multiproj_hypersurface" | "projective_space"
    std::vector<int> n, d;
};

struct GeneratorReport {
    int degree = 0;
    Rational s;
    std::string required_form;
    std::vector<WitnessTerm> witness;
    bool passes = false;
    Rational best_gcd;  // gcd fallback when no witness passes
};

// Hypersurface family members considered by the search.
struct HypersurfaceCandidate {
    std::vector<int> n, d;
    Rational sn;
};

// Closed-form s_n of a multidegree-d hypersurface in prod P^{n_i}:
// coefficient of prod x_i^{n_i} in (sum_j (n_j+1) x_j^n - h^n) . h.
Rational s_n_hypersurface(const std::vector<int>& n, const std::vector<int>& d);

// Deterministic search over the default family (hypersurfaces with r <= 3,
// n_i <= deg+1, d_i <= deg+2, plus P^deg), single candidates with
// multiplicity 1..4 then pairs with coefficients in [-4, 4].
GeneratorReport generator_search(int degree, long p);

}  // namespace ellcob
