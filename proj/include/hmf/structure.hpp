#pragma once

// Generators of the ring of parallel-weight forms for Q(sqrt5) and the
// structure-theorem machinery: the ring relations, isobaric fitting, and
// the decomposition algorithms (global linear solve and the classical
// restriction/division recursion, which must agree).

#include "hmf/hilbert.hpp"
#include "hmf/qexp.hpp"

#include <string>
#include <vector>

namespace hmf {

// generators (memoized per bound)
HilbertSeries phi2(int bound);        // weight (2,2) Eisenstein, kappa_2 = 120
HilbertSeries chi6(int bound);        // Lambda(phi2)/24, weight (6,6)
HilbertSeries chi5_theta(int bound);  // theta route, weight (5,5)
HilbertSeries chi5_squared_deri2(int bound);  // (9 chi6^2 - Pi(phi2)/576) / (5 phi2)
HilbertSeries chi_tilde(int bound);   // [chi6, phi2, chi5], weight (15,15)

// the measured constant c with restrict_diagonal(chi6) = c * Delta
Rat chi6_diagonal_constant(int bound);

enum class RelationName { Systeme2_2, Systeme2_3, Deri2, Equadiff, TIdentity };
RelationName relation_from_string(const std::string& name);

// left minus right of the named relation; zero series iff the relation holds
HilbertSeries verify_relation(RelationName name, int bound);

struct IsobaricTerm {
    std::vector<int> exponents;  // parallel to the generator list
    QuadElem coeff;
};
struct IsobaricPoly {
    std::vector<std::string> generator_names;
    std::vector<int> generator_weights;  // parallel weights
    int weight = 0;                      // declared (parallel) weight
    std::vector<IsobaricTerm> terms;

    HilbertSeries evaluate(const std::vector<HilbertSeries>& generators) const;
};

// exact fit of target over all isobaric monomials of the given parallel
// weight in the named generators; throws on inconsistent or underdetermined
IsobaricPoly fit_isobaric_relation(const HilbertSeries& target,
                                   const std::vector<std::string>& names,
                                   const std::vector<HilbertSeries>& generators,
                                   int weight);

// symmetric even parallel weight -> polynomial in {phi2, chi5^2, chi6};
// both the global fit and the restriction/division recursion are run and
// compared unless check_recursion is false
IsobaricPoly decompose_symmetric_even(const HilbertSeries& F, bool check_recursion = true);

// ring map E4 -> phi2, Delta -> chi6/c over the measured constant c
IsobaricPoly lift_mu(const E4DeltaDecomposition& p, int weight, const Rat& c);

// arbitrary parallel weight -> polynomial in {phi2, chi5, chi6, chi_tilde}
// with chi_tilde-degree <= 1; reassembly is verified before returning
IsobaricPoly decompose_any(const HilbertSeries& F);

}  // namespace hmf
