/**
 * Orientations and fundamental classes, intersection forms of closed
 * oriented triangulated 4-manifolds, and Thom-class algebra on pairs
 * that satisfy the Thom-model invariants.
 */

#ifndef OBTOP_MANIFOLD_HPP
#define OBTOP_MANIFOLD_HPP

#include "obtop/cohomology.hpp"
#include "obtop/ring_ops.hpp"
#include "obtop/simplicial.hpp"

namespace obtop {

struct FundamentalClassResult {
    bool orientable = false;  // over Z; mod-2 classes always exist
    IntVec cycle;             // top chain; empty iff Z requested on non-orientable input
};

/// Fundamental class of a connected closed pseudomanifold. Over Z the
/// orientation is the coherent one with the lexicographically first facet
/// positive, scaled by orientationSign; over Z_2 it is the sum of facets.
FundamentalClassResult fundamental_class(const SimplicialComplex& K, const Coeff& coeff,
                                         int orientationSign = +1);

struct IntersectionForm {
    std::vector<CohomologyClass> basis;       // free H^2 generators
    std::vector<std::vector<Int>> matrix;     // symmetric
    int signature = 0;
    std::vector<Int> torsion;                 // torsion of H^2, reported alongside
    Int determinant = 0;
};

/// Pairing (x, y) -> <x cup y, [K]> on the free part of H^2 of a closed
/// oriented triangulated 4-manifold.
IntersectionForm intersection_form(const SimplicialComplex& K, int orientationSign = +1);

/// <x cup x, [K]>.
Int self_intersection(const SimplicialComplex& K, const CohomologyClass& x,
                      int orientationSign = +1);

/// Pairing of a top-degree class against the fundamental cycle.
Int pair_with_fundamental(const SimplicialComplex& K, const IntVec& cochain,
                          int orientationSign = +1);

/// A (DN, SN)-style pair with its Thom class and top class. Rank 2 is the
/// oriented integer case (tau^2 = e [DN]); rank 4 is the mod-2 case
/// (Sq^2 tau = w2 [DN]).
struct ThomModel {
    SimplicialPair pair;
    int rank = 2;
    CohomologyClass thomClass;
    CohomologyClass topClass;
    Int eulerNumber = 0;  // rank 2
    int w2 = 0;           // rank 4
};

/// Build and validate a Thom model from a pair: checks the group shapes,
/// picks the canonical generators, re-derives e or w2, and rejects a
/// mismatch with the expected value when one is given.
ThomModel make_thom_model(const SimplicialPair& pair, int rank,
                          const std::optional<Int>& expectedEuler = std::nullopt,
                          const std::optional<int>& expectedW2 = std::nullopt);

/// The integer c with (n tau) cup (n tau) = c [DN]; contract c = n^2 e.
Int thom_square(const ThomModel& T, const Int& n);

/// Coefficient of Sq^2(tau) on the top class of a rank-4 mod-2 model.
int sq2_thom(const ThomModel& T);

} // namespace obtop

#endif
