/**
 * Cup and cup-i products, Steenrod squares, the obstruction-comparison
 * operation Theta, simplicial mapping cylinders/cones, and the Hopf
 * invariant.
 *
 * Cup products use the front-face/back-face rule on the ordered complex;
 * cup-i products use the overlapping-interval rule, which is exercised
 * against the coboundary identity by the property tests rather than
 * pinned as a contract.
 */

#ifndef OBTOP_RING_OPS_HPP
#define OBTOP_RING_OPS_HPP

#include "obtop/cohomology.hpp"
#include "obtop/simplicial.hpp"

namespace obtop {

struct CohomologyOperation {
    enum Kind { CupSquare, Sq2AfterMod2, SqK } kind = CupSquare;
    int k = 0;  // for SqK

    int degreeShift(int sourceDegree) const
    {
        switch (kind) {
            case CupSquare: return sourceDegree;     // doubles the degree
            case Sq2AfterMod2: return 2;
            case SqK: return k;
        }
        return 0;
    }
};

/// The two fibration instances the toolkit ships. n is the fibre degree,
/// q the first nonvanishing homotopy degree of the total space; the
/// Hopf instance carries an unresolved sign until inference fixes it.
struct FibrationProfile {
    enum Name { Hopf, Su3S4 } name = Hopf;
    int n = 1;
    int q = 3;
    int sign = 0;  // +1 / -1; 0 = unresolved (Hopf only)

    static FibrationProfile hopf(int sign = 0)
    {
        if (sign != 0 && sign != 1 && sign != -1)
            throw std::invalid_argument("FibrationProfile: sign must be 0 or +-1");
        FibrationProfile p;
        p.name = Hopf;
        p.n = 1;
        p.q = 3;
        p.sign = sign;
        return p;
    }
    static FibrationProfile su3_s4()
    {
        FibrationProfile p;
        p.name = Su3S4;
        p.n = 3;
        p.q = 5;
        p.sign = 0;
        return p;
    }
    CohomologyOperation theta() const
    {
        return name == Hopf ? CohomologyOperation{CohomologyOperation::CupSquare, 0}
                            : CohomologyOperation{CohomologyOperation::Sq2AfterMod2, 0};
    }
    std::string str() const { return name == Hopf ? "hopf" : "su3_s4"; }
};

/// Front-face/back-face product of cochains; u has degree p, v degree q.
IntVec cup_cochain(const SimplicialComplex& K, const IntVec& u, int p,
                   const IntVec& v, int q);

/// Cup product at class level; both classes must live on the same pair
/// with the same coefficients.
CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y);

/// Mod-2 cup-i product of cochains (degree p+q-i). Out-of-range i gives
/// the zero cochain.
std::vector<long long> cup_i_cochain(const SimplicialComplex& K,
                                     const std::vector<long long>& u, int p,
                                     const std::vector<long long>& v, int q, int i);

/// Sq^k at class level (Z_2 coefficients).
CohomologyClass steenrod_sq(int k, const CohomologyClass& x);

/// Theta of the profile: cup square with the profile sign (Hopf), or
/// Sq^2 after reduction mod 2 (SU(3) over S^4).
CohomologyClass apply_theta(const FibrationProfile& profile, const CohomologyClass& x);

/// Whitehead simplicial mapping cylinder of f: vertices are the
/// barycenters of sd(source) followed by the target's vertices; simplices
/// are barycenter chains joined to faces of the image of the chain's
/// smallest simplex.
struct MappingCylinder {
    ComplexPtr complex;
    Subdivision sourceSd;             // subdivision of the source
    std::vector<int> sdVertexIds;     // cylinder id of each sd vertex
    std::vector<int> targetVertexIds; // cylinder id of each target vertex
};
MappingCylinder whitehead_cylinder(const SimplicialMap& f);

/// Mapping cone: the cylinder with the subdivided source end coned off.
/// Returned as the pair (cone, target copy); apexId is the cone point.
struct MappingCone {
    SimplicialPair pair;
    MappingCylinder cylinder;  // complex field left empty; ids refer to the cone
    int apexId = 0;
};
MappingCone mapping_cone(const SimplicialMap& f);

/// Chain-level barycentric subdivision operator in degree k (rows: sd
/// k-simplices, columns: k-simplices of K).
SparseIntMatrix subdivision_chain_map(const SimplicialComplex& K, const Subdivision& S, int k);

/// Hopf invariant of a simplicial map from a triangulated oriented S^3 to
/// a triangulated S^2, via the cup square in the mapping cone. The sign
/// is tied to the source's coherent orientation.
Int hopf_invariant(const SimplicialMap& f);

} // namespace obtop

#endif
