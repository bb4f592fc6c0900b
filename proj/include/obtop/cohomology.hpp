/**
 * Absolute and relative (co)homology with explicit generators, class
 * coordinates, induced maps, cohomologous-ness tests and mapping degree.
 *
 * Cochain vectors are always indexed by the full simplex list of the
 * total complex; relative cochains carry zeros on the subcomplex.
 */

#ifndef OBTOP_COHOMOLOGY_HPP
#define OBTOP_COHOMOLOGY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "obtop/intlinalg.hpp"
#include "obtop/simplicial.hpp"

namespace obtop {

struct Coeff {
    enum Kind { Z, Zp } kind = Z;
    long long p = 0;

    static Coeff integers() { return {Z, 0}; }
    static Coeff mod(long long prime)
    {
        if (!is_prime(prime)) throw std::invalid_argument("Coeff: p must be prime");
        return {Zp, prime};
    }
    static Coeff mod2() { return mod(2); }

    bool operator==(const Coeff& o) const { return kind == o.kind && p == o.p; }
    bool isZ() const { return kind == Z; }
    std::string str() const { return kind == Z ? "Z" : "Z" + std::to_string(p); }
};

namespace detail {
struct GroupContext;
}

/// A (co)homology group with chosen generators. Torsion generators come
/// first (divisors ascending), then the free generators; coordinate
/// vectors follow the same order.
struct HomologyGroup {
    int degree = 0;
    Coeff coeff;
    int freeRank = 0;
    std::vector<Int> torsion;
    std::vector<IntVec> generators;

    bool trivial() const { return freeRank == 0 && torsion.empty(); }
    int generatorCount() const { return freeRank + static_cast<int>(torsion.size()); }

    /// Canonical report string: "0", "Z^r", "Z/t", "Z^r + Z/t1 + Z/t2",
    /// or "Zp^r" for field coefficients.
    std::string str() const;

    std::shared_ptr<const detail::GroupContext> context;  // coordinate solver
};

struct CohomologyClass {
    SimplicialPair space;
    int degree = 0;
    Coeff coeff;
    IntVec cochain;       // full-length, zero on the subcomplex
    IntVec coordinates;   // against the computed generator basis
};

/// Relative coboundary matrix C^k -> C^{k+1} (free simplices only, i.e.
/// those outside the subcomplex). rowIds/colIds give the full-list index
/// of each row/column.
struct CoboundaryMatrix {
    SparseIntMatrix M;
    std::vector<int> rowIds, colIds;
};
CoboundaryMatrix coboundary_matrix(const SimplicialPair& P, int k);

HomologyGroup homology(const SimplicialComplex& K, int k, const Coeff& coeff);
HomologyGroup cohomology(const SimplicialPair& P, int k, const Coeff& coeff);
HomologyGroup cohomology(ComplexPtr K, int k, const Coeff& coeff);

/// Wrap a cochain as a class: validates the cocycle condition and the
/// vanishing-on-subcomplex invariant, and computes coordinates.
CohomologyClass make_class(const SimplicialPair& P, int k, const Coeff& coeff, IntVec cochain);

/// The class of the i-th generator of H^k(P).
CohomologyClass generator_class(const SimplicialPair& P, int k, const Coeff& coeff, int i);

/// Class with given coordinates (integer combination of generators).
CohomologyClass class_from_coordinates(const SimplicialPair& P, int k, const Coeff& coeff,
                                       const IntVec& coords);

CohomologyClass zero_class(const SimplicialPair& P, int k, const Coeff& coeff);

CohomologyClass pullback(const SimplicialMap& f, const CohomologyClass& x);

bool is_cohomologous(const CohomologyClass& x, const CohomologyClass& y);
bool is_zero_class(const CohomologyClass& x);

CohomologyClass class_sum(const CohomologyClass& x, const CohomologyClass& y);
CohomologyClass class_scale(const Int& c, const CohomologyClass& x);
CohomologyClass class_negate(const CohomologyClass& x);

/// Mapping degree of f between closed oriented pseudomanifolds of equal
/// dimension, with orientations fixed by coherent_orientation.
Int degree(const SimplicialMap& f);

/// Purge the engine's memoization caches (mainly for tests).
void clear_engine_caches();

} // namespace obtop

#endif
