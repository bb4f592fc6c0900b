/**
 * Finite simplicial complexes, pairs and simplicial maps, together with
 * the combinatorial constructions the rest of the library is built on:
 * boundary operators, ordered products, joins/cones, barycentric
 * subdivision, quotients, and orientation bookkeeping.
 */

#ifndef OBTOP_SIMPLICIAL_HPP
#define OBTOP_SIMPLICIAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "obtop/intlinalg.hpp"

namespace obtop {

/// Strictly increasing vertex indices.
using Simplex = std::vector<int>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const
    {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    int vertexCount() const { return vertexCount_; }
    int dimension() const { return static_cast<int>(byDim_.size()) - 1; }

    /// Simplices of dimension k in canonical (lexicographic) order.
    const std::vector<Simplex>& simplices(int k) const;
    int count(int k) const;
    const Simplex& simplex(int k, int idx) const { return simplices(k)[idx]; }

    /// Index of a simplex in the canonical order, or -1.
    int indexOf(const Simplex& s) const;
    bool contains(const Simplex& s) const { return indexOf(s) >= 0; }

    long long eulerCharacteristic() const;
    std::size_t totalSimplices() const;
    bool connected() const;

    /// Maximal simplices (not a proper face of anything).
    std::vector<Simplex> facets() const;

    /// Content fingerprint; complexes with equal fingerprints are treated
    /// as identical by the caches.
    std::uint64_t fingerprint() const { return fingerprint_; }

    friend SimplicialComplex build_complex(const std::vector<Simplex>& top,
                                           int vertex_count);

  private:
    int vertexCount_ = 0;
    std::vector<std::vector<Simplex>> byDim_;
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
    std::uint64_t fingerprint_ = 0;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Downward closure of the given simplices. Vertex tuples may arrive in
/// any order but must not repeat a vertex. Idempotent and insensitive to
/// the input order. vertex_count < 0 means "infer from the data".
SimplicialComplex build_complex(const std::vector<Simplex>& top, int vertex_count = -1);

/// Matrix of the boundary operator from k-chains to (k-1)-chains with the
/// alternating face sign convention. Requires 1 <= k <= dim.
SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int k);

/// A pair (total, induced subcomplex on subVertices). Induced subcomplexes
/// are full by construction, which is what relative cochains require.
class SimplicialPair {
  public:
    SimplicialPair() = default;
    SimplicialPair(ComplexPtr total, std::vector<int> subVertices);

    /// Absolute "pair" with an empty subcomplex.
    static SimplicialPair absolute(ComplexPtr total);

    const SimplicialComplex& total() const { return *total_; }
    ComplexPtr totalPtr() const { return total_; }
    const std::vector<int>& subVertices() const { return subVertices_; }
    bool relative() const { return !subVertices_.empty(); }

    /// Whether total().simplex(k, idx) lies in the subcomplex.
    bool inSub(int k, int idx) const;

    /// The subcomplex as a complex of its own, with vertices relabelled
    /// 0..n-1 in subVertices order.
    SimplicialComplex subComplex() const;

    std::uint64_t fingerprint() const { return fingerprint_; }

  private:
    ComplexPtr total_;
    std::vector<int> subVertices_;
    std::vector<char> vertexInSub_;
    mutable std::vector<std::vector<char>> simplexInSub_;  // filled lazily
    std::uint64_t fingerprint_ = 0;

    void fillDim(int k) const;
};

class SimplicialMap {
  public:
    SimplicialMap() = default;
    /// Validates that every source simplex maps (after collapsing
    /// duplicates) to a simplex of the target.
    SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<int> vertexImages);

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    ComplexPtr sourcePtr() const { return source_; }
    ComplexPtr targetPtr() const { return target_; }
    const std::vector<int>& vertexImages() const { return vertexImages_; }
    int image(int v) const { return vertexImages_.at(v); }

    static SimplicialMap identity(ComplexPtr K);
    static SimplicialMap constant(ComplexPtr source, ComplexPtr target, int targetVertex);

  private:
    ComplexPtr source_, target_;
    std::vector<int> vertexImages_;
};

/// outer o inner; the complexes must match by fingerprint.
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// Matrix of f_# on k-chains. Simplices with a degenerate image map to 0;
/// otherwise the entry is the sign of the vertex-sorting permutation.
SparseIntMatrix induced_chain_map(const SimplicialMap& f, int k);

/// Ordered (staircase) triangulation of |K| x |L|. Vertex (u,v) gets
/// index u * L.vertexCount() + v.
SimplicialComplex product_complex(const SimplicialComplex& K, const SimplicialComplex& L);

/// Join K * L; L's vertices are shifted past K's.
SimplicialComplex join_complexes(const SimplicialComplex& K, const SimplicialComplex& L);

/// Cone with a fresh apex (the last vertex index).
SimplicialComplex cone_complex(const SimplicialComplex& K);

/// Unreduced suspension (join with two fresh points).
SimplicialComplex suspension(const SimplicialComplex& K);

struct Subdivision {
    SimplicialComplex sd;
    /// sd-vertex -> (dim, index) of the simplex of K it subdivides.
    std::vector<std::pair<int, int>> vertexSimplex;
    /// Simplicial approximation sd K -> K sending each barycenter to the
    /// last vertex of its simplex.
    std::vector<int> lastVertexImages;
};

Subdivision barycentric_subdivision(const SimplicialComplex& K);

/// Quotient by a vertex identification. Every simplex must stay
/// nondegenerate; expectedFacetMultiplicity (when > 0) asserts that every
/// facet of the quotient is hit by exactly that many facets upstairs.
SimplicialComplex quotient_complex(const SimplicialComplex& K,
                                   const std::vector<int>& vertexClass,
                                   int expectedFacetMultiplicity = 0);

/// Relabel vertices by a permutation; returns the image complex.
SimplicialComplex relabel_complex(const SimplicialComplex& K, const std::vector<int>& perm);

/// Closed-pseudomanifold test: pure, every ridge in exactly two facets,
/// facet graph connected.
bool is_closed_pseudomanifold(const SimplicialComplex& K, std::string* why = nullptr);

/// Coherent facet orientation (+1/-1 per facet, lexicographically first
/// facet positive), or nullopt when the complex is non-orientable.
std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& K);

} // namespace obtop

#endif
