/**
 * Built-in corpus: spheres, projective spaces, products, the simplicial
 * Hopf model and its mapping cone, Thom models, and bundled defect
 * scenarios. Every entry is constructed algorithmically and carries a
 * provenance string; validators re-derive the advertised invariants.
 */

#ifndef OBTOP_CORPUS_HPP
#define OBTOP_CORPUS_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "obtop/defect.hpp"
#include "obtop/manifold.hpp"
#include "obtop/simplicial.hpp"

namespace obtop {

// building blocks (exposed for tests and user construction)

/// Cyclic m-gon (m >= 3).
SimplicialComplex circle_complex(int m);

/// S^n as the boundary of the (n+1)-simplex.
SimplicialComplex sphere_boundary(int n);

/// Path with m vertices 0..m-1.
SimplicialComplex path_complex(int m);

/// RP^n as the antipodal quotient of the barycentrically subdivided
/// boundary sphere (complement map on proper nonempty subsets).
SimplicialComplex real_projective_space(int n);

/// 12-vertex Klein bottle: a circle-times-interval prism with the ends
/// glued by a reflection.
SimplicialComplex klein_bottle_complex();

/// Circle wrap C_{d*m} -> C_m, j -> j mod m (degree d).
SimplicialMap circle_wrap_map(int d, int m);

/// Double suspension of a map (join with the identity on a 4-cycle).
SimplicialMap double_suspension_map(const SimplicialMap& f);

/// The Hopf model: a 15-vertex S^3 built from two solid tori glued with
/// the twist that makes angle-difference the projection coordinate, and
/// the projection map onto the suspended triangle S^2.
SimplicialMap hopf_map_model();

struct CorpusEntry {
    std::string id;
    enum Kind { Complex, Pair, Map, Thom, Scenario } kind = Complex;
    std::string provenance;
    ComplexPtr complex;
    std::shared_ptr<const SimplicialPair> pair;
    std::shared_ptr<const SimplicialMap> map;
    std::shared_ptr<const DefectConfiguration> scenario;
    // Thom entries: the pair plus the expected metadata
    int thomRank = 0;
    std::optional<Int> thomEuler;
    std::optional<int> thomW2;
};

class Corpus {
  public:
    static const Corpus& instance();

    bool has(const std::string& id) const { return entries_.count(id) > 0; }
    const CorpusEntry& get(const std::string& id) const;
    const std::vector<std::string>& ids() const { return order_; }

    ComplexPtr complex(const std::string& id) const;
    const SimplicialPair& pairOf(const std::string& id) const;
    const SimplicialMap& mapOf(const std::string& id) const;
    const DefectConfiguration& scenarioOf(const std::string& id) const;

    /// Thom model built lazily from the entry's pair and validated
    /// against the stored metadata.
    const ThomModel& thom(const std::string& id) const;

    /// Orientation sign for 4-manifold entries, normalized so that the
    /// first free H^2 generator has nonnegative self-intersection.
    int orientationSign(const std::string& id) const;

    /// Re-derives the entry's advertised invariants; throws on failure.
    void check(const std::string& id) const;

    /// c1^2 of a coordinate vector on a corpus 4-manifold.
    Int c1SquaredOf(const std::string& id, const IntVec& coords) const;

  private:
    Corpus();
    void add(CorpusEntry e);

    std::vector<std::string> order_;
    std::map<std::string, CorpusEntry> entries_;
    mutable std::mutex lazyMutex_;
    mutable std::map<std::string, std::shared_ptr<const ThomModel>> thomCache_;
    mutable std::map<std::string, int> orientCache_;
};

} // namespace obtop

#endif
