/**
 * Defect configurations and the identity checkers: the per-surface index
 * sum against n^2 chi with a single inferred global sign, the global
 * c_1^2 balance, the mod-2 surface identity, and instance checks of the
 * obstruction-comparison identity on concrete cohomology classes.
 */

#ifndef OBTOP_DEFECT_HPP
#define OBTOP_DEFECT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "obtop/cohomology.hpp"
#include "obtop/ring_ops.hpp"

namespace obtop {

struct SurfaceDefect {
    std::string id;
    Int n = 0;                      // local index of the lifting along the surface
    std::optional<Int> chi;         // self-intersection (hopf)
    std::optional<int> w2;          // second Stiefel-Whitney value (su3_s4)
    std::vector<Int> replacementIndices;
    bool transversalAsserted = false;  // claims n = +-1
    std::string provenance = "supplied";
};

struct DefectConfiguration {
    FibrationProfile profile;
    std::vector<Int> pointIndices;                        // hopf only
    std::optional<Int> c1Squared;                         // supplied directly
    std::optional<std::pair<std::string, IntVec>> c1Class; // (corpus 4-manifold id, coords)
    std::vector<SurfaceDefect> surfaces;
};

enum class SignInference { Plus, Minus, Indeterminate, Inconsistent };
std::string to_string(SignInference s);

struct SurfaceCheck {
    std::string id;
    Int lhs = 0;       // sum of replacement indices
    Int rhs = 0;       // n^2 chi  (or n*w2 mod 2)
    Int residual = 0;  // lhs - s*rhs in the relevant ring
    bool pass = false;
};

struct VerificationReport {
    std::string identity;  // which identity was checked
    SignInference sign = SignInference::Indeterminate;
    std::vector<SurfaceCheck> surfaces;
    std::optional<Int> globalLhs, globalRhs, globalResidual;  // sum n^2 chi vs c1^2
    std::optional<Int> conservationResidual;
    std::vector<std::string> provenance;
    bool pass = false;
};

/// Looks up c1^2 for a named corpus 4-manifold and coordinate vector;
/// wired in by the CLI so this module stays independent of the corpus.
using C1Resolver = std::function<Int(const std::string&, const IntVec&)>;

/// The unique global sign making every surface identity hold, when any.
SignInference infer_sign(const DefectConfiguration& config);

VerificationReport verify_prop1(const DefectConfiguration& config,
                                const C1Resolver& resolver = {});
VerificationReport verify_prop2(const DefectConfiguration& config);

/// Checks ext_f - ext_g = Theta(-lift_f) - Theta(-lift_g) on a concrete
/// pair, via apply_theta and cohomologous-ness.
VerificationReport theorem_instance_check(const FibrationProfile& profile,
                                          const CohomologyClass& lift_f,
                                          const CohomologyClass& lift_g,
                                          const CohomologyClass& ext_f,
                                          const CohomologyClass& ext_g);

/// Local index of a link map: Hopf invariant for maps to the 2-sphere
/// model, mapping degree for maps to a 3-sphere model; reduced mod 2 for
/// the su3_s4 profile.
Int local_index(const SimplicialMap& linkMap, const FibrationProfile& profile);

} // namespace obtop

#endif
