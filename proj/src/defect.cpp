#include "obtop/defect.hpp"

#include <algorithm>

namespace obtop {

namespace {

Int surfaceSum(const SurfaceDefect& s)
{
    Int acc = 0;
    for (const Int& v : s.replacementIndices) acc += v;
    return acc;
}

void validateHopfConfig(const DefectConfiguration& config)
{
    if (config.profile.name != FibrationProfile::Hopf)
        throw std::invalid_argument("verify_prop1: configuration must use the hopf profile");
    if (config.surfaces.empty() && config.pointIndices.empty())
        throw std::invalid_argument("configuration needs surfaces or point defects");
    for (const SurfaceDefect& s : config.surfaces) {
        if (!s.chi)
            throw std::invalid_argument("hopf surface '" + s.id + "' needs a chi value");
        if (s.transversalAsserted && s.n != 1 && s.n != -1)
            throw std::invalid_argument("surface '" + s.id +
                                        "' asserts a transversal origin but n is not +-1");
    }
}

void validateSu3Config(const DefectConfiguration& config)
{
    if (config.profile.name != FibrationProfile::Su3S4)
        throw std::invalid_argument("verify_prop2: configuration must use the su3_s4 profile");
    if (config.surfaces.empty())
        throw std::invalid_argument("configuration needs at least one surface");
    for (const SurfaceDefect& s : config.surfaces) {
        if (!s.w2) throw std::invalid_argument("su3 surface '" + s.id + "' needs a w2 value");
        if (s.n != 0 && s.n != 1)
            throw std::invalid_argument("su3 surface '" + s.id + "' needs a binary index n");
        if (*s.w2 != 0 && *s.w2 != 1)
            throw std::invalid_argument("su3 surface '" + s.id + "' needs a binary w2");
        for (const Int& v : s.replacementIndices)
            if (v != 0 && v != 1)
                throw std::invalid_argument("su3 surface '" + s.id +
                                            "' needs binary replacement indices");
    }
}

} // namespace

std::string to_string(SignInference s)
{
    switch (s) {
        case SignInference::Plus: return "+1";
        case SignInference::Minus: return "-1";
        case SignInference::Indeterminate: return "indeterminate";
        case SignInference::Inconsistent: return "inconsistent";
    }
    return "?";
}

SignInference infer_sign(const DefectConfiguration& config)
{
    validateHopfConfig(config);
    bool plusOk = true, minusOk = true, anyNonzero = false;
    for (const SurfaceDefect& s : config.surfaces) {
        Int lhs = surfaceSum(s);
        Int rhs = s.n * s.n * (*s.chi);
        if (rhs != 0 || lhs != 0) anyNonzero = true;
        if (lhs != rhs) plusOk = false;
        if (lhs != -rhs) minusOk = false;
    }
    if (!anyNonzero) return SignInference::Indeterminate;
    if (plusOk && minusOk) return SignInference::Indeterminate;  // all rhs zero, lhs zero
    if (plusOk) return SignInference::Plus;
    if (minusOk) return SignInference::Minus;
    return SignInference::Inconsistent;
}

VerificationReport verify_prop1(const DefectConfiguration& config, const C1Resolver& resolver)
{
    validateHopfConfig(config);
    VerificationReport R;
    R.identity = "prop1";
    R.sign = infer_sign(config);
    Int s = (R.sign == SignInference::Minus) ? -1 : 1;  // indeterminate acts as +1

    bool allSurfacesPass = (R.sign != SignInference::Inconsistent);
    Int sumRhs = 0, sumAll = 0;
    for (const SurfaceDefect& sd : config.surfaces) {
        SurfaceCheck c;
        c.id = sd.id;
        c.lhs = surfaceSum(sd);
        c.rhs = sd.n * sd.n * (*sd.chi);
        c.residual = c.lhs - s * c.rhs;
        c.pass = (c.residual == 0) && (R.sign != SignInference::Inconsistent);
        allSurfacesPass = allSurfacesPass && c.pass;
        sumRhs += c.rhs;
        sumAll += c.lhs;
        R.surfaces.push_back(c);
        R.provenance.push_back("surface " + sd.id + ": chi " + sd.provenance);
    }

    // global identity: sum of n^2 chi equals c1^2
    Int c1sq;
    if (config.c1Squared && config.c1Class)
        throw std::invalid_argument("configuration must supply exactly one of c1_squared / c1_class");
    if (config.c1Squared) {
        c1sq = *config.c1Squared;
        R.provenance.push_back("c1^2 supplied");
    } else if (config.c1Class) {
        if (!resolver)
            throw std::invalid_argument("c1_class given but no corpus resolver available");
        c1sq = resolver(config.c1Class->first, config.c1Class->second);
        R.provenance.push_back("c1^2 computed from class on " + config.c1Class->first);
    } else {
        throw std::invalid_argument("hopf configuration needs c1_squared or c1_class");
    }
    R.globalLhs = sumRhs;
    R.globalRhs = c1sq;
    R.globalResidual = sumRhs - c1sq;

    // conservation: point indices balance all replacement indices
    Int pts = 0;
    for (const Int& v : config.pointIndices) pts += v;
    R.conservationResidual = pts + sumAll;

    R.pass = allSurfacesPass && *R.globalResidual == 0 && *R.conservationResidual == 0;
    return R;
}

VerificationReport verify_prop2(const DefectConfiguration& config)
{
    validateSu3Config(config);
    VerificationReport R;
    R.identity = "prop2";
    R.sign = SignInference::Indeterminate;  // mod 2: no sign to infer
    bool all = true;
    for (const SurfaceDefect& sd : config.surfaces) {
        SurfaceCheck c;
        c.id = sd.id;
        c.lhs = surfaceSum(sd) % 2;
        c.rhs = (sd.n * Int(*sd.w2)) % 2;
        c.residual = (c.lhs - c.rhs) % 2 != 0 ? 1 : 0;
        c.pass = c.residual == 0;
        all = all && c.pass;
        R.surfaces.push_back(c);
        R.provenance.push_back("surface " + sd.id + ": w2 " + sd.provenance);
    }
    R.pass = all;
    return R;
}

VerificationReport theorem_instance_check(const FibrationProfile& profile,
                                          const CohomologyClass& lift_f,
                                          const CohomologyClass& lift_g,
                                          const CohomologyClass& ext_f,
                                          const CohomologyClass& ext_g)
{
    const int n = profile.n, q = profile.q;
    if (lift_f.degree != n + 1 || lift_g.degree != n + 1)
        throw std::invalid_argument("theorem check: lifting obstructions must have degree n+1");
    if (ext_f.degree != q + 1 || ext_g.degree != q + 1)
        throw std::invalid_argument("theorem check: extension obstructions must have degree q+1");
    if (!lift_f.coeff.isZ() || !lift_g.coeff.isZ())
        throw std::invalid_argument("theorem check: lifting obstructions must be integral");
    const Coeff wantG =
        profile.name == FibrationProfile::Hopf ? Coeff::integers() : Coeff::mod2();
    if (!(ext_f.coeff == wantG) || !(ext_g.coeff == wantG))
        throw std::invalid_argument("theorem check: extension obstructions have wrong coefficients");

    CohomologyClass thetaF = apply_theta(profile, class_negate(lift_f));
    CohomologyClass thetaG = apply_theta(profile, class_negate(lift_g));
    CohomologyClass lhs = class_sum(ext_f, class_negate(ext_g));
    CohomologyClass rhs = class_sum(thetaF, class_negate(thetaG));

    VerificationReport R;
    R.identity = "theorem_instance";
    R.sign = profile.name == FibrationProfile::Hopf
                 ? (profile.sign >= 0 ? SignInference::Plus : SignInference::Minus)
                 : SignInference::Indeterminate;
    SurfaceCheck c;
    c.id = "class identity";
    c.pass = is_cohomologous(lhs, rhs);
    c.residual = c.pass ? 0 : 1;
    R.surfaces.push_back(c);
    R.pass = c.pass;
    R.provenance.push_back("checked via Theta and cohomologous-ness on the given pair");
    return R;
}

Int local_index(const SimplicialMap& linkMap, const FibrationProfile& profile)
{
    const int targetDim = linkMap.target().dimension();
    Int value;
    if (targetDim == 2) {
        value = hopf_invariant(linkMap);
    } else if (targetDim == 3) {
        value = degree(linkMap);
    } else {
        throw std::invalid_argument("local_index: target must be an S^2 or S^3 model");
    }
    if (profile.name == FibrationProfile::Su3S4) {
        Int r = value % 2;
        if (r < 0) r += 2;
        return r;
    }
    return value;
}

} // namespace obtop
