#include "obtop/io.hpp"

#include <fstream>
#include <sstream>

namespace obtop {

namespace {

std::vector<Simplex> parseTops(const json& j)
{
    std::vector<Simplex> tops;
    for (const auto& t : j) {
        Simplex s;
        for (const auto& v : t) s.push_back(v.get<int>());
        tops.push_back(std::move(s));
    }
    return tops;
}

ComplexPtr resolveComplex(const json& j, const ComplexResolver& resolver)
{
    if (j.is_string()) {
        std::string ref = j.get<std::string>();
        if (ref.rfind("corpus:", 0) == 0) ref = ref.substr(7);
        if (!resolver) throw std::invalid_argument("no resolver for complex reference " + ref);
        return resolver(ref);
    }
    return load_complex(j);
}

} // namespace

ComplexPtr load_complex(const json& j)
{
    if (!j.contains("top_simplices"))
        throw std::invalid_argument("complex file needs a top_simplices field");
    int vertices = j.value("vertices", -1);
    return std::make_shared<const SimplicialComplex>(
        build_complex(parseTops(j.at("top_simplices")), vertices));
}

SimplicialPair load_pair(const json& j)
{
    ComplexPtr total = load_complex(j);
    std::vector<int> sub;
    if (j.contains("sub_vertices"))
        for (const auto& v : j.at("sub_vertices")) sub.push_back(v.get<int>());
    return SimplicialPair(total, sub);
}

SimplicialMap load_map(const json& j, const ComplexResolver& resolver)
{
    if (!j.contains("source") || !j.contains("target") || !j.contains("vertex_images"))
        throw std::invalid_argument("map file needs source, target and vertex_images");
    ComplexPtr src = resolveComplex(j.at("source"), resolver);
    ComplexPtr tgt = resolveComplex(j.at("target"), resolver);
    std::vector<int> imgs;
    for (const auto& v : j.at("vertex_images")) imgs.push_back(v.get<int>());
    return SimplicialMap(src, tgt, std::move(imgs));
}

ThomModel load_thom(const json& j, const ComplexResolver& resolver)
{
    if (!j.contains("pair") || !j.contains("rank"))
        throw std::invalid_argument("thom model file needs pair and rank");
    (void)resolver;
    SimplicialPair pair = load_pair(j.at("pair"));
    int rank = j.at("rank").get<int>();
    std::optional<Int> e;
    std::optional<int> w2;
    if (j.contains("e")) e = Int(j.at("e").get<long long>());
    if (j.contains("w2")) w2 = j.at("w2").get<int>();
    return make_thom_model(pair, rank, e, w2);
}

DefectConfiguration load_scenario(const json& j)
{
    DefectConfiguration cfg;
    std::string profile = j.value("profile", "");
    if (profile == "hopf") cfg.profile = FibrationProfile::hopf();
    else if (profile == "su3_s4") cfg.profile = FibrationProfile::su3_s4();
    else throw std::invalid_argument("scenario profile must be hopf or su3_s4");

    if (j.contains("c1_squared")) cfg.c1Squared = Int(j.at("c1_squared").get<long long>());
    if (j.contains("c1_class")) {
        const json& c = j.at("c1_class");
        IntVec coords;
        for (const auto& v : c.at("coords")) coords.push_back(Int(v.get<long long>()));
        cfg.c1Class = {c.at("manifold").get<std::string>(), coords};
    }
    if (cfg.profile.name == FibrationProfile::Hopf && cfg.c1Squared && cfg.c1Class)
        throw std::invalid_argument("scenario: give exactly one of c1_squared / c1_class");
    if (j.contains("point_indices"))
        for (const auto& v : j.at("point_indices")) cfg.pointIndices.push_back(Int(v.get<long long>()));
    int counter = 0;
    for (const auto& s : j.value("surfaces", json::array())) {
        SurfaceDefect d;
        d.id = s.value("id", "surface" + std::to_string(counter++));
        d.n = Int(s.at("n").get<long long>());
        if (s.contains("chi")) d.chi = Int(s.at("chi").get<long long>());
        if (s.contains("w2")) d.w2 = s.at("w2").get<int>();
        if (s.contains("transversal")) d.transversalAsserted = s.at("transversal").get<bool>();
        for (const auto& v : s.at("replacement_indices"))
            d.replacementIndices.push_back(Int(v.get<long long>()));
        cfg.surfaces.push_back(std::move(d));
    }
    return cfg;
}

json complex_to_json(const SimplicialComplex& K)
{
    json j;
    j["vertices"] = K.vertexCount();
    json tops = json::array();
    for (const Simplex& F : K.facets()) tops.push_back(F);
    j["top_simplices"] = tops;
    return j;
}

json pair_to_json(const SimplicialPair& P)
{
    json j = complex_to_json(P.total());
    j["sub_vertices"] = P.subVertices();
    return j;
}

json report_to_json(const VerificationReport& R)
{
    json j;
    j["identity"] = R.identity;
    j["pass"] = R.pass;
    j["sign"] = to_string(R.sign);
    json surfaces = json::array();
    for (const SurfaceCheck& c : R.surfaces) {
        json s;
        s["id"] = c.id;
        s["lhs"] = c.lhs.str();
        s["rhs"] = c.rhs.str();
        s["residual"] = c.residual.str();
        s["pass"] = c.pass;
        surfaces.push_back(s);
    }
    j["surfaces"] = surfaces;
    if (R.globalResidual) {
        j["global"] = {{"sum_n2_chi", R.globalLhs->str()},
                       {"c1_squared", R.globalRhs->str()},
                       {"residual", R.globalResidual->str()}};
    }
    if (R.conservationResidual)
        j["conservation_residual"] = R.conservationResidual->str();
    j["provenance"] = R.provenance;
    return j;
}

std::string report_to_text(const VerificationReport& R)
{
    std::ostringstream os;
    os << "identity: " << R.identity << "\n";
    os << "sign: " << to_string(R.sign) << "\n";
    for (const SurfaceCheck& c : R.surfaces)
        os << "surface " << c.id << ": lhs " << c.lhs << ", rhs " << c.rhs << ", residual "
           << c.residual << " -> " << (c.pass ? "ok" : "FAIL") << "\n";
    if (R.globalResidual)
        os << "global: sum n^2 chi " << *R.globalLhs << " vs c1^2 " << *R.globalRhs
           << ", residual " << *R.globalResidual << " -> "
           << (*R.globalResidual == 0 ? "ok" : "FAIL") << "\n";
    if (R.conservationResidual)
        os << "conservation residual: " << *R.conservationResidual << " -> "
           << (*R.conservationResidual == 0 ? "ok" : "FAIL") << "\n";
    for (const std::string& p : R.provenance) os << "note: " << p << "\n";
    os << "result: " << (R.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

json group_to_json(const HomologyGroup& G)
{
    json j;
    j["degree"] = G.degree;
    j["coefficients"] = G.coeff.str();
    j["group"] = G.str();
    j["free_rank"] = G.freeRank;
    json tors = json::array();
    for (const Int& t : G.torsion) tors.push_back(t.str());
    j["torsion"] = tors;
    json gens = json::array();
    for (const IntVec& g : G.generators) {
        json gen = json::array();
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) gen.push_back({{"simplex", i}, {"coeff", g[i].str()}});
        gens.push_back(gen);
    }
    j["generators"] = gens;
    return j;
}

std::string group_to_text(const HomologyGroup& G)
{
    std::ostringstream os;
    os << G.str();
    return os.str();
}

json form_to_json(const IntersectionForm& F)
{
    json j;
    json m = json::array();
    for (const auto& row : F.matrix) {
        json r = json::array();
        for (const Int& v : row) r.push_back(v.str());
        m.push_back(r);
    }
    j["matrix"] = m;
    j["rank"] = F.basis.size();
    j["signature"] = F.signature;
    j["abs_determinant"] = F.determinant.str();
    json tors = json::array();
    for (const Int& t : F.torsion) tors.push_back(t.str());
    j["h2_torsion"] = tors;
    return j;
}

std::string form_to_text(const IntersectionForm& F)
{
    std::ostringstream os;
    os << "rank " << F.basis.size() << ", signature " << F.signature << ", |det| "
       << F.determinant << "\n";
    for (const auto& row : F.matrix) {
        os << "[";
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? " " : "") << row[i];
        os << "]\n";
    }
    if (!F.torsion.empty()) {
        os << "h2 torsion:";
        for (const Int& t : F.torsion) os << " Z/" << t;
        os << "\n";
    }
    return os.str();
}

json parse_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("cannot parse " + path + ": " + e.what());
    }
    return j;
}

} // namespace obtop
