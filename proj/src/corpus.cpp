#include "obtop/corpus.hpp"

#include <algorithm>
#include <sstream>

namespace obtop {

SimplicialComplex circle_complex(int m)
{
    if (m < 3) throw std::invalid_argument("circle_complex: need at least 3 vertices");
    std::vector<Simplex> tops;
    for (int i = 0; i < m; ++i) tops.push_back({i, (i + 1) % m});
    return build_complex(tops, m);
}

SimplicialComplex sphere_boundary(int n)
{
    if (n < 0) throw std::invalid_argument("sphere_boundary: negative dimension");
    const int points = n + 2;
    std::vector<Simplex> tops;
    for (int skip = 0; skip < points; ++skip) {
        Simplex s;
        for (int v = 0; v < points; ++v)
            if (v != skip) s.push_back(v);
        tops.push_back(std::move(s));
    }
    return build_complex(tops, points);
}

SimplicialComplex path_complex(int m)
{
    if (m < 2) throw std::invalid_argument("path_complex: need at least 2 vertices");
    std::vector<Simplex> tops;
    for (int i = 0; i + 1 < m; ++i) tops.push_back({i, i + 1});
    return build_complex(tops, m);
}

SimplicialComplex real_projective_space(int n)
{
    if (n < 1) throw std::invalid_argument("real_projective_space: need n >= 1");
    if (n > 5) throw std::invalid_argument("real_projective_space: n > 5 is out of desk scale");
    SimplicialComplex S = sphere_boundary(n);
    Subdivision sd = barycentric_subdivision(S);
    const int nv = sd.sd.vertexCount();
    const int points = n + 2;
    const unsigned full = (1u << points) - 1;
    std::vector<unsigned> mask(nv, 0);
    std::map<unsigned, int> byMask;
    for (int v = 0; v < nv; ++v) {
        auto [d, idx] = sd.vertexSimplex[v];
        for (int w : S.simplex(d, idx)) mask[v] |= 1u << w;
        byMask[mask[v]] = v;
    }
    std::vector<int> cls(nv, -1);
    int next = 0;
    for (int v = 0; v < nv; ++v) {
        if (cls[v] >= 0) continue;
        auto it = byMask.find(full ^ mask[v]);
        if (it == byMask.end())
            throw std::logic_error("real_projective_space: complement vertex missing");
        cls[v] = next;
        cls[it->second] = next;
        ++next;
    }
    // the complement map is the simplicial antipode; the quotient is a
    // double cover quotient, so every facet must be hit exactly twice
    return quotient_complex(sd.sd, cls, 2);
}

SimplicialComplex klein_bottle_complex()
{
    SimplicialComplex tube = product_complex(circle_complex(4), path_complex(4));
    // vertex (j, t) has id 4j + t; glue (j,3) to (-j mod 4, 0)
    std::vector<int> cls(16, -1);
    for (int j = 0; j < 4; ++j)
        for (int t = 0; t < 3; ++t) cls[4 * j + t] = 3 * j + t;
    for (int j = 0; j < 4; ++j) cls[4 * j + 3] = 3 * ((4 - j) % 4);
    return quotient_complex(tube, cls, 0);
}

SimplicialMap circle_wrap_map(int d, int m)
{
    if (d < 1 || m < 3) throw std::invalid_argument("circle_wrap_map: need d >= 1, m >= 3");
    auto src = std::make_shared<const SimplicialComplex>(circle_complex(d * m));
    auto tgt = std::make_shared<const SimplicialComplex>(circle_complex(m));
    std::vector<int> imgs(d * m);
    for (int j = 0; j < d * m; ++j) imgs[j] = j % m;
    return SimplicialMap(src, tgt, std::move(imgs));
}

SimplicialMap double_suspension_map(const SimplicialMap& f)
{
    const int nK = f.source().vertexCount();
    const int nL = f.target().vertexCount();
    auto s2src = std::make_shared<const SimplicialComplex>(
        suspension(suspension(f.source())));
    auto s2tgt = std::make_shared<const SimplicialComplex>(
        suspension(suspension(f.target())));
    std::vector<int> imgs(nK + 4);
    for (int v = 0; v < nK; ++v) imgs[v] = f.image(v);
    for (int i = 0; i < 4; ++i) imgs[nK + i] = nL + i;
    return SimplicialMap(s2src, s2tgt, std::move(imgs));
}

SimplicialMap hopf_map_model()
{
    // Two solid tori C3 x D(C3); the disk coordinate is the angle
    // difference, so the bundle projection is literally the product
    // projection on each side. Global vertex ids: torus (theta j, psi k)
    // -> 3j+k, first core -> 9+j, second core -> 12+a.
    SimplicialComplex c3 = circle_complex(3);
    SimplicialComplex disk = cone_complex(c3);  // apex id 3
    SimplicialComplex ST = product_complex(c3, disk);
    auto mapVertex1 = [](int v) {
        int j = v / 4, x = v % 4;
        return x < 3 ? 3 * j + x : 9 + j;
    };
    auto mapVertex2 = [](int v) {
        int a = v / 4, x = v % 4;
        return x < 3 ? 3 * (((x - a) % 3 + 3) % 3) + x : 12 + a;
    };
    std::vector<Simplex> tops;
    for (const Simplex& F : ST.facets()) {
        Simplex s1, s2;
        for (int v : F) {
            s1.push_back(mapVertex1(v));
            s2.push_back(mapVertex2(v));
        }
        tops.push_back(std::move(s1));
        tops.push_back(std::move(s2));
    }
    auto S3 = std::make_shared<const SimplicialComplex>(build_complex(tops, 15));
    auto S2 = std::make_shared<const SimplicialComplex>(suspension(circle_complex(3)));
    std::vector<int> imgs(15);
    for (int v = 0; v < 9; ++v) imgs[v] = v % 3;   // equator angle psi
    for (int v = 9; v < 12; ++v) imgs[v] = 3;      // north pole
    for (int v = 12; v < 15; ++v) imgs[v] = 4;     // south pole
    return SimplicialMap(S3, S2, std::move(imgs));
}

namespace {

std::shared_ptr<const DefectConfiguration> prop1Scenario(int a)
{
    auto cfg = std::make_shared<DefectConfiguration>();
    cfg->profile = FibrationProfile::hopf();
    cfg->c1Class = {std::string("cp2"), IntVec{Int(a)}};
    SurfaceDefect s;
    s.id = "sigma";
    s.n = 1;
    s.chi = Int(a) * a;
    s.transversalAsserted = true;
    if (a == 1) s.replacementIndices = {1};
    else if (a == 2) s.replacementIndices = {1, 3};
    else s.replacementIndices = {4, Int(a) * a - 4};
    s.provenance = "chi = self-intersection of a*h on cp2";
    cfg->surfaces.push_back(s);
    cfg->pointIndices = {-(Int(a) * a)};
    return cfg;
}

std::shared_ptr<const DefectConfiguration> prop2Scenario(int n, int w2)
{
    auto cfg = std::make_shared<DefectConfiguration>();
    cfg->profile = FibrationProfile::su3_s4();
    SurfaceDefect s;
    s.id = "delta";
    s.n = n;
    s.w2 = w2;
    if (n * w2 == 1)
        s.replacementIndices = {1, 0, 0};
    else
        s.replacementIndices = {1, 1};
    cfg->surfaces.push_back(s);
    return cfg;
}

} // namespace

Corpus::Corpus()
{
    auto addComplex = [&](const std::string& id, SimplicialComplex K, std::string prov) {
        CorpusEntry e;
        e.id = id;
        e.kind = CorpusEntry::Complex;
        e.complex = std::make_shared<const SimplicialComplex>(std::move(K));
        e.provenance = std::move(prov);
        add(std::move(e));
    };
    auto addMap = [&](const std::string& id, SimplicialMap f, std::string prov) {
        CorpusEntry e;
        e.id = id;
        e.kind = CorpusEntry::Map;
        e.map = std::make_shared<const SimplicialMap>(std::move(f));
        e.provenance = std::move(prov);
        add(std::move(e));
    };

    for (int n = 1; n <= 5; ++n)
        addComplex("s" + std::to_string(n), sphere_boundary(n),
                   "boundary of the " + std::to_string(n + 1) + "-simplex");
    addComplex("c6", circle_complex(6), "hexagon circle");
    addComplex("torus", product_complex(circle_complex(3), circle_complex(3)),
               "staircase product of two triangle circles");
    addComplex("klein", klein_bottle_complex(),
               "circle x interval prism with ends glued by a reflection");
    addComplex("rp2", real_projective_space(2),
               "antipodal quotient of the barycentrically subdivided 2-sphere");
    addComplex("rp4", real_projective_space(4),
               "antipodal quotient of the barycentrically subdivided 4-sphere");
    addComplex("s2xs2", product_complex(sphere_boundary(2), sphere_boundary(2)),
               "staircase product of two tetrahedral spheres");

    SimplicialMap hopf = hopf_map_model();
    addComplex("s3_hopf", hopf.source(),
               "15-vertex S^3: two C3 x D(C3) solid tori glued with the Hopf twist");
    addComplex("s2_susp", hopf.target(), "suspended triangle circle");
    {
        CorpusEntry e;
        e.id = "hopf_map";
        e.kind = CorpusEntry::Map;
        e.map = std::make_shared<const SimplicialMap>(SimplicialMap(
            complex("s3_hopf"), complex("s2_susp"), hopf.vertexImages()));
        e.provenance =
            "disk-coordinate projection of the twisted solid-torus decomposition; "
            "validated by its cone cohomology and cup square";
        add(std::move(e));
    }
    addMap("wrap_c6_c3", circle_wrap_map(2, 3), "hexagon double wrap onto the triangle");
    addMap("susp2_wrap2", double_suspension_map(circle_wrap_map(2, 3)),
           "double suspension of the degree-2 circle wrap");
    addMap("susp2_wrap3", double_suspension_map(circle_wrap_map(3, 3)),
           "double suspension of the degree-3 circle wrap");

    MappingCone cone = mapping_cone(mapOf("hopf_map"));
    {
        CorpusEntry e;
        e.id = "cp2";
        e.kind = CorpusEntry::Complex;
        e.complex = cone.pair.totalPtr();
        e.provenance = "mapping cone of the Hopf model (cylinder plus cone on the "
                       "subdivided source)";
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "thom_e1";
        e.kind = CorpusEntry::Thom;
        e.pair = std::make_shared<const SimplicialPair>(
            SimplicialPair(complex("cp2"), {cone.apexId}));
        e.thomRank = 2;
        e.thomEuler = Int(1);
        e.provenance = "cp2 relative to the cone point: the euler-number-one disk "
                       "bundle over S^2 up to the Thom-model invariants";
        add(std::move(e));
    }
    {
        // trivial disk bundle over S^2: S^2 x (D^2, S^1)
        SimplicialComplex dn = product_complex(sphere_boundary(2), cone_complex(circle_complex(3)));
        std::vector<int> sub;
        for (int u = 0; u < 4; ++u)
            for (int x = 0; x < 3; ++x) sub.push_back(4 * u + x);
        CorpusEntry e;
        e.id = "thom_e0";
        e.kind = CorpusEntry::Thom;
        e.pair = std::make_shared<const SimplicialPair>(
            SimplicialPair(std::make_shared<const SimplicialComplex>(std::move(dn)), sub));
        e.thomRank = 2;
        e.thomEuler = Int(0);
        e.provenance = "trivial bundle S^2 x (D^2, S^1) as a staircase product";
        add(std::move(e));
    }
    {
        // rank-4 mod-2 model with w2 = 1: double suspension of (RP^4, pt)
        SimplicialComplex square = join_complexes(
            build_complex({{0}, {1}}, 2), build_complex({{0}, {1}}, 2));
        SimplicialComplex total = join_complexes(*complex("rp4"), square);
        std::vector<int> sub = {0};
        for (int i = 0; i < 4; ++i) sub.push_back(complex("rp4")->vertexCount() + i);
        CorpusEntry e;
        e.id = "thom_w2_1";
        e.kind = CorpusEntry::Thom;
        e.pair = std::make_shared<const SimplicialPair>(
            SimplicialPair(std::make_shared<const SimplicialComplex>(std::move(total)), sub));
        e.thomRank = 4;
        e.thomW2 = 1;
        e.provenance = "double suspension of (rp4, point); Sq^2 on degree 4 survives "
                       "suspension";
        add(std::move(e));
    }
    {
        // trivial rank-4 model over a surface: RP^2 x (D^4, S^3)
        SimplicialComplex dn =
            product_complex(real_projective_space(2), cone_complex(sphere_boundary(3)));
        std::vector<int> sub;
        for (int u = 0; u < 7; ++u)
            for (int x = 0; x < 5; ++x) sub.push_back(6 * u + x);
        CorpusEntry e;
        e.id = "thom_w2_0";
        e.kind = CorpusEntry::Thom;
        e.pair = std::make_shared<const SimplicialPair>(
            SimplicialPair(std::make_shared<const SimplicialComplex>(std::move(dn)), sub));
        e.thomRank = 4;
        e.thomW2 = 0;
        e.provenance = "trivial bundle RP^2 x (D^4, S^3) as a staircase product";
        add(std::move(e));
    }

    auto addScenario = [&](const std::string& id,
                           std::shared_ptr<const DefectConfiguration> cfg, std::string prov) {
        CorpusEntry e;
        e.id = id;
        e.kind = CorpusEntry::Scenario;
        e.scenario = std::move(cfg);
        e.provenance = std::move(prov);
        add(std::move(e));
    };
    for (int a = 1; a <= 3; ++a)
        addScenario("prop1_cp2_a" + std::to_string(a), prop1Scenario(a),
                    "c1 = a*h on cp2; one transversal surface with chi = a^2; points "
                    "balance conservation");
    {
        auto cfg = std::make_shared<DefectConfiguration>();
        cfg->profile = FibrationProfile::hopf();
        cfg->c1Squared = 13;
        SurfaceDefect s1;
        s1.id = "A";
        s1.n = 1;
        s1.chi = 1;
        s1.replacementIndices = {-1};
        SurfaceDefect s2;
        s2.id = "B";
        s2.n = 2;
        s2.chi = 3;
        s2.replacementIndices = {-5, -7};
        cfg->surfaces = {s1, s2};
        cfg->pointIndices = {13};
        addScenario("prop1_twosurface", cfg,
                    "two-surface configuration with uniform sign -1; points balance "
                    "conservation");
    }
    for (int n = 0; n <= 1; ++n)
        for (int w = 0; w <= 1; ++w)
            addScenario("prop2_n" + std::to_string(n) + "_w" + std::to_string(w),
                        prop2Scenario(n, w),
                        "mod-2 surface identity with matching index sum");
}

void Corpus::add(CorpusEntry e)
{
    order_.push_back(e.id);
    entries_.emplace(e.id, std::move(e));
}

const Corpus& Corpus::instance()
{
    static Corpus c;
    return c;
}

const CorpusEntry& Corpus::get(const std::string& id) const
{
    auto it = entries_.find(id);
    if (it == entries_.end())
        throw std::invalid_argument("unknown corpus id: " + id);
    return it->second;
}

ComplexPtr Corpus::complex(const std::string& id) const
{
    const CorpusEntry& e = get(id);
    if (e.kind == CorpusEntry::Complex) return e.complex;
    if (e.kind == CorpusEntry::Pair || e.kind == CorpusEntry::Thom)
        return e.pair->totalPtr();
    throw std::invalid_argument("corpus entry '" + id + "' is not a complex");
}

const SimplicialPair& Corpus::pairOf(const std::string& id) const
{
    const CorpusEntry& e = get(id);
    if (e.kind != CorpusEntry::Pair && e.kind != CorpusEntry::Thom)
        throw std::invalid_argument("corpus entry '" + id + "' is not a pair");
    return *e.pair;
}

const SimplicialMap& Corpus::mapOf(const std::string& id) const
{
    const CorpusEntry& e = get(id);
    if (e.kind != CorpusEntry::Map)
        throw std::invalid_argument("corpus entry '" + id + "' is not a map");
    return *e.map;
}

const DefectConfiguration& Corpus::scenarioOf(const std::string& id) const
{
    const CorpusEntry& e = get(id);
    if (e.kind != CorpusEntry::Scenario)
        throw std::invalid_argument("corpus entry '" + id + "' is not a scenario");
    return *e.scenario;
}

const ThomModel& Corpus::thom(const std::string& id) const
{
    const CorpusEntry& e = get(id);
    if (e.kind != CorpusEntry::Thom)
        throw std::invalid_argument("corpus entry '" + id + "' is not a Thom model");
    std::lock_guard<std::mutex> lock(lazyMutex_);
    auto it = thomCache_.find(id);
    if (it == thomCache_.end()) {
        auto model = std::make_shared<const ThomModel>(
            make_thom_model(*e.pair, e.thomRank, e.thomEuler, e.thomW2));
        it = thomCache_.emplace(id, std::move(model)).first;
    }
    return *it->second;
}

int Corpus::orientationSign(const std::string& id) const
{
    {
        std::lock_guard<std::mutex> lock(lazyMutex_);
        auto it = orientCache_.find(id);
        if (it != orientCache_.end()) return it->second;
    }
    ComplexPtr K = complex(id);
    int sign = 1;
    if (K->dimension() == 4) {
        IntersectionForm F = intersection_form(*K, +1);
        if (!F.basis.empty() && F.matrix[0][0] < 0) sign = -1;
    }
    std::lock_guard<std::mutex> lock(lazyMutex_);
    orientCache_[id] = sign;
    return sign;
}

Int Corpus::c1SquaredOf(const std::string& id, const IntVec& coords) const
{
    ComplexPtr K = complex(id);
    SimplicialPair P = SimplicialPair::absolute(K);
    CohomologyClass c1 = class_from_coordinates(P, 2, Coeff::integers(), coords);
    return self_intersection(*K, c1, orientationSign(id));
}

void Corpus::check(const std::string& id) const
{
    const CorpusEntry& e = get(id);
    auto expectHomology = [&](const std::vector<std::string>& strings) {
        for (std::size_t k = 0; k < strings.size(); ++k) {
            HomologyGroup H = homology(*e.complex, static_cast<int>(k), Coeff::integers());
            if (H.str() != strings[k])
                throw std::runtime_error("corpus check failed for " + id + ": H_" +
                                         std::to_string(k) + " = " + H.str() +
                                         ", expected " + strings[k]);
        }
    };
    if (id == "s1") expectHomology({"Z^1", "Z^1"});
    else if (id == "s2") expectHomology({"Z^1", "0", "Z^1"});
    else if (id == "s3") expectHomology({"Z^1", "0", "0", "Z^1"});
    else if (id == "s4") expectHomology({"Z^1", "0", "0", "0", "Z^1"});
    else if (id == "s5") expectHomology({"Z^1", "0", "0", "0", "0", "Z^1"});
    else if (id == "c6") expectHomology({"Z^1", "Z^1"});
    else if (id == "torus") expectHomology({"Z^1", "Z^2", "Z^1"});
    else if (id == "klein") expectHomology({"Z^1", "Z^1 + Z/2", "0"});
    else if (id == "rp2") expectHomology({"Z^1", "Z/2", "0"});
    else if (id == "rp4") expectHomology({"Z^1", "Z/2", "0", "Z/2", "0"});
    else if (id == "s2xs2") expectHomology({"Z^1", "0", "Z^2", "0", "Z^1"});
    else if (id == "cp2") expectHomology({"Z^1", "0", "Z^1", "0", "Z^1"});
    else if (id == "s3_hopf") expectHomology({"Z^1", "0", "0", "Z^1"});
    else if (id == "s2_susp") expectHomology({"Z^1", "0", "Z^1"});
    else if (id == "hopf_map") {
        Int h = hopf_invariant(*e.map);
        if (h != 1 && h != -1)
            throw std::runtime_error("corpus check failed: hopf model invariant " + h.str());
    } else if (id == "wrap_c6_c3") {
        Int d = degree(*e.map);
        if (d != 2 && d != -2)
            throw std::runtime_error("corpus check failed: wrap degree " + d.str());
    } else if (id == "susp2_wrap2") {
        Int d = degree(*e.map);
        if (d != 2 && d != -2)
            throw std::runtime_error("corpus check failed: suspended wrap degree " + d.str());
    } else if (id == "susp2_wrap3") {
        Int d = degree(*e.map);
        if (d != 3 && d != -3)
            throw std::runtime_error("corpus check failed: suspended wrap degree " + d.str());
    } else if (e.kind == CorpusEntry::Thom) {
        thom(id);  // building the model re-derives e / w2 and validates
    } else if (e.kind == CorpusEntry::Scenario) {
        const DefectConfiguration& cfg = *e.scenario;
        C1Resolver resolver = [this](const std::string& mid, const IntVec& c) {
            return c1SquaredOf(mid, c);
        };
        VerificationReport R = cfg.profile.name == FibrationProfile::Hopf
                                   ? verify_prop1(cfg, resolver)
                                   : verify_prop2(cfg);
        if (!R.pass)
            throw std::runtime_error("corpus check failed: scenario " + id +
                                     " does not verify");
    }
}

} // namespace obtop
