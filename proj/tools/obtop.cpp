/**
 * obtop command line: homology/cohomology reports, ring operations,
 * intersection forms, Thom models, defect-scenario verification, and
 * corpus management.
 *
 * Exit codes: 0 success / verification passed, 1 verification failed,
 * 2 input or validation error.
 */

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "obtop/corpus.hpp"
#include "obtop/io.hpp"

using namespace obtop;

namespace {

struct Output {
    std::string path;    // empty = stdout
    std::string format;  // "text" or "structured"

    void emit(const std::string& text, const json& structured) const
    {
        std::ostringstream os;
        if (format == "structured")
            os << structured.dump(2) << "\n";
        else
            os << text;
        if (path.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream out(path);
            if (!out) throw std::invalid_argument("cannot write to " + path);
            out << os.str();
        }
    }
};

ComplexPtr resolveComplexArg(const std::string& arg)
{
    if (arg.rfind("corpus:", 0) == 0) return Corpus::instance().complex(arg.substr(7));
    return load_complex(parse_json_file(arg));
}

SimplicialPair resolvePairArg(const std::string& arg)
{
    if (arg.rfind("corpus:", 0) == 0) {
        const std::string id = arg.substr(7);
        const CorpusEntry& e = Corpus::instance().get(id);
        if (e.kind == CorpusEntry::Pair || e.kind == CorpusEntry::Thom) return *e.pair;
        return SimplicialPair::absolute(Corpus::instance().complex(id));
    }
    return load_pair(parse_json_file(arg));
}

SimplicialMap resolveMapArg(const std::string& arg)
{
    if (arg.rfind("corpus:", 0) == 0) {
        return Corpus::instance().mapOf(arg.substr(7));
    }
    ComplexResolver r = [](const std::string& id) { return Corpus::instance().complex(id); };
    return load_map(parse_json_file(arg), r);
}

Coeff parseCoeff(const std::string& s)
{
    if (s == "z" || s == "Z") return Coeff::integers();
    if (s == "z2" || s == "Z2") return Coeff::mod2();
    throw std::invalid_argument("coefficients must be z or z2");
}

/// "g0", "g1", ... selects a generator; "1,0,2" gives coordinates.
CohomologyClass parseClass(const SimplicialPair& P, int degreeK, const Coeff& coeff,
                           const std::string& spec)
{
    if (!spec.empty() && spec[0] == 'g') {
        int idx = std::stoi(spec.substr(1));
        return generator_class(P, degreeK, coeff, idx);
    }
    IntVec coords;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(Int(tok));
    return class_from_coordinates(P, degreeK, coeff, coords);
}

std::string coordsToText(const CohomologyClass& x)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x.coordinates.size(); ++i)
        os << (i ? "," : "") << x.coordinates[i];
    os << "]";
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"obtop: cohomology, characteristic-class algebra and defect-index "
                 "verification on finite simplicial complexes"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.path, "write the report to a file");
    out.format = "text";
    app.add_option("--format", out.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));

    std::string input, classSpec = "g0", xSpec = "g0", ySpec = "g0", coeffStr = "z";
    int degreeK = 0, xDeg = 0, yDeg = 0, sqK = 2, thomN = 1;

    auto* homologyCmd = app.add_subcommand("homology", "homology groups of a complex");
    homologyCmd->add_option("input", input)->required();
    homologyCmd->add_option("--degree", degreeK)->required();
    homologyCmd->add_option("--coeff", coeffStr);

    auto* cohomologyCmd = app.add_subcommand("cohomology", "cohomology of a complex or pair");
    cohomologyCmd->add_option("input", input)->required();
    cohomologyCmd->add_option("--degree", degreeK)->required();
    cohomologyCmd->add_option("--coeff", coeffStr);

    auto* cupCmd = app.add_subcommand("cup", "cup product of two classes");
    cupCmd->add_option("input", input)->required();
    cupCmd->add_option("--xdeg", xDeg)->required();
    cupCmd->add_option("--ydeg", yDeg)->required();
    cupCmd->add_option("--x", xSpec, "generator gI or coordinates");
    cupCmd->add_option("--y", ySpec);
    cupCmd->add_option("--coeff", coeffStr);

    auto* sqCmd = app.add_subcommand("sq", "Steenrod square of a mod-2 class");
    sqCmd->add_option("k", sqK)->required();
    sqCmd->add_option("input", input)->required();
    sqCmd->add_option("--degree", degreeK)->required();
    sqCmd->add_option("--class", classSpec, "generator gI or coordinates");

    auto* degreeCmd = app.add_subcommand("degree", "mapping degree");
    degreeCmd->add_option("input", input)->required();

    auto* hopfCmd = app.add_subcommand("hopf", "Hopf invariant of an S^3 -> S^2 map");
    hopfCmd->add_option("input", input)->required();

    auto* formCmd = app.add_subcommand("form", "intersection form of a closed oriented 4-manifold");
    formCmd->add_option("input", input)->required();

    auto* thomCmd = app.add_subcommand("thom", "validate a Thom model and its class algebra");
    thomCmd->add_option("input", input)->required();
    thomCmd->add_option("--n", thomN, "multiple of the Thom class for the square table");

    auto* verifyCmd = app.add_subcommand("verify", "verify a defect scenario");
    verifyCmd->add_option("input", input)->required();

    auto* corpusCmd = app.add_subcommand("corpus", "list or check the bundled corpus");
    std::string corpusAction = "list", corpusId;
    corpusCmd->add_option("action", corpusAction)->check(CLI::IsMember({"list", "check"}));
    corpusCmd->add_option("id", corpusId, "restrict check to one entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (homologyCmd->parsed()) {
            ComplexPtr K = resolveComplexArg(input);
            HomologyGroup G = homology(*K, degreeK, parseCoeff(coeffStr));
            out.emit(G.str() + "\n", group_to_json(G));
            return 0;
        }
        if (cohomologyCmd->parsed()) {
            SimplicialPair P = resolvePairArg(input);
            HomologyGroup G = cohomology(P, degreeK, parseCoeff(coeffStr));
            out.emit(G.str() + "\n", group_to_json(G));
            return 0;
        }
        if (cupCmd->parsed()) {
            SimplicialPair P = resolvePairArg(input);
            Coeff c = parseCoeff(coeffStr);
            CohomologyClass x = parseClass(P, xDeg, c, xSpec);
            CohomologyClass y = parseClass(P, yDeg, c, ySpec);
            CohomologyClass prod = cup(x, y);
            json j;
            j["degree"] = prod.degree;
            j["coordinates"] = json::array();
            for (const Int& v : prod.coordinates) j["coordinates"].push_back(v.str());
            out.emit("degree " + std::to_string(prod.degree) + " class " + coordsToText(prod) +
                         "\n",
                     j);
            return 0;
        }
        if (sqCmd->parsed()) {
            SimplicialPair P = resolvePairArg(input);
            CohomologyClass x = parseClass(P, degreeK, Coeff::mod2(), classSpec);
            CohomologyClass s = steenrod_sq(sqK, x);
            json j;
            j["degree"] = s.degree;
            j["coordinates"] = json::array();
            for (const Int& v : s.coordinates) j["coordinates"].push_back(v.str());
            bool zero = is_zero_class(s);
            j["zero"] = zero;
            out.emit("Sq^" + std::to_string(sqK) + " -> degree " + std::to_string(s.degree) +
                         " class " + coordsToText(s) + (zero ? " (zero)" : " (nonzero)") + "\n",
                     j);
            return 0;
        }
        if (degreeCmd->parsed()) {
            Int d = degree(resolveMapArg(input));
            out.emit(d.str() + "\n", json{{"degree", d.str()}});
            return 0;
        }
        if (hopfCmd->parsed()) {
            Int h = hopf_invariant(resolveMapArg(input));
            out.emit(h.str() + "\n", json{{"hopf_invariant", h.str()}});
            return 0;
        }
        if (formCmd->parsed()) {
            ComplexPtr K = resolveComplexArg(input);
            int orient = 1;
            if (input.rfind("corpus:", 0) == 0)
                orient = Corpus::instance().orientationSign(input.substr(7));
            IntersectionForm F = intersection_form(*K, orient);
            out.emit(form_to_text(F), form_to_json(F));
            return 0;
        }
        if (thomCmd->parsed()) {
            ThomModel T;
            if (input.rfind("corpus:", 0) == 0) {
                T = Corpus::instance().thom(input.substr(7));
            } else {
                ComplexResolver r = [](const std::string& id) {
                    return Corpus::instance().complex(id);
                };
                T = load_thom(parse_json_file(input), r);
            }
            json j;
            j["rank"] = T.rank;
            std::ostringstream os;
            if (T.rank == 2) {
                j["euler_number"] = T.eulerNumber.str();
                os << "rank 2 model, euler number " << T.eulerNumber << "\n";
                for (int n = 0; n <= thomN; ++n) {
                    Int c = thom_square(T, n);
                    os << "(" << n << " tau)^2 = " << c << " [DN]\n";
                    j["squares"].push_back(c.str());
                }
            } else {
                int w2 = sq2_thom(T);
                j["w2"] = w2;
                os << "rank 4 model, Sq^2 tau = " << w2 << " [DN] (mod 2)\n";
            }
            out.emit(os.str(), j);
            return 0;
        }
        if (verifyCmd->parsed()) {
            DefectConfiguration cfg;
            if (input.rfind("corpus:", 0) == 0)
                cfg = Corpus::instance().scenarioOf(input.substr(7));
            else
                cfg = load_scenario(parse_json_file(input));
            C1Resolver resolver = [](const std::string& id, const IntVec& coords) {
                return Corpus::instance().c1SquaredOf(id, coords);
            };
            VerificationReport R = cfg.profile.name == FibrationProfile::Hopf
                                       ? verify_prop1(cfg, resolver)
                                       : verify_prop2(cfg);
            out.emit(report_to_text(R), report_to_json(R));
            return R.pass ? 0 : 1;
        }
        if (corpusCmd->parsed()) {
            const Corpus& corpus = Corpus::instance();
            if (corpusAction == "list") {
                std::ostringstream os;
                json j = json::array();
                for (const std::string& id : corpus.ids()) {
                    const CorpusEntry& e = corpus.get(id);
                    static const char* kinds[] = {"complex", "pair", "map", "thom", "scenario"};
                    os << id << " [" << kinds[e.kind] << "]: " << e.provenance << "\n";
                    j.push_back({{"id", id}, {"kind", kinds[e.kind]}, {"provenance", e.provenance}});
                }
                out.emit(os.str(), j);
                return 0;
            }
            std::ostringstream os;
            json j = json::array();
            for (const std::string& id : corpus.ids()) {
                if (!corpusId.empty() && id != corpusId) continue;
                auto start = std::chrono::steady_clock::now();
                corpus.check(id);
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
                os << id << ": ok (" << ms << " ms)\n";
                j.push_back({{"id", id}, {"ok", true}});
            }
            out.emit(os.str(), j);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
