/**
 * File formats (JSON) for complexes, pairs, maps, Thom models and defect
 * scenarios, plus deterministic text/JSON rendering of reports.
 */

#ifndef OBTOP_IO_HPP
#define OBTOP_IO_HPP

#include <functional>
#include <string>

#include <json.hpp>

#include "obtop/defect.hpp"
#include "obtop/manifold.hpp"
#include "obtop/simplicial.hpp"

namespace obtop {

using nlohmann::json;

/// Resolves a "corpus:<id>" reference to a complex.
using ComplexResolver = std::function<ComplexPtr(const std::string&)>;

ComplexPtr load_complex(const json& j);
SimplicialPair load_pair(const json& j);
SimplicialMap load_map(const json& j, const ComplexResolver& resolver = {});
ThomModel load_thom(const json& j, const ComplexResolver& resolver = {});
DefectConfiguration load_scenario(const json& j);

json complex_to_json(const SimplicialComplex& K);
json pair_to_json(const SimplicialPair& P);

json report_to_json(const VerificationReport& R);
std::string report_to_text(const VerificationReport& R);

json group_to_json(const HomologyGroup& G);
std::string group_to_text(const HomologyGroup& G);

json form_to_json(const IntersectionForm& F);
std::string form_to_text(const IntersectionForm& F);

json parse_json_file(const std::string& path);

} // namespace obtop

#endif
