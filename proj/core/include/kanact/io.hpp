#pragma once

// JSON files for complexes, groups, quotients, actions and theorem cases.
// Canonical text: sorted keys, two-space indent, trailing newline.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kanact/covering.hpp"
#include "kanact/groups.hpp"
#include "kanact/homology.hpp"
#include "kanact/pi_one.hpp"
#include "kanact/simplicial_set.hpp"
#include "kanact/theorems.hpp"

namespace kanact {

using Json = nlohmann::json;

std::string canonical_dump(const Json& j);
/// ParseError carries the line and column of malformed text.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json complex_to_json(const SSetPresentation& x);
/// Validates the simplicial identities; a failure names the identity.
SSetPresentation complex_from_json(const Json& j, bool check_identities = true);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);
/// A file path (resolved against base), a spec such as "Z3", or an inline
/// group object.
FiniteGroup resolve_group(const Json& ref, const std::filesystem::path& base);

Json quotient_to_json(const QuotientMap& q, const SSetPresentation& k, const Json& group_ref);
QuotientMap quotient_from_json(const Json& j, const SSetPresentation& k,
                               const std::filesystem::path& base);

Json action_to_json(const SimplicialAction& a, const SSetPresentation& x, const Json& group_ref);
/// Checks faces are respected and the maps form an action.
SimplicialAction action_from_json(const Json& j, const SSetPresentation& x,
                                  const std::filesystem::path& base);

struct PhiData {
  FiniteGroup group;
  AutomorphismAction phi;
};
Json phi_to_json(const PhiData& p, const FiniteGroup& q, const Json& group_ref);
PhiData phi_from_json(const Json& j, const FiniteGroup& q, const std::filesystem::path& base);

/// Resolves every referenced file relative to the case file.
TheoremCase load_case(const std::filesystem::path& path);

Json homology_to_json(const HomologyResult& h);
std::string format_homology(const HomologyResult& h);

Json reports_to_json(const std::string& case_name, const std::vector<TheoremReport>& reports);
std::string format_reports(const std::string& case_name, const std::vector<TheoremReport>& reports);

}  // namespace kanact
