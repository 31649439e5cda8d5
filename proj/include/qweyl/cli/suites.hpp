#pragma once

#include <string>
#include <vector>

#include "qweyl/cli/report.hpp"
#include "qweyl/series/named_identities.hpp"

namespace qweyl::cli {

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// throws std::invalid_argument on an unknown name
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

// group word applied to an expression; monomial results factor out central aliases when shorter
std::string act_text(const std::string& group, const std::string& word, const std::string& on,
                     PrintStyle style = PrintStyle::Parenthesized);

// witness object: first discrepancy or null
weyl::RelationReport identity_relation(const series::NamedIdentity& id, const series::IdentityReport& r,
                                       nlohmann::ordered_json& witness);

}  // namespace qweyl::cli
