#pragma once

#include "dp5/casework.hpp"
#include "dp5/covers.hpp"
#include "dp5/parse_error.hpp"
#include "dp5/picard_lattice.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dp5 {

using json = nlohmann::json;

Basis parse_basis(const std::string& s);
std::string basis_name(Basis b);

/// {"coeffs": [...], "basis": ..., "config": ...}; rational entries are "p/q" strings.
json class_to_json(const DivisorClass& d, Basis basis, ConfigId cfg);
json class_to_json(const QDivisorClass& d, Basis basis, ConfigId cfg);

struct TaggedClass {
    QDivisorClass cls;  // standard basis
    Basis basis = Basis::Standard;
    ConfigId cfg = ConfigId::General;
};

/// Accepts the object form, or a literal string read in the given defaults. Throws ParseError.
TaggedClass class_from_json(const json& j, Basis default_basis = Basis::Standard,
                            ConfigId default_cfg = ConfigId::General, const std::string& field = "class");
DivisorClass integral_class_from_json(const json& j, Basis default_basis = Basis::Standard,
                                      ConfigId default_cfg = ConfigId::General, const std::string& field = "class");

json row_to_json(const SolutionRow& r);
SolutionRow row_from_json(const json& j);

json bidouble_to_json(const BidoubleData& b, const std::string& name = "");

struct Scenario {
    std::string kind;
    std::string name;
    /// double_cover: one entry per branch self-intersection when a family is given
    std::vector<DoubleCoverScenario> covers;
    std::optional<BidoubleData> bidouble;
    std::optional<TableCase> table;
    std::string printed_path;
    json expect;
};

/// Parses a scenario document; diagnostics carry the line of the offending field.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Bundled scenario file under the data directory.
std::string data_path(const std::string& relative);

}  // namespace dp5
