#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hlgt/hamiltonian.hpp"

namespace hlgt {

// Raised when loaded data parses but fails its validator; carries the full
// report so the CLI can emit it and exit with the validation status.
struct ValidationFailure : std::runtime_error {
    ValidationFailure(std::string what, ValidationReport r)
        : std::runtime_error(std::move(what)), report(std::move(r)) {}
    ValidationReport report;
};

// All tables index group elements by integer position with identity = 0;
// cells are indexed by position in their arrays.
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const CrossedModule& cm);
CrossedModule module_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const CellComplex& x);
CellComplex complex_from_json(const nlohmann::json& j);

nlohmann::json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ValidationReport& r);
nlohmann::json oracle_to_json(const OracleReport& r);

// Weight values are numbers or [re, im] pairs.
WeightFunction weight_from_json(WeightRole role, const nlohmann::json& j);
nlohmann::json weight_to_json(const WeightFunction& w);

nlohmann::json spectrum_to_json(const Spectrum& s, const long* oracle_prediction = nullptr);
// eigenvalue,multiplicity rows, eigenvalues clustered within tol
std::string spectrum_to_csv(const Spectrum& s, double tol = kDegeneracyTol);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// A catalog name, or a path to a JSON file.  File data is validated; with
// `report` given the issues are stored instead of raising ValidationFailure.
CrossedModule resolve_module(const std::string& name_or_path, ValidationReport* report = nullptr);
CellComplex resolve_complex(const std::string& name_or_path, ValidationReport* report = nullptr);

}  // namespace hlgt
