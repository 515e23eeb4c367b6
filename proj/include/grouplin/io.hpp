#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "grouplin/algebra.hpp"
#include "grouplin/irreps.hpp"
#include "grouplin/nonlinearity.hpp"
#include "grouplin/search.hpp"

namespace grouplin {

class FunctionFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"domain": spec, "codomain": spec, "images": [...]} with indices in the
/// frozen canonical element orderings.
FunctionTable function_from_json(const nlohmann::json& j);
FunctionTable load_function_file(const std::filesystem::path& path);
nlohmann::json function_to_json(const FunctionTable& f, const std::string& domain_spec,
                                const std::string& codomain_spec);

nlohmann::json to_json(const MeasureReport& r);
nlohmann::json to_json(const SearchReport& r, bool include_timing = true);
nlohmann::json irreps_to_json(const IrrepSet& s);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace grouplin
