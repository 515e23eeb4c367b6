#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouplin/irreps.hpp"

namespace grouplin {

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t samples = 8;  // random algebra elements and random functions per group
    double tolerance = kMatrixTolerance;
    double identity_tolerance = 1e-6;  // relative
};

struct SuiteReport {
    std::string group;
    VerificationReport irreps;
    std::optional<VerificationReport> tabulated;  // only when the bases differ
    double parseval_residual = 0;
    double inversion_residual = 0;
    double identity_residual = 0;  // relative, over random functions G → G
    std::size_t functions_checked = 0;
    SuiteOptions options;
    bool passed() const;
};

/// Irrep verification, Parseval and inversion on random algebra elements, and
/// Σ dim ‖ρρ*‖² = |G|·Σδ² on random functions G → G, all using `dual`.
SuiteReport run_suite(const IrrepSetPtr& dual, const SuiteOptions& options = {});
SuiteReport run_suite(const GroupPtr& g, const SuiteOptions& options = {});

/// Specs covered by `verify all`: catalogue groups and small products up to order 16.
std::vector<std::string> verify_catalogue();

/// Copy of `dual` with one matrix of one non-principal irrep perturbed.
IrrepSetPtr corrupt_irrep(const IrrepSet& dual);

nlohmann::json to_json(const SuiteReport& r);

}  // namespace grouplin
