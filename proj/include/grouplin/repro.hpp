#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouplin/search.hpp"

namespace grouplin {

// Functions with known properties, as image vectors over canonical orderings.

/// C8 → C8 graph {(0,0),(1,5),(2,7),(3,7),(4,7),(5,4),(6,5),(7,4)}; its
/// largest nonprincipal value is sqrt(10 + 4√2) < 4.
Images c8_sub_four_witness();

/// S3 → C3 sending e and the transpositions to 0 and both 3-cycles to 1; bent
/// but not perfect nonlinear.
Images s3_c3_bent_witness();

/// x ↦ x³ on F8 = F2[x]/(x³+x+1), as a map C2xC2xC2 → C2xC2xC2 where the
/// product index bits are the polynomial coefficients.
Images f8_cube_map();

/// x ↦ x² on C_p.
Images square_map(unsigned p);

struct ReproRow {
    std::string domain;
    std::string codomain;
    std::uint64_t expected_sum = 0;
    double expected_max = 0;
    std::string max_closed_form;
    std::optional<bool> expected_spectral_coincidence;

    SearchReport report;
    std::optional<SearchReport> unitary_report;  // basis comparison, order-6 table only

    std::int64_t sum = 0;  // min fourth-power sum, rounded
    double sum_integrality = 0;  // distance of the unrounded sum from `sum`
    bool sum_ok = false;
    bool max_ok = false;
    bool coincidence_ok = true;
    bool passed() const { return sum_ok && max_ok && coincidence_ok; }
};

struct BentRow {
    std::string codomain;
    bool expected_found = false;
    bool found = false;
    std::optional<Images> witness;
    bool witness_verified = false;
    bool passed() const { return found == expected_found && (!found || witness_verified); }
};

struct ReproResult {
    std::string target;
    Realization realization = Realization::unitary;
    std::vector<ReproRow> rows;
    std::vector<BentRow> bent_rows;
    bool passed() const;
};

inline constexpr double kReproTolerance = 1e-6;

/// Order-6 pairs over S3 and C6, computed in the tabulated realization.
ReproResult repro_table1(unsigned workers = 1);
/// The nine pairs of Abelian groups of order 8.
ReproResult repro_table2(unsigned workers = 1);
/// Bent search from S3 into C2, C3, C4, C2xC2, C5.
ReproResult repro_bent_s3(unsigned workers = 1);
ReproResult run_repro(const std::string& target, unsigned workers = 1);

nlohmann::json to_json(const ReproResult& r);
std::string to_csv(const ReproResult& r);

}  // namespace grouplin
