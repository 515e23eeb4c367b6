#include "grouplin/repro.hpp"

#include <cmath>
#include <sstream>

#include "grouplin/io.hpp"

namespace grouplin {

using nlohmann::json;

Images c8_sub_four_witness() { return {0, 5, 7, 7, 7, 4, 5, 4}; }

Images s3_c3_bent_witness() { return {0, 0, 0, 0, 1, 1}; }

Images f8_cube_map() {
    auto mul = [](unsigned a, unsigned b) {
        unsigned r = 0;
        for (int i = 0; i < 3; ++i)
            if (b >> i & 1) r ^= a << i;
        for (int i = 4; i >= 3; --i)
            if (r >> i & 1) r ^= 0b1011u << (i - 3);
        return r;
    };
    Images out(8);
    for (unsigned x = 0; x < 8; ++x) out[x] = mul(mul(x, x), x);
    return out;
}

Images square_map(unsigned p) {
    Images out(p);
    for (unsigned x = 0; x < p; ++x) out[x] = (x * x) % p;
    return out;
}

bool ReproResult::passed() const {
    for (const auto& r : rows)
        if (!r.passed()) return false;
    for (const auto& r : bent_rows)
        if (!r.passed()) return false;
    return true;
}

namespace {

struct Expected {
    const char* domain;
    const char* codomain;
    std::uint64_t sum;
    double max;
    const char* closed_form;
    std::optional<bool> spectral_coincidence;
};

ReproRow run_row(const Expected& e, Realization realization, unsigned workers,
                 bool with_unitary) {
    SearchSpec spec;
    spec.domain = e.domain;
    spec.codomain = e.codomain;
    spec.objectives = {Objective::coincidence};
    spec.realization = realization;
    spec.workers = workers;
    spec.tolerance = kReproTolerance;

    ReproRow row;
    row.domain = e.domain;
    row.codomain = e.codomain;
    row.expected_sum = e.sum;
    row.expected_max = e.max;
    row.max_closed_form = e.closed_form;
    row.expected_spectral_coincidence = e.spectral_coincidence;
    row.report = coincidence_scan(spec);
    if (with_unitary && realization != Realization::unitary) {
        spec.realization = Realization::unitary;
        row.unitary_report = coincidence_scan(spec);
    }

    const double sum = row.report.min_spectral_sum->value;
    row.sum = std::llround(sum);
    row.sum_integrality = std::abs(sum - static_cast<double>(row.sum));
    row.sum_ok = row.sum_integrality < kReproTolerance &&
                 row.sum == static_cast<std::int64_t>(e.sum);
    row.max_ok = std::abs(row.report.min_max_nonlinearity->value - e.max) < kReproTolerance;
    if (e.spectral_coincidence)
        row.coincidence_ok = row.report.coincidence->spectral_coincidence == *e.spectral_coincidence;
    return row;
}

}  // namespace

ReproResult repro_table1(unsigned workers) {
    static const Expected rows[] = {
        {"S3", "C6", 2376, 4.0, "4", true},
        {"C6", "S3", 3972, 4.0 * std::sqrt(2.0), "4*sqrt(2)", false},
        {"S3", "S3", 3552, 2.0 * std::sqrt(14.0), "2*sqrt(14)", false},
        {"C6", "C6", 2808, 2.0 * std::sqrt(3.0), "2*sqrt(3)", false},
    };
    ReproResult r;
    r.target = "table1";
    r.realization = Realization::tabulated;
    for (const auto& e : rows) r.rows.push_back(run_row(e, r.realization, workers, true));
    return r;
}

ReproResult repro_table2(unsigned workers) {
    const double z8 = std::sqrt(10.0 + 4.0 * std::sqrt(2.0));
    static const char* z8s = "C8";
    static const char* z42 = "C4xC2";
    static const char* z222 = "C2xC2xC2";
    const Expected rows[] = {
        {z8s, z8s, 8832, z8, "sqrt(10+4*sqrt(2))", false},
        {z8s, z42, 8576, 4.0, "4", true},
        {z8s, z222, 9216, 4.0, "4", true},
        {z42, z8s, 8960, 4.0, "4", true},
        {z42, z42, 9216, 4.0, "4", true},
        {z42, z222, 10240, 4.0, "4", true},
        {z222, z8s, 9216, 4.0, "4", true},
        {z222, z42, 10240, 4.0, "4", true},
        {z222, z222, 11264, 4.0, "4", true},
    };
    ReproResult r;
    r.target = "table2";
    r.realization = Realization::unitary;
    for (const auto& e : rows) r.rows.push_back(run_row(e, r.realization, workers, false));
    return r;
}

ReproResult repro_bent_s3(unsigned workers) {
    ReproResult r;
    r.target = "bent-s3";
    const auto s3 = make_symmetric3();
    for (const char* codomain : {"C2", "C3", "C4", "C2xC2", "C5"}) {
        SearchSpec spec;
        spec.domain = "S3";
        spec.codomain = codomain;
        spec.workers = workers;
        const SearchReport report = bent_search(spec);
        BentRow row;
        row.codomain = codomain;
        row.expected_found = std::string(codomain) == "C3";
        row.found = report.bent_found.value_or(false);
        row.witness = report.bent_witness;
        if (row.witness) {
            const auto n = parse_group_spec(codomain);
            const FunctionTable f(s3, n, *row.witness);
            row.witness_verified =
                is_bent(f, *irreps_of(direct_product(s3, n))) && !is_perfect_nonlinear(f);
        }
        r.bent_rows.push_back(std::move(row));
    }
    return r;
}

ReproResult run_repro(const std::string& target, unsigned workers) {
    if (target == "table1") return repro_table1(workers);
    if (target == "table2") return repro_table2(workers);
    if (target == "bent-s3") return repro_bent_s3(workers);
    throw std::invalid_argument("unknown repro target '" + target +
                                "' (expected table1|table2|bent-s3)");
}

json to_json(const ReproResult& r) {
    json j;
    j["target"] = r.target;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json x;
        x["K"] = row.domain;
        x["N"] = row.codomain;
        x["realization"] = to_string(row.report.realization);
        x["min_spectral_sum"] = row.sum;
        x["min_spectral_sum_expected"] = row.expected_sum;
        x["min_max_nonlinearity"] = row.report.min_max_nonlinearity->value;
        x["min_max_nonlinearity_expected"] = row.expected_max;
        x["closed_form"] = row.max_closed_form;
        x["min_apn_sum"] = row.report.min_apn_sum->value;
        x["spectral_coincidence"] = row.report.coincidence->spectral_coincidence;
        x["coincidence"] = row.report.coincidence->coincidence;
        x["spectral_min_among_maxnl_minimizers"] =
            row.report.coincidence->spectral_min_among_maxnl_minimizers;
        x["apn_min_among_maxnl_minimizers"] = row.report.coincidence->apn_min_among_maxnl_minimizers;
        x["witness_min_spectral_sum"] = row.report.min_spectral_sum->witness;
        x["witness_min_max_nonlinearity"] = row.report.min_max_nonlinearity->witness;
        if (row.unitary_report) {
            x["unitary_basis"] = {
                {"min_spectral_sum", row.unitary_report->min_spectral_sum->value},
                {"min_max_nonlinearity", row.unitary_report->min_max_nonlinearity->value},
                {"spectral_coincidence", row.unitary_report->coincidence->spectral_coincidence}};
        }
        x["status"] = row.passed() ? "pass" : "FAIL";
        rows.push_back(std::move(x));
    }
    for (const auto& row : r.bent_rows) {
        rows.push_back({{"K", "S3"},
                        {"N", row.codomain},
                        {"bent_found", row.found},
                        {"bent_expected", row.expected_found},
                        {"witness", row.witness ? json(*row.witness) : json(nullptr)},
                        {"witness_verified", row.witness_verified},
                        {"status", row.passed() ? "pass" : "FAIL"}});
    }
    j["rows"] = rows;
    j["passed"] = r.passed();
    return j;
}

std::string to_csv(const ReproResult& r) {
    std::ostringstream out;
    out.precision(10);
    if (!r.rows.empty()) {
        out << "K,N,min_spectral_sum,min_max_nonlinearity,expected_sum,expected_max,status\n";
        for (const auto& row : r.rows)
            out << row.domain << ',' << row.codomain << ',' << row.sum << ','
                << row.report.min_max_nonlinearity->value << ',' << row.expected_sum << ','
                << row.max_closed_form << ',' << (row.passed() ? "pass" : "FAIL") << '\n';
    }
    if (!r.bent_rows.empty()) {
        out << "K,N,bent_found,expected,status\n";
        for (const auto& row : r.bent_rows)
            out << "S3," << row.codomain << ',' << (row.found ? "yes" : "no") << ','
                << (row.expected_found ? "yes" : "no") << ',' << (row.passed() ? "pass" : "FAIL")
                << '\n';
    }
    return out.str();
}

}  // namespace grouplin
