#include "grouplin/io.hpp"

#include <fstream>

namespace grouplin {

using nlohmann::json;

FunctionTable function_from_json(const json& j) {
    try {
        const auto domain = parse_group_spec(j.at("domain").get<std::string>());
        const auto codomain = parse_group_spec(j.at("codomain").get<std::string>());
        const auto raw = j.at("images").get<std::vector<long long>>();
        std::vector<Element> images;
        images.reserve(raw.size());
        for (long long v : raw) {
            if (v < 0) throw FunctionFileError("negative image index " + std::to_string(v));
            images.push_back(static_cast<Element>(v));
        }
        return FunctionTable(domain, codomain, std::move(images));
    } catch (const json::exception& e) {
        throw FunctionFileError(std::string("malformed function file: ") + e.what());
    } catch (const GroupError& e) {
        throw FunctionFileError(std::string("bad group spec: ") + e.what());
    } catch (const AlgebraError& e) {
        throw FunctionFileError(e.what());
    }
}

FunctionTable load_function_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FunctionFileError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FunctionFileError(path.string() + ": " + e.what());
    }
    return function_from_json(j);
}

json function_to_json(const FunctionTable& f, const std::string& domain_spec,
                      const std::string& codomain_spec) {
    return {{"domain", domain_spec},
            {"codomain", codomain_spec},
            {"images", std::vector<Element>(f.images().begin(), f.images().end())}};
}

json to_json(const MeasureReport& r) {
    json j;
    j["realization"] = to_string(r.realization);
    j["apn_sum_delta"] = r.apn_sum_delta;
    j["apn_sum_spectral"] = r.apn_sum_spectral;
    j["fourth_power_sum"] = r.fourth_power_sum;
    if (r.max_nonlinearity) {
        j["max_nonlinearity"] = r.max_nonlinearity->value;
        j["max_nonlinearity_squared"] = r.max_nonlinearity->squared;
        j["max_nonlinearity_argmax_irrep"] = r.max_nonlinearity->argmax;
    } else {
        j["max_nonlinearity"] = nullptr;
    }
    j["is_bent"] = r.is_bent ? json(*r.is_bent) : json(nullptr);
    j["is_perfect_nonlinear"] = r.is_perfect_nonlinear;
    json gamma = json::object();
    for (const auto& [dim, value] : r.gamma) gamma[std::to_string(dim)] = value;
    j["gamma"] = gamma;
    j["spectral_lower_bound"] =
        r.spectral_lower_bound ? json(*r.spectral_lower_bound) : json(nullptr);
    j["pn_existence"] = to_string(r.pn_advice);
    j["bent_pn_compatible"] = r.bent_pn_compatible ? json(*r.bent_pn_compatible) : json(nullptr);
    return j;
}

json to_json(const SearchReport& r, bool include_timing) {
    json j;
    j["domain"] = r.domain;
    j["codomain"] = r.codomain;
    j["mode"] = r.mode;
    j["reduction"] = r.reduction;
    j["realization"] = to_string(r.realization);
    j["space_size"] = r.space_size;
    j["scanned_count"] = r.scanned_count;
    if (r.min_apn_sum)
        j["min_apn_sum"] = {{"value", r.min_apn_sum->value},
                            {"spectral_value", r.min_apn_sum->spectral_value},
                            {"spectral_check", r.min_apn_sum->spectral_check},
                            {"witness", r.min_apn_sum->witness}};
    if (r.min_spectral_sum)
        j["min_spectral_sum"] = {{"value", r.min_spectral_sum->value},
                                 {"witness", r.min_spectral_sum->witness}};
    if (r.min_max_nonlinearity)
        j["min_max_nonlinearity"] = {{"value", r.min_max_nonlinearity->value},
                                     {"squared", r.min_max_nonlinearity->squared},
                                     {"minimizer_count", r.min_max_nonlinearity->minimizer_count},
                                     {"witness", r.min_max_nonlinearity->witness}};
    if (r.bent_found) {
        j["bent_found"] = *r.bent_found;
        j["bent_witness"] = r.bent_witness ? json(*r.bent_witness) : json(nullptr);
    }
    if (r.coincidence) {
        j["coincidence"] = r.coincidence->coincidence;
        j["spectral_coincidence"] = r.coincidence->spectral_coincidence;
        j["apn_min_among_maxnl_minimizers"] = r.coincidence->apn_min_among_maxnl_minimizers;
        j["spectral_min_among_maxnl_minimizers"] =
            r.coincidence->spectral_min_among_maxnl_minimizers;
    }
    if (include_timing) j["wall_time"] = r.wall_time;
    return j;
}

json irreps_to_json(const IrrepSet& s) {
    const FiniteGroup& g = *s.group();
    json j;
    j["group"] = g.name();
    j["order"] = g.order();
    j["realization"] = to_string(s.realization());
    j["principal_index"] = s.principal_index();
    j["elements"] = std::vector<std::string>(g.labels().begin(), g.labels().end());
    json dims = json::array(), table = json::array();
    for (const auto& r : s.irreps()) {
        dims.push_back(r.dim);
        json row = json::array();
        for (Element x = 0; x < g.order(); ++x) {
            const Complex c = r.character(x);
            // Clean signed zeros and rounding noise for readability.
            auto tidy = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
            row.push_back({tidy(c.real()), tidy(c.imag())});
        }
        table.push_back(row);
    }
    j["dims"] = dims;
    j["characters"] = table;
    return j;
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"max_residual", c.max_residual},
                          {"detail", c.detail}});
    return {{"group", r.group}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace grouplin
