#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "grouplin/io.hpp"
#include "grouplin/repro.hpp"
#include "grouplin/search.hpp"
#include "oracle.hpp"

using namespace grouplin;
using nlohmann::json;

namespace {

SearchSpec spec_for(const std::string& k, const std::string& n, std::set<Objective> objectives) {
    SearchSpec s;
    s.domain = k;
    s.codomain = n;
    s.objectives = std::move(objectives);
    return s;
}

std::size_t order_of(const std::string& spec) { return parse_group_spec(spec)->order(); }

std::string fingerprint(const SearchReport& r) { return to_json(r, false).dump(); }

struct BruteMinima {
    std::uint64_t apn = UINT64_MAX;
    double fourth = 1e300;
    double max = 1e300;
    std::uint64_t max_count = 0;
    double fourth_among_max = 1e300;
};

// Minima over every function K → N straight from the oracles.
BruteMinima brute(const std::string& k, const std::string& n, bool orthonormal, bool reduction) {
    auto kg = parse_group_spec(k), ng = parse_group_spec(n);
    const auto kr = oracle::reps_for(k, orthonormal), nr = oracle::reps_for(n, orthonormal);
    struct Row { std::uint64_t apn; double fourth, max; };
    std::vector<Row> rows;
    oracle::all_functions(kg->order(), ng->order(), [&](const std::vector<Element>& img) {
        if (reduction && img[0] != 0) return;
        const auto s = oracle::spectrum(kr, nr, img);
        rows.push_back({oracle::apn_sum(*kg, *ng, img), s.fourth_power_sum(), s.max_nonlinearity()});
    });
    BruteMinima b;
    for (const auto& r : rows) {
        b.apn = std::min(b.apn, r.apn);
        b.fourth = std::min(b.fourth, r.fourth);
        b.max = std::min(b.max, r.max);
    }
    for (const auto& r : rows)
        if (std::abs(r.max - b.max) < 1e-6) {
            ++b.max_count;
            b.fourth_among_max = std::min(b.fourth_among_max, r.fourth);
        }
    return b;
}

}  // namespace

TEST(Enumerator, TwoByTwoLexicographic) {
    auto c2 = make_cyclic(2);
    FunctionEnumerator en(*c2, *c2, false);
    EXPECT_EQ(en.size(), 4u);
    std::vector<Images> seen;
    en.for_each([&](const Images& f) {
        seen.push_back(f);
        return true;
    });
    EXPECT_EQ(seen, (std::vector<Images>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(Enumerator, Counts) {
    EXPECT_EQ(function_space_size(6, 6, true), 7776u);
    EXPECT_EQ(function_space_size(8, 8, true), 2097152u);
    EXPECT_EQ(function_space_size(8, 8, false), 16777216u);
    EXPECT_EQ(function_space_size(64, 64, false), UINT64_MAX);
    FunctionEnumerator en(*make_symmetric3(), *make_cyclic(6), true);
    EXPECT_EQ(en.size(), 7776u);
    std::uint64_t n = 0;
    for (std::size_t u = 0; u < en.unit_count(); ++u)
        en.for_each_in_unit(u, [&](const Images& f) {
            EXPECT_EQ(f[0], 0u);
            ++n;
            return true;
        });
    EXPECT_EQ(n, 7776u);
}

TEST(Enumerator, UnitsPartitionInOrder) {
    FunctionEnumerator en(*make_cyclic(4), *make_cyclic(3), true);
    Images prev;
    std::uint64_t n = 0;
    for (std::size_t u = 0; u < en.unit_count(); ++u) {
        EXPECT_EQ(en.unit_start(u).size(), 4u);
        en.for_each_in_unit(u, [&](const Images& f) {
            if (n > 0) EXPECT_LT(prev, f);
            prev = f;
            ++n;
            return true;
        });
    }
    EXPECT_EQ(n, en.size());
}

TEST(Exhaustive, MatchesBruteForce) {
    const std::set<Objective> all{Objective::min_apn_sum, Objective::min_spectral_sum,
                                  Objective::min_max_nonlinearity};
    for (auto [k, n] : std::vector<std::pair<std::string, std::string>>{
             {"S3", "C2"}, {"C4", "C3"}, {"C3", "S3"}, {"C2xC2", "C4"}, {"S3", "C3"}}) {
        for (bool reduction : {true, false}) {
            auto spec = spec_for(k, n, all);
            spec.reduction = reduction;
            const auto r = exhaustive_search(spec);
            const auto b = brute(k, n, true, reduction);
            EXPECT_EQ(r.min_apn_sum->value, b.apn) << k << "->" << n;
            EXPECT_NEAR(r.min_spectral_sum->value, b.fourth, 1e-6) << k << "->" << n;
            EXPECT_NEAR(r.min_max_nonlinearity->value, b.max, 1e-9) << k << "->" << n;
            EXPECT_EQ(r.min_max_nonlinearity->minimizer_count, b.max_count) << k << "->" << n;
            EXPECT_EQ(r.scanned_count, r.space_size);
            EXPECT_NEAR(r.min_apn_sum->spectral_check,
                        double(order_of(k) * order_of(n)) * double(b.apn), 1e-6);
        }
    }
}

TEST(Exhaustive, ReductionIsSound) {
    const std::vector<std::string> groups{"C1", "C2", "C3", "C4", "C5", "C6", "S3", "C2xC2"};
    for (const auto& k : groups)
        for (const auto& n : groups) {
            std::set<Objective> objectives{Objective::min_apn_sum, Objective::min_spectral_sum};
            if (order_of(n) > 1) objectives.insert(Objective::min_max_nonlinearity);
            auto spec = spec_for(k, n, objectives);
            const auto with = exhaustive_search(spec);
            spec.reduction = false;
            const auto without = exhaustive_search(spec);
            EXPECT_EQ(with.min_apn_sum->value, without.min_apn_sum->value) << k << "->" << n;
            EXPECT_NEAR(with.min_spectral_sum->value, without.min_spectral_sum->value, 1e-6)
                << k << "->" << n;
            if (with.min_max_nonlinearity) {
                EXPECT_NEAR(with.min_max_nonlinearity->value, without.min_max_nonlinearity->value,
                            1e-9);
                EXPECT_EQ(with.min_max_nonlinearity->minimizer_count * order_of(n),
                          without.min_max_nonlinearity->minimizer_count)
                    << k << "->" << n;
            }
        }
}

TEST(Exhaustive, OrderSixTablesAgainstRootBasisOracle) {
    struct Row { const char* k; const char* n; double fourth; double max; };
    const Row rows[] = {{"S3", "C6", 2376, 4.0},
                        {"C6", "S3", 3972, 4.0 * std::sqrt(2.0)},
                        {"S3", "S3", 3552, 2.0 * std::sqrt(14.0)},
                        {"C6", "C6", 2808, 2.0 * std::sqrt(3.0)}};
    for (const auto& row : rows) {
        const auto b = brute(row.k, row.n, false, true);
        EXPECT_NEAR(b.fourth, row.fourth, 1e-6) << row.k << "->" << row.n;
        EXPECT_NEAR(b.max, row.max, 1e-6) << row.k << "->" << row.n;
        auto spec = spec_for(row.k, row.n, {Objective::min_spectral_sum, Objective::min_max_nonlinearity});
        spec.realization = Realization::tabulated;
        const auto r = exhaustive_search(spec);
        EXPECT_NEAR(r.min_spectral_sum->value, b.fourth, 1e-6);
        EXPECT_NEAR(r.min_max_nonlinearity->value, b.max, 1e-9);
        EXPECT_EQ(r.min_max_nonlinearity->minimizer_count, b.max_count);
    }
}

TEST(Exhaustive, UnitaryBasisGivesDifferentOrderSixSums) {
    const std::pair<const char*, double> rows[] = {
        {"C6", 3144}, {"S3", 4320}};
    for (auto [n, want] : rows) {
        auto spec = spec_for("S3", n, {Objective::min_spectral_sum});
        const auto r = exhaustive_search(spec);
        EXPECT_NEAR(r.min_spectral_sum->value, want, 1e-6) << n;
        EXPECT_NEAR(r.min_spectral_sum->value, brute("S3", n, true, true).fourth, 1e-6);
    }
}

TEST(Exhaustive, WitnessesReproduceReportedValues) {
    auto spec = spec_for("D4", "C3", {Objective::min_apn_sum, Objective::min_spectral_sum,
                                      Objective::min_max_nonlinearity});
    const auto r = exhaustive_search(spec);
    auto k = parse_group_spec("D4"), n = parse_group_spec("C3");
    auto dual = irreps_of(direct_product(k, n));
    EXPECT_EQ(apn_sum_delta(FunctionTable(k, n, r.min_apn_sum->witness)), r.min_apn_sum->value);
    EXPECT_NEAR(fourth_power_sum(FunctionTable(k, n, r.min_spectral_sum->witness), *dual),
                r.min_spectral_sum->value, 1e-9);
    EXPECT_NEAR(max_nonlinearity(FunctionTable(k, n, r.min_max_nonlinearity->witness), *dual).value,
                r.min_max_nonlinearity->value, 1e-9);
}

TEST(Coincidence, OrderSix) {
    auto spec = spec_for("S3", "C6", {Objective::coincidence});
    spec.realization = Realization::tabulated;
    EXPECT_TRUE(coincidence_scan(spec).coincidence->spectral_coincidence);
    spec = spec_for("C6", "C6", {Objective::coincidence});
    const auto r = coincidence_scan(spec);
    EXPECT_FALSE(r.coincidence->spectral_coincidence);
    EXPECT_FALSE(r.coincidence->coincidence);
    EXPECT_GT(r.coincidence->spectral_min_among_maxnl_minimizers, r.min_spectral_sum->value);
}

TEST(Coincidence, CyclicOrderEight) {
    auto spec = spec_for("C8", "C8", {Objective::coincidence});
    const auto r = coincidence_scan(spec);
    EXPECT_NEAR(r.min_spectral_sum->value, 8832, 1e-6);
    EXPECT_NEAR(r.min_max_nonlinearity->value, std::sqrt(10 + 4 * std::sqrt(2.0)), 1e-9);
    EXPECT_FALSE(r.coincidence->spectral_coincidence);
    EXPECT_NEAR(r.coincidence->spectral_min_among_maxnl_minimizers, 8960, 1e-6);
}

TEST(Bent, S3Codomains) {
    for (auto [n, expected] : std::vector<std::pair<std::string, bool>>{
             {"C2", false}, {"C3", true}, {"C4", false}, {"C2xC2", false}, {"C5", false}}) {
        auto spec = spec_for("S3", n, {Objective::find_bent});
        const auto r = bent_search(spec);
        ASSERT_TRUE(r.bent_found.has_value());
        EXPECT_EQ(*r.bent_found, expected) << n;
        if (expected) {
            ASSERT_TRUE(r.bent_witness.has_value());
            auto k = make_symmetric3(), ng = parse_group_spec(n);
            const FunctionTable f(k, ng, *r.bent_witness);
            EXPECT_TRUE(is_bent(f, *irreps_of(direct_product(k, ng))));
        }
    }
}

TEST(Bent, CountsAgainstBruteForce) {
    // Without reduction the search must agree with testing every function.
    auto k = make_symmetric3(), n = make_cyclic(3);
    auto dual = irreps_of(direct_product(k, n));
    std::optional<Images> first;
    oracle::all_functions(6, 3, [&](const std::vector<Element>& img) {
        if (!first && is_bent(FunctionTable(k, n, img), *dual)) first = img;
    });
    ASSERT_TRUE(first.has_value());
    auto spec = spec_for("S3", "C3", {Objective::find_bent});
    spec.reduction = false;
    const auto r = bent_search(spec);
    EXPECT_EQ(*r.bent_witness, *first);
}

TEST(Bent, NeedsSpectral) {
    auto spec = spec_for("S3", "C3", {Objective::find_bent});
    spec.spectral = false;
    EXPECT_THROW(run_search(spec), SearchError);
    spec.objectives = {Objective::min_apn_sum};
    EXPECT_NO_THROW(run_search(spec));
}

TEST(Random, Deterministic) {
    auto spec = spec_for("C8", "C8", {Objective::min_apn_sum, Objective::min_spectral_sum,
                                      Objective::min_max_nonlinearity});
    spec.random = RandomMode{10000, 7};
    const auto a = random_search(spec);
    const auto b = random_search(spec);
    EXPECT_EQ(fingerprint(a), fingerprint(b));
    EXPECT_EQ(a.scanned_count, 10000u);
    EXPECT_EQ(a.mode, "random");
    spec.workers = 3;
    EXPECT_EQ(fingerprint(random_search(spec)), fingerprint(a));
    spec.random = RandomMode{10000, 8};
    EXPECT_NE(fingerprint(random_search(spec)), fingerprint(a));

    EXPECT_GE(a.min_spectral_sum->value, 8832 - 1e-6);
    EXPECT_GE(a.min_max_nonlinearity->value, std::sqrt(10 + 4 * std::sqrt(2.0)) - 1e-9);
    EXPECT_GE(a.min_apn_sum->value, 138u);
}

TEST(Random, CoversTinySpace) {
    auto spec = spec_for("C2", "C2", {Objective::min_apn_sum, Objective::min_max_nonlinearity});
    const auto exhaustive = exhaustive_search(spec);
    spec.random = RandomMode{200, 1};
    const auto sampled = random_search(spec);
    EXPECT_EQ(sampled.min_apn_sum->value, exhaustive.min_apn_sum->value);
    EXPECT_EQ(sampled.min_apn_sum->witness, exhaustive.min_apn_sum->witness);
    EXPECT_NEAR(sampled.min_max_nonlinearity->value, exhaustive.min_max_nonlinearity->value, 1e-12);
}

TEST(Determinism, WorkerCounts) {
    for (auto [k, n] : std::vector<std::pair<std::string, std::string>>{
             {"S3", "S3"}, {"C4xC2", "C4"}, {"Q8", "C3"}}) {
        auto spec = spec_for(k, n, {Objective::coincidence});
        std::string first;
        for (unsigned w : {1u, 2u, 8u}) {
            spec.workers = w;
            const auto f = fingerprint(coincidence_scan(spec));
            if (first.empty())
                first = f;
            else
                EXPECT_EQ(f, first) << k << "->" << n << " workers " << w;
        }
    }
}

TEST(Checkpoint, ResumesToSameReport) {
    const auto dir = std::filesystem::temp_directory_path() / "grouplin_ckpt_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "s3s3.json";
    std::filesystem::remove(path);

    auto spec = spec_for("S3", "S3", {Objective::coincidence});
    const auto fresh = coincidence_scan(spec);

    spec.checkpoint = path;
    spec.workers = 2;
    EXPECT_EQ(fingerprint(coincidence_scan(spec)), fingerprint(fresh));
    ASSERT_TRUE(std::filesystem::exists(path));

    json j;
    {
        std::ifstream in(path);
        in >> j;
    }
    EXPECT_EQ(j["format"], "grouplin-checkpoint");
    const std::size_t items = j["items"].size();
    EXPECT_EQ(items, FunctionEnumerator(*make_symmetric3(), *make_symmetric3(), true).unit_count());

    // Drop every other completed item, as if the run had been interrupted.
    json partial = j;
    std::size_t i = 0;
    for (const auto& [key, value] : j["items"].items())
        if (i++ % 2 == 0) partial["items"].erase(key);
    {
        std::ofstream out(path);
        out << partial.dump();
    }
    EXPECT_EQ(fingerprint(coincidence_scan(spec)), fingerprint(fresh));
    {
        std::ifstream in(path);
        in >> j;
    }
    EXPECT_EQ(j["items"].size(), items);

    // A checkpoint from another search is refused.
    auto other = spec_for("S3", "S3", {Objective::min_apn_sum});
    other.checkpoint = path;
    EXPECT_THROW(run_search(other), SearchError);
    std::filesystem::remove_all(dir);
}

TEST(Guard, SpaceTooLarge) {
    auto spec = spec_for("C16", "C16", {Objective::min_apn_sum});
    EXPECT_THROW(run_search(spec), SpaceTooLarge);
    spec = spec_for("C6", "C6", {Objective::min_apn_sum});
    spec.space_ceiling = 1000;
    try {
        run_search(spec);
        ADD_FAILURE() << "guard did not trigger";
    } catch (const SpaceTooLarge& e) {
        EXPECT_EQ(e.space(), 7776u);
        EXPECT_EQ(e.ceiling(), 1000u);
    }
    spec.random = RandomMode{100, 1};
    EXPECT_NO_THROW(run_search(spec));
}

TEST(Guard, EnvironmentOverride) {
    ::setenv("GROUPLIN_SPACE_CEILING", "12345", 1);
    EXPECT_EQ(default_space_ceiling(), 12345u);
    ::unsetenv("GROUPLIN_SPACE_CEILING");
    EXPECT_EQ(default_space_ceiling(), kDefaultSpaceCeiling);
}

TEST(Spec, Validation) {
    EXPECT_THROW(parse_objective("fastest"), SearchError);
    EXPECT_EQ(parse_objective("min_max_nonlinearity"), Objective::min_max_nonlinearity);
    auto spec = spec_for("S3", "C1", {Objective::min_max_nonlinearity});
    EXPECT_THROW(run_search(spec), SearchError);
    spec = spec_for("S3", "C2", {});
    EXPECT_THROW(run_search(spec), SearchError);
    spec = spec_for("S3", "X2", {Objective::min_apn_sum});
    EXPECT_THROW(run_search(spec), GroupError);
}
