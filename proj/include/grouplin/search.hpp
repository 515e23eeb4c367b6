#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "grouplin/irreps.hpp"
#include "grouplin/nonlinearity.hpp"

namespace grouplin {

enum class Objective { min_apn_sum, min_spectral_sum, min_max_nonlinearity, find_bent, coincidence };

std::string to_string(Objective o);
Objective parse_objective(const std::string& s);

struct RandomMode {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultSpaceCeiling = std::uint64_t{1} << 31;

/// Default exhaustive guard, overridable through GROUPLIN_SPACE_CEILING.
std::uint64_t default_space_ceiling();

struct SearchSpec {
    std::string domain;
    std::string codomain;
    std::set<Objective> objectives{Objective::min_apn_sum, Objective::min_max_nonlinearity};
    std::optional<RandomMode> random;  // exhaustive when empty
    bool reduction = true;             // pin f(1_K) = 1_N
    unsigned workers = 1;
    Realization realization = Realization::unitary;
    bool spectral = true;  // spectral objectives need irreps; false forbids them
    double tolerance = 1e-6;
    std::uint64_t space_ceiling = default_space_ceiling();
    std::optional<std::filesystem::path> checkpoint;
};

class SearchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SpaceTooLarge : public SearchError {
public:
    SpaceTooLarge(std::uint64_t space, std::uint64_t ceiling);
    std::uint64_t space() const noexcept { return space_; }
    std::uint64_t ceiling() const noexcept { return ceiling_; }

private:
    std::uint64_t space_;
    std::uint64_t ceiling_;
};

using Images = std::vector<Element>;

struct ApnMinimum {
    std::uint64_t value = 0;     // min Σ δ²
    double spectral_value = 0;   // |G| · value
    double spectral_check = 0;   // unitary Σ dim ‖ρρ*‖² re-measured on the witness
    Images witness;
};

struct SpectralSumMinimum {
    double value = 0;  // min Σ dim ‖ρ(D_f)‖⁴ in the chosen realization
    Images witness;
};

struct MaxNlMinimum {
    double value = 0;
    double squared = 0;
    std::uint64_t minimizer_count = 0;
    Images witness;
};

struct CoincidenceResult {
    bool coincidence = false;           // some f minimizes both Σδ² and the max
    bool spectral_coincidence = false;  // some f minimizes both the fourth-power sum and the max
    std::uint64_t apn_min_among_maxnl_minimizers = 0;
    double spectral_min_among_maxnl_minimizers = 0;
};

struct SearchReport {
    std::string domain;
    std::string codomain;
    std::string mode;  // "exhaustive" or "random"
    bool reduction = true;
    Realization realization = Realization::unitary;
    std::uint64_t space_size = 0;
    std::uint64_t scanned_count = 0;
    std::optional<ApnMinimum> min_apn_sum;
    std::optional<SpectralSumMinimum> min_spectral_sum;
    std::optional<MaxNlMinimum> min_max_nonlinearity;
    std::optional<bool> bent_found;
    std::optional<Images> bent_witness;
    std::optional<CoincidenceResult> coincidence;
    double wall_time = 0;
};

/// Number of functions the spec would scan: |N|^|K|, or |N|^(|K|−1) with
/// reduction. Saturates at UINT64_MAX.
std::uint64_t function_space_size(std::size_t domain_order, std::size_t codomain_order,
                                  bool reduction);

/// Lexicographic enumeration of image vectors, optionally with the image of
/// the identity pinned to the codomain identity. Partitioned into work units
/// by the first two free coordinates.
class FunctionEnumerator {
public:
    FunctionEnumerator(const FiniteGroup& domain, const FiniteGroup& codomain, bool reduction);

    std::uint64_t size() const noexcept { return size_; }
    std::size_t unit_count() const noexcept { return units_; }
    std::size_t free_count() const noexcept { return free_.size(); }
    std::size_t codomain_order() const noexcept { return n_; }
    std::span<const std::size_t> free_positions() const noexcept { return free_; }

    /// First image vector of unit u.
    Images unit_start(std::size_t u) const;
    /// Free coordinates fixed by each unit.
    std::size_t prefix_length() const noexcept { return prefix_; }

    /// Calls visit(images) for every function in unit u, in lexicographic
    /// order. Stops early if visit returns false.
    void for_each_in_unit(std::size_t u, const std::function<bool(const Images&)>& visit) const;
    /// Every function, in lexicographic order.
    void for_each(const std::function<bool(const Images&)>& visit) const;

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<std::size_t> free_;
    Element pinned_value_ = 0;
    std::optional<std::size_t> pinned_;
    std::size_t prefix_ = 0;
    std::size_t units_ = 1;
    std::uint64_t size_ = 0;
};

SearchReport run_search(const SearchSpec& spec);
SearchReport exhaustive_search(const SearchSpec& spec);
SearchReport coincidence_scan(const SearchSpec& spec);
SearchReport bent_search(const SearchSpec& spec);
SearchReport random_search(const SearchSpec& spec);

/// splitmix64 step, used to derive per-chunk generator seeds.
std::uint64_t splitmix64(std::uint64_t x);

inline constexpr std::size_t kRandomChunks = 64;

}  // namespace grouplin
