#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouplin/algebra.hpp"
#include "grouplin/irreps.hpp"

namespace grouplin {

/// δ_f(a, b) = |{g ∈ K : f(ag) f(g)⁻¹ = b}| for all (a, b) ∈ K × N.
class DeltaTable {
public:
    DeltaTable(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> counts)
        : rows_(rows), cols_(cols), counts_(std::move(counts)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t operator()(Element a, Element b) const { return counts_[a * cols_ + b]; }
    std::span<const std::uint32_t> row(Element a) const {
        return {counts_.data() + a * cols_, cols_};
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> counts_;
};

DeltaTable delta_table(const FunctionTable& f);

/// Σ_{(a,b)} δ_f(a,b)², exact.
std::uint64_t apn_sum_delta(const FunctionTable& f);

/// ρ(D_f) for every irrep of K × N; `dual` must be the dual of domain × codomain.
std::vector<CMatrix> graph_spectrum(const FunctionTable& f, const IrrepSet& dual);

/// Σ_ρ dim ρ · ‖ρ(D_f) ρ(D_f)*‖². With unitary irreps this is |G| · Σ δ².
double apn_sum_spectral(const FunctionTable& f, const IrrepSet& dual);

/// Σ_ρ dim ρ · ‖ρ(D_f)‖⁴, the fourth-power sum used as the search
/// objective. Equal to apn_sum_spectral when every irrep is one-dimensional.
double fourth_power_sum(const FunctionTable& f, const IrrepSet& dual);

struct MaxNonlinearity {
    double value = 0.0;    // max sqrt(dim ρ) ‖ρ(D_f)‖ over ρ nonprincipal on N
    double squared = 0.0;  // dim ρ ‖ρ(D_f)‖² at the argmax
    std::size_t argmax = 0;
};

MaxNonlinearity max_nonlinearity(const FunctionTable& f, const IrrepSet& dual);

/// Γ = m²(n−1) / (dim · |K̂| · (|N̂|−1)), the common value of ‖ρ(D_f)‖² over
/// ρ nonprincipal on N for a bent f.
double bent_gamma(std::size_t m, std::size_t n, std::size_t k_dual, std::size_t n_dual,
                  std::size_t dim);

inline constexpr double kBentTolerance = 1e-6;

bool is_bent(const FunctionTable& f, const IrrepSet& dual, double tolerance = kBentTolerance);

/// δ_f(a, b) = m/n for every a ≠ 1_K and every b.
bool is_perfect_nonlinear(const FunctionTable& f);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// Whether the 0/1 element D of ℂ[K × N] satisfies
/// D D⁽⁻¹⁾ = k·1 + λ(G − N) with N embedded as {1_K} × N.
bool rds_check(const AlgebraElement& d, std::int64_t k, Rational lambda);

/// m²(n−1) / (|K̂| (|N̂|−1)), a floor for max dim ρ ‖ρ(D_f)‖².
double spectral_lower_bound(const FiniteGroup& k, const FiniteGroup& n);

struct ElementaryAbelianBounds {
    std::uint64_t fourth_power_floor_nonprincipal = 0;  // 2m³(m−1)
    std::uint64_t fourth_power_floor_total = 0;         // m³(3m−2)
    double maxnl_floor = 0.0;                           // √(2m)
    double maxnl_known_ceiling_even_n = 0.0;            // 2√m
};

ElementaryAbelianBounds elementary_abelian_bounds(std::uint64_t m);

enum class PnAdvice { no_pn_divisibility, no_pn_theorem, unknown };
std::string to_string(PnAdvice a);

PnAdvice pn_existence_advisor(const FiniteGroup& k, const FiniteGroup& n);

/// True iff every irrep of K × N nonprincipal on N has the same dimension,
/// the necessary condition for a function to be both bent and perfect
/// nonlinear.
bool bent_pn_compatible(const GroupPtr& k, const GroupPtr& n);

struct MeasureReport {
    std::uint64_t apn_sum_delta = 0;
    double apn_sum_spectral = 0.0;
    double fourth_power_sum = 0.0;
    std::optional<MaxNonlinearity> max_nonlinearity;  // empty for |N| = 1
    std::optional<bool> is_bent;
    bool is_perfect_nonlinear = false;
    std::map<std::size_t, double> gamma;  // by irrep dimension
    std::optional<double> spectral_lower_bound;
    PnAdvice pn_advice = PnAdvice::unknown;
    std::optional<bool> bent_pn_compatible;
    Realization realization = Realization::unitary;
};

MeasureReport measure(const FunctionTable& f, const IrrepSet& dual,
                      double tolerance = kBentTolerance);

}  // namespace grouplin
