#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouplin/group.hpp"
#include "grouplin/matrix.hpp"

namespace grouplin {

/// Which matrix basis the catalogue uses for irreps of dimension > 1.
///
/// `unitary` is the default and the only one for which Parseval holds.
/// `tabulated` realizes the 2-dimensional irrep of S3 on the root lattice
/// (basis e1-e2, e2-e3), giving integer but non-unitary matrices; trace norms
/// then depend on the basis. The order-6 reference values in `repro table1`
/// use it. All other catalogue irreps are identical in both realizations.
enum class Realization { unitary, tabulated };

std::string to_string(Realization r);
Realization parse_realization(const std::string& s);

struct Irrep {
    std::size_t dim = 1;
    std::vector<CMatrix> matrices;  // one per group element
    bool is_principal = false;
    std::size_t id = 0;
    std::optional<std::pair<std::size_t, std::size_t>> factor_ids;

    const CMatrix& operator()(Element g) const { return matrices[g]; }
    Complex character(Element g) const { return matrices[g].trace(); }
};

class IrrepError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A complete set of inequivalent irreps of one group (its dual).
class IrrepSet {
public:
    // Irreps of a direct product A × B: counts of both factor duals and the
    // principal index of B's dual.
    struct ProductLayout {
        std::size_t left_count;
        std::size_t right_count;
        std::size_t right_principal;
    };

    IrrepSet(GroupPtr group, std::vector<Irrep> irreps, Realization realization,
             std::optional<ProductLayout> layout = std::nullopt);

    const GroupPtr& group() const noexcept { return group_; }
    const std::vector<Irrep>& irreps() const noexcept { return irreps_; }
    const Irrep& operator[](std::size_t i) const { return irreps_.at(i); }
    std::size_t size() const noexcept { return irreps_.size(); }
    std::size_t principal_index() const noexcept { return principal_; }
    Realization realization() const noexcept { return realization_; }

    // Set for duals built by tensor_dual; irreps are then ordered
    // lexicographically by factor_ids.
    const std::optional<ProductLayout>& layout() const noexcept { return layout_; }

    // For duals of K × N: whether irrep i restricts nontrivially to N, i.e.
    // its N-factor is not the principal irrep of N.
    bool nonprincipal_on_right(std::size_t i) const;

private:
    GroupPtr group_;
    std::vector<Irrep> irreps_;
    std::size_t principal_ = 0;
    Realization realization_;
    std::optional<ProductLayout> layout_;
};

using IrrepSetPtr = std::shared_ptr<const IrrepSet>;

/// Full dual of a catalogue group or of a product of catalogue groups.
IrrepSetPtr irreps_of(const GroupPtr& g, Realization realization = Realization::unitary);

/// Dual of `product` (which must be left × right) from the duals of its factors.
IrrepSetPtr tensor_dual(const GroupPtr& product, const IrrepSet& left, const IrrepSet& right);

/// a ⊗ b as a representation of A × B, where a has |A| matrices and b has |B|.
Irrep tensor(const Irrep& a, const Irrep& b);

struct VerificationCheck {
    std::string name;
    bool passed = true;
    double max_residual = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::string group;
    std::vector<VerificationCheck> checks;
    bool passed() const noexcept;
    double max_residual() const noexcept;
};

inline constexpr double kMatrixTolerance = 1e-9;

/// Homomorphism, unitarity (unitary realization only), completeness, class
/// count, number of linear characters, character orthonormality, and the
/// two orthogonality-type relations ρ(G) = 0 for ρ ≠ ρ0 and
/// Σ_ρ dim ρ · tr ρ(g) = |G|·[g = 1].
VerificationReport verify_irrep_set(const IrrepSet& s, double tolerance = kMatrixTolerance);

}  // namespace grouplin
