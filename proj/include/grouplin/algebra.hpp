#pragma once

#include <span>
#include <vector>

#include "grouplin/group.hpp"
#include "grouplin/irreps.hpp"
#include "grouplin/matrix.hpp"

namespace grouplin {

class AlgebraError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element Σ d_g g of the group algebra ℂ[G], stored densely.
class AlgebraElement {
public:
    explicit AlgebraElement(GroupPtr group);
    AlgebraElement(GroupPtr group, std::vector<Complex> coeffs);

    static AlgebraElement indicator(GroupPtr group, std::span<const Element> members);
    static AlgebraElement unit(GroupPtr group);       // 1_G
    static AlgebraElement whole_group(GroupPtr group);  // Σ_g g

    const GroupPtr& group() const noexcept { return group_; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    Complex operator[](Element g) const { return coeffs_.at(g); }
    Complex& operator[](Element g) { return coeffs_.at(g); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    double max_abs_diff(const AlgebraElement& other) const;

private:
    GroupPtr group_;
    std::vector<Complex> coeffs_;
};

/// Function K → N given by its image vector over K's canonical ordering.
class FunctionTable {
public:
    FunctionTable(GroupPtr domain, GroupPtr codomain, std::vector<Element> images);

    const GroupPtr& domain() const noexcept { return domain_; }
    const GroupPtr& codomain() const noexcept { return codomain_; }
    std::span<const Element> images() const noexcept { return images_; }
    Element operator()(Element g) const { return images_[g]; }

private:
    GroupPtr domain_;
    GroupPtr codomain_;
    std::vector<Element> images_;
};

/// Coefficient of g is Σ_h a_h b_{h⁻¹g}.
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);

/// Σ d_g g ↦ Σ conj(d_g) g⁻¹.
AlgebraElement adjoint(const AlgebraElement& d);

/// Indicator of {(g, f(g))} in domain × codomain. The one-argument form builds
/// the product group; pass `product` to reuse one.
AlgebraElement graph_of(const FunctionTable& f);
AlgebraElement graph_of(const FunctionTable& f, const GroupPtr& product);

struct FourierCoefficients {
    IrrepSetPtr irreps;
    std::vector<CMatrix> blocks;  // blocks[i] = ρ_i(D)
};

/// ρ(D) = Σ_g d_g ρ(g) for every irrep of D's group.
FourierCoefficients fourier_transform(const AlgebraElement& d, const IrrepSetPtr& irreps);

/// d_g = (1/|G|) Σ_ρ dim ρ · tr(ρ(D) ρ(g⁻¹)).
AlgebraElement fourier_invert(const FourierCoefficients& c);

/// |Σ_g |d_g|² − (1/|G|) Σ_ρ dim ρ ‖ρ(D)‖²|. Only meaningful for unitary irreps.
double parseval_check(const AlgebraElement& d, const IrrepSetPtr& irreps);

}  // namespace grouplin
