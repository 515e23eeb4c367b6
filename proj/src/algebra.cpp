#include "grouplin/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace grouplin {

AlgebraElement::AlgebraElement(GroupPtr group) : group_(std::move(group)) {
    if (!group_) throw AlgebraError("algebra element without a group");
    coeffs_.assign(group_->order(), Complex{});
}

AlgebraElement::AlgebraElement(GroupPtr group, std::vector<Complex> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (!group_) throw AlgebraError("algebra element without a group");
    if (coeffs_.size() != group_->order())
        throw AlgebraError("coefficient vector length does not match group order");
}

AlgebraElement AlgebraElement::indicator(GroupPtr group, std::span<const Element> members) {
    AlgebraElement d(std::move(group));
    for (Element g : members) {
        if (g >= d.size()) throw AlgebraError("indicator member out of range");
        d.coeffs_[g] = 1.0;
    }
    return d;
}

AlgebraElement AlgebraElement::unit(GroupPtr group) {
    AlgebraElement d(std::move(group));
    d.coeffs_[d.group_->identity()] = 1.0;
    return d;
}

AlgebraElement AlgebraElement::whole_group(GroupPtr group) {
    AlgebraElement d(std::move(group));
    std::fill(d.coeffs_.begin(), d.coeffs_.end(), Complex{1.0});
    return d;
}

double AlgebraElement::max_abs_diff(const AlgebraElement& other) const {
    if (other.size() != size()) throw AlgebraError("group mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) m = std::max(m, std::abs(coeffs_[i] - other.coeffs_[i]));
    return m;
}

FunctionTable::FunctionTable(GroupPtr domain, GroupPtr codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (!domain_ || !codomain_) throw AlgebraError("function table needs both groups");
    if (images_.size() != domain_->order())
        throw AlgebraError("image vector has length " + std::to_string(images_.size()) +
                           ", domain order is " + std::to_string(domain_->order()));
    for (Element y : images_)
        if (y >= codomain_->order())
            throw AlgebraError("image " + std::to_string(y) + " outside codomain of order " +
                               std::to_string(codomain_->order()));
}

namespace {

void require_same_group(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.group() != b.group() && !a.group()->same_table(*b.group()))
        throw AlgebraError("algebra elements belong to different groups");
}

}  // namespace

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_group(a, b);
    const FiniteGroup& g = *a.group();
    std::vector<Complex> out(g.order());
    // Σ_h Σ_k a_h b_k (hk): accumulate over pairs instead of solving for k.
    for (Element h = 0; h < g.order(); ++h) {
        const Complex ah = a[h];
        if (ah == Complex{}) continue;
        auto row = g.row(h);
        for (Element k = 0; k < g.order(); ++k) out[row[k]] += ah * b[k];
    }
    return AlgebraElement(a.group(), std::move(out));
}

AlgebraElement adjoint(const AlgebraElement& d) {
    const FiniteGroup& g = *d.group();
    std::vector<Complex> out(g.order());
    for (Element x = 0; x < g.order(); ++x) out[x] = std::conj(d[g.inv(x)]);
    return AlgebraElement(d.group(), std::move(out));
}

AlgebraElement graph_of(const FunctionTable& f) {
    return graph_of(f, direct_product(f.domain(), f.codomain()));
}

AlgebraElement graph_of(const FunctionTable& f, const GroupPtr& product) {
    const auto& k = f.domain();
    const auto& n = f.codomain();
    const bool matches =
        product && product->is_product() &&
        (product->left_factor() == k || product->left_factor()->same_table(*k)) &&
        (product->right_factor() == n || product->right_factor()->same_table(*n));
    if (!matches) throw AlgebraError("graph group is not domain x codomain");
    AlgebraElement d(product);
    const std::size_t width = n->order();
    for (Element g = 0; g < k->order(); ++g) d[static_cast<Element>(g * width + f(g))] = 1.0;
    return d;
}

FourierCoefficients fourier_transform(const AlgebraElement& d, const IrrepSetPtr& irreps) {
    if (!irreps) throw AlgebraError("null irrep set");
    const auto& g = irreps->group();
    if (g != d.group() && !g->same_table(*d.group()))
        throw AlgebraError("irrep set belongs to a different group");
    FourierCoefficients c{irreps, {}};
    c.blocks.reserve(irreps->size());
    for (const auto& r : irreps->irreps()) {
        CMatrix block(r.dim);
        for (Element x = 0; x < g->order(); ++x) {
            const Complex dx = d[x];
            if (dx == Complex{}) continue;
            auto src = r(x).data();
            auto dst = block.data();
            for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += dx * src[i];
        }
        c.blocks.push_back(std::move(block));
    }
    return c;
}

AlgebraElement fourier_invert(const FourierCoefficients& c) {
    if (!c.irreps) throw AlgebraError("null irrep set");
    const IrrepSet& s = *c.irreps;
    if (c.blocks.size() != s.size()) throw AlgebraError("block count does not match irrep count");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (c.blocks[i].dim() != s[i].dim) throw AlgebraError("block shape does not match irrep");
    const FiniteGroup& g = *s.group();
    const double order = static_cast<double>(g.order());
    std::vector<Complex> out(g.order());
    for (Element x = 0; x < g.order(); ++x) {
        Complex total = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i)
            total += static_cast<double>(s[i].dim) * (c.blocks[i] * s[i](g.inv(x))).trace();
        out[x] = total / order;
    }
    return AlgebraElement(s.group(), std::move(out));
}

double parseval_check(const AlgebraElement& d, const IrrepSetPtr& irreps) {
    double lhs = 0.0;
    for (const auto& x : d.coeffs()) lhs += std::norm(x);
    const auto c = fourier_transform(d, irreps);
    double rhs = 0.0;
    for (std::size_t i = 0; i < c.blocks.size(); ++i)
        rhs += static_cast<double>((*irreps)[i].dim) * c.blocks[i].frobenius_sq();
    rhs /= static_cast<double>(d.size());
    return std::abs(lhs - rhs);
}

}  // namespace grouplin
