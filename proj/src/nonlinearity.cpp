#include "grouplin/nonlinearity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace grouplin {

DeltaTable delta_table(const FunctionTable& f) {
    const FiniteGroup& k = *f.domain();
    const FiniteGroup& n = *f.codomain();
    const std::size_t m = k.order(), w = n.order();
    std::vector<std::uint32_t> counts(m * w, 0);
    for (Element a = 0; a < m; ++a)
        for (Element g = 0; g < m; ++g) {
            Element b = n.mul(f(k.mul(a, g)), n.inv(f(g)));
            ++counts[a * w + b];
        }
    return DeltaTable(m, w, std::move(counts));
}

std::uint64_t apn_sum_delta(const FunctionTable& f) {
    const DeltaTable t = delta_table(f);
    std::uint64_t s = 0;
    for (Element a = 0; a < t.rows(); ++a)
        for (std::uint32_t c : t.row(a)) s += std::uint64_t{c} * c;
    return s;
}

namespace {

void require_graph_dual(const FunctionTable& f, const IrrepSet& dual) {
    const auto& g = dual.group();
    const bool ok = dual.layout() && g->is_product() &&
                    g->left_factor()->same_table(*f.domain()) &&
                    g->right_factor()->same_table(*f.codomain());
    if (!ok) throw IrrepError("irrep set is not the dual of domain x codomain");
}

}  // namespace

std::vector<CMatrix> graph_spectrum(const FunctionTable& f, const IrrepSet& dual) {
    require_graph_dual(f, dual);
    const std::size_t w = f.codomain()->order();
    std::vector<CMatrix> blocks;
    blocks.reserve(dual.size());
    for (const auto& r : dual.irreps()) {
        CMatrix b(r.dim);
        for (Element g = 0; g < f.domain()->order(); ++g) b += r(static_cast<Element>(g * w + f(g)));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

double apn_sum_spectral(const FunctionTable& f, const IrrepSet& dual) {
    const auto blocks = graph_spectrum(f, dual);
    double s = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        s += static_cast<double>(dual[i].dim) * (blocks[i] * blocks[i].adjoint()).frobenius_sq();
    return s;
}

double fourth_power_sum(const FunctionTable& f, const IrrepSet& dual) {
    const auto blocks = graph_spectrum(f, dual);
    double s = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const double sq = blocks[i].frobenius_sq();
        s += static_cast<double>(dual[i].dim) * sq * sq;
    }
    return s;
}

MaxNonlinearity max_nonlinearity(const FunctionTable& f, const IrrepSet& dual) {
    if (f.codomain()->order() <= 1)
        throw std::invalid_argument("maximal nonlinearity needs a nontrivial codomain");
    const auto blocks = graph_spectrum(f, dual);
    MaxNonlinearity best;
    bool any = false;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!dual.nonprincipal_on_right(i)) continue;
        const double v = static_cast<double>(dual[i].dim) * blocks[i].frobenius_sq();
        if (!any || v > best.squared) {  // strict: smallest id wins ties
            best.squared = v;
            best.argmax = i;
            any = true;
        }
    }
    best.value = std::sqrt(best.squared);
    return best;
}

double bent_gamma(std::size_t m, std::size_t n, std::size_t k_dual, std::size_t n_dual,
                  std::size_t dim) {
    const double md = static_cast<double>(m);
    return md * md * static_cast<double>(n - 1) /
           (static_cast<double>(dim) * static_cast<double>(k_dual) *
            static_cast<double>(n_dual - 1));
}

bool is_bent(const FunctionTable& f, const IrrepSet& dual, double tolerance) {
    if (f.codomain()->order() <= 1)
        throw std::invalid_argument("bentness excludes the trivial codomain");
    const auto blocks = graph_spectrum(f, dual);
    const auto& layout = *dual.layout();
    const std::size_t m = f.domain()->order(), n = f.codomain()->order();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!dual.nonprincipal_on_right(i)) continue;
        const double gamma = bent_gamma(m, n, layout.left_count, layout.right_count, dual[i].dim);
        if (std::abs(blocks[i].frobenius_sq() - gamma) > tolerance) return false;
    }
    return true;
}

bool is_perfect_nonlinear(const FunctionTable& f) {
    const std::size_t m = f.domain()->order(), n = f.codomain()->order();
    if (m % n != 0) return false;
    const std::uint32_t target = static_cast<std::uint32_t>(m / n);
    const DeltaTable t = delta_table(f);
    for (Element a = 0; a < m; ++a) {
        if (a == f.domain()->identity()) continue;
        for (std::uint32_t c : t.row(a))
            if (c != target) return false;
    }
    return true;
}

bool rds_check(const AlgebraElement& d, std::int64_t k, Rational lambda) {
    const auto& g = d.group();
    if (!g->is_product()) throw AlgebraError("relative difference set check needs K x N");
    for (const auto& c : d.coeffs())
        if (c != Complex{0.0} && c != Complex{1.0})
            throw AlgebraError("relative difference set check needs a 0/1 indicator");
    if (lambda.den == 0) throw std::invalid_argument("lambda has zero denominator");

    const std::size_t w = g->right_factor()->order();
    const Element k_identity = g->left_factor()->identity();
    const bool has_outside = g->left_factor()->order() > 1;
    if (has_outside && lambda.num % lambda.den != 0) return false;
    const std::int64_t lam = lambda.num / lambda.den;

    const auto product = convolve(d, adjoint(d));
    for (Element x = 0; x < g->order(); ++x) {
        const double value = product[x].real();
        const auto rounded = static_cast<std::int64_t>(std::llround(value));
        std::int64_t expected;
        if (x == g->identity())
            expected = k;
        else if (x / w == k_identity)
            expected = 0;
        else
            expected = lam;
        if (rounded != expected) return false;
    }
    return true;
}

double spectral_lower_bound(const FiniteGroup& k, const FiniteGroup& n) {
    if (n.order() <= 1) throw std::invalid_argument("lower bound needs a nontrivial codomain");
    const double m = static_cast<double>(k.order());
    const double nn = static_cast<double>(n.order());
    const double k_dual = static_cast<double>(conjugacy_class_count(k));
    const double n_dual = static_cast<double>(conjugacy_class_count(n));
    return m * m * (nn - 1.0) / (k_dual * (n_dual - 1.0));
}

ElementaryAbelianBounds elementary_abelian_bounds(std::uint64_t m) {
    if (m < 2 || !std::has_single_bit(m))
        throw std::invalid_argument("elementary Abelian bounds need m = 2^n with n >= 1");
    ElementaryAbelianBounds b;
    b.fourth_power_floor_nonprincipal = 2 * m * m * m * (m - 1);
    b.fourth_power_floor_total = m * m * m * (3 * m - 2);
    b.maxnl_floor = std::sqrt(2.0 * static_cast<double>(m));
    b.maxnl_known_ceiling_even_n = 2.0 * std::sqrt(static_cast<double>(m));
    return b;
}

std::string to_string(PnAdvice a) {
    switch (a) {
        case PnAdvice::no_pn_divisibility: return "NoPN_Divisibility";
        case PnAdvice::no_pn_theorem: return "NoPN_Theorem1";
        case PnAdvice::unknown: return "Unknown";
    }
    return "Unknown";
}

PnAdvice pn_existence_advisor(const FiniteGroup& k, const FiniteGroup& n) {
    const std::uint64_t m = k.order(), w = n.order();
    if (m % w != 0) return PnAdvice::no_pn_divisibility;
    if (w > 1 && n.is_abelian() && std::has_single_bit(m) && std::has_single_bit(w)) {
        const int a = std::countr_zero(m);
        const int b = std::countr_zero(w);
        if (a % 2 == 1) return PnAdvice::no_pn_theorem;
        if (b >= a / 2 + 1) return PnAdvice::no_pn_theorem;
    }
    return PnAdvice::unknown;
}

bool bent_pn_compatible(const GroupPtr& k, const GroupPtr& n) {
    if (n->order() <= 1) throw std::invalid_argument("compatibility needs a nontrivial codomain");
    const auto kd = irreps_of(k);
    const auto nd = irreps_of(n);
    std::set<std::size_t> dims;
    for (const auto& rk : kd->irreps())
        for (const auto& rn : nd->irreps())
            if (rn.id != nd->principal_index()) dims.insert(rk.dim * rn.dim);
    return dims.size() == 1;
}

MeasureReport measure(const FunctionTable& f, const IrrepSet& dual, double tolerance) {
    MeasureReport r;
    r.realization = dual.realization();
    r.apn_sum_delta = apn_sum_delta(f);
    const auto blocks = graph_spectrum(f, dual);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const double dim = static_cast<double>(dual[i].dim);
        const double sq = blocks[i].frobenius_sq();
        r.apn_sum_spectral += dim * (blocks[i] * blocks[i].adjoint()).frobenius_sq();
        r.fourth_power_sum += dim * sq * sq;
    }
    r.is_perfect_nonlinear = is_perfect_nonlinear(f);
    r.pn_advice = pn_existence_advisor(*f.domain(), *f.codomain());
    const std::size_t m = f.domain()->order(), n = f.codomain()->order();
    if (n > 1) {
        r.max_nonlinearity = max_nonlinearity(f, dual);
        r.is_bent = is_bent(f, dual, tolerance);
        r.spectral_lower_bound = spectral_lower_bound(*f.domain(), *f.codomain());
        r.bent_pn_compatible = bent_pn_compatible(f.domain(), f.codomain());
        const auto& layout = *dual.layout();
        for (std::size_t i = 0; i < dual.size(); ++i)
            if (dual.nonprincipal_on_right(i))
                r.gamma[dual[i].dim] =
                    bent_gamma(m, n, layout.left_count, layout.right_count, dual[i].dim);
    }
    return r;
}

}  // namespace grouplin
