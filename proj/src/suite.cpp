#include "grouplin/suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "grouplin/algebra.hpp"
#include "grouplin/io.hpp"
#include "grouplin/nonlinearity.hpp"

namespace grouplin {

using nlohmann::json;

bool SuiteReport::passed() const {
    if (!irreps.passed()) return false;
    if (tabulated && !tabulated->passed()) return false;
    return parseval_residual < options.tolerance && inversion_residual < options.tolerance &&
           identity_residual < options.identity_tolerance;
}

namespace {

bool has_s3_factor(const FiniteGroup& g) {
    if (g.is_product()) return has_s3_factor(*g.left_factor()) || has_s3_factor(*g.right_factor());
    return g.atom() && g.atom()->kind == AtomKind::symmetric3;
}

}  // namespace

SuiteReport run_suite(const IrrepSetPtr& dual, const SuiteOptions& options) {
    const GroupPtr& g = dual->group();
    SuiteReport r;
    r.group = g->name();
    r.options = options;
    r.irreps = verify_irrep_set(*dual, options.tolerance);

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (std::size_t s = 0; s < options.samples; ++s) {
        std::vector<Complex> c(g->order());
        for (auto& x : c) x = {coeff(rng), coeff(rng)};
        const AlgebraElement d(g, std::move(c));
        r.parseval_residual = std::max(r.parseval_residual, parseval_check(d, dual));
        const AlgebraElement back = fourier_invert(fourier_transform(d, dual));
        r.inversion_residual = std::max(r.inversion_residual, d.max_abs_diff(back));
    }

    const GroupPtr product = direct_product(g, g);
    const IrrepSetPtr product_dual = tensor_dual(product, *dual, *dual);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g->order() - 1));
    for (std::size_t s = 0; s < options.samples; ++s) {
        std::vector<Element> images(g->order());
        for (auto& x : images) x = pick(rng);
        const FunctionTable f(g, g, std::move(images));
        const double exact = static_cast<double>(product->order()) *
                             static_cast<double>(apn_sum_delta(f));
        const double spectral = apn_sum_spectral(f, *product_dual);
        r.identity_residual =
            std::max(r.identity_residual, std::abs(spectral - exact) / std::max(1.0, exact));
        ++r.functions_checked;
    }
    return r;
}

SuiteReport run_suite(const GroupPtr& g, const SuiteOptions& options) {
    SuiteReport r = run_suite(irreps_of(g, Realization::unitary), options);
    if (has_s3_factor(*g))
        r.tabulated = verify_irrep_set(*irreps_of(g, Realization::tabulated), options.tolerance);
    return r;
}

std::vector<std::string> verify_catalogue() {
    std::vector<std::string> specs;
    for (int n = 1; n <= 16; ++n) specs.push_back("C" + std::to_string(n));
    specs.push_back("S3");
    for (int n = 2; n <= 8; ++n) specs.push_back("D" + std::to_string(n));
    for (const char* s : {"Q8", "C2xC2", "C3xC3", "C4xC2", "C2xC2xC2", "C2xC6", "S3xC2",
                          "C2xS3", "C2xC2xC3", "C4xC4", "C8xC2", "D4xC2", "Q8xC2",
                          "C2xC2xC2xC2"})
        specs.push_back(s);
    return specs;
}

IrrepSetPtr corrupt_irrep(const IrrepSet& dual) {
    std::vector<Irrep> irreps = dual.irreps();
    const auto target = std::find_if(irreps.begin(), irreps.end(),
                                     [](const Irrep& r) { return !r.is_principal; });
    if (target == irreps.end()) throw IrrepError("no non-principal irrep to corrupt");
    CMatrix& m = target->matrices.back();
    m(0, 0) += Complex(0.25, 0.0);
    return std::make_shared<const IrrepSet>(dual.group(), std::move(irreps), dual.realization(),
                                            dual.layout());
}

json to_json(const SuiteReport& r) {
    json j;
    j["group"] = r.group;
    j["passed"] = r.passed();
    j["irreps"] = to_json(r.irreps);
    if (r.tabulated) j["tabulated_irreps"] = to_json(*r.tabulated);
    j["parseval_residual"] = r.parseval_residual;
    j["inversion_residual"] = r.inversion_residual;
    j["identity_relative_residual"] = r.identity_residual;
    j["functions_checked"] = r.functions_checked;
    j["seed"] = r.options.seed;
    return j;
}

}  // namespace grouplin
