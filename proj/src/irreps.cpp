#include "grouplin/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace grouplin {

std::string to_string(Realization r) {
    return r == Realization::unitary ? "unitary" : "tabulated";
}

Realization parse_realization(const std::string& s) {
    if (s == "unitary") return Realization::unitary;
    if (s == "tabulated") return Realization::tabulated;
    throw std::invalid_argument("unknown realization '" + s + "' (expected unitary|tabulated)");
}

IrrepSet::IrrepSet(GroupPtr group, std::vector<Irrep> irreps, Realization realization,
                   std::optional<ProductLayout> layout)
    : group_(std::move(group)), irreps_(std::move(irreps)), realization_(realization),
      layout_(layout) {
    if (!group_) throw IrrepError("irrep set without a group");
    const std::size_t n = group_->order();
    bool found = false;
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
        Irrep& r = irreps_[i];
        r.id = i;
        if (r.matrices.size() != n)
            throw IrrepError("irrep " + std::to_string(i) + " has the wrong number of matrices");
        for (const auto& m : r.matrices)
            if (m.dim() != r.dim)
                throw IrrepError("irrep " + std::to_string(i) + " has a matrix of the wrong size");
        if (r.is_principal && !found) {
            principal_ = i;
            found = true;
        }
    }
    if (!found) throw IrrepError("irrep set has no principal representation");
    if (layout_ && layout_->left_count * layout_->right_count != irreps_.size())
        throw IrrepError("product layout does not match irrep count");
}

bool IrrepSet::nonprincipal_on_right(std::size_t i) const {
    if (!layout_) throw IrrepError("irrep set is not the dual of a direct product");
    return irreps_.at(i).factor_ids->second != layout_->right_principal;
}

namespace {

// Extends generator images to the whole group by breadth-first search over
// right multiplication, checking every relation it meets.
std::vector<CMatrix> extend_from_generators(const FiniteGroup& g,
                                            const std::vector<Element>& gens,
                                            const std::vector<CMatrix>& images,
                                            std::size_t dim) {
    const std::size_t n = g.order();
    std::vector<CMatrix> rho(n);
    std::vector<char> done(n, 0);
    rho[g.identity()] = CMatrix::identity(dim);
    done[g.identity()] = 1;
    std::deque<Element> queue{g.identity()};
    while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Element y = g.mul(x, gens[k]);
            CMatrix m = rho[x] * images[k];
            if (done[y]) {
                if (m.max_abs_diff(rho[y]) > 1e-12)
                    throw IrrepError("generator images do not define a representation of " +
                                     g.name());
                continue;
            }
            rho[y] = std::move(m);
            done[y] = 1;
            queue.push_back(y);
        }
    }
    if (std::find(done.begin(), done.end(), 0) != done.end())
        throw IrrepError("generators do not generate " + g.name());
    return rho;
}

Irrep make_irrep(const FiniteGroup& g, const std::vector<Element>& gens,
                 const std::vector<CMatrix>& images, bool principal = false) {
    Irrep r;
    r.dim = images.empty() ? 1 : images.front().dim();
    r.matrices = extend_from_generators(g, gens, images, r.dim);
    r.is_principal = principal;
    return r;
}

CMatrix rotation(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return CMatrix(2, {c, -s, s, c});
}

std::vector<Irrep> cyclic_irreps(const FiniteGroup& g, unsigned n) {
    // Powers of one primitive root, each evaluated directly to avoid drift.
    std::vector<Complex> root(n);
    for (unsigned t = 0; t < n; ++t)
        root[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / n);
    // Exact values where the angle is a multiple of π/2.
    for (unsigned t = 0; t < n; ++t) {
        if ((4 * t) % n != 0) continue;
        static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        root[t] = quarter[(4 * t / n) % 4];
    }
    std::vector<Irrep> out(n);
    for (unsigned j = 0; j < n; ++j) {
        out[j].dim = 1;
        out[j].is_principal = j == 0;
        out[j].matrices.reserve(g.order());
        for (unsigned k = 0; k < n; ++k)
            out[j].matrices.push_back(CMatrix::scalar(root[(std::size_t{j} * k) % n]));
    }
    return out;
}

std::vector<Irrep> symmetric3_irreps(const FiniteGroup& g, Realization realization) {
    const std::vector<Element> gens{4, 1};  // (123), (12)
    std::vector<Irrep> out;
    out.push_back(make_irrep(g, gens, {CMatrix::scalar(1), CMatrix::scalar(1)}, true));
    out.push_back(make_irrep(g, gens, {CMatrix::scalar(1), CMatrix::scalar(-1)}));
    if (realization == Realization::unitary) {
        out.push_back(make_irrep(g, gens,
                                 {rotation(2.0 * std::numbers::pi / 3.0), CMatrix(2, {1, 0, 0, -1})}));
    } else {
        // Action on the root lattice in the basis e1-e2, e2-e3.
        out.push_back(make_irrep(g, gens, {CMatrix(2, {0, -1, 1, -1}), CMatrix(2, {-1, 1, 0, 1})}));
    }
    return out;
}

std::vector<Irrep> dihedral_irreps(const FiniteGroup& g, unsigned n) {
    const std::vector<Element> gens{1, n};  // r, s
    std::vector<Irrep> out;
    out.push_back(make_irrep(g, gens, {CMatrix::scalar(1), CMatrix::scalar(1)}, true));
    out.push_back(make_irrep(g, gens, {CMatrix::scalar(1), CMatrix::scalar(-1)}));
    if (n % 2 == 0) {
        out.push_back(make_irrep(g, gens, {CMatrix::scalar(-1), CMatrix::scalar(1)}));
        out.push_back(make_irrep(g, gens, {CMatrix::scalar(-1), CMatrix::scalar(-1)}));
    }
    const CMatrix reflect(2, {1, 0, 0, -1});
    for (unsigned h = 1; 2 * h < n; ++h)
        out.push_back(make_irrep(g, gens, {rotation(2.0 * std::numbers::pi * h / n), reflect}));
    return out;
}

std::vector<Irrep> quaternion8_irreps(const FiniteGroup& g) {
    const std::vector<Element> gens{2, 4};  // i, j
    std::vector<Irrep> out;
    out.push_back(make_irrep(g, gens, {CMatrix::scalar(1), CMatrix::scalar(1)}, true));
    out.push_back(make_irrep(g, gens, {CMatrix::scalar(1), CMatrix::scalar(-1)}));
    out.push_back(make_irrep(g, gens, {CMatrix::scalar(-1), CMatrix::scalar(1)}));
    out.push_back(make_irrep(g, gens, {CMatrix::scalar(-1), CMatrix::scalar(-1)}));
    const Complex i{0, 1};
    out.push_back(make_irrep(g, gens, {CMatrix(2, {i, 0, 0, -i}), CMatrix(2, {0, 1, -1, 0})}));
    return out;
}

}  // namespace

Irrep tensor(const Irrep& a, const Irrep& b) {
    for (const auto& m : a.matrices)
        if (m.dim() != a.dim) throw IrrepError("left irrep has inconsistent matrix sizes");
    for (const auto& m : b.matrices)
        if (m.dim() != b.dim) throw IrrepError("right irrep has inconsistent matrix sizes");
    if (a.matrices.empty() || b.matrices.empty()) throw IrrepError("irrep without matrices");
    const std::size_t nb = b.matrices.size();
    Irrep t;
    t.dim = a.dim * b.dim;
    t.is_principal = a.is_principal && b.is_principal;
    t.factor_ids = std::make_pair(a.id, b.id);
    t.matrices.reserve(a.matrices.size() * nb);
    for (const auto& ma : a.matrices)
        for (const auto& mb : b.matrices) t.matrices.push_back(kron(ma, mb));
    return t;
}

IrrepSetPtr tensor_dual(const GroupPtr& product, const IrrepSet& left, const IrrepSet& right) {
    if (!product || product->order() != left.group()->order() * right.group()->order())
        throw IrrepError("product group order does not match the factor duals");
    if (left.realization() != right.realization())
        throw IrrepError("factor duals use different realizations");
    std::vector<Irrep> irreps;
    irreps.reserve(left.size() * right.size());
    for (const auto& a : left.irreps())
        for (const auto& b : right.irreps()) irreps.push_back(tensor(a, b));
    return std::make_shared<const IrrepSet>(
        product, std::move(irreps), left.realization(),
        IrrepSet::ProductLayout{left.size(), right.size(), right.principal_index()});
}

IrrepSetPtr irreps_of(const GroupPtr& g, Realization realization) {
    if (!g) throw IrrepError("null group");
    if (g->is_product()) {
        auto left = irreps_of(g->left_factor(), realization);
        auto right = irreps_of(g->right_factor(), realization);
        return tensor_dual(g, *left, *right);
    }
    if (!g->atom()) throw IrrepError("no irreps known for group " + g->name() +
                                     " (not built from the catalogue)");
    const Atom& atom = *g->atom();
    std::vector<Irrep> irreps;
    switch (atom.kind) {
        case AtomKind::cyclic: irreps = cyclic_irreps(*g, atom.param); break;
        case AtomKind::symmetric3: irreps = symmetric3_irreps(*g, realization); break;
        case AtomKind::dihedral: irreps = dihedral_irreps(*g, atom.param); break;
        case AtomKind::quaternion8: irreps = quaternion8_irreps(*g); break;
    }
    return std::make_shared<const IrrepSet>(g, std::move(irreps), realization);
}

bool VerificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

double VerificationReport::max_residual() const noexcept {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.max_residual);
    return m;
}

VerificationReport verify_irrep_set(const IrrepSet& s, double tolerance) {
    const FiniteGroup& g = *s.group();
    const std::size_t n = g.order();
    VerificationReport report;
    report.group = g.name();
    auto add = [&](std::string name, double residual, std::string detail = {}) {
        report.checks.push_back({std::move(name), residual <= tolerance, residual, std::move(detail)});
    };

    double hom = 0.0, ident = 0.0, unit = 0.0;
    for (const auto& r : s.irreps()) {
        ident = std::max(ident, r(g.identity()).max_abs_diff(CMatrix::identity(r.dim)));
        for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b)
                hom = std::max(hom, (r(a) * r(b)).max_abs_diff(r(g.mul(a, b))));
            if (s.realization() == Realization::unitary)
                unit = std::max(unit, (r(a) * r(a).adjoint()).max_abs_diff(CMatrix::identity(r.dim)));
        }
    }
    add("homomorphism", hom);
    add("identity_matrix", ident);
    if (s.realization() == Realization::unitary) add("unitarity", unit);

    std::size_t dim_sq = 0, linear = 0;
    for (const auto& r : s.irreps()) {
        dim_sq += r.dim * r.dim;
        if (r.dim == 1) ++linear;
    }
    add("completeness", std::abs(static_cast<double>(dim_sq) - static_cast<double>(n)),
        "sum of dim^2 = " + std::to_string(dim_sq));
    const std::size_t classes = conjugacy_class_count(g);
    add("class_count", s.size() == classes ? 0.0 : 1.0,
        std::to_string(s.size()) + " irreps, " + std::to_string(classes) + " classes");
    const std::size_t expected_linear = n / commutator_subgroup_order(g);
    add("linear_characters", linear == expected_linear ? 0.0 : 1.0,
        std::to_string(linear) + " one-dimensional, expected " + std::to_string(expected_linear));

    double ortho = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            Complex ip = 0.0;
            for (Element a = 0; a < n; ++a) ip += s[i].character(a) * std::conj(s[j].character(a));
            ip /= static_cast<double>(n);
            ortho = std::max(ortho, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    add("character_orthonormality", ortho);

    double group_sum = 0.0;
    for (const auto& r : s.irreps()) {
        CMatrix total(r.dim);
        for (Element a = 0; a < n; ++a) total += r(a);
        CMatrix expected = r.id == s.principal_index()
                               ? CMatrix::scalar(static_cast<double>(n))
                               : CMatrix(r.dim);
        group_sum = std::max(group_sum, total.max_abs_diff(expected));
    }
    add("group_sum", group_sum, "rho(G) = 0 unless rho is principal, where it is |G|");

    double weighted = 0.0;
    for (Element a = 0; a < n; ++a) {
        Complex total = 0.0;
        for (const auto& r : s.irreps()) total += static_cast<double>(r.dim) * r.character(a);
        const double expected = a == g.identity() ? static_cast<double>(n) : 0.0;
        weighted = std::max(weighted, std::abs(total - expected));
    }
    add("dimension_weighted_characters", weighted,
        "sum of dim * tr rho(g) = |G| at the identity, 0 elsewhere");
    return report;
}

}  // namespace grouplin
