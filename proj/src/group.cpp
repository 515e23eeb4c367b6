#include "grouplin/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>

namespace grouplin {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels,
                         std::vector<Element> mul_table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(mul_table)) {
    order_ = labels_.size();
    if (order_ == 0) throw GroupError("group must have at least one element");
    if (table_.size() != order_ * order_)
        throw GroupError("multiplication table size does not match label count");
    for (Element e : table_)
        if (e >= order_) throw GroupError("multiplication table entry out of range");

    std::vector<char> seen(order_);
    for (std::size_t r = 0; r < order_; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t c = 0; c < order_; ++c) {
            Element e = table_[r * order_ + c];
            if (seen[e]) throw GroupError("multiplication table row is not a permutation");
            seen[e] = 1;
        }
    }
    for (std::size_t c = 0; c < order_; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < order_; ++r) {
            Element e = table_[r * order_ + c];
            if (seen[e]) throw GroupError("multiplication table column is not a permutation");
            seen[e] = 1;
        }
    }

    bool found = false;
    for (Element e = 0; e < order_ && !found; ++e) {
        bool ok = true;
        for (Element a = 0; a < order_ && ok; ++a)
            ok = table_[e * order_ + a] == a && table_[a * order_ + e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw GroupError("multiplication table has no two-sided identity");

    // Latin square guarantees a unique right inverse; it must also be a left one.
    inverse_.resize(order_);
    for (Element a = 0; a < order_; ++a) {
        auto r = row(a);
        Element b = static_cast<Element>(std::find(r.begin(), r.end(), identity_) - r.begin());
        if (table_[b * order_ + a] != identity_)
            throw GroupError("element " + labels_[a] + " has no two-sided inverse");
        inverse_[a] = b;
    }

    for (std::size_t a = 0; a < order_ && abelian_; ++a)
        for (std::size_t b = a + 1; b < order_; ++b)
            if (table_[a * order_ + b] != table_[b * order_ + a]) {
                abelian_ = false;
                break;
            }
}

bool FiniteGroup::same_table(const FiniteGroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
}

GroupPtr make_group(std::string name, std::vector<std::string> labels,
                    std::vector<Element> mul_table) {
    return std::make_shared<const FiniteGroup>(std::move(name), std::move(labels),
                                               std::move(mul_table));
}

namespace {

std::shared_ptr<FiniteGroup> build(std::string name, std::vector<std::string> labels,
                                   std::vector<Element> table) {
    return std::make_shared<FiniteGroup>(std::move(name), std::move(labels), std::move(table));
}

}  // namespace

GroupPtr make_cyclic(unsigned n) {
    if (n == 0) throw GroupError("cyclic group order must be at least 1");
    std::vector<std::string> labels(n);
    std::vector<Element> table(std::size_t{n} * n);
    for (unsigned i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (unsigned j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    }
    auto g = build("C" + std::to_string(n), std::move(labels), std::move(table));
    g->atom_ = Atom{AtomKind::cyclic, n};
    g->catalogued_ = true;
    return g;
}

GroupPtr make_symmetric3() {
    // perm[x] is the image of point x.
    using Perm = std::array<int, 3>;
    static constexpr std::array<Perm, 6> perms{{
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
    auto index_of = [](const Perm& p) {
        return static_cast<Element>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    std::vector<Element> table(36);
    for (std::size_t s = 0; s < 6; ++s)
        for (std::size_t t = 0; t < 6; ++t) {
            Perm st{};
            for (int x = 0; x < 3; ++x) st[x] = perms[s][perms[t][x]];
            table[s * 6 + t] = index_of(st);
        }
    auto g = build("S3", {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}, std::move(table));
    g->atom_ = Atom{AtomKind::symmetric3, 3};
    g->catalogued_ = true;
    return g;
}

GroupPtr make_dihedral(unsigned n) {
    if (n < 2) throw GroupError("dihedral group needs n >= 2");
    const unsigned order = 2 * n;
    std::vector<std::string> labels(order);
    for (unsigned k = 0; k < n; ++k) {
        std::string r = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
        labels[k] = k == 0 ? "e" : r;
        labels[n + k] = r + "s";
    }
    // r^a s^x · r^b s^y = r^{a + (-1)^x b} s^{x+y}
    std::vector<Element> table(std::size_t{order} * order);
    for (unsigned p = 0; p < order; ++p)
        for (unsigned q = 0; q < order; ++q) {
            unsigned a = p % n, x = p / n, b = q % n, y = q / n;
            unsigned rot = (x == 0 ? a + b : a + n - b) % n;
            table[p * order + q] = ((x + y) % 2) * n + rot;
        }
    auto g = build("D" + std::to_string(n), std::move(labels), std::move(table));
    g->atom_ = Atom{AtomKind::dihedral, n};
    g->catalogued_ = true;
    return g;
}

GroupPtr make_quaternion8() {
    // Element 2u + s is (-1)^s times unit u ∈ {1, i, j, k}.
    static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<Element> table(64);
    for (unsigned p = 0; p < 8; ++p)
        for (unsigned q = 0; q < 8; ++q) {
            unsigned u = p / 2, v = q / 2;
            unsigned sign = (p % 2 + q % 2 + unit_sign[u][v]) % 2;
            table[p * 8 + q] = 2 * unit_mul[u][v] + sign;
        }
    auto g = build("Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, std::move(table));
    g->atom_ = Atom{AtomKind::quaternion8, 8};
    g->catalogued_ = true;
    return g;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    if (!a || !b) throw GroupError("direct product of a null group");
    const std::size_t na = a->order(), nb = b->order(), n = na * nb;
    std::vector<std::string> labels(n);
    std::vector<Element> table(n * n);
    for (std::size_t p = 0; p < n; ++p) {
        labels[p] = "(" + a->label(p / nb) + "," + b->label(p % nb) + ")";
        for (std::size_t q = 0; q < n; ++q) {
            Element x = a->mul(p / nb, q / nb);
            Element y = b->mul(p % nb, q % nb);
            table[p * n + q] = static_cast<Element>(x * nb + y);
        }
    }
    auto g = build(a->name() + "x" + b->name(), std::move(labels), std::move(table));
    g->left_ = a;
    g->right_ = b;
    g->catalogued_ = a->is_catalogued() && b->is_catalogued();
    return g;
}

GroupPtr parse_group_spec(std::string_view spec) {
    std::size_t pos = 0;
    auto parse_int = [&](std::size_t start) -> unsigned {
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), value);
        if (ec == std::errc::result_out_of_range)
            throw GroupSpecError("integer out of range", start);
        if (ec != std::errc() || ptr == spec.data() + pos)
            throw GroupSpecError("expected an integer", pos);
        pos = static_cast<std::size_t>(ptr - spec.data());
        return value;
    };
    auto parse_atom = [&]() -> GroupPtr {
        if (pos >= spec.size()) throw GroupSpecError("expected a group atom", pos);
        const std::size_t start = pos;
        const char kind = spec[pos++];
        switch (kind) {
            case 'C': {
                unsigned n = parse_int(start);
                if (n == 0) throw GroupSpecError("cyclic order must be positive", start);
                return make_cyclic(n);
            }
            case 'D': {
                unsigned n = parse_int(start);
                if (n < 2) throw GroupSpecError("dihedral parameter must be at least 2", start);
                return make_dihedral(n);
            }
            case 'S': {
                unsigned n = parse_int(start);
                if (n != 3) throw GroupSpecError("unsupported atom S" + std::to_string(n), start);
                return make_symmetric3();
            }
            case 'Q': {
                unsigned n = parse_int(start);
                if (n != 8) throw GroupSpecError("unsupported atom Q" + std::to_string(n), start);
                return make_quaternion8();
            }
            default:
                throw GroupSpecError(std::string("unexpected character '") + kind + "'", start);
        }
    };

    GroupPtr g = parse_atom();
    while (pos < spec.size()) {
        if (spec[pos] != 'x') throw GroupSpecError("expected 'x' between factors", pos);
        ++pos;
        g = direct_product(g, parse_atom());
    }
    return g;
}

std::size_t commutator_subgroup_order(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<char> in(n, 0);
    std::vector<Element> members;
    auto add = [&](Element e) {
        if (!in[e]) {
            in[e] = 1;
            members.push_back(e);
        }
    };
    add(g.identity());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            add(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    // Closure under multiplication; finite, so this is the generated subgroup.
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(g.mul(members[i], members[j]));
            add(g.mul(members[j], members[i]));
        }
    return members.size();
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<char> assigned(n, 0);
    std::vector<std::vector<Element>> classes;
    for (Element x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        std::vector<Element> cls;
        for (Element h = 0; h < n; ++h) {
            Element y = g.mul(g.mul(h, x), g.inv(h));
            if (!assigned[y]) {
                assigned[y] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::size_t conjugacy_class_count(const FiniteGroup& g) { return conjugacy_classes(g).size(); }

AxiomReport check_axioms(const FiniteGroup& g, std::uint64_t seed, std::uint64_t samples) {
    AxiomReport report;
    const std::size_t n = g.order();
    const Element e = g.identity();
    std::vector<char> seen(n);
    for (Element a = 0; a < n; ++a) {
        if (g.mul(e, a) != a || g.mul(a, e) != a) report.identity = false;
        if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e) report.inverses = false;
        std::fill(seen.begin(), seen.end(), 0);
        for (Element b = 0; b < n; ++b) seen[g.mul(a, b)] = 1;
        if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n))
            report.latin_square = false;
        std::fill(seen.begin(), seen.end(), 0);
        for (Element b = 0; b < n; ++b) seen[g.mul(b, a)] = 1;
        if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n))
            report.latin_square = false;
    }

    auto assoc = [&](Element a, Element b, Element c) {
        ++report.triples_checked;
        return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
    };
    if (n <= kExhaustiveAxiomOrder) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) report.associativity = false;
    } else {
        report.exhaustive = false;
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = 0; i < samples; ++i) {
            auto a = static_cast<Element>(rng() % n), b = static_cast<Element>(rng() % n),
                 c = static_cast<Element>(rng() % n);
            if (!assoc(a, b, c)) report.associativity = false;
        }
    }
    return report;
}

}  // namespace grouplin
