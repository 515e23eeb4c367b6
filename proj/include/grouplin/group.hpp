#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grouplin {

// 0-based position in a group's canonical element ordering.
using Element = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Catalogue entry a group was built from. Irreps are only known for groups
// whose construction tree bottoms out in these atoms.
enum class AtomKind { cyclic, symmetric3, dihedral, quaternion8 };

struct Atom {
    AtomKind kind;
    unsigned param;  // n for C_n and D_n, unused otherwise
};

class GroupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GroupSpecError : public GroupError {
public:
    GroupSpecError(const std::string& what, std::size_t position)
        : GroupError(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Immutable finite group given by its Cayley table.
///
/// The constructor checks that the table is a Latin square with a two-sided
/// identity; associativity is left to check_axioms() since it is cubic in the
/// order.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::string> labels,
                std::vector<Element> mul_table);

    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return identity_; }
    Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
    Element inv(Element a) const noexcept { return inverse_[a]; }
    std::span<const Element> row(Element a) const noexcept {
        return {table_.data() + a * order_, order_};
    }
    std::span<const Element> mul_table() const noexcept { return table_; }
    std::span<const Element> inv_table() const noexcept { return inverse_; }

    const std::string& name() const noexcept { return name_; }
    const std::string& label(Element a) const { return labels_.at(a); }
    std::span<const std::string> labels() const noexcept { return labels_; }

    bool is_abelian() const noexcept { return abelian_; }

    // Construction provenance; empty for groups built from a raw table.
    const std::optional<Atom>& atom() const noexcept { return atom_; }
    const GroupPtr& left_factor() const noexcept { return left_; }
    const GroupPtr& right_factor() const noexcept { return right_; }
    bool is_product() const noexcept { return left_ != nullptr; }
    bool is_catalogued() const noexcept { return catalogued_; }

    // True when both groups have the same order and Cayley table.
    bool same_table(const FiniteGroup& other) const noexcept;

private:
    friend GroupPtr make_cyclic(unsigned);
    friend GroupPtr make_symmetric3();
    friend GroupPtr make_dihedral(unsigned);
    friend GroupPtr make_quaternion8();
    friend GroupPtr direct_product(const GroupPtr&, const GroupPtr&);

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    std::size_t order_ = 0;
    Element identity_ = 0;
    bool abelian_ = true;

    std::optional<Atom> atom_;
    GroupPtr left_;
    GroupPtr right_;
    bool catalogued_ = false;
};

GroupPtr make_group(std::string name, std::vector<std::string> labels,
                    std::vector<Element> mul_table);

/// Cyclic group C_n; element i is the residue i and identity is 0.
GroupPtr make_cyclic(unsigned n);

/// S3 ordered [e, (12), (13), (23), (123), (132)]. The product s·t applies t
/// first, then s.
GroupPtr make_symmetric3();

/// Dihedral group of order 2n ordered r^0..r^{n-1}, r^0 s..r^{n-1} s with
/// s r s = r^{-1}.
GroupPtr make_dihedral(unsigned n);

/// Quaternion group ordered [1, -1, i, -i, j, -j, k, -k].
GroupPtr make_quaternion8();

/// A × B with index (a, b) ↦ a·|B| + b and componentwise multiplication.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Parses `atom ("x" atom)*` with atom := C<int> | S3 | D<int> | Q8.
/// Products associate left to right.
GroupPtr parse_group_spec(std::string_view spec);

std::size_t commutator_subgroup_order(const FiniteGroup& g);
std::size_t conjugacy_class_count(const FiniteGroup& g);
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

struct AxiomReport {
    bool identity = true;
    bool inverses = true;
    bool latin_square = true;
    bool associativity = true;
    bool exhaustive = true;  // false when associativity was sampled
    std::uint64_t triples_checked = 0;

    bool ok() const noexcept { return identity && inverses && latin_square && associativity; }
};

inline constexpr std::size_t kExhaustiveAxiomOrder = 64;

/// Group axioms, exhaustively for order ≤ 64 and on `samples` random triples
/// beyond that.
AxiomReport check_axioms(const FiniteGroup& g, std::uint64_t seed = 1,
                         std::uint64_t samples = 200000);

}  // namespace grouplin
