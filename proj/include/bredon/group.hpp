#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bredon {

/// Permutation of {0, ..., n-1}; images()[i] is the image of i.
/// Products compose left to right: (a * b)(i) = b(a(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);
    /// 1-based cycle notation, e.g. "(1 2 3)(4 5)", "(1,2)" or "()".
    static Permutation parse_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    std::string to_cycles() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite permutation group with its full element list (sorted by image tuple)
/// and multiplication table. Element index 0 is always the identity.
class FiniteGroup {
public:
    static constexpr std::size_t kMaxOrder = 2000;

    static GroupPtr from_generators(int degree, std::vector<Permutation> generators,
                                    std::string name = {});
    /// Cayley table over 0..n-1 (table[a][b] = a*b); converted to the right regular representation.
    static GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table, std::string name = {});

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elements_.size()); }
    int identity() const { return 0; }
    const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::vector<int> generator_indices() const;

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * elements_.size() + b]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    /// a^g = g^{-1} a g
    int conj(int a, int g) const { return mul(mul(inv(g), a), g); }
    std::optional<int> index_of(const Permutation& p) const;
    int element_order(int a) const;

private:
    FiniteGroup() = default;
    int degree_ = 0;
    std::string name_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

/// Membership bitmask over element indices of a parent group.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : bits_((universe + 63) / 64, 0), universe_(universe) {}

    void insert(int i) { bits_[static_cast<std::size_t>(i) >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool contains(int i) const { return (bits_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
    bool subset_of(const ElementSet& o) const;
    ElementSet intersect(const ElementSet& o) const;
    std::size_t hash() const;

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    std::vector<std::uint64_t> bits_;
    std::size_t universe_ = 0;
};

/// Subgroup of a FiniteGroup, stored as its sorted member indices.
class Subgroup {
public:
    Subgroup() = default;
    /// `members` must already be a subgroup; use `generate` otherwise.
    Subgroup(GroupPtr parent, std::vector<int> members);

    static Subgroup generate(GroupPtr parent, const std::vector<int>& generators);
    static Subgroup trivial(GroupPtr parent) { return generate(std::move(parent), {}); }
    static Subgroup whole(GroupPtr parent);

    const GroupPtr& parent() const { return parent_; }
    const FiniteGroup& group() const { return *parent_; }
    const std::vector<int>& members() const { return members_; }
    const ElementSet& mask() const { return mask_; }
    int order() const { return static_cast<int>(members_.size()); }
    bool contains(int g) const { return mask_.contains(g); }
    bool is_subgroup_of(const Subgroup& k) const { return mask_.subset_of(k.mask_); }
    /// A small generating set (greedy).
    std::vector<int> generators() const;
    std::string describe() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
    /// Canonical order: by order, then lexicographic member list.
    friend bool operator<(const Subgroup& a, const Subgroup& b);

private:
    GroupPtr parent_;
    std::vector<int> members_;
    ElementSet mask_;
};

struct SubgroupHash {
    std::size_t operator()(const Subgroup& h) const { return h.mask().hash(); }
};

constexpr std::size_t kDefaultSubgroupBound = 48;

/// All subgroups of G, canonically sorted. Throws GroupTooLarge if |G| > bound.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, std::size_t bound = kDefaultSubgroupBound);
/// All subgroups of H (as subgroups of its parent), canonically sorted.
std::vector<Subgroup> enumerate_subgroups_of(const Subgroup& h);

/// H^g = {g^{-1} h g}.
Subgroup conjugate(const Subgroup& h, int g);
Subgroup intersect(const Subgroup& h, const Subgroup& k);
Subgroup normalizer(const Subgroup& h);
/// Least element index g with H^g = K, if any.
std::optional<int> are_conjugate(const Subgroup& h, const Subgroup& k);
/// Least g with H^g <= K, if any.
std::optional<int> subconjugacy_witness(const Subgroup& h, const Subgroup& k);
bool is_normal(const Subgroup& h);
/// Lexicographically least member set among the conjugates of H.
Subgroup canonical_conjugate(const Subgroup& h);

/// Subgroup viewed as a group in its own right, with the inclusion map on element indices.
struct SubgroupEmbedding {
    GroupPtr group;
    std::vector<int> to_parent;
    Subgroup image;

    /// Inverse of to_parent; -1 off the image.
    std::vector<int> from_parent;
    Subgroup pull_back(const Subgroup& parent_subgroup) const;
    Subgroup push_forward(const Subgroup& sub_subgroup) const;
};
SubgroupEmbedding embed_subgroup(const Subgroup& k);

/// Direct product on the disjoint union of the permutation domains.
struct ProductGroup {
    GroupPtr group;
    std::vector<int> first;  // element of product -> element of G1
    std::vector<int> second; // element of product -> element of G2
    std::vector<int> pair_table;
    std::size_t order2 = 0;

    int make(int g1, int g2) const { return pair_table[static_cast<std::size_t>(g1) * order2 + g2]; }
    Subgroup product_subgroup(const Subgroup& h1, const Subgroup& h2) const;
};
ProductGroup direct_product(const GroupPtr& g1, const GroupPtr& g2);

} // namespace bredon
