#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cogdim/errors.hpp"

namespace cogdim {

/**
 * Finite group with a full multiplication table.  Elements are dense ids,
 * identity is always id 0.  Construction from an explicit table or from
 * permutation generators (completed by orbit closure).
 */
class ConcreteFiniteGroup {
public:
    using Ptr = std::shared_ptr<const ConcreteFiniteGroup>;

    static Ptr from_table(std::vector<std::vector<int32_t>> table,
                          const Limits& lim = Limits::defaults(),
                          std::vector<std::string> names = {});
    /// Generators as cycle lists over 0..degree-1, e.g. {{0,1,2},{3,4}}.
    static Ptr from_permutations(const std::vector<std::vector<std::vector<int32_t>>>& generators,
                                 int degree, const Limits& lim = Limits::defaults());
    static Ptr cyclic(int n);
    /// Dihedral group of order 2k; elements (rotation j, flip e) = j + k*e.
    /// Generating reflections: s = id k, t = id k+1, with s*t a k-rotation.
    static Ptr dihedral(int k);
    static Ptr direct_product(const Ptr& a, const Ptr& b);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[(std::size_t)a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }
    int conjugate(int g, int x) const { return mul(mul(inv(g), x), g); }  // g^-1 x g

    const std::string& element_name(int a) const { return names_[a]; }

    /// For direct products: component index of an element.
    std::pair<int, int> product_split(int a) const;

private:
    int n_ = 1;
    std::vector<int32_t> table_;  // n x n
    std::vector<int32_t> inv_;
    std::vector<std::string> names_;
    int product_right_order_ = 0;  // nonzero iff built as a direct product

    void finalize(const Limits& lim);
};

/// Subgroup given by its element set; keeps the parent alive.
class SubgroupHandle {
public:
    SubgroupHandle() = default;
    static SubgroupHandle from_members(ConcreteFiniteGroup::Ptr parent,
                                       std::vector<int32_t> members);
    static SubgroupHandle generated(ConcreteFiniteGroup::Ptr parent,
                                    const std::vector<int32_t>& generators);
    static SubgroupHandle trivial(ConcreteFiniteGroup::Ptr parent);
    static SubgroupHandle whole(ConcreteFiniteGroup::Ptr parent);

    const ConcreteFiniteGroup& parent() const { return *parent_; }
    const ConcreteFiniteGroup::Ptr& parent_ptr() const { return parent_; }
    int order() const { return (int)members_.size(); }
    const std::vector<int32_t>& members() const { return members_; }
    bool contains(int g) const { return mask_.test(g); }

private:
    ConcreteFiniteGroup::Ptr parent_;
    std::vector<int32_t> members_;  // sorted
    boost::dynamic_bitset<> mask_;
};

bool subgroup_equal(const SubgroupHandle& h, const SubgroupHandle& p);
bool subgroup_leq(const SubgroupHandle& h, const SubgroupHandle& p);
long subgroup_index(const SubgroupHandle& h, const SubgroupHandle& p);  // [P : H]

/// g^-1 P g
SubgroupHandle conjugate_subgroup(const SubgroupHandle& p, int g);

/// Representatives of { g | g^-1 P g is one of `targets` } / P (P acting by
/// left multiplication); exhaustive over the parent group.
std::vector<int> transporter_coset_reps(const SubgroupHandle& p,
                                        const std::vector<SubgroupHandle>& targets);

/// Order-only stand-in for a local group; order 0 encodes an infinite group.
/// Equal tags promise the identical subgroup of the ambient group.
struct OrderLabel {
    std::string tag;
    std::uint64_t order = 1;

    bool finite() const { return order != 0; }
};

using GroupHandle = std::variant<SubgroupHandle, OrderLabel>;

std::uint64_t handle_order(const GroupHandle& h);  // 0 = infinite
bool handle_is_concrete(const GroupHandle& h);

/// No conjugate of any member is properly contained in it.  True for finite
/// collections (verified exhaustively on the concrete backend); infinite
/// order labels raise RigidityUnknown.
bool rigidity_check(const std::vector<GroupHandle>& local_groups);

}  // namespace cogdim
