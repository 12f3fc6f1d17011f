#pragma once

#include <map>
#include <memory>
#include <optional>

#include "cogdim/group.hpp"
#include "cogdim/poset.hpp"

namespace cogdim {

enum class Backend { Concrete, Order };

/**
 * Simple complex of groups over a finite poset: a local group for every
 * element and an injective structure map along every relation.
 *
 * Concrete backend: all local groups are subgroups of one ambient finite
 * group and the structure maps are the subgroup inclusions (local groups are
 * identified with their images under a simple morphism into the ambient
 * group).  Order backend: only identity tags and orders are known; structure
 * maps along finite orders are iso exactly when the orders agree, infinite
 * orders need explicit flags on covering pairs.
 */
class SimpleComplexOfGroups {
public:
    struct Data {
        Poset poset;
        Backend backend = Backend::Order;
        ConcreteFiniteGroup::Ptr ambient;  // Concrete only
        std::vector<GroupHandle> locals;   // by poset index
        std::map<std::pair<int, int>, bool> iso_flags;  // optional, per relation
        // optional explicit structure maps, validated against the inclusions:
        // maps[(a,b)] = list of (element of P_a, its image in P_b)
        std::map<std::pair<int, int>, std::vector<std::pair<int32_t, int32_t>>> explicit_maps;
        std::map<std::string, std::string> metadata;
    };

    const Poset& poset() const { return poset_; }
    Backend backend() const { return backend_; }
    const ConcreteFiniteGroup::Ptr& ambient() const { return ambient_; }
    const GroupHandle& local(int j) const { return locals_[j]; }
    const std::vector<GroupHandle>& locals() const { return locals_; }
    std::uint64_t local_order(int j) const { return handle_order(locals_[j]); }
    const SubgroupHandle& local_subgroup(int j) const;  // Concrete only

    /// Structure map along a <= b is an isomorphism?  May raise
    /// UnknownIsoStatus on the order backend with infinite orders.
    bool iso_along(int a, int b) const;

    const std::map<std::string, std::string>& metadata() const { return metadata_; }
    std::map<std::string, std::string>& metadata() { return metadata_; }

private:
    friend SimpleComplexOfGroups validate_scog(Data, const Limits&);
    Poset poset_;
    Backend backend_ = Backend::Order;
    ConcreteFiniteGroup::Ptr ambient_;
    std::vector<GroupHandle> locals_;
    std::map<std::pair<int, int>, bool> iso_flags_;
    std::map<std::string, std::string> metadata_;
};

SimpleComplexOfGroups validate_scog(SimpleComplexOfGroups::Data data,
                                    const Limits& lim = Limits::defaults());

bool is_thin(const SimpleComplexOfGroups& scog);

struct BlockPartition {
    std::vector<std::vector<int>> blocks;  // sorted element indices
    std::vector<int> block_of;             // element -> block
    std::vector<int> representative;       // block -> element with least id
    Poset block_poset;                     // R; ids are representative ids

    int block_count() const { return (int)blocks.size(); }
};

/// Connected components of the covering relation restricted to isomorphic
/// structure maps, with the induced order between them.
BlockPartition compute_blocks(const SimpleComplexOfGroups& scog);

/// Thin complex of groups over the block poset.
SimpleComplexOfGroups thinning(const SimpleComplexOfGroups& scog);
SimpleComplexOfGroups thinning(const SimpleComplexOfGroups& scog, const BlockPartition& blocks);

/// strictly_bigger(V, U) for V >= U: the structure map P_U -> P_V is not
/// surjective, i.e. U and V lie in different blocks.
std::function<bool(int, int)> strictly_bigger_predicate(const SimpleComplexOfGroups& scog);

struct OmegaSets {
    std::vector<int> reps;                          // the set I_J, one g per coset
    std::vector<ElementMask> omega;                 // per rep: Omega^g_J
    std::vector<std::vector<int>> blocks_in_omega;  // per rep: block indices inside
    BlockPartition blocks;
};

/// I_J together with the sets Omega^g_J = { U : P_U = g^-1 P_J g } and the
/// blocks they decompose into.  Concrete backend only.
OmegaSets omega_sets(const SimpleComplexOfGroups& scog, int j);

/// Complex of groups of the subdivided data: elements are nonempty chains of
/// Q ordered by reverse refinement, the local group of a chain is the local
/// group at its Q-minimum.
SimpleComplexOfGroups barycentric_scog(const SimpleComplexOfGroups& scog,
                                       const Limits& lim = Limits::defaults());

/// Identical-subgroup test for two local handles (tags on the order backend).
bool handles_identical(const GroupHandle& a, const GroupHandle& b);

/// map: indices of a.poset() -> indices of b.poset(); checks order
/// isomorphism plus identical local groups.
bool simply_isomorphic(const SimpleComplexOfGroups& a, const SimpleComplexOfGroups& b,
                       const std::vector<int>& map);

}  // namespace cogdim
