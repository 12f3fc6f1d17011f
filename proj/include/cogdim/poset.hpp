#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cogdim/simplicial.hpp"

namespace cogdim {

using ElementMask = boost::dynamic_bitset<>;

/**
 * Finite poset with opaque string ids and dense int indices.  The full
 * reflexive-transitive relation is stored as one bitset row per element
 * (leq queries are O(1)).  Immutable after construction.
 */
class Poset {
public:
    Poset() = default;

    /// Reflexive-transitive closure of a raw relation; rejects cycles and
    /// duplicate ids.  Pairs are (a, b) meaning a <= b.
    static Poset from_relations(std::vector<std::string> ids,
                                const std::vector<std::pair<std::string, std::string>>& relations);
    static Poset from_relation_indices(std::vector<std::string> ids,
                                       const std::vector<std::pair<int, int>>& relations);

    int size() const { return (int)ids_.size(); }
    const std::string& id(int i) const { return ids_[i]; }
    const std::vector<std::string>& ids() const { return ids_; }
    int index_of(const std::string& id) const;  // UnknownElement if absent

    bool leq(int a, int b) const { return up_[a].test(b); }
    bool less(int a, int b) const { return a != b && up_[a].test(b); }

    /// {v : a <= v}, including a.
    const ElementMask& upper_set(int a) const { return up_[a]; }
    ElementMask strict_upper_set(int a) const;
    ElementMask lower_set(int a) const;

    std::vector<int> maximal_elements() const;
    std::vector<int> minimal_elements() const;

    /// Covering pairs (a, b) with a strictly below b and nothing in between.
    std::vector<std::pair<int, int>> covers() const;

    /// Length (vertex count) of the longest chain starting at each element and
    /// going strictly upward; maximal elements get 0.
    std::vector<int> upward_heights() const;

    Poset reversed() const;

    /// Order complex: vertices are the elements, k-simplices the (k+1)-chains.
    SimplicialComplex order_complex(const Limits& lim = Limits::defaults()) const;
    SimplicialComplex order_complex_on(const ElementMask& members,
                                       const Limits& lim = Limits::defaults()) const;

    std::size_t count_chains(const ElementMask& members) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<ElementMask> up_;  // up_[a] = {b : a <= b}

    static Poset build(std::vector<std::string> ids, std::vector<std::vector<int>> adj);
};

/// Spec-level entry point: closure + validation.
inline Poset validate_poset(std::vector<std::string> ids,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
    return Poset::from_relations(std::move(ids), relations);
}

SimplicialComplex order_complex(const Poset& q, const Limits& lim = Limits::defaults());

/// K_J: realization of { V : V >= J }.  Always a cone with apex J.
SimplicialComplex upper_set_realization(const Poset& q, const std::string& j,
                                        const Limits& lim = Limits::defaults());
SimplicialComplex upper_set_realization(const Poset& q, int j,
                                        const Limits& lim = Limits::defaults());

/// K_{>J}: realization of { V : V > J }; may be empty.
SimplicialComplex strict_upper_realization(const Poset& q, const std::string& j,
                                           const Limits& lim = Limits::defaults());
SimplicialComplex strict_upper_realization(const Poset& q, int j,
                                           const Limits& lim = Limits::defaults());

/// Vertex masks of the pair (K_Omega, K_{>Omega}) inside |Q|.
/// strictly_bigger(V, U) must be meaningful whenever U <= V.
struct OmegaMasks {
    ElementMask omega_up;      // { V : V >= U for some U in Omega }
    ElementMask omega_strict;  // ... and strictly_bigger(V, U)
};
OmegaMasks omega_masks(const Poset& q, const ElementMask& omega,
                       const std::function<bool(int, int)>& strictly_bigger);

/// (K_Omega, K_{>Omega}) as concrete complexes.
ComplexPair omega_realizations(const Poset& q, const ElementMask& omega,
                               const std::function<bool(int, int)>& strictly_bigger,
                               const Limits& lim = Limits::defaults());

/// True if `map` (indices of p -> indices of r) is an order isomorphism.
bool is_poset_isomorphism(const Poset& p, const Poset& r, const std::vector<int>& map);

}  // namespace cogdim
