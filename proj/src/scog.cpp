#include "cogdim/scog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cogdim {

const SubgroupHandle& SimpleComplexOfGroups::local_subgroup(int j) const {
    if (backend_ != Backend::Concrete)
        fail(ErrorKind::InfiniteBackend, "operation needs the concrete group backend");
    return std::get<SubgroupHandle>(locals_[j]);
}

bool SimpleComplexOfGroups::iso_along(int a, int b) const {
    if (!poset_.leq(a, b)) fail(ErrorKind::Internal, "iso_along on incomparable elements");
    if (a == b) return true;
    std::uint64_t oa = local_order(a), ob = local_order(b);
    if (oa != 0 && ob != 0) return oa == ob;
    auto it = iso_flags_.find({a, b});
    if (it != iso_flags_.end()) return it->second;
    fail(ErrorKind::UnknownIsoStatus, "no iso flag for infinite local groups along '" +
                                          poset_.id(a) + "' <= '" + poset_.id(b) + "'");
}

SimpleComplexOfGroups validate_scog(SimpleComplexOfGroups::Data data, const Limits&) {
    const Poset& q = data.poset;
    const int n = q.size();
    if ((int)data.locals.size() != n)
        fail(ErrorKind::MissingMap, "a local group is missing for some poset element");

    for (int j = 0; j < n; ++j) {
        bool concrete = handle_is_concrete(data.locals[j]);
        if (concrete != (data.backend == Backend::Concrete))
            fail(ErrorKind::BadInput, "local group backend mismatch at '" + q.id(j) + "'");
    }
    if (data.backend == Backend::Concrete) {
        if (!data.ambient) fail(ErrorKind::BadInput, "concrete backend needs an ambient group");
        for (int j = 0; j < n; ++j)
            if (&std::get<SubgroupHandle>(data.locals[j]).parent() != data.ambient.get())
                fail(ErrorKind::DifferentParent, "local group at '" + q.id(j) +
                                                     "' does not live in the ambient group");
        // the structure maps are the subgroup inclusions; they must exist
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (q.less(a, b) && !subgroup_leq(std::get<SubgroupHandle>(data.locals[a]),
                                                  std::get<SubgroupHandle>(data.locals[b])))
                    fail(ErrorKind::MissingMap, "no inclusion of local groups along '" + q.id(a) +
                                                    "' <= '" + q.id(b) + "'");
    } else {
        for (int a = 0; a < n; ++a) {
            const auto& la = std::get<OrderLabel>(data.locals[a]);
            if (la.tag.empty()) fail(ErrorKind::BadInput, "empty order-label tag at '" + q.id(a) + "'");
            for (int b = 0; b < n; ++b) {
                if (!q.less(a, b)) continue;
                const auto& lb = std::get<OrderLabel>(data.locals[b]);
                if (!la.finite() && lb.finite())
                    fail(ErrorKind::BadInput, "no monomorphism from infinite '" + q.id(a) +
                                                  "' into finite '" + q.id(b) + "'");
                if (la.finite() && lb.finite() && lb.order % la.order != 0)
                    fail(ErrorKind::BadInput, "local order along '" + q.id(a) + "' <= '" + q.id(b) +
                                                  "' violates Lagrange divisibility");
            }
        }
        for (const auto& [rel, flag] : data.iso_flags) {
            auto [a, b] = rel;
            if (a < 0 || b < 0 || a >= n || b >= n || !q.leq(a, b))
                fail(ErrorKind::BadInput, "iso flag on a non-relation");
            std::uint64_t oa = handle_order(data.locals[a]), ob = handle_order(data.locals[b]);
            if (oa != 0 && ob != 0 && flag != (oa == ob))
                fail(ErrorKind::BadInput, "iso flag contradicts finite orders");
            if (flag && (oa == 0) != (ob == 0))
                fail(ErrorKind::BadInput, "iso flag between finite and infinite orders");
        }
    }

    // optional explicit structure maps: must be injective homomorphisms that
    // commute with the simple morphism, i.e. act as the identity inclusion
    for (const auto& [rel, entries] : data.explicit_maps) {
        auto [a, b] = rel;
        if (!q.leq(a, b) || a == b) fail(ErrorKind::BadInput, "explicit map on a non-relation");
        if (data.backend != Backend::Concrete)
            fail(ErrorKind::BadInput, "explicit maps need the concrete backend");
        const auto& pa = std::get<SubgroupHandle>(data.locals[a]);
        const auto& pb = std::get<SubgroupHandle>(data.locals[b]);
        std::map<int32_t, int32_t> phi;
        for (auto [x, y] : entries) {
            if (!pa.contains(x) || !pb.contains(y))
                fail(ErrorKind::BadInput, "explicit map entry outside the local groups");
            phi[x] = y;
        }
        if ((int)phi.size() != pa.order())
            fail(ErrorKind::MissingMap, "explicit map does not cover the local group along '" +
                                            q.id(a) + "' <= '" + q.id(b) + "'");
        std::set<int32_t> image;
        for (auto [x, y] : phi) image.insert(y);
        if ((int)image.size() != pa.order())
            fail(ErrorKind::NonInjectiveMap, "explicit structure map along '" + q.id(a) + "' <= '" +
                                                 q.id(b) + "' is not injective");
        const auto& g = *data.ambient;
        for (auto [x, y] : phi)
            for (auto [x2, y2] : phi) {
                int32_t xy = g.mul(x, x2);
                if (phi.at(xy) != g.mul(y, y2))
                    fail(ErrorKind::BadInput, "explicit structure map is not a homomorphism");
            }
        for (auto [x, y] : phi)
            if (x != y)
                fail(ErrorKind::IncompatibleComposition,
                     "explicit structure map does not commute with the simple morphism along '" +
                         q.id(a) + "' <= '" + q.id(b) + "'");
    }

    SimpleComplexOfGroups s;
    s.poset_ = std::move(data.poset);
    s.backend_ = data.backend;
    s.ambient_ = std::move(data.ambient);
    s.locals_ = std::move(data.locals);
    s.iso_flags_ = std::move(data.iso_flags);
    s.metadata_ = std::move(data.metadata);
    return s;
}

bool is_thin(const SimpleComplexOfGroups& scog) {
    for (auto [a, b] : scog.poset().covers())
        if (scog.iso_along(a, b)) return false;
    return true;
}

BlockPartition compute_blocks(const SimpleComplexOfGroups& scog) {
    const Poset& q = scog.poset();
    const int n = q.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : q.covers())
        if (scog.iso_along(a, b)) parent[find(a)] = find(b);

    std::map<int, int> root_to_block;
    BlockPartition out;
    out.block_of.assign(n, -1);
    // deterministic block order: by least element id within the block
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<int> roots;
    for (int r = 0; r < n; ++r)
        if (!groups[r].empty()) roots.push_back(r);
    auto least_id = [&](int root) {
        const std::string* best = nullptr;
        for (int e : groups[root])
            if (!best || q.id(e) < *best) best = &q.id(e);
        return *best;
    };
    std::sort(roots.begin(), roots.end(),
              [&](int a, int b) { return least_id(a) < least_id(b); });
    for (int r : roots) {
        int b = (int)out.blocks.size();
        out.blocks.push_back(groups[r]);
        int rep = groups[r][0];
        for (int e : groups[r]) {
            out.block_of[e] = b;
            if (q.id(e) < q.id(rep)) rep = e;
        }
        out.representative.push_back(rep);
    }
    // concrete backend: all local groups of a block are the same subgroup
    if (scog.backend() == Backend::Concrete) {
        for (const auto& blk : out.blocks)
            for (int e : blk)
                if (!subgroup_equal(scog.local_subgroup(e), scog.local_subgroup(blk[0])))
                    fail(ErrorKind::Internal, "local groups differ inside a block");
    }
    // induced order on blocks; re-verified as a poset (cycles rejected)
    std::vector<std::string> ids;
    for (int b = 0; b < out.block_count(); ++b) ids.push_back(q.id(out.representative[b]));
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (q.less(a, b) && out.block_of[a] != out.block_of[b])
                rel.push_back({out.block_of[a], out.block_of[b]});
    out.block_poset = Poset::from_relation_indices(std::move(ids), rel);
    // projection is monotone and surjective by construction; assert anyway
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (q.leq(a, b) && !out.block_poset.leq(out.block_of[a], out.block_of[b]))
                fail(ErrorKind::Internal, "block projection is not monotone");
    return out;
}

SimpleComplexOfGroups thinning(const SimpleComplexOfGroups& scog) {
    return thinning(scog, compute_blocks(scog));
}

SimpleComplexOfGroups thinning(const SimpleComplexOfGroups& scog, const BlockPartition& blocks) {
    SimpleComplexOfGroups::Data data;
    data.poset = blocks.block_poset;
    data.backend = scog.backend();
    data.ambient = scog.ambient();
    for (int b = 0; b < blocks.block_count(); ++b)
        data.locals.push_back(scog.local(blocks.representative[b]));
    if (scog.backend() == Backend::Order) {
        // covers of the block poset are never isomorphisms
        for (auto [a, b] : data.poset.covers()) data.iso_flags[{a, b}] = false;
        // non-cover relations compose from covers; flags for finite pairs are
        // derivable, infinite chains stay non-iso as well
        for (int a = 0; a < data.poset.size(); ++a)
            for (int b = 0; b < data.poset.size(); ++b)
                if (data.poset.less(a, b)) data.iso_flags[{a, b}] = false;
    }
    data.metadata = scog.metadata();
    data.metadata["thinned"] = "true";
    auto out = validate_scog(std::move(data));
    if (!is_thin(out)) fail(ErrorKind::Internal, "thinning produced a non-thin complex");
    return out;
}

std::function<bool(int, int)> strictly_bigger_predicate(const SimpleComplexOfGroups& scog) {
    auto blocks = std::make_shared<BlockPartition>(compute_blocks(scog));
    return [blocks](int v, int u) { return blocks->block_of[v] != blocks->block_of[u]; };
}

OmegaSets omega_sets(const SimpleComplexOfGroups& scog, int j) {
    if (scog.backend() != Backend::Concrete)
        fail(ErrorKind::InfiniteBackend, "omega sets need the concrete backend");
    const Poset& q = scog.poset();
    const int n = q.size();
    OmegaSets out;
    out.blocks = compute_blocks(scog);

    std::vector<SubgroupHandle> targets;
    std::vector<std::vector<int32_t>> seen;
    for (int u = 0; u < n; ++u) {
        const auto& h = scog.local_subgroup(u);
        if (std::find(seen.begin(), seen.end(), h.members()) == seen.end()) {
            seen.push_back(h.members());
            targets.push_back(h);
        }
    }
    const auto& pj = scog.local_subgroup(j);
    out.reps = transporter_coset_reps(pj, targets);
    const auto& grp = pj.parent();
    for (int g : out.reps) {
        std::vector<int32_t> conj;
        for (int32_t x : pj.members()) conj.push_back(grp.conjugate(g, x));
        std::sort(conj.begin(), conj.end());
        ElementMask omega(n);
        for (int u = 0; u < n; ++u)
            if (scog.local_subgroup(u).members() == conj) omega.set(u);
        if (omega.none()) fail(ErrorKind::Internal, "transporter produced an empty Omega set");
        // blocks inside Omega; every block meeting Omega must lie inside it
        std::vector<int> inside;
        for (int b = 0; b < out.blocks.block_count(); ++b) {
            bool any = false, all = true;
            for (int e : out.blocks.blocks[b]) {
                if (omega.test(e))
                    any = true;
                else
                    all = false;
            }
            if (any && !all) fail(ErrorKind::Internal, "a block straddles an Omega set");
            if (any) inside.push_back(b);
        }
        out.omega.push_back(std::move(omega));
        out.blocks_in_omega.push_back(std::move(inside));
    }
    return out;
}

SimpleComplexOfGroups barycentric_scog(const SimpleComplexOfGroups& scog, const Limits& lim) {
    const Poset& q = scog.poset();
    SimplicialComplex k = q.order_complex(lim);
    // chains of Q, ordered by reverse refinement
    std::vector<std::string> ids;
    std::vector<int> chain_min;
    std::vector<std::pair<int, int>> rel;
    std::vector<std::vector<std::size_t>> index_by_dim(k.dim() + 1);
    std::size_t next = 0;
    for (int d = 0; d <= k.dim(); ++d) {
        index_by_dim[d].resize(k.count(d));
        for (std::size_t i = 0; i < k.count(d); ++i) {
            auto s = k.simplex(d, i);
            // order the chain by Q and name it
            std::vector<int> sorted(s.begin(), s.end());
            std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return q.less(a, b); });
            std::string id;
            for (int e : sorted) {
                if (!id.empty()) id += "<";
                id += q.id(e);
            }
            ids.push_back(id);
            chain_min.push_back(sorted.front());
            index_by_dim[d][i] = next++;
        }
    }
    // superchain <= subchain: cover relations go from a chain to its facets
    for (int d = 1; d <= k.dim(); ++d) {
        for (std::size_t i = 0; i < k.count(d); ++i) {
            auto s = k.simplex(d, i);
            std::vector<int32_t> face(d);
            for (int skip = 0; skip <= d; ++skip) {
                int t = 0;
                for (int x = 0; x <= d; ++x)
                    if (x != skip) face[t++] = s[x];
                auto fi = k.index_of(d - 1, {face.data(), (std::size_t)d});
                rel.push_back({(int)index_by_dim[d][i], (int)index_by_dim[d - 1][*fi]});
            }
        }
    }
    SimpleComplexOfGroups::Data data;
    data.poset = Poset::from_relation_indices(std::move(ids), rel);
    data.backend = scog.backend();
    data.ambient = scog.ambient();
    for (std::size_t c = 0; c < chain_min.size(); ++c) data.locals.push_back(scog.local(chain_min[c]));
    if (scog.backend() == Backend::Order) {
        // flags for relations with an infinite end: iso iff equal minima...
        // the minimum can only decrease along a superchain, so iso status
        // along chain-containment equals iso status of the two minima
        for (int a = 0; a < data.poset.size(); ++a)
            for (int b = 0; b < data.poset.size(); ++b)
                if (data.poset.less(a, b)) {
                    std::uint64_t oa = handle_order(data.locals[a]), ob = handle_order(data.locals[b]);
                    if (oa == 0 || ob == 0)
                        data.iso_flags[{a, b}] = scog.iso_along(chain_min[b], chain_min[a]);
                }
    }
    data.metadata = scog.metadata();
    data.metadata["subdivided"] = "true";
    return validate_scog(std::move(data), lim);
}

bool handles_identical(const GroupHandle& a, const GroupHandle& b) {
    if (handle_is_concrete(a) != handle_is_concrete(b)) return false;
    if (handle_is_concrete(a)) {
        const auto& sa = std::get<SubgroupHandle>(a);
        const auto& sb = std::get<SubgroupHandle>(b);
        return &sa.parent() == &sb.parent() && sa.members() == sb.members();
    }
    const auto& la = std::get<OrderLabel>(a);
    const auto& lb = std::get<OrderLabel>(b);
    return la.tag == lb.tag && la.order == lb.order;
}

bool simply_isomorphic(const SimpleComplexOfGroups& a, const SimpleComplexOfGroups& b,
                       const std::vector<int>& map) {
    if (!is_poset_isomorphism(a.poset(), b.poset(), map)) return false;
    for (int i = 0; i < a.poset().size(); ++i)
        if (!handles_identical(a.local(i), b.local(map[i]))) return false;
    return true;
}

}  // namespace cogdim
