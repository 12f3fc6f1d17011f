#include "cogdim/poset.hpp"

#include <algorithm>
#include <numeric>

namespace cogdim {

int Poset::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) fail(ErrorKind::UnknownElement, "unknown poset element '" + id + "'");
    return it->second;
}

Poset Poset::build(std::vector<std::string> ids, std::vector<std::vector<int>> adj) {
    const int n = (int)ids.size();
    // cycle detection (self-loops are harmless reflexivity)
    std::vector<int> state(n, 0);  // 0 white, 1 gray, 2 black
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, k] = stack.back();
            if (k < adj[v].size()) {
                int w = adj[v][k++];
                if (w == v) continue;
                if (state[w] == 1)
                    fail(ErrorKind::Cycle, "relation closure violates antisymmetry at '" + ids[v] +
                                               "' and '" + ids[w] + "'");
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    // reverse topological order, then closure by unions
    std::vector<int> topo;
    topo.reserve(n);
    state.assign(n, 0);
    for (int s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, k] = stack.back();
            if (k < adj[v].size()) {
                int w = adj[v][k++];
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                topo.push_back(v);
                stack.pop_back();
            }
        }
    }
    Poset p;
    p.up_.assign(n, ElementMask(n));
    for (int v : topo) {  // children first
        p.up_[v].set(v);
        for (int w : adj[v])
            if (w != v) p.up_[v] |= p.up_[w];
    }
    p.ids_ = std::move(ids);
    for (int i = 0; i < n; ++i) {
        if (!p.index_.emplace(p.ids_[i], i).second)
            fail(ErrorKind::DuplicateId, "duplicate element id '" + p.ids_[i] + "'");
    }
    return p;
}

Poset Poset::from_relations(std::vector<std::string> ids,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < (int)ids.size(); ++i) {
        if (!idx.emplace(ids[i], i).second)
            fail(ErrorKind::DuplicateId, "duplicate element id '" + ids[i] + "'");
    }
    std::vector<std::vector<int>> adj(ids.size());
    for (const auto& [a, b] : relations) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) fail(ErrorKind::UnknownElement, "relation mentions unknown id '" + a + "'");
        if (ib == idx.end()) fail(ErrorKind::UnknownElement, "relation mentions unknown id '" + b + "'");
        adj[ia->second].push_back(ib->second);
    }
    return build(std::move(ids), std::move(adj));
}

Poset Poset::from_relation_indices(std::vector<std::string> ids,
                                   const std::vector<std::pair<int, int>>& relations) {
    std::vector<std::vector<int>> adj(ids.size());
    for (auto [a, b] : relations) {
        if (a < 0 || b < 0 || a >= (int)ids.size() || b >= (int)ids.size())
            fail(ErrorKind::UnknownElement, "relation index out of range");
        adj[a].push_back(b);
    }
    return build(std::move(ids), std::move(adj));
}

ElementMask Poset::strict_upper_set(int a) const {
    ElementMask m = up_[a];
    m.reset(a);
    return m;
}

ElementMask Poset::lower_set(int a) const {
    ElementMask m(size());
    for (int i = 0; i < size(); ++i)
        if (up_[i].test(a)) m.set(i);
    return m;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (up_[i].count() == 1) out.push_back(i);
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    ElementMask above(size());
    for (int i = 0; i < size(); ++i) {
        ElementMask s = strict_upper_set(i);
        above |= s;
    }
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (!above.test(i)) out.push_back(i);
    return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a) {
        ElementMask cov = strict_upper_set(a);
        for (std::size_t b = cov.find_first(); b != ElementMask::npos; b = cov.find_next(b)) {
            // remove everything above b (b itself stays)
            ElementMask sb = strict_upper_set((int)b);
            cov -= sb;
        }
        for (std::size_t b = cov.find_first(); b != ElementMask::npos; b = cov.find_next(b))
            out.push_back({a, (int)b});
    }
    return out;
}

std::vector<int> Poset::upward_heights() const {
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> upc(size());
    for (int i = 0; i < size(); ++i) upc[i] = up_[i].count();
    std::sort(order.begin(), order.end(), [&](int a, int b) { return upc[a] < upc[b]; });
    std::vector<int> h(size(), 0);
    for (int v : order) {
        ElementMask s = strict_upper_set(v);
        int best = -1;
        for (std::size_t w = s.find_first(); w != ElementMask::npos; w = s.find_next(w))
            best = std::max(best, h[w]);
        h[v] = best + 1;
    }
    return h;
}

Poset Poset::reversed() const {
    Poset p;
    p.ids_ = ids_;
    p.index_ = index_;
    p.up_.assign(size(), ElementMask(size()));
    for (int a = 0; a < size(); ++a)
        for (std::size_t b = up_[a].find_first(); b != ElementMask::npos; b = up_[a].find_next(b))
            p.up_[b].set(a);
    return p;
}

namespace {

// enumerate all chains within `members`; each chain lands as a sorted
// index block in cells[chain length - 1]
void enumerate_chains(const Poset& q, const ElementMask& members, const Limits& lim,
                      std::vector<std::vector<int32_t>>* cells, std::size_t* counter) {
    const int n = q.size();
    std::vector<int32_t> chain;
    std::vector<std::pair<int, std::size_t>> stack;  // (element, resume position)

    std::vector<std::vector<int32_t>> succ(n);
    for (int v = 0; v < n; ++v) {
        if (!members.test(v)) continue;
        ElementMask s = q.strict_upper_set(v);
        s &= members;
        for (std::size_t w = s.find_first(); w != ElementMask::npos; w = s.find_next(w))
            succ[v].push_back((int32_t)w);
    }

    auto emit = [&](const std::vector<int32_t>& ch) {
        if (++*counter > lim.max_complex_simplices)
            fail(ErrorKind::SizeGuard,
                 "order complex exceeds " + std::to_string(lim.max_complex_simplices) + " simplices");
        const int d = (int)ch.size() - 1;
        if ((int)cells->size() <= d) cells->resize(d + 1);
        std::vector<int32_t> sorted(ch);
        std::sort(sorted.begin(), sorted.end());
        (*cells)[d].insert((*cells)[d].end(), sorted.begin(), sorted.end());
    };

    for (int s = 0; s < n; ++s) {
        if (!members.test(s)) continue;
        chain.assign(1, (int32_t)s);
        emit(chain);
        stack.assign(1, {s, 0});
        while (!stack.empty()) {
            auto& [v, k] = stack.back();
            if (k < succ[v].size()) {
                int w = succ[v][k++];
                chain.push_back((int32_t)w);
                emit(chain);
                stack.push_back({w, 0});
            } else {
                stack.pop_back();
                chain.pop_back();
            }
        }
    }
}

}  // namespace

SimplicialComplex Poset::order_complex(const Limits& lim) const {
    ElementMask all(size());
    all.set();
    return order_complex_on(all, lim);
}

SimplicialComplex Poset::order_complex_on(const ElementMask& members, const Limits& lim) const {
    std::vector<std::vector<int32_t>> cells;
    std::size_t counter = 0;
    enumerate_chains(*this, members, lim, &cells, &counter);
    auto out = SimplicialComplex::from_cell_blocks(size(), std::move(cells));
    out.vertex_names = ids_;
    return out;
}

std::size_t Poset::count_chains(const ElementMask& members) const {
    // chains ending at v = 1 + sum over u strictly below v; low elements have
    // strictly larger upper sets, so descending |up| is a linear extension
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> upc(size());
    for (int i = 0; i < size(); ++i) upc[i] = up_[i].count();
    std::sort(order.begin(), order.end(), [&](int a, int b) { return upc[a] > upc[b]; });
    std::vector<std::size_t> ending(size(), 0);
    std::size_t total = 0;
    for (int v : order) {
        if (!members.test(v)) continue;
        std::size_t e = 1;
        for (int u = 0; u < size(); ++u)
            if (u != v && members.test(u) && up_[u].test(v)) e += ending[u];
        ending[v] = e;
        total += e;
    }
    return total;
}

SimplicialComplex order_complex(const Poset& q, const Limits& lim) { return q.order_complex(lim); }

SimplicialComplex upper_set_realization(const Poset& q, int j, const Limits& lim) {
    if (j < 0 || j >= q.size()) fail(ErrorKind::UnknownElement, "element index out of range");
    return q.order_complex_on(q.upper_set(j), lim);
}

SimplicialComplex upper_set_realization(const Poset& q, const std::string& j, const Limits& lim) {
    return upper_set_realization(q, q.index_of(j), lim);
}

SimplicialComplex strict_upper_realization(const Poset& q, int j, const Limits& lim) {
    if (j < 0 || j >= q.size()) fail(ErrorKind::UnknownElement, "element index out of range");
    return q.order_complex_on(q.strict_upper_set(j), lim);
}

SimplicialComplex strict_upper_realization(const Poset& q, const std::string& j, const Limits& lim) {
    return strict_upper_realization(q, q.index_of(j), lim);
}

OmegaMasks omega_masks(const Poset& q, const ElementMask& omega,
                       const std::function<bool(int, int)>& strictly_bigger) {
    if (omega.none()) fail(ErrorKind::EmptyOmega, "Omega must be nonempty");
    OmegaMasks m{ElementMask(q.size()), ElementMask(q.size())};
    for (std::size_t u = omega.find_first(); u != ElementMask::npos; u = omega.find_next(u))
        m.omega_up |= q.upper_set((int)u);
    for (std::size_t v = m.omega_up.find_first(); v != ElementMask::npos;
         v = m.omega_up.find_next(v)) {
        for (std::size_t u = omega.find_first(); u != ElementMask::npos; u = omega.find_next(u)) {
            if (u == v) continue;  // proper containment is irreflexive
            if (q.leq((int)u, (int)v) && strictly_bigger((int)v, (int)u)) {
                m.omega_strict.set(v);
                break;
            }
        }
    }
    return m;
}

ComplexPair omega_realizations(const Poset& q, const ElementMask& omega,
                               const std::function<bool(int, int)>& strictly_bigger,
                               const Limits& lim) {
    OmegaMasks m = omega_masks(q, omega, strictly_bigger);
    return ComplexPair{q.order_complex_on(m.omega_up, lim), q.order_complex_on(m.omega_strict, lim)};
}

bool is_poset_isomorphism(const Poset& p, const Poset& r, const std::vector<int>& map) {
    if (p.size() != r.size() || (int)map.size() != p.size()) return false;
    std::vector<bool> hit(r.size(), false);
    for (int i = 0; i < p.size(); ++i) {
        if (map[i] < 0 || map[i] >= r.size() || hit[map[i]]) return false;
        hit[map[i]] = true;
    }
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b) != r.leq(map[a], map[b])) return false;
    return true;
}

}  // namespace cogdim
