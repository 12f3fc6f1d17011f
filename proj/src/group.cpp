#include "cogdim/group.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace cogdim {

void ConcreteFiniteGroup::finalize(const Limits& lim) {
    if (n_ <= 0) fail(ErrorKind::BadInput, "empty group");
    if ((std::size_t)n_ > lim.max_group_order)
        fail(ErrorKind::SizeGuard, "group order exceeds " + std::to_string(lim.max_group_order));
    // latin square check (exact)
    boost::dynamic_bitset<> seen(n_);
    for (int a = 0; a < n_; ++a) {
        seen.reset();
        for (int b = 0; b < n_; ++b) {
            int c = mul(a, b);
            if (c < 0 || c >= n_ || seen.test(c)) fail(ErrorKind::BadInput, "bad multiplication table");
            seen.set(c);
        }
    }
    for (int b = 0; b < n_; ++b) {
        seen.reset();
        for (int a = 0; a < n_; ++a) {
            int c = mul(a, b);
            if (seen.test(c)) fail(ErrorKind::BadInput, "bad multiplication table");
            seen.set(c);
        }
    }
    // identity must be element 0 (exact)
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            fail(ErrorKind::BadInput, "element 0 is not an identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) inv_[a] = b;
    for (int a = 0; a < n_; ++a)
        if (inv_[a] < 0 || mul(inv_[a], a) != 0) fail(ErrorKind::BadInput, "missing inverse");
    // associativity: exhaustive when small, sampled otherwise
    if ((long)n_ * n_ * n_ <= 1'000'000) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        fail(ErrorKind::BadInput, "multiplication is not associative");
    } else {
        std::mt19937 rng(12345);
        for (int t = 0; t < 100'000; ++t) {
            int a = (int)(rng() % n_), b = (int)(rng() % n_), c = (int)(rng() % n_);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                fail(ErrorKind::BadInput, "multiplication is not associative");
        }
    }
    if ((int)names_.size() != n_) {
        names_.resize(n_);
        for (int a = 0; a < n_; ++a)
            if (names_[a].empty()) names_[a] = "g" + std::to_string(a);
    }
}

ConcreteFiniteGroup::Ptr ConcreteFiniteGroup::from_table(std::vector<std::vector<int32_t>> table,
                                                         const Limits& lim,
                                                         std::vector<std::string> names) {
    auto g = std::make_shared<ConcreteFiniteGroup>();
    g->names_ = std::move(names);
    g->n_ = (int)table.size();
    g->table_.assign((std::size_t)g->n_ * g->n_, 0);
    for (int a = 0; a < g->n_; ++a) {
        if ((int)table[a].size() != g->n_) fail(ErrorKind::BadInput, "ragged multiplication table");
        for (int b = 0; b < g->n_; ++b) g->table_[(std::size_t)a * g->n_ + b] = table[a][b];
    }
    g->finalize(lim);
    return g;
}

ConcreteFiniteGroup::Ptr ConcreteFiniteGroup::from_permutations(
    const std::vector<std::vector<std::vector<int32_t>>>& generators, int degree,
    const Limits& lim) {
    if (degree <= 0) fail(ErrorKind::BadInput, "degree must be positive");
    using Perm = std::vector<int32_t>;
    std::vector<Perm> gens;
    for (const auto& cycles : generators) {
        Perm p(degree);
        for (int i = 0; i < degree; ++i) p[i] = i;
        for (const auto& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int32_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                if (from < 0 || from >= degree || to < 0 || to >= degree)
                    fail(ErrorKind::BadInput, "cycle entry out of range");
                p[from] = to;
            }
        }
        boost::dynamic_bitset<> hit(degree);
        for (int i = 0; i < degree; ++i) {
            if (hit.test(p[i])) fail(ErrorKind::BadInput, "generator is not a permutation");
            hit.set(p[i]);
        }
        gens.push_back(std::move(p));
    }
    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::map<Perm, int> index;
    std::vector<Perm> elems{id};
    index[id] = 0;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gperm : gens) {
            Perm q(degree);
            for (int i = 0; i < degree; ++i) q[i] = gperm[elems[head][i]];
            if (index.emplace(q, (int)elems.size()).second) {
                elems.push_back(q);
                if (elems.size() > lim.max_group_order)
                    fail(ErrorKind::SizeGuard, "permutation group closure exceeds the order guard");
            }
        }
    }
    auto g = std::make_shared<ConcreteFiniteGroup>();
    g->n_ = (int)elems.size();
    g->table_.assign((std::size_t)g->n_ * g->n_, 0);
    for (int a = 0; a < g->n_; ++a)
        for (int b = 0; b < g->n_; ++b) {
            Perm q(degree);
            for (int i = 0; i < degree; ++i) q[i] = elems[a][elems[b][i]];  // (ab)(i) = a(b(i))
            g->table_[(std::size_t)a * g->n_ + b] = index.at(q);
        }
    g->names_.resize(g->n_);
    for (int a = 0; a < g->n_; ++a) {
        std::string s = "(";
        for (int i = 0; i < degree; ++i) s += (i ? " " : "") + std::to_string(elems[a][i]);
        g->names_[a] = s + ")";
    }
    g->finalize(lim);
    return g;
}

ConcreteFiniteGroup::Ptr ConcreteFiniteGroup::cyclic(int n) {
    std::vector<std::vector<int32_t>> t(n, std::vector<int32_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) names[a] = "c" + std::to_string(a);
    return from_table(std::move(t), Limits::defaults(), std::move(names));
}

ConcreteFiniteGroup::Ptr ConcreteFiniteGroup::dihedral(int k) {
    if (k < 1) fail(ErrorKind::BadInput, "dihedral parameter must be >= 1");
    const int n = 2 * k;
    std::vector<std::vector<int32_t>> t(n, std::vector<int32_t>(n));
    auto enc = [&](int j, int e) { return ((j % k) + k) % k + k * e; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int j1 = a % k, e1 = a / k, j2 = b % k, e2 = b / k;
            t[a][b] = e1 == 0 ? enc(j1 + j2, e2) : enc(j1 - j2, 1 - e2);
        }
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        int j = a % k, e = a / k;
        names[a] = (e == 0 ? (j == 0 ? "e" : "r" + std::to_string(j))
                           : (j == 0 ? "s" : "r" + std::to_string(j) + "s"));
    }
    return from_table(std::move(t), Limits::defaults(), std::move(names));
}

ConcreteFiniteGroup::Ptr ConcreteFiniteGroup::direct_product(const Ptr& a, const Ptr& b) {
    const int na = a->order(), nb = b->order(), n = na * nb;
    auto g = std::make_shared<ConcreteFiniteGroup>();
    g->n_ = n;
    g->table_.assign((std::size_t)n * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            g->table_[(std::size_t)x * n + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    g->names_.resize(n);
    for (int x = 0; x < n; ++x)
        g->names_[x] = "(" + a->element_name(x / nb) + "," + b->element_name(x % nb) + ")";
    g->product_right_order_ = nb;
    g->finalize(Limits::defaults());
    return g;
}

std::pair<int, int> ConcreteFiniteGroup::product_split(int a) const {
    if (product_right_order_ == 0) fail(ErrorKind::Internal, "group is not a direct product");
    return {a / product_right_order_, a % product_right_order_};
}

SubgroupHandle SubgroupHandle::from_members(ConcreteFiniteGroup::Ptr parent,
                                            std::vector<int32_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    SubgroupHandle h;
    h.mask_.resize(parent->order());
    for (int32_t m : members) {
        if (m < 0 || m >= parent->order()) fail(ErrorKind::BadInput, "subgroup member out of range");
        h.mask_.set(m);
    }
    if (members.empty() || !h.mask_.test(parent->identity()))
        fail(ErrorKind::BadInput, "subgroup must contain the identity");
    for (int32_t x : members) {
        if (!h.mask_.test(parent->inv(x)))
            fail(ErrorKind::BadInput, "subgroup not closed under inverse");
        for (int32_t y : members)
            if (!h.mask_.test(parent->mul(x, y)))
                fail(ErrorKind::BadInput, "subgroup not closed under product");
    }
    h.parent_ = std::move(parent);
    h.members_ = std::move(members);
    return h;
}

SubgroupHandle SubgroupHandle::generated(ConcreteFiniteGroup::Ptr parent,
                                         const std::vector<int32_t>& generators) {
    std::vector<int32_t> elems{(int32_t)parent->identity()};
    boost::dynamic_bitset<> seen(parent->order());
    seen.set(parent->identity());
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (int32_t g : generators) {
            if (g < 0 || g >= parent->order()) fail(ErrorKind::BadInput, "generator out of range");
            int32_t x = parent->mul(elems[head], g);
            if (!seen.test(x)) {
                seen.set(x);
                elems.push_back(x);
            }
        }
    return from_members(std::move(parent), std::move(elems));
}

SubgroupHandle SubgroupHandle::trivial(ConcreteFiniteGroup::Ptr parent) {
    return from_members(std::move(parent), {0});
}

SubgroupHandle SubgroupHandle::whole(ConcreteFiniteGroup::Ptr parent) {
    std::vector<int32_t> all(parent->order());
    for (int i = 0; i < (int)all.size(); ++i) all[i] = i;
    return from_members(std::move(parent), std::move(all));
}

namespace {

void require_same_parent(const SubgroupHandle& a, const SubgroupHandle& b) {
    if (&a.parent() != &b.parent())
        fail(ErrorKind::DifferentParent, "subgroups live in different groups");
}

}  // namespace

bool subgroup_equal(const SubgroupHandle& h, const SubgroupHandle& p) {
    require_same_parent(h, p);
    return h.members() == p.members();
}

bool subgroup_leq(const SubgroupHandle& h, const SubgroupHandle& p) {
    require_same_parent(h, p);
    for (int32_t x : h.members())
        if (!p.contains(x)) return false;
    return true;
}

long subgroup_index(const SubgroupHandle& h, const SubgroupHandle& p) {
    if (!subgroup_leq(h, p)) fail(ErrorKind::BadInput, "index of a non-subgroup");
    return p.order() / h.order();
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& p, int g) {
    const auto& grp = p.parent();
    std::vector<int32_t> conj;
    conj.reserve(p.order());
    for (int32_t x : p.members()) conj.push_back(grp.conjugate(g, x));
    return SubgroupHandle::from_members(p.parent_ptr(), std::move(conj));
}

std::vector<int> transporter_coset_reps(const SubgroupHandle& p,
                                        const std::vector<SubgroupHandle>& targets) {
    const auto& grp = p.parent();
    std::vector<std::vector<int32_t>> target_sets;
    for (const auto& t : targets) {
        require_same_parent(p, t);
        target_sets.push_back(t.members());
    }
    std::sort(target_sets.begin(), target_sets.end());
    auto is_target = [&](const std::vector<int32_t>& s) {
        return std::binary_search(target_sets.begin(), target_sets.end(), s);
    };
    boost::dynamic_bitset<> visited(grp.order());
    std::vector<int> reps;
    for (int g = 0; g < grp.order(); ++g) {
        if (visited.test(g)) continue;
        for (int32_t x : p.members()) visited.set(grp.mul(x, g));  // left coset P g
        std::vector<int32_t> conj;
        conj.reserve(p.order());
        for (int32_t x : p.members()) conj.push_back(grp.conjugate(g, x));
        std::sort(conj.begin(), conj.end());
        if (is_target(conj)) reps.push_back(g);
    }
    return reps;
}

std::uint64_t handle_order(const GroupHandle& h) {
    if (auto* s = std::get_if<SubgroupHandle>(&h)) return (std::uint64_t)s->order();
    return std::get<OrderLabel>(h).order;
}

bool handle_is_concrete(const GroupHandle& h) {
    return std::holds_alternative<SubgroupHandle>(h);
}

bool rigidity_check(const std::vector<GroupHandle>& local_groups) {
    for (const auto& h : local_groups) {
        if (auto* lbl = std::get_if<OrderLabel>(&h)) {
            if (!lbl->finite())
                fail(ErrorKind::RigidityUnknown,
                     "rigidity undecidable for infinite local group '" + lbl->tag + "'");
            continue;
        }
        const auto& sub = std::get<SubgroupHandle>(h);
        const auto& grp = sub.parent();
        for (int g = 0; g < grp.order(); ++g) {
            auto conj = conjugate_subgroup(sub, g);
            if (subgroup_leq(conj, sub) && !subgroup_equal(conj, sub))
                fail(ErrorKind::Internal, "finite subgroup properly contains a conjugate");
        }
    }
    return true;
}

}  // namespace cogdim
