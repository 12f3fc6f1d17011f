#include "cogdim/complex_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "cogdim/homology.hpp"

namespace cogdim {

namespace {

std::vector<std::string> vertex_names_or_indices(const SimplicialComplex& x) {
    if ((int)x.vertex_names.size() == x.vertex_universe()) return x.vertex_names;
    std::vector<std::string> names(x.vertex_universe());
    for (int i = 0; i < x.vertex_universe(); ++i) names[i] = std::to_string(i);
    return names;
}

}  // namespace

SimplicialComplex cone(const SimplicialComplex& x, const std::string& apex_name, const Limits& lim) {
    const int n = x.vertex_universe();
    std::vector<std::vector<int32_t>> cells(std::max(x.dim() + 2, 1));
    std::size_t total = 1;
    cells[0].push_back(n);  // apex
    for (int d = 0; d <= x.dim(); ++d) {
        for (std::size_t i = 0; i < x.count(d); ++i) {
            auto s = x.simplex(d, i);
            cells[d].insert(cells[d].end(), s.begin(), s.end());
            cells[d + 1].insert(cells[d + 1].end(), s.begin(), s.end());
            cells[d + 1].push_back(n);  // vertex n sorts last
            total += 2;
            if (total > lim.max_complex_simplices) fail(ErrorKind::SizeGuard, "cone too large");
        }
    }
    auto out = SimplicialComplex::from_cell_blocks(n + 1, std::move(cells));
    out.vertex_names = vertex_names_or_indices(x);
    out.vertex_names.push_back(apex_name);
    return out;
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y, const Limits& lim) {
    const int nx = x.vertex_universe();
    const int dim = x.dim() + y.dim() + 1;
    std::vector<std::vector<int32_t>> cells(std::max(dim + 1, 0));
    std::size_t total = 0;
    auto bump = [&](std::size_t k) {
        total += k;
        if (total > lim.max_complex_simplices) fail(ErrorKind::SizeGuard, "join too large");
    };
    for (int d = 0; d <= x.dim(); ++d) {
        bump(x.count(d));
        cells[d].insert(cells[d].end(), x.cells()[d].begin(), x.cells()[d].end());
    }
    for (int d = 0; d <= y.dim(); ++d) {
        bump(y.count(d));
        for (int32_t v : y.cells()[d]) cells[d].push_back(v + nx);
    }
    for (int dx = 0; dx <= x.dim(); ++dx) {
        for (int dy = 0; dy <= y.dim(); ++dy) {
            const int d = dx + dy + 1;
            bump(x.count(dx) * y.count(dy));
            for (std::size_t i = 0; i < x.count(dx); ++i) {
                auto sx = x.simplex(dx, i);
                for (std::size_t j = 0; j < y.count(dy); ++j) {
                    auto sy = y.simplex(dy, j);
                    cells[d].insert(cells[d].end(), sx.begin(), sx.end());
                    for (int32_t v : sy) cells[d].push_back(v + nx);
                }
            }
        }
    }
    auto out = SimplicialComplex::from_cell_blocks(nx + y.vertex_universe(), std::move(cells));
    auto nx_names = vertex_names_or_indices(x);
    auto ny_names = vertex_names_or_indices(y);
    out.vertex_names = nx_names;
    for (auto& s : ny_names) out.vertex_names.push_back(s + "'");
    return out;
}

Poset face_poset(const SimplicialComplex& x) {
    auto names = vertex_names_or_indices(x);
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> rel;
    // element index: offset[d] + i
    std::vector<std::size_t> offset(x.dim() + 2, 0);
    for (int d = 0; d <= x.dim(); ++d) offset[d + 1] = offset[d] + x.count(d);
    for (int d = 0; d <= x.dim(); ++d) {
        for (std::size_t i = 0; i < x.count(d); ++i) {
            auto s = x.simplex(d, i);
            std::string id;
            for (int32_t v : s) {
                if (!id.empty()) id += ".";
                id += names[v];
            }
            ids.push_back(id);
            if (d > 0) {
                std::vector<int32_t> face(d);
                for (int skip = 0; skip <= d; ++skip) {
                    int k = 0;
                    for (int t = 0; t <= d; ++t)
                        if (t != skip) face[k++] = s[t];
                    auto fi = x.index_of(d - 1, {face.data(), face.size()});
                    rel.push_back({(int)(offset[d - 1] + *fi), (int)(offset[d] + i)});
                }
            }
        }
    }
    return Poset::from_relation_indices(std::move(ids), rel);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x, const Limits& lim) {
    if (x.empty()) return SimplicialComplex();
    return face_poset(x).order_complex(lim);
}

Poset poset_product(const Poset& p, const Poset& q) {
    std::vector<std::string> ids;
    ids.reserve((std::size_t)p.size() * q.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < q.size(); ++b) ids.push_back("(" + p.id(a) + "," + q.id(b) + ")");
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < q.size(); ++b) {
            // covers: step one coordinate
            for (int c = 0; c < p.size(); ++c)
                if (p.less(a, c)) rel.push_back({a * q.size() + b, c * q.size() + b});
            for (int d = 0; d < q.size(); ++d)
                if (q.less(b, d)) rel.push_back({a * q.size() + b, a * q.size() + d});
        }
    return Poset::from_relation_indices(std::move(ids), rel);
}

Poset poset_join(const Poset& p, const Poset& q) {
    // (P + bottom) x (Q + bottom) minus (bottom, bottom), componentwise order
    const int np = p.size() + 1, nq = q.size() + 1;  // index 0 = bottom
    auto pid = [&](int a) { return a == 0 ? std::string() : p.id(a - 1); };
    auto qid = [&](int b) { return b == 0 ? std::string() : q.id(b - 1); };
    std::vector<std::string> ids;
    std::vector<int> code;  // a * nq + b
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nq; ++b) {
            if (a == 0 && b == 0) continue;
            ids.push_back("(" + pid(a) + "," + qid(b) + ")");
            code.push_back(a * nq + b);
        }
    std::map<int, int> of_code;
    for (int i = 0; i < (int)code.size(); ++i) of_code[code[i]] = i;
    auto leq1 = [&](int a, int c) { return a == 0 || (c != 0 && p.leq(a - 1, c - 1)); };
    auto leq2 = [&](int b, int d) { return b == 0 || (d != 0 && q.leq(b - 1, d - 1)); };
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < (int)code.size(); ++i)
        for (int j = 0; j < (int)code.size(); ++j) {
            int a = code[i] / nq, b = code[i] % nq;
            int c = code[j] / nq, d = code[j] % nq;
            if (leq1(a, c) && leq2(b, d)) rel.push_back({i, j});
        }
    return Poset::from_relation_indices(std::move(ids), rel);
}

bool is_flag(const SimplicialComplex& x) {
    if (x.dim() <= 0) return true;
    const int n = x.vertex_universe();
    std::vector<ElementMask> adj(n, ElementMask(n));
    for (std::size_t i = 0; i < x.count(1); ++i) {
        auto e = x.simplex(1, i);
        adj[e[0]].set(e[1]);
        adj[e[1]].set(e[0]);
    }
    for (int d = 1; d <= x.dim(); ++d) {
        for (std::size_t i = 0; i < x.count(d); ++i) {
            auto s = x.simplex(d, i);
            ElementMask common = adj[s[0]];
            for (int k = 1; k <= d; ++k) common &= adj[s[k]];
            for (std::size_t v = common.find_first(); v != ElementMask::npos;
                 v = common.find_next(v)) {
                if ((int32_t)v <= s[d]) continue;  // only extend past the max vertex
                std::vector<int32_t> ext(s.begin(), s.end());
                ext.push_back((int32_t)v);
                if (!x.contains(ext)) return false;
            }
        }
    }
    return true;
}

bool is_chordal_1_skeleton(const SimplicialComplex& x) {
    const auto verts = x.used_vertices();
    const int n = (int)verts.size();
    if (n <= 2) return true;
    std::vector<int> pos(x.vertex_universe(), -1);
    for (int i = 0; i < n; ++i) pos[verts[i]] = i;
    std::vector<std::set<int>> nb(n);
    for (std::size_t i = 0; i < x.count(1); ++i) {
        auto e = x.simplex(1, i);
        nb[pos[e[0]]].insert(pos[e[1]]);
        nb[pos[e[1]]].insert(pos[e[0]]);
    }
    // Lex-BFS (quadratic variant)
    std::vector<std::vector<int>> label(n);
    std::vector<int> order;
    std::vector<bool> numbered(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (numbered[v]) continue;
            if (best < 0 || label[v] > label[best]) best = v;
        }
        order.push_back(best);
        numbered[best] = true;
        for (int w : nb[best])
            if (!numbered[w]) label[w].push_back(n - step);
    }
    // reverse of a Lex-BFS order is a perfect elimination order iff chordal
    std::vector<int> peo(order.rbegin(), order.rend());
    std::vector<int> peo_pos(n);
    for (int i = 0; i < n; ++i) peo_pos[peo[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = peo[i];
        int parent = -1;
        for (int w : nb[v])
            if (peo_pos[w] > i && (parent < 0 || peo_pos[w] < peo_pos[parent])) parent = w;
        if (parent < 0) continue;
        for (int w : nb[v]) {
            if (peo_pos[w] <= i || w == parent) continue;
            if (!nb[parent].count(w)) return false;
        }
    }
    return true;
}

namespace {

// gradient collapse of a cone through its apex: pair sigma with sigma+{apex}
bool has_cone_apex(const SimplicialComplex& x) {
    if (x.empty()) return false;
    for (std::size_t vi = 0; vi < x.count(0); ++vi) {
        int32_t v = x.simplex(0, vi)[0];
        bool apex = true;
        for (int d = 0; d <= x.dim() && apex; ++d) {
            for (std::size_t i = 0; i < x.count(d); ++i) {
                auto s = x.simplex(d, i);
                if (std::find(s.begin(), s.end(), v) != s.end()) continue;
                std::vector<int32_t> ext(s.begin(), s.end());
                ext.insert(std::lower_bound(ext.begin(), ext.end(), v), v);
                if (!x.contains(ext)) {
                    apex = false;
                    break;
                }
            }
        }
        if (apex) return true;
    }
    return false;
}

}  // namespace

bool is_collapsible_greedy(const SimplicialComplex& x) {
    if (x.empty()) return false;
    if (x.total_count() == 1) return true;
    if (has_cone_apex(x)) return true;

    const int dim = x.dim();
    std::vector<std::vector<bool>> alive(dim + 1);
    std::vector<std::vector<int>> coface_count(dim + 1);
    std::vector<std::vector<std::vector<int32_t>>> cofaces(dim + 1);
    std::size_t remaining = 0;
    for (int d = 0; d <= dim; ++d) {
        alive[d].assign(x.count(d), true);
        coface_count[d].assign(x.count(d), 0);
        cofaces[d].resize(x.count(d));
        remaining += x.count(d);
    }
    std::vector<int32_t> face(std::max(dim, 1));
    for (int d = 1; d <= dim; ++d) {
        for (std::size_t i = 0; i < x.count(d); ++i) {
            auto s = x.simplex(d, i);
            for (int skip = 0; skip <= d; ++skip) {
                int k = 0;
                for (int t = 0; t <= d; ++t)
                    if (t != skip) face[k++] = s[t];
                auto fi = x.index_of(d - 1, {face.data(), (std::size_t)d});
                cofaces[d - 1][*fi].push_back((int32_t)i);
                coface_count[d - 1][*fi]++;
            }
        }
    }
    std::deque<std::pair<int, std::size_t>> queue;
    for (int d = 0; d < dim; ++d)
        for (std::size_t i = 0; i < x.count(d); ++i)
            if (coface_count[d][i] == 1) queue.push_back({d, i});

    auto facets_of = [&](int d, std::size_t i, auto&& fn) {
        if (d == 0) return;
        auto s = x.simplex(d, i);
        std::vector<int32_t> f(d);
        for (int skip = 0; skip <= d; ++skip) {
            int k = 0;
            for (int t = 0; t <= d; ++t)
                if (t != skip) f[k++] = s[t];
            auto fi = x.index_of(d - 1, {f.data(), (std::size_t)d});
            fn(d - 1, *fi);
        }
    };

    while (!queue.empty()) {
        auto [d, i] = queue.front();
        queue.pop_front();
        if (!alive[d][i] || coface_count[d][i] != 1) continue;
        // locate the unique living coface
        int32_t tau = -1;
        for (int32_t c : cofaces[d][i])
            if (alive[d + 1][c]) tau = c;
        if (tau < 0) continue;
        alive[d][i] = false;
        alive[d + 1][tau] = false;
        remaining -= 2;
        facets_of(d + 1, tau, [&](int fd, std::size_t fi) {
            if (!alive[fd][fi]) return;
            if (--coface_count[fd][fi] == 1) queue.push_back({fd, fi});
        });
        facets_of(d, i, [&](int fd, std::size_t fi) {
            if (!alive[fd][fi]) return;
            if (--coface_count[fd][fi] == 1) queue.push_back({fd, fi});
        });
    }
    return remaining == 1;
}

bool kunneth_vanishing_check(const SimplicialComplex& l, const SimplicialComplex& lprime) {
    if (l.empty() || lprime.empty()) fail(ErrorKind::BadInput, "empty factor");
    const int m = l.dim(), n = lprime.dim();
    if (cohomology(l, m).trivial()) return true;
    if (!homology(l, m).trivial() || !homology(lprime, n).trivial()) return false;
    auto torsion_order = [](const AbelianGroup& g) {
        Int t = 1;
        for (const Int& d : g.torsion()) t *= d;
        return t;
    };
    Int a = torsion_order(m > 0 ? homology(l, m - 1) : AbelianGroup::zero());
    Int b = torsion_order(n > 0 ? homology(lprime, n - 1) : AbelianGroup::zero());
    return gcd(a, b) == 1;
}

}  // namespace cogdim
