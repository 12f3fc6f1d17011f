#include "cogdim/simplicial.hpp"

#include <algorithm>
#include <unordered_set>

namespace cogdim {

namespace {

struct BlockLess {
    int width;
    bool operator()(const int32_t* a, const int32_t* b) const {
        return std::lexicographical_compare(a, a + width, b, b + width);
    }
};

void sort_blocks(std::vector<int32_t>& flat, int d) {
    const int w = d + 1;
    const std::size_t n = flat.size() / w;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(flat.data() + a * w, flat.data() + a * w + w,
                                            flat.data() + b * w, flat.data() + b * w + w);
    });
    std::vector<int32_t> out(flat.size());
    std::size_t pos = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const int32_t* src = flat.data() + idx[k] * w;
        if (pos > 0 && std::equal(src, src + w, out.data() + (pos - 1) * w)) continue;
        std::copy(src, src + w, out.data() + pos * w);
        ++pos;
    }
    out.resize(pos * w);
    flat = std::move(out);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(
    int n_vertices, const std::vector<std::vector<int32_t>>& simplices, const Limits& lim) {
    int dim = -1;
    for (const auto& s : simplices) dim = std::max(dim, (int)s.size() - 1);
    std::vector<std::unordered_set<std::string>> seen(dim + 1);
    std::vector<std::vector<int32_t>> cells(dim + 1);
    std::size_t total = 0;

    auto key = [](const std::vector<int32_t>& v) {
        return std::string((const char*)v.data(), v.size() * sizeof(int32_t));
    };
    // insert a simplex and recursively all faces
    auto insert = [&](auto&& self, std::vector<int32_t> v) -> void {
        const int d = (int)v.size() - 1;
        if (d < 0) return;
        auto k = key(v);
        if (!seen[d].insert(std::move(k)).second) return;
        if (++total > lim.max_complex_simplices)
            fail(ErrorKind::SizeGuard, "complex exceeds " +
                                           std::to_string(lim.max_complex_simplices) + " simplices");
        cells[d].insert(cells[d].end(), v.begin(), v.end());
        if (d == 0) return;
        for (int skip = 0; skip <= d; ++skip) {
            std::vector<int32_t> face;
            face.reserve(d);
            for (int i = 0; i <= d; ++i)
                if (i != skip) face.push_back(v[i]);
            self(self, std::move(face));
        }
    };

    for (const auto& s : simplices) {
        std::vector<int32_t> v(s);
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            fail(ErrorKind::BadInput, "simplex with repeated vertex");
        for (int32_t x : v)
            if (x < 0 || x >= n_vertices) fail(ErrorKind::BadInput, "vertex id out of range");
        insert(insert, std::move(v));
    }
    for (int d = 0; d <= dim; ++d) sort_blocks(cells[d], d);
    while (!cells.empty() && cells.back().empty()) cells.pop_back();

    SimplicialComplex out;
    out.n_vertices_ = n_vertices;
    out.cells_ = std::move(cells);
    return out;
}

SimplicialComplex SimplicialComplex::from_cell_blocks(int n_vertices,
                                                      std::vector<std::vector<int32_t>> cells) {
    for (int d = 0; d < (int)cells.size(); ++d) sort_blocks(cells[d], d);
    while (!cells.empty() && cells.back().empty()) cells.pop_back();
    SimplicialComplex out;
    out.n_vertices_ = n_vertices;
    out.cells_ = std::move(cells);
    return out;
}

std::size_t SimplicialComplex::count(int d) const {
    if (d < 0 || d >= (int)cells_.size()) return 0;
    return cells_[d].size() / (d + 1);
}

std::size_t SimplicialComplex::total_count() const {
    std::size_t t = 0;
    for (int d = 0; d <= dim(); ++d) t += count(d);
    return t;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int d = 0; d <= dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * (long)count(d);
    return chi;
}

std::optional<std::size_t> SimplicialComplex::index_of(int d, std::span<const int32_t> verts) const {
    if (d < 0 || d >= (int)cells_.size()) return std::nullopt;
    const auto& flat = cells_[d];
    const int w = d + 1;
    std::size_t lo = 0, hi = flat.size() / w;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const int32_t* blk = flat.data() + mid * w;
        if (std::lexicographical_compare(blk, blk + w, verts.data(), verts.data() + w))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < flat.size() / (std::size_t)w) {
        const int32_t* blk = flat.data() + lo * w;
        if (std::equal(blk, blk + w, verts.data())) return lo;
    }
    return std::nullopt;
}

bool SimplicialComplex::contains(std::span<const int32_t> verts) const {
    return index_of((int)verts.size() - 1, verts).has_value();
}

std::vector<int32_t> SimplicialComplex::used_vertices() const {
    std::vector<int32_t> out;
    if (cells_.empty()) return out;
    out.assign(cells_[0].begin(), cells_[0].end());
    return out;  // 0-cells are sorted already
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<bool>& keep) const {
    std::vector<std::vector<int32_t>> cells(cells_.size());
    for (int d = 0; d <= dim(); ++d) {
        const int w = d + 1;
        for (std::size_t i = 0; i < count(d); ++i) {
            auto s = simplex(d, i);
            bool all = true;
            for (int32_t v : s)
                if (!keep[v]) {
                    all = false;
                    break;
                }
            if (all) cells[d].insert(cells[d].end(), s.begin(), s.end());
        }
        (void)w;
    }
    while (!cells.empty() && cells.back().empty()) cells.pop_back();
    SimplicialComplex out;
    out.n_vertices_ = n_vertices_;
    out.cells_ = std::move(cells);
    out.vertex_names = vertex_names;
    return out;
}

bool SimplicialComplex::has_subcomplex(const SimplicialComplex& sub) const {
    if (sub.empty()) return true;
    if (sub.n_vertices_ != n_vertices_ || sub.dim() > dim()) return false;
    for (int d = 0; d <= sub.dim(); ++d)
        for (std::size_t i = 0; i < sub.count(d); ++i)
            if (!index_of(d, sub.simplex(d, i))) return false;
    return true;
}

ComplexPair ComplexPair::checked(SimplicialComplex total, SimplicialComplex sub) {
    if (!total.has_subcomplex(sub))
        fail(ErrorKind::NotASubcomplex, "second complex is not a subcomplex of the first");
    return ComplexPair{std::move(total), std::move(sub)};
}

}  // namespace cogdim
