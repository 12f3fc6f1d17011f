#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cogdim/errors.hpp"

namespace cogdim {

/**
 * Finite abstract simplicial complex over vertices 0..n-1.
 *
 * Simplices are stored per dimension as flat arrays of sorted vertex blocks,
 * the blocks sorted lexicographically, so faces can be located by binary
 * search.  The empty complex (no vertices, no simplices) is a legal value.
 * Immutable after construction.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Closure of a family of simplices (vertex lists need not be sorted).
    static SimplicialComplex from_simplices(int n_vertices,
                                            const std::vector<std::vector<int32_t>>& simplices,
                                            const Limits& lim = Limits::defaults());

    int vertex_universe() const { return n_vertices_; }
    /// Dimension; -1 for the empty complex.
    int dim() const { return (int)cells_.size() - 1; }
    bool empty() const { return cells_.empty(); }

    std::size_t count(int d) const;
    std::size_t total_count() const;
    long euler_characteristic() const;

    std::span<const int32_t> simplex(int d, std::size_t i) const {
        return {cells_[d].data() + i * (d + 1), (std::size_t)(d + 1)};
    }
    std::optional<std::size_t> index_of(int d, std::span<const int32_t> verts) const;
    bool contains(std::span<const int32_t> verts) const;

    /// Vertices that appear in some simplex, ascending.
    std::vector<int32_t> used_vertices() const;

    /// Full subcomplex on a vertex subset (keeps the vertex numbering).
    SimplicialComplex full_subcomplex(const std::vector<bool>& keep) const;

    /// True if `sub` is a subcomplex (same vertex universe).
    bool has_subcomplex(const SimplicialComplex& sub) const;

    std::vector<std::string> vertex_names;  // optional, for reports

    /// Raw per-dimension storage (flat sorted blocks); for matrix builders.
    const std::vector<std::vector<int32_t>>& cells() const { return cells_; }

    /// Assemble from per-dimension flat blocks (each block's vertices already
    /// sorted); blocks are sorted and deduplicated, closedness is trusted.
    static SimplicialComplex from_cell_blocks(int n_vertices,
                                              std::vector<std::vector<int32_t>> cells);

private:
    int n_vertices_ = 0;
    std::vector<std::vector<int32_t>> cells_;
};

/// Pair (total, sub) with sub a subcomplex of total, over one vertex universe.
struct ComplexPair {
    SimplicialComplex total;
    SimplicialComplex sub;

    static ComplexPair checked(SimplicialComplex total, SimplicialComplex sub);
};

}  // namespace cogdim
