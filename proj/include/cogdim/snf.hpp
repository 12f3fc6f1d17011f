#pragma once

#include <optional>
#include <vector>

#include "cogdim/abelian.hpp"

namespace cogdim {

/// Sparse integer matrix, row-major.  Build with add(), then hand to
/// smith_normal_form().  Duplicate (r,c) entries accumulate.
class SparseIntMatrix {
public:
    SparseIntMatrix(long rows, long cols) : rows_(rows), cols_(cols) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    std::size_t nnz() const { return triplets_.size(); }

    void add(long r, long c, Int v);

    struct Triplet {
        long r, c;
        Int v;
    };
    const std::vector<Triplet>& triplets() const { return triplets_; }

private:
    long rows_, cols_;
    std::vector<Triplet> triplets_;
};

using DenseIntMatrix = std::vector<std::vector<Int>>;

struct SnfResult {
    // Invariant factors d_1 | d_2 | ... | d_r (all >= 1); r = rank.
    std::vector<Int> factors;
    // Present when transforms were requested: U * M * V = diag(factors).
    std::optional<DenseIntMatrix> U, V;

    long rank() const { return static_cast<long>(factors.size()); }
    std::vector<Int> nontrivial_factors() const;
};

SnfResult smith_normal_form(const SparseIntMatrix& m, bool with_transforms = false);

/// rank over Q (= number of invariant factors).
long integer_rank(const SparseIntMatrix& m);

}  // namespace cogdim
