#pragma once

#include <vector>

#include "cogdim/abelian.hpp"
#include "cogdim/poset.hpp"
#include "cogdim/simplicial.hpp"
#include "cogdim/snf.hpp"

namespace cogdim {

/**
 * Chain/cochain basis selection inside one complex: either all simplices, or
 * (for a relative pair) the simplices of a full-subcomplex total that are not
 * in a full-subcomplex sub, described by vertex masks over the ambient
 * complex.  Positions are dense per dimension.
 */
class ChainBasis {
public:
    static ChainBasis all(const SimplicialComplex& x);
    /// Relative basis of the pair (X|total, X|sub): simplices with all
    /// vertices in `total` but not all in `sub`.
    static ChainBasis relative_view(const SimplicialComplex& x, const ElementMask& total,
                                    const ElementMask& sub);
    /// Relative basis of an explicit pair (sub simplices looked up in total).
    static ChainBasis relative(const SimplicialComplex& total, const SimplicialComplex& sub);

    const SimplicialComplex& complex() const { return *x_; }
    long count(int d) const;
    /// index of the d-simplex within the basis, or -1 if excluded
    long position(int d, std::size_t simplex_index) const;
    std::size_t simplex_of(int d, long pos) const { return members_[d][pos]; }
    int dim() const { return (int)members_.size() - 1; }

private:
    const SimplicialComplex* x_ = nullptr;
    std::vector<std::vector<int32_t>> members_;    // basis -> simplex index
    std::vector<std::vector<int32_t>> positions_;  // simplex index -> basis or -1
};

/// delta^d : C^d -> C^{d+1} over the basis; rows = degree d+1, cols = degree d.
/// d = -1 gives the augmentation column (full basis only).
SparseIntMatrix coboundary_matrix(const ChainBasis& basis, int d);

AbelianGroup homology(const SimplicialComplex& x, int n);
AbelianGroup cohomology(const SimplicialComplex& x, int n);
AbelianGroup reduced_homology(const SimplicialComplex& x, int n);     // n >= -1
AbelianGroup reduced_cohomology(const SimplicialComplex& x, int n);   // n >= -1

AbelianGroup relative_cohomology(const ComplexPair& pair, int n);
AbelianGroup relative_homology(const ComplexPair& pair, int n);

/// Same, over vertex masks of full subcomplexes of a shared complex.
AbelianGroup relative_cohomology_view(const SimplicialComplex& x, const ElementMask& total,
                                      const ElementMask& sub, int n);

/// All degrees at once (one SNF per coboundary, shared between neighbours).
/// Index k of the result holds degree k; reduced profiles start at degree -1
/// (index 0 = degree -1).
std::vector<AbelianGroup> cohomology_profile(const ChainBasis& basis, bool augmented,
                                             bool cohomology_torsion = true);
std::vector<AbelianGroup> reduced_cohomology_profile(const SimplicialComplex& x);
std::vector<AbelianGroup> reduced_homology_profile(const SimplicialComplex& x);
std::vector<AbelianGroup> relative_cohomology_profile(const SimplicialComplex& x,
                                                      const ElementMask& total,
                                                      const ElementMask& sub);

bool is_acyclic(const SimplicialComplex& x);  // all reduced homology vanishes

}  // namespace cogdim
