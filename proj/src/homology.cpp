#include "cogdim/homology.hpp"

#include <algorithm>

namespace cogdim {

namespace {

bool all_in(std::span<const int32_t> verts, const ElementMask& mask) {
    for (int32_t v : verts)
        if (!mask.test(v)) return false;
    return true;
}

}  // namespace

ChainBasis ChainBasis::all(const SimplicialComplex& x) {
    ChainBasis b;
    b.x_ = &x;
    b.members_.resize(x.dim() + 1);
    b.positions_.resize(x.dim() + 1);
    for (int d = 0; d <= x.dim(); ++d) {
        const long n = (long)x.count(d);
        b.members_[d].resize(n);
        b.positions_[d].resize(n);
        for (long i = 0; i < n; ++i) {
            b.members_[d][i] = (int32_t)i;
            b.positions_[d][i] = (int32_t)i;
        }
    }
    return b;
}

ChainBasis ChainBasis::relative_view(const SimplicialComplex& x, const ElementMask& total,
                                     const ElementMask& sub) {
    ChainBasis b;
    b.x_ = &x;
    b.members_.resize(x.dim() + 1);
    b.positions_.resize(x.dim() + 1);
    for (int d = 0; d <= x.dim(); ++d) {
        const long n = (long)x.count(d);
        b.positions_[d].assign(n, -1);
        for (long i = 0; i < n; ++i) {
            auto s = x.simplex(d, i);
            if (all_in(s, total) && !all_in(s, sub)) {
                b.positions_[d][i] = (int32_t)b.members_[d].size();
                b.members_[d].push_back((int32_t)i);
            }
        }
    }
    return b;
}

ChainBasis ChainBasis::relative(const SimplicialComplex& total, const SimplicialComplex& sub) {
    ChainBasis b;
    b.x_ = &total;
    b.members_.resize(total.dim() + 1);
    b.positions_.resize(total.dim() + 1);
    for (int d = 0; d <= total.dim(); ++d) {
        const long n = (long)total.count(d);
        b.positions_[d].assign(n, -1);
        for (long i = 0; i < n; ++i) {
            if (!sub.contains(total.simplex(d, i))) {
                b.positions_[d][i] = (int32_t)b.members_[d].size();
                b.members_[d].push_back((int32_t)i);
            }
        }
    }
    return b;
}

long ChainBasis::count(int d) const {
    if (d < 0 || d >= (int)members_.size()) return 0;
    return (long)members_[d].size();
}

long ChainBasis::position(int d, std::size_t simplex_index) const {
    if (d < 0 || d >= (int)positions_.size()) return -1;
    return positions_[d][simplex_index];
}

SparseIntMatrix coboundary_matrix(const ChainBasis& basis, int d) {
    const SimplicialComplex& x = basis.complex();
    if (d == -1) {
        // augmentation: C^{-1} = Z -> C^0
        SparseIntMatrix m(basis.count(0), 1);
        for (long i = 0; i < basis.count(0); ++i) m.add(i, 0, 1);
        return m;
    }
    SparseIntMatrix m(basis.count(d + 1), basis.count(d));
    if (basis.count(d + 1) == 0 || basis.count(d) == 0) return m;
    std::vector<int32_t> face(d + 1);
    for (long row = 0; row < basis.count(d + 1); ++row) {
        auto tau = x.simplex(d + 1, basis.simplex_of(d + 1, row));
        for (int skip = 0; skip <= d + 1; ++skip) {
            int k = 0;
            for (int i = 0; i <= d + 1; ++i)
                if (i != skip) face[k++] = tau[i];
            auto idx = x.index_of(d, {face.data(), (std::size_t)(d + 1)});
            if (!idx) fail(ErrorKind::Internal, "complex not closed under faces");
            long col = basis.position(d, *idx);
            if (col >= 0) m.add(row, col, (skip % 2 == 0) ? 1 : -1);
        }
    }
    return m;
}

namespace {

AbelianGroup group_from(long dim_n, const SnfResult& below, const SnfResult& above,
                        bool cohomology_torsion) {
    long rank = dim_n - below.rank() - above.rank();
    std::vector<Int> torsion =
        cohomology_torsion ? below.nontrivial_factors() : above.nontrivial_factors();
    return AbelianGroup(rank, std::move(torsion));
}

// degree n of a (possibly augmented) basis; n may be -1 when augmented
AbelianGroup degree_group(const ChainBasis& basis, int n, bool augmented, bool cohomology_torsion) {
    const int lowest = augmented ? -1 : 0;
    if (n < lowest) fail(ErrorKind::NegativeDimension, "degree below " + std::to_string(lowest));
    long dim_n = n == -1 ? 1 : basis.count(n);
    auto snf_at = [&](int d) -> SnfResult {
        if (d < lowest || d > basis.dim()) return SnfResult{};
        if (d == -1 && basis.count(0) == 0) return SnfResult{};  // empty complex
        return smith_normal_form(coboundary_matrix(basis, d));
    };
    SnfResult below = snf_at(n - 1);
    SnfResult above = snf_at(n);
    return group_from(dim_n, below, above, cohomology_torsion);
}

}  // namespace

std::vector<AbelianGroup> cohomology_profile(const ChainBasis& basis, bool augmented,
                                             bool cohomology_torsion) {
    const int lowest = augmented ? -1 : 0;
    const int top = basis.dim();
    std::vector<SnfResult> snfs;  // snfs[k] = SNF of delta^{lowest + k - 1}
    snfs.push_back(SnfResult{});  // delta below the lowest degree is zero
    for (int d = lowest; d <= top; ++d) {
        if (d == -1 && basis.count(0) == 0)
            snfs.push_back(SnfResult{});
        else
            snfs.push_back(smith_normal_form(coboundary_matrix(basis, d)));
    }
    std::vector<AbelianGroup> out;
    for (int n = lowest; n <= top; ++n) {
        long dim_n = n == -1 ? 1 : basis.count(n);
        const SnfResult& below = snfs[n - lowest];
        const SnfResult& above = snfs[n - lowest + 1];
        out.push_back(group_from(dim_n, below, above, cohomology_torsion));
    }
    if (out.empty()) out.push_back(augmented ? AbelianGroup::free(1) : AbelianGroup::zero());
    return out;
}

AbelianGroup homology(const SimplicialComplex& x, int n) {
    if (n < 0) fail(ErrorKind::NegativeDimension, "homology degree must be >= 0");
    if (n > x.dim()) return AbelianGroup::zero();
    return degree_group(ChainBasis::all(x), n, false, false);
}

AbelianGroup cohomology(const SimplicialComplex& x, int n) {
    if (n < 0) fail(ErrorKind::NegativeDimension, "cohomology degree must be >= 0");
    if (n > x.dim()) return AbelianGroup::zero();
    return degree_group(ChainBasis::all(x), n, false, true);
}

AbelianGroup reduced_homology(const SimplicialComplex& x, int n) {
    if (n < -1) fail(ErrorKind::NegativeDimension, "reduced degree must be >= -1");
    if (x.empty()) return n == -1 ? AbelianGroup::free(1) : AbelianGroup::zero();
    if (n > x.dim()) return AbelianGroup::zero();
    return degree_group(ChainBasis::all(x), n, true, false);
}

AbelianGroup reduced_cohomology(const SimplicialComplex& x, int n) {
    if (n < -1) fail(ErrorKind::NegativeDimension, "reduced degree must be >= -1");
    if (x.empty()) return n == -1 ? AbelianGroup::free(1) : AbelianGroup::zero();
    if (n > x.dim()) return AbelianGroup::zero();
    return degree_group(ChainBasis::all(x), n, true, true);
}

AbelianGroup relative_cohomology(const ComplexPair& pair, int n) {
    if (n < 0) fail(ErrorKind::NegativeDimension, "relative degree must be >= 0");
    if (!pair.total.has_subcomplex(pair.sub))
        fail(ErrorKind::NotASubcomplex, "relative cohomology of a non-pair");
    if (n > pair.total.dim()) return AbelianGroup::zero();
    return degree_group(ChainBasis::relative(pair.total, pair.sub), n, false, true);
}

AbelianGroup relative_homology(const ComplexPair& pair, int n) {
    if (n < 0) fail(ErrorKind::NegativeDimension, "relative degree must be >= 0");
    if (!pair.total.has_subcomplex(pair.sub))
        fail(ErrorKind::NotASubcomplex, "relative homology of a non-pair");
    if (n > pair.total.dim()) return AbelianGroup::zero();
    return degree_group(ChainBasis::relative(pair.total, pair.sub), n, false, false);
}

AbelianGroup relative_cohomology_view(const SimplicialComplex& x, const ElementMask& total,
                                      const ElementMask& sub, int n) {
    if (n < 0) fail(ErrorKind::NegativeDimension, "relative degree must be >= 0");
    if (n > x.dim()) return AbelianGroup::zero();
    return degree_group(ChainBasis::relative_view(x, total, sub), n, false, true);
}

std::vector<AbelianGroup> reduced_cohomology_profile(const SimplicialComplex& x) {
    if (x.empty()) return {AbelianGroup::free(1)};
    return cohomology_profile(ChainBasis::all(x), true, true);
}

std::vector<AbelianGroup> reduced_homology_profile(const SimplicialComplex& x) {
    if (x.empty()) return {AbelianGroup::free(1)};
    return cohomology_profile(ChainBasis::all(x), true, false);
}

std::vector<AbelianGroup> relative_cohomology_profile(const SimplicialComplex& x,
                                                      const ElementMask& total,
                                                      const ElementMask& sub) {
    return cohomology_profile(ChainBasis::relative_view(x, total, sub), false, true);
}

bool is_acyclic(const SimplicialComplex& x) {
    if (x.empty()) return false;  // reduced H^{-1} = Z
    auto profile = reduced_homology_profile(x);
    for (const auto& g : profile)
        if (!g.trivial()) return false;
    return true;
}

}  // namespace cogdim
