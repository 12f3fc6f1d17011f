#pragma once

#include "cogdim/poset.hpp"
#include "cogdim/simplicial.hpp"

namespace cogdim {

/// Cone: one new apex vertex joined to every simplex.  cone(empty) = point.
SimplicialComplex cone(const SimplicialComplex& x, const std::string& apex_name = "*",
                       const Limits& lim = Limits::defaults());

/// Join: simplices are disjoint unions of a simplex of x and one of y.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y,
                       const Limits& lim = Limits::defaults());

/// Poset of nonempty simplices ordered by inclusion.
Poset face_poset(const SimplicialComplex& x);

/// Order complex of the face poset.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x,
                                          const Limits& lim = Limits::defaults());

/// Cells of the product / join cell complex, ordered componentwise.
Poset poset_product(const Poset& p, const Poset& q);
Poset poset_join(const Poset& p, const Poset& q);

bool is_flag(const SimplicialComplex& x);
bool is_chordal_1_skeleton(const SimplicialComplex& x);

/// True means collapsible (hence contractible); false is inconclusive.
bool is_collapsible_greedy(const SimplicialComplex& x);

/// Hypotheses under which top cohomology of product and join vanish:
/// (1) H^m(L) = 0, or (2) H_m(L) = 0, H_n(L') = 0 and the torsion of
/// H_{m-1}(L), H_{n-1}(L') has coprime orders (m = dim L, n = dim L').
bool kunneth_vanishing_check(const SimplicialComplex& l, const SimplicialComplex& lprime);

}  // namespace cogdim
