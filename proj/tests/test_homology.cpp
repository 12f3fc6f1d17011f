#include <random>

#include "doctest.h"
#include "cogdim/complex_ops.hpp"
#include "cogdim/homology.hpp"
#include "oracles.hpp"

using namespace cogdim;

namespace {

SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_simplices(3, {{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex solid_triangle() {
    return SimplicialComplex::from_simplices(3, {{0, 1, 2}});
}

// minimal 6-vertex triangulation of the real projective plane
SimplicialComplex rp2() {
    return SimplicialComplex::from_simplices(
        6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

SimplicialComplex cycle(int n) {
    std::vector<std::vector<int32_t>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({(int32_t)i, (int32_t)((i + 1) % n)});
    return SimplicialComplex::from_simplices(n, edges);
}

SimplicialComplex random_complex(std::mt19937& rng, int nv, int nmax, int topdim) {
    std::vector<std::vector<int32_t>> top;
    for (int k = 0; k < nmax; ++k) {
        int d = 1 + (int)(rng() % topdim);
        std::vector<int32_t> s;
        while ((int)s.size() < d + 1) {
            int32_t v = (int32_t)(rng() % nv);
            if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
        }
        top.push_back(s);
    }
    return SimplicialComplex::from_simplices(nv, top);
}

}  // namespace

TEST_CASE("basic homology values") {
    SUBCASE("triangle boundary is a circle") {
        auto x = triangle_boundary();
        CHECK(homology(x, 0) == AbelianGroup::free(1));
        CHECK(homology(x, 1) == AbelianGroup::free(1));
        CHECK(cohomology(x, 1) == AbelianGroup::free(1));
    }
    SUBCASE("projective plane") {
        auto x = rp2();
        CHECK(x.count(0) == 6);
        CHECK(x.count(1) == 15);
        CHECK(x.count(2) == 10);
        // frozen from the dense oracle on the full boundary matrices
        CHECK(oracle::dense_homology(x, 1) == AbelianGroup::cyclic(2));
        CHECK(homology(x, 1) == AbelianGroup::cyclic(2));
        CHECK(homology(x, 2) == AbelianGroup::zero());
        CHECK(cohomology(x, 2) == AbelianGroup::cyclic(2));
        CHECK(cohomology(x, 1) == AbelianGroup::zero());
    }
    SUBCASE("empty complex conventions") {
        SimplicialComplex e;
        CHECK(reduced_cohomology(e, -1) == AbelianGroup::free(1));
        CHECK(reduced_homology(e, -1) == AbelianGroup::free(1));
        CHECK(reduced_cohomology(e, 0).trivial());
        CHECK(reduced_cohomology(e, 3).trivial());
        CHECK(reduced_homology(triangle_boundary(), -1).trivial());
    }
    SUBCASE("degree errors") {
        CHECK_THROWS_AS(homology(triangle_boundary(), -1), Error);
        CHECK_THROWS_AS(reduced_cohomology(triangle_boundary(), -2), Error);
    }
}

TEST_CASE("relative cohomology") {
    SUBCASE("(disk, boundary circle)") {
        auto pair = ComplexPair::checked(solid_triangle(), triangle_boundary());
        CHECK(relative_cohomology(pair, 2) == AbelianGroup::free(1));
        CHECK(relative_cohomology(pair, 1).trivial());
        CHECK(relative_cohomology(pair, 0).trivial());
    }
    SUBCASE("(X, empty) is absolute cohomology") {
        auto x = rp2();
        ComplexPair pair{x, SimplicialComplex()};
        for (int n = 0; n <= 2; ++n) CHECK(relative_cohomology(pair, n) == cohomology(x, n));
    }
    SUBCASE("(cone over 8-cycle, 8-cycle)") {
        auto c8 = cycle(8);
        auto c = cone(c8);
        // long exact sequence oracle: 0 = H^1(cone) -> H^1(S^1) = Z ->
        // H^2(pair) -> H^2(cone) = 0, so H^2(pair) = Z; frozen here
        std::vector<bool> keep(9, true);
        keep[8] = false;  // drop the apex
        auto pair = ComplexPair::checked(c, c.full_subcomplex(keep));
        CHECK(relative_cohomology(pair, 2) == AbelianGroup::free(1));
        CHECK(relative_cohomology(pair, 1).trivial());
        CHECK(relative_cohomology(pair, 0).trivial());
    }
    SUBCASE("not a subcomplex") {
        auto x = solid_triangle();
        auto y = SimplicialComplex::from_simplices(3, {{0, 1}, {1, 2}, {0, 2}});
        // y IS a subcomplex; build a non-subcomplex by adding a stray edge
        auto z = SimplicialComplex::from_simplices(4, {{0, 3}});
        CHECK_THROWS_AS(relative_cohomology(ComplexPair{x, z}, 1), Error);
        (void)y;
    }
}

TEST_CASE("relative view equals materialized pair") {
    std::mt19937 rng(31337);
    for (int t = 0; t < 10; ++t) {
        auto x = random_complex(rng, 8, 6, 3);
        if (x.empty()) continue;
        // random full subcomplex masks: sub ⊆ total
        ElementMask total(x.vertex_universe()), sub(x.vertex_universe());
        for (int v = 0; v < x.vertex_universe(); ++v) {
            if (rng() % 4 != 0) total.set(v);
            if (total.test(v) && rng() % 2 == 0) sub.set(v);
        }
        std::vector<bool> tkeep(x.vertex_universe()), skeep(x.vertex_universe());
        for (int v = 0; v < x.vertex_universe(); ++v) {
            tkeep[v] = total.test(v);
            skeep[v] = sub.test(v);
        }
        auto xt = x.full_subcomplex(tkeep);
        auto xs = x.full_subcomplex(skeep);
        for (int n = 0; n <= x.dim(); ++n) {
            auto via_pair = relative_cohomology(ComplexPair{xt, xs}, n);
            auto via_view = relative_cohomology_view(x, total, sub, n);
            CHECK(via_pair == via_view);
        }
    }
}

TEST_CASE("structural properties on random complexes") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 12; ++t) {
        auto x = random_complex(rng, 7, 5, 3);
        if (x.empty()) continue;
        // Euler characteristic equals the alternating sum of homology ranks
        long chi = 0;
        for (int n = 0; n <= x.dim(); ++n) {
            auto h = homology(x, n);
            chi += (n % 2 == 0 ? 1 : -1) * h.rank();
            // universal coefficients: same rank, torsion shifts up one degree
            auto hc = cohomology(x, n);
            CHECK(hc.rank() == h.rank());
            auto below = n == 0 ? AbelianGroup::zero() : homology(x, n - 1);
            CHECK(hc.torsion() == below.torsion());
            // engine agrees with the dense oracle
            CHECK(h == oracle::dense_homology(x, n));
        }
        CHECK(chi == x.euler_characteristic());

        // long exact sequence of a random pair: alternating rank sum vanishes
        ElementMask keep(x.vertex_universe());
        for (int v = 0; v < x.vertex_universe(); ++v)
            if (rng() % 2 == 0) keep.set(v);
        std::vector<bool> kb(x.vertex_universe());
        for (int v = 0; v < x.vertex_universe(); ++v) kb[v] = keep.test(v);
        auto a = x.full_subcomplex(kb);
        ElementMask all(x.vertex_universe());
        all.set();
        long alternating = 0;
        for (int n = 0; n <= x.dim() + 1; ++n) {
            long rel = relative_cohomology_view(x, all, keep, n).rank();
            long tot = cohomology(x, n).rank();
            long sb = a.empty() ? 0 : cohomology(a, n).rank();
            alternating += (n % 2 == 0 ? 1 : -1) * (rel - tot + sb);
        }
        CHECK(alternating == 0);
    }
}

TEST_CASE("barycentric subdivision preserves homology") {
    std::mt19937 rng(777);
    for (int t = 0; t < 6; ++t) {
        auto x = random_complex(rng, 6, 4, 3);
        if (x.empty()) continue;
        auto b = barycentric_subdivision(x);
        for (int n = 0; n <= x.dim(); ++n) CHECK(homology(b, n) == homology(x, n));
    }
    auto b = barycentric_subdivision(rp2());
    CHECK(homology(b, 1) == AbelianGroup::cyclic(2));
    CHECK(homology(b, 2).trivial());
}
