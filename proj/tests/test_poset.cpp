#include <random>

#include "doctest.h"
#include "cogdim/complex_ops.hpp"
#include "cogdim/homology.hpp"
#include "cogdim/poset.hpp"
#include "oracles.hpp"

using namespace cogdim;

namespace {

// face poset of the boundary of a triangle: 3 vertices, 3 edges
Poset triangle_boundary_poset() {
    return validate_poset({"a", "b", "c", "ab", "ac", "bc"},
                          {{"a", "ab"}, {"b", "ab"}, {"a", "ac"}, {"c", "ac"},
                           {"b", "bc"}, {"c", "bc"}});
}

// poset of simplices of the 4-cycle graph plus a minimum (empty simplex)
Poset square_spherical_poset() {
    std::vector<std::pair<std::string, std::string>> rel = {
        {"e", "1"}, {"e", "2"}, {"e", "3"}, {"e", "4"},
        {"1", "12"}, {"2", "12"}, {"2", "23"}, {"3", "23"},
        {"3", "34"}, {"4", "34"}, {"1", "14"}, {"4", "14"}};
    return validate_poset({"e", "1", "2", "3", "4", "12", "23", "34", "14"}, rel);
}

}  // namespace

TEST_CASE("validation") {
    SUBCASE("transitive closure is inferred") {
        auto p = validate_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        CHECK(p.leq(p.index_of("a"), p.index_of("c")));
        CHECK(!p.leq(p.index_of("c"), p.index_of("a")));
    }
    SUBCASE("cycles are rejected") {
        CHECK_THROWS_AS(validate_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
        try {
            validate_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}});
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Cycle);
        }
    }
    SUBCASE("duplicate ids are rejected") {
        try {
            validate_poset({"a", "a"}, {});
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DuplicateId);
        }
    }
    SUBCASE("empty relation gives an antichain") {
        auto p = validate_poset({"a", "b"}, {});
        CHECK(!p.less(0, 1));
        CHECK(!p.less(1, 0));
        CHECK(p.maximal_elements().size() == 2);
        CHECK(p.minimal_elements().size() == 2);
    }
}

TEST_CASE("order complex") {
    SUBCASE("total order gives a solid simplex") {
        auto p = validate_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        auto k = order_complex(p);
        CHECK(k.dim() == 2);
        CHECK(k.count(0) == 3);
        CHECK(k.count(1) == 3);
        CHECK(k.count(2) == 1);
    }
    SUBCASE("antichain gives isolated vertices") {
        auto p = validate_poset({"a", "b"}, {});
        auto k = order_complex(p);
        CHECK(k.dim() == 0);
        CHECK(k.count(0) == 2);
    }
    SUBCASE("triangle boundary face poset gives a 6-cycle") {
        auto p = triangle_boundary_poset();
        auto k = order_complex(p);
        auto chains = oracle::brute_chains(p);
        CHECK(k.total_count() == chains.size());
        std::size_t edges = 0;
        for (const auto& ch : chains)
            if (ch.size() == 2) ++edges;
        CHECK(k.count(1) == edges);
        CHECK(k.count(0) == 6);
        CHECK(k.count(1) == 6);
        CHECK(k.dim() == 1);
        CHECK(homology(k, 1) == AbelianGroup::free(1));  // a circle
        CHECK(homology(k, 0) == AbelianGroup::free(1));
    }
    SUBCASE("chain count matches enumeration on random posets") {
        std::mt19937 rng(99);
        for (int t = 0; t < 20; ++t) {
            int n = 2 + (int)(rng() % 8);
            std::vector<std::string> ids;
            for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
            std::vector<std::pair<std::string, std::string>> rel;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() % 3 == 0) rel.push_back({ids[i], ids[j]});
            auto p = validate_poset(ids, rel);
            auto k = order_complex(p);
            auto chains = oracle::brute_chains(p);
            CHECK(k.total_count() == chains.size());
            ElementMask all(p.size());
            all.set();
            CHECK(p.count_chains(all) == chains.size());
            // dimension = longest chain - 1
            std::size_t longest = 0;
            for (const auto& c : chains) longest = std::max(longest, c.size());
            CHECK(k.dim() == (int)longest - 1);
        }
    }
}

TEST_CASE("upper set realizations") {
    auto q = square_spherical_poset();
    SUBCASE("maximal element gives a single vertex") {
        auto k = upper_set_realization(q, "12");
        CHECK(k.total_count() == 1);
        auto s = strict_upper_realization(q, "12");
        CHECK(s.empty());
    }
    SUBCASE("minimum gives the whole complex") {
        auto k = upper_set_realization(q, "e");
        CHECK(k.total_count() == order_complex(q).total_count());
    }
    SUBCASE("K_empty of the 4-cycle poset is a cone over an 8-cycle") {
        auto k = upper_set_realization(q, "e");
        CHECK(k.count(0) == 9);
        CHECK(k.count(1) == 8 + 8);  // cycle edges + cone edges
        CHECK(k.count(2) == 8);
        for (int n = 0; n <= 2; ++n) CHECK(reduced_homology(k, n).trivial());
    }
    SUBCASE("strict upper of the minimum is an 8-cycle") {
        auto s = strict_upper_realization(q, "e");
        CHECK(s.count(0) == 8);
        CHECK(s.count(1) == 8);
        CHECK(reduced_cohomology(s, 1) == AbelianGroup::free(1));
        CHECK(reduced_cohomology(s, 0).trivial());
    }
    SUBCASE("vertex of a path-graph flag poset") {
        // path a-b-c: simplices a,b,c,ab,bc plus empty
        auto p = validate_poset({"e", "a", "b", "c", "ab", "bc"},
                                {{"e", "a"}, {"e", "b"}, {"e", "c"},
                                 {"a", "ab"}, {"b", "ab"}, {"b", "bc"}, {"c", "bc"}});
        auto sa = strict_upper_realization(p, "a");
        CHECK(sa.total_count() == 1);  // just {ab}
        auto sb = strict_upper_realization(p, "b");
        CHECK(sb.count(0) == 2);  // {ab}, {bc}: two points
        CHECK(sb.dim() == 0);
        CHECK(reduced_homology(sb, 0) == AbelianGroup::free(1));
    }
    SUBCASE("unknown element") {
        CHECK_THROWS_AS(upper_set_realization(q, "zz"), Error);
    }
}

TEST_CASE("omega realizations") {
    auto q = square_spherical_poset();
    auto always = [](int, int) { return true; };
    auto never = [](int, int) { return false; };
    SUBCASE("maximal singleton omega") {
        ElementMask omega(q.size());
        omega.set(q.index_of("12"));
        auto pair = omega_realizations(q, omega, always);
        CHECK(pair.total.total_count() == 1);
        CHECK(pair.sub.empty());
    }
    SUBCASE("full omega with never-bigger predicate gives (K, empty)") {
        ElementMask omega(q.size());
        omega.set();
        auto pair = omega_realizations(q, omega, never);
        CHECK(pair.total.total_count() == order_complex(q).total_count());
        CHECK(pair.sub.empty());
    }
    SUBCASE("empty omega is rejected") {
        ElementMask omega(q.size());
        try {
            omega_realizations(q, omega, always);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::EmptyOmega);
        }
    }
}

TEST_CASE("properties on random posets") {
    std::mt19937 rng(8081);
    for (int t = 0; t < 12; ++t) {
        int n = 3 + (int)(rng() % 7);
        std::vector<std::string> ids;
        for (int i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> rel;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) rel.push_back({ids[i], ids[j]});
        auto p = validate_poset(ids, rel);
        for (int j = 0; j < p.size(); ++j) {
            auto kj = upper_set_realization(p, j);
            auto sj = strict_upper_realization(p, j);
            // K_{>J} is a subcomplex of K_J not containing J
            CHECK(kj.has_subcomplex(sj));
            CHECK(kj.total_count() == 2 * sj.total_count() + 1);  // cone with apex J
            // every K_J is a cone, hence acyclic
            CHECK(is_acyclic(kj));
        }
        // order complex of the face poset is the barycentric subdivision
        auto k = order_complex(p);
        if (!k.empty()) {
            auto bs = barycentric_subdivision(k);
            auto oc = face_poset(k).order_complex();
            CHECK(bs.total_count() == oc.total_count());
            for (int d = 0; d <= std::max(bs.dim(), k.dim()); ++d) {
                CHECK(oracle::dense_homology(bs, d) == oracle::dense_homology(k, d));
            }
        }
    }
}
