#include "doctest.h"
#include "cogdim/scog.hpp"

using namespace cogdim;

namespace {

// One-relator amalgam data over the ten-element non-thin poset: a five
// element block with group A, a separate A element, and D, E below C with B
// off to the side.  Ambient group (Z/2)^3; A = <e1>, B = <e1, e2+e3>,
// C = everything, D = <e1,e2>, E = <e1,e3>.
struct Amalgam {
    ConcreteFiniteGroup::Ptr g = ConcreteFiniteGroup::from_table([] {
        std::vector<std::vector<int32_t>> t(8, std::vector<int32_t>(8));
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) t[a][b] = a ^ b;
        return t;
    }());
    SubgroupHandle A = SubgroupHandle::generated(g, {1});          // e1 = 001
    SubgroupHandle B = SubgroupHandle::generated(g, {1, 6});       // e1, e2+e3
    SubgroupHandle C = SubgroupHandle::whole(g);
    SubgroupHandle D = SubgroupHandle::generated(g, {1, 2});
    SubgroupHandle E = SubgroupHandle::generated(g, {1, 4});
};

// Q: x1,x2,x3 minimal A's; y1,y2 middle A's; x4 a separate A; d, e, c, b
SimpleComplexOfGroups figure_amalgam_scog(bool concrete) {
    Amalgam am;
    std::vector<std::string> ids = {"x1", "x2", "x3", "y1", "y2", "x4", "d", "ee", "c", "b"};
    std::vector<std::pair<std::string, std::string>> rel = {
        {"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x3", "y2"},  // the A block
        {"y1", "d"},  {"y2", "d"},  {"x1", "b"},                 // block below d and b
        {"x4", "d"},  {"x4", "ee"}, {"d", "c"},  {"ee", "c"}};
    SimpleComplexOfGroups::Data data;
    data.poset = validate_poset(ids, rel);
    if (concrete) {
        data.backend = Backend::Concrete;
        data.ambient = am.g;
        auto at = [&](const SubgroupHandle& h) { return GroupHandle{h}; };
        data.locals = {at(am.A), at(am.A), at(am.A), at(am.A), at(am.A),
                       at(am.A), at(am.D), at(am.E), at(am.C), at(am.B)};
    } else {
        data.backend = Backend::Order;
        auto lbl = [](const std::string& t, std::uint64_t o) { return GroupHandle{OrderLabel{t, o}}; };
        data.locals = {lbl("A", 2), lbl("A", 2), lbl("A", 2), lbl("A", 2), lbl("A", 2),
                       lbl("A", 2), lbl("D", 4), lbl("E", 4), lbl("C", 8), lbl("B", 4)};
    }
    return validate_scog(std::move(data));
}

SimpleComplexOfGroups one_element_scog() {
    SimpleComplexOfGroups::Data data;
    data.poset = validate_poset({"pt"}, {});
    data.backend = Backend::Concrete;
    data.ambient = ConcreteFiniteGroup::dihedral(3);
    data.locals = {SubgroupHandle::whole(data.ambient)};
    return validate_scog(std::move(data));
}

}  // namespace

TEST_CASE("validation") {
    SUBCASE("one element, any group") { CHECK(one_element_scog().poset().size() == 1); }
    SUBCASE("amalgam data validates on both backends") {
        CHECK(figure_amalgam_scog(true).poset().size() == 10);
        CHECK(figure_amalgam_scog(false).poset().size() == 10);
    }
    SUBCASE("missing local group") {
        SimpleComplexOfGroups::Data data;
        data.poset = validate_poset({"a", "b"}, {{"a", "b"}});
        data.backend = Backend::Order;
        data.locals = {OrderLabel{"A", 2}};
        CHECK_THROWS_AS(validate_scog(std::move(data)), Error);
    }
    SUBCASE("non-inclusion is rejected") {
        auto g = ConcreteFiniteGroup::dihedral(3);
        SimpleComplexOfGroups::Data data;
        data.poset = validate_poset({"a", "b"}, {{"a", "b"}});
        data.backend = Backend::Concrete;
        data.ambient = g;
        data.locals = {SubgroupHandle::generated(g, {3}), SubgroupHandle::generated(g, {1})};
        try {
            validate_scog(std::move(data));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MissingMap);
        }
    }
    SUBCASE("non-injective explicit map") {
        auto g = ConcreteFiniteGroup::dihedral(3);
        SimpleComplexOfGroups::Data data;
        data.poset = validate_poset({"a", "b"}, {{"a", "b"}});
        data.backend = Backend::Concrete;
        data.ambient = g;
        auto s = SubgroupHandle::generated(g, {3});
        data.locals = {s, SubgroupHandle::whole(g)};
        data.explicit_maps[{0, 1}] = {{0, 0}, {3, 0}};  // both elements to identity
        try {
            validate_scog(std::move(data));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonInjectiveMap);
        }
    }
    SUBCASE("explicit inclusion maps pass") {
        auto g = ConcreteFiniteGroup::dihedral(3);
        SimpleComplexOfGroups::Data data;
        data.poset = validate_poset({"a", "b"}, {{"a", "b"}});
        data.backend = Backend::Concrete;
        data.ambient = g;
        auto s = SubgroupHandle::generated(g, {3});
        data.locals = {s, SubgroupHandle::whole(g)};
        data.explicit_maps[{0, 1}] = {{0, 0}, {3, 3}};
        CHECK(validate_scog(std::move(data)).poset().size() == 2);
    }
    SUBCASE("Lagrange violation on the order backend") {
        SimpleComplexOfGroups::Data data;
        data.poset = validate_poset({"a", "b"}, {{"a", "b"}});
        data.backend = Backend::Order;
        data.locals = {OrderLabel{"A", 2}, OrderLabel{"B", 3}};
        CHECK_THROWS_AS(validate_scog(std::move(data)), Error);
    }
}

TEST_CASE("thinness") {
    SUBCASE("single element is thin") { CHECK(is_thin(one_element_scog())); }
    SUBCASE("amalgam poset is not thin") {
        CHECK(!is_thin(figure_amalgam_scog(true)));
        CHECK(!is_thin(figure_amalgam_scog(false)));
    }
    SUBCASE("infinite orders without flags are undecidable") {
        SimpleComplexOfGroups::Data data;
        data.poset = validate_poset({"a", "b"}, {{"a", "b"}});
        data.backend = Backend::Order;
        data.locals = {OrderLabel{"Z", 0}, OrderLabel{"ZZ", 0}};
        auto s = validate_scog(std::move(data));
        try {
            is_thin(s);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnknownIsoStatus);
        }
    }
    SUBCASE("infinite orders with flags decide thinness") {
        SimpleComplexOfGroups::Data data;
        data.poset = validate_poset({"a", "b"}, {{"a", "b"}});
        data.backend = Backend::Order;
        data.locals = {OrderLabel{"Z", 0}, OrderLabel{"ZZ", 0}};
        data.iso_flags[{0, 1}] = false;
        CHECK(is_thin(validate_scog(std::move(data))));
    }
}

TEST_CASE("blocks and thinning") {
    for (bool concrete : {true, false}) {
        CAPTURE(concrete);
        auto scog = figure_amalgam_scog(concrete);
        auto blocks = compute_blocks(scog);
        // the five connected A elements form one block; x4, d, ee, c, b are single
        CHECK(blocks.block_count() == 6);
        const auto& q = scog.poset();
        int big = blocks.block_of[q.index_of("x1")];
        CHECK(blocks.blocks[big].size() == 5);
        CHECK(blocks.block_of[q.index_of("y2")] == big);
        CHECK(blocks.block_of[q.index_of("x4")] != big);
        CHECK(blocks.blocks[blocks.block_of[q.index_of("x4")]].size() == 1);

        // thinning gives the six-element complex with groups A, A, D, E, C, B
        auto thin = thinning(scog, blocks);
        CHECK(is_thin(thin));
        CHECK(thin.poset().size() == 6);
        const auto& r = thin.poset();
        int a1 = r.index_of("x1"), a2 = r.index_of("x4");
        int d = r.index_of("d"), e = r.index_of("ee"), c = r.index_of("c"), b = r.index_of("b");
        CHECK(r.leq(a1, d));
        CHECK(r.leq(a1, c));
        CHECK(r.leq(a1, b));
        CHECK(r.leq(a2, d));
        CHECK(r.leq(a2, e));
        CHECK(!r.leq(a1, e));
        CHECK(!r.leq(a2, b));
        CHECK(r.leq(d, c));
        CHECK(r.leq(e, c));
        CHECK(handle_order(thin.local(a1)) == 2);
        CHECK(handle_order(thin.local(c)) == 8);

        // thinning is idempotent up to isomorphism
        auto again = thinning(thin);
        CHECK(again.poset().size() == thin.poset().size());
        std::vector<int> ident;
        for (int i = 0; i < thin.poset().size(); ++i)
            ident.push_back(again.poset().index_of(thin.poset().id(i)));
        CHECK(simply_isomorphic(thin, again, ident));
    }
}

TEST_CASE("strictly bigger predicate") {
    auto scog = figure_amalgam_scog(true);
    auto pred = strictly_bigger_predicate(scog);
    const auto& q = scog.poset();
    CHECK(!pred(q.index_of("x1"), q.index_of("x1")));          // U = V
    CHECK(!pred(q.index_of("y1"), q.index_of("x1")));          // iso cover, same block
    CHECK(pred(q.index_of("d"), q.index_of("y1")));            // proper growth
    CHECK(pred(q.index_of("c"), q.index_of("x4")));
}

TEST_CASE("omega sets") {
    SUBCASE("P_J = G gives the identity rep") {
        auto scog = one_element_scog();
        auto om = omega_sets(scog, 0);
        CHECK(om.reps == std::vector<int>{0});
        CHECK(om.omega[0].count() == 1);
    }
    SUBCASE("all local groups equal and normal: Omega is everything") {
        auto g = ConcreteFiniteGroup::dihedral(3);
        auto rot = SubgroupHandle::generated(g, {1});  // normal
        SimpleComplexOfGroups::Data data;
        data.poset = validate_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        data.backend = Backend::Concrete;
        data.ambient = g;
        data.locals = {rot, rot, rot};
        auto scog = validate_scog(std::move(data));
        auto om = omega_sets(scog, 0);
        CHECK(om.reps.size() == 2);  // [G : <r>] cosets, every g qualifies
        for (const auto& mask : om.omega) CHECK(mask.count() == 3);
    }
    SUBCASE("amalgam scog: Omega of x1 is the A elements, split into blocks") {
        auto scog = figure_amalgam_scog(true);
        const auto& q = scog.poset();
        auto om = omega_sets(scog, q.index_of("x1"));
        // the ambient group is abelian, so conjugation is trivial and the
        // transporter consists of [G : A] = 4 cosets
        CHECK(om.reps.size() == 4);
        for (std::size_t i = 0; i < om.reps.size(); ++i) {
            CHECK(om.omega[i].count() == 6);  // all six A-labeled elements
            CHECK(om.blocks_in_omega[i].size() == 2);
        }
    }
    SUBCASE("order backend is rejected") {
        auto scog = figure_amalgam_scog(false);
        try {
            omega_sets(scog, 0);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InfiniteBackend);
        }
    }
}

TEST_CASE("barycentric subdivision scog") {
    auto scog = figure_amalgam_scog(true);
    auto sub = barycentric_scog(scog);
    SUBCASE("subdivision of a scog with relations is never thin") {
        CHECK(!is_thin(sub));
    }
    SUBCASE("local group of a chain is the group at its minimum") {
        const auto& q2 = sub.poset();
        int idx = q2.index_of("x1<y1<d");
        CHECK(handle_order(sub.local(idx)) == 2);
        int idx2 = q2.index_of("d<c");
        CHECK(handle_order(sub.local(idx2)) == 4);
    }
    SUBCASE("thinning the subdivision of a thin scog recovers it") {
        auto thin = thinning(scog);
        auto sub2 = barycentric_scog(thin);
        CHECK(!is_thin(sub2));
        auto back = thinning(sub2);
        // canonical map: element -> block of its singleton chain
        auto blocks2 = compute_blocks(sub2);
        std::vector<int> map(thin.poset().size());
        for (int i = 0; i < thin.poset().size(); ++i) {
            int singleton = sub2.poset().index_of(thin.poset().id(i));
            int blk = blocks2.block_of[singleton];
            map[i] = back.poset().index_of(blocks2.block_poset.id(blk));
        }
        CHECK(simply_isomorphic(thin, back, map));
    }
}
