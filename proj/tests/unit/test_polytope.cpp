#include "ellgrad/polytope.hpp"
#include "ellgrad/sweep.hpp"

#include <doctest.h>

using namespace ellgrad;

TEST_CASE("inequality system cuts the expected interval, so(3) 1-forms")
{
    const auto t = ordered_targets(DominantWeight::parse(3, "1"));
    const auto model = inequality_system(t);
    REQUIRE(model.rows.size() == 3);
    // Feasible region is [0, 1]: rows equivalent to Q <= 4, Q >= 0, Q <= 1.
    for (const Rat q : {Rat(0), Rat(1, 2), Rat(1)}) {
        const QPoint point{{q}};
        for (const auto& row : model.rows) CHECK(row.satisfied_at(point));
    }
    for (const Rat q : {Rat(-1, 10), Rat(11, 10), Rat(5)}) {
        const QPoint point{{q}};
        bool all = true;
        for (const auto& row : model.rows) all = all && row.satisfied_at(point);
        CHECK_FALSE(all);
    }
}

TEST_CASE("vertex enumeration fixtures")
{
    const auto t3 = ordered_targets(DominantWeight::parse(3, "1"));
    const auto v3 = enumerate_vertices(inequality_system(t3));
    REQUIRE(v3.vertices.size() == 2);
    CHECK(v3.vertices[0].point.coords == std::vector<Rat>{Rat(0)});
    CHECK(v3.vertices[1].point.coords == std::vector<Rat>{Rat(1)});

    const auto t5 = ordered_targets(DominantWeight::parse(5, "1,0"));
    const auto v5 = enumerate_vertices(inequality_system(t5));
    REQUIRE(v5.vertices.size() == 2);
    CHECK(v5.vertices[0].point.coords == std::vector<Rat>{Rat(1)});
    CHECK(v5.vertices[1].point.coords == std::vector<Rat>{Rat(4)});

    const auto t2 = ordered_targets(DominantWeight::parse(5, "1/2,1/2"));
    const auto v2 = enumerate_vertices(inequality_system(t2));
    REQUIRE(v2.vertices.size() == 1);  // 0-dimensional: the empty point
    CHECK(v2.vertices[0].point.coords.empty());
}

TEST_CASE("enumeration cap refusal")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "2,1"));  // ell-1 = 2
    CHECK_THROWS_AS(enumerate_vertices(inequality_system(t), 1), std::runtime_error);
}

TEST_CASE("vertex inclusion fixtures")
{
    SUBCASE("so(3), 1-forms: equality")
    {
        const auto r = verify_vertex_inclusion(ordered_targets(DominantWeight::parse(3, "1")));
        CHECK(r.inclusion);
        CHECK(r.equality);
    }
    SUBCASE("so(6), (1,1,0): merged summand")
    {
        const auto r = verify_vertex_inclusion(ordered_targets(DominantWeight::parse(6, "1,1,0")));
        CHECK(r.inclusion);
        CHECK(r.equality);
    }
    SUBCASE("so(5), (3/2,3/2): exceptional case, equality status recorded")
    {
        const auto r = verify_vertex_inclusion(ordered_targets(DominantWeight::parse(5, "3/2,3/2")));
        CHECK(r.inclusion);
        CHECK(r.exceptional_config);
        CHECK(r.infeasible_ne.empty());  // here every Q^J is in fact feasible
    }
    SUBCASE("so(7), (1,0,0): two NE points, both vertices")
    {
        const auto t = ordered_targets(DominantWeight::parse(7, "1,0,0"));
        REQUIRE(t.N() == 3);
        const auto r = verify_vertex_inclusion(t);
        CHECK(r.inclusion);
        CHECK(r.equality);
        CHECK(r.matched.size() == 2);
    }
}

TEST_CASE("active rows at NE vertices are exactly J")
{
    for (const auto& lam : {std::pair<int, std::string>{5, "2,1"}, {6, "2,1,-1"}, {7, "2,1,1"}}) {
        const auto t = ordered_targets(DominantWeight::parse(lam.first, lam.second));
        const auto verts = enumerate_vertices(inequality_system(t));
        const auto ne = ne_sets(t);
        for (const auto& v : verts.vertices) {
            bool matched = false;
            for (const auto& J : ne)
                if (vertex_coords(t, J).coords == v.point.coords) {
                    CHECK(v.active == J);
                    matched = true;
                }
            CHECK(matched);
        }
    }
}

TEST_CASE("sign witness outside NE")
{
    SUBCASE("so(7), (1,1,0)")
    {
        const auto t = ordered_targets(DominantWeight::parse(7, "1,1,0"));
        REQUIRE(t.ell() >= 2);
        const auto ne = ne_sets(t);
        // J taking both members of one pair is never in NE.
        const IndexSet J = {2, t.N()};
        REQUIRE(std::find(ne.begin(), ne.end(), J) == ne.end());
        const int i = sign_witness(t, J);
        CHECK(pi_at_vertex(t, i, J) < 0);
    }
    SUBCASE("so(5), (2,1), all non-NE subsets")
    {
        const auto t = ordered_targets(DominantWeight::parse(5, "2,1"));
        const auto ne = ne_sets(t);
        for (int a = 1; a <= t.N(); ++a)
            for (int b = a + 1; b <= t.N(); ++b) {
                const IndexSet J = {a, b};
                if (std::find(ne.begin(), ne.end(), J) != ne.end()) continue;
                const int i = sign_witness(t, J);
                CHECK(pi_at_vertex(t, i, J) < 0);
            }
    }
    SUBCASE("membership precondition")
    {
        const auto t = ordered_targets(DominantWeight::parse(5, "2,1"));
        CHECK_THROWS_AS(sign_witness(t, {2, 3}), std::invalid_argument);  // {2,3} is in NE
    }
}

TEST_CASE("coordinate extremes carry multiplier certificates")
{
    for (const auto& lambda : sweep_corpus({5, 7, Rat(2), false})) {
        const auto t = ordered_targets(lambda);
        const auto model = inequality_system(t);
        const auto verts = enumerate_vertices(model);
        REQUIRE(!verts.vertices.empty());
        for (const auto& db : coordinate_bounds(model, verts)) CHECK(db.certified);
    }
}
