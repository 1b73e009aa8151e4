#include "ellgrad/kato.hpp"
#include "ellgrad/sweep.hpp"

#include <doctest.h>

#include <random>

using namespace ellgrad;

TEST_CASE("ne_sets shapes")
{
    const auto t3 = ordered_targets(DominantWeight::parse(3, "1"));  // N=3, ell=2
    CHECK(ne_sets(t3) == std::vector<IndexSet>{{2}, {3}});

    const auto t2 = ordered_targets(DominantWeight::parse(5, "1/2,1/2"));  // N=2, ell=1
    CHECK(ne_sets(t2) == std::vector<IndexSet>{{}});

    const auto t5 = ordered_targets(DominantWeight::parse(5, "2,1"));  // N=5, ell=3
    CHECK(ne_sets(t5) == std::vector<IndexSet>{{2, 3}, {2, 5}, {3, 4}, {4, 5}});
    for (const auto& J : ne_sets(t5)) CHECK(J.size() == 2);
}

TEST_CASE("vertex coordinates are symmetric functions of the squares")
{
    const auto t3 = ordered_targets(DominantWeight::parse(3, "1"));
    CHECK(vertex_coords(t3, {2}).coords == std::vector<Rat>{Rat(0)});
    CHECK(vertex_coords(t3, {3}).coords == std::vector<Rat>{Rat(1)});

    const auto t5 = ordered_targets(DominantWeight::parse(5, "1,0"));
    CHECK(vertex_coords(t5, {3}).coords == std::vector<Rat>{Rat(4)});

    const auto t52 = ordered_targets(DominantWeight::parse(5, "2,1"));  // wtildes 4,2,0,-1,-3
    const auto q = vertex_coords(t52, {2, 5});  // squares {4, 9}
    CHECK(q.coords == std::vector<Rat>{Rat(13), Rat(36)});
}

TEST_CASE("pi as affine functions, so(3) 1-forms")
{
    const auto t = ordered_targets(DominantWeight::parse(3, "1"));
    const QPoint q0{{Rat(0)}};
    CHECK(pi_value(t, 1, q0) == Rat(2, 3));
    CHECK(pi_value(t, 2, q0) == 0);
    CHECK(pi_value(t, 3, q0) == Rat(1, 3));
    const QPoint q{{Rat(5, 7)}};
    CHECK(pi_value(t, 1, q) == (Rat(4) - Rat(5, 7)) / 6);
    CHECK(pi_value(t, 2, q) == Rat(5, 7) / 2);
    CHECK(pi_value(t, 3, q) == (Rat(1) - Rat(5, 7)) / 3);
}

TEST_CASE("constant pi for N=2")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "1/2,1/2"));
    const QPoint empty;
    CHECK(pi_value(t, 1, empty) == Rat(4, 5));
    CHECK(pi_value(t, 2, empty) == Rat(1, 5));
}

TEST_CASE("closed vertex values match the affine forms")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "1,0"));
    CHECK(pi_at_vertex(t, 1, {2}) == Rat(4, 5));
    CHECK(pi_at_vertex(t, 2, {2}) == 0);
    CHECK(pi_at_vertex(t, 3, {2}) == Rat(1, 5));
    CHECK(pi_at_vertex(t, 1, {3}) == Rat(1, 2));
    CHECK(pi_at_vertex(t, 2, {3}) == Rat(1, 2));
    CHECK(pi_at_vertex(t, 3, {3}) == 0);
}

TEST_CASE("partition of unity at random rational points")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 20);
    for (const auto& lam : {std::pair<int, std::string>{5, "2,1"}, {7, "3,1,0"}, {6, "2,1,-1"},
                            {6, "1,1,0"}, {5, "3/2,3/2"}, {4, "5/2,1/2"}}) {
        const auto t = ordered_targets(DominantWeight::parse(lam.first, lam.second));
        for (int trial = 0; trial < 100; ++trial) {
            QPoint q;
            for (int k = 0; k < t.ell() - 1; ++k) q.coords.emplace_back(num(rng), den(rng));
            Rat sum = 0;
            for (int j = 1; j <= t.N(); ++j) sum += pi_value(t, j, q);
            REQUIRE(sum == 1);
        }
    }
}

TEST_CASE("kato bound fixtures")
{
    const auto t3 = ordered_targets(DominantWeight::parse(3, "1"));
    CHECK(kato_bound(t3, {2, 3}).c_squared == Rat(2, 3));

    const auto t5 = ordered_targets(DominantWeight::parse(5, "1,0"));
    CHECK(kato_bound(t5, {2, 3}).c_squared == Rat(4, 5));

    const auto td = ordered_targets(DominantWeight::parse(5, "1/2,1/2"));
    CHECK(kato_bound(td, {2}).c_squared == Rat(4, 5));  // Dirac
    CHECK(kato_bound(td, {1}).c_squared == Rat(1, 5));  // twistor

    const auto inconclusive = kato_bound(t3, {2});
    CHECK(inconclusive.c_squared == 1);
    CHECK_FALSE(inconclusive.elliptic_by_bound);
    CHECK(inconclusive.optimal);  // integral lambda: no exceptional caveat
}

TEST_CASE("kato bound in the exceptional configuration")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "3/2,3/2"));
    const auto zero_summand = kato_bound(t, {2});
    CHECK(zero_summand.c_squared == 1);
    CHECK(zero_summand.exceptional_config);
    CHECK_FALSE(zero_summand.optimal);  // the only extremizer contains ell
    CHECK(zero_summand.extremizers == std::vector<IndexSet>{{2}});

    const auto top = kato_bound(t, {1});
    CHECK(top.c_squared == Rat(3, 7));
    CHECK(top.optimal);  // extremizer {3} avoids ell

    const auto certified_non_elliptic = kato_bound(t, {3});
    CHECK(certified_non_elliptic.c_squared == 1);
    CHECK(certified_non_elliptic.optimal);
}

TEST_CASE("kato bound argument errors")
{
    const auto t = ordered_targets(DominantWeight::parse(3, "1"));
    CHECK_THROWS_AS(kato_bound(t, {}), std::invalid_argument);
    CHECK_THROWS_AS(kato_bound(t, {4}), std::invalid_argument);
    CHECK_THROWS_AS(pi_value(t, 0, QPoint{{Rat(0)}}), std::invalid_argument);
}

TEST_CASE("bound hits 1 on subsets of NE members across a small sweep")
{
    for (const auto& lambda : sweep_corpus({3, 7, Rat(2), false})) {
        const auto t = ordered_targets(lambda);
        for (const auto& J : ne_sets(t)) {
            if (J.empty()) continue;
            CHECK(kato_bound(t, J).c_squared == 1);
        }
        CHECK(kato_bound(t, {1}).c_squared < 1);
    }
}
