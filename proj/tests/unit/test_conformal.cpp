#include "ellgrad/conformal.hpp"
#include "ellgrad/sweep.hpp"

#include <doctest.h>

using namespace ellgrad;

TEST_CASE("translated weight formulas")
{
    const auto l31 = DominantWeight::parse(3, "1");
    CHECK(translated_weight(l31, eps_plus(1)) == 2);
    CHECK(translated_weight(l31, eps_zero()) == 0);
    CHECK(translated_weight(l31, eps_minus(1)) == -1);

    const auto l510 = DominantWeight::parse(5, "1,0");
    CHECK(translated_weight(l510, eps_plus(1)) == 3);
    CHECK(translated_weight(l510, eps_plus(2)) == 1);
    CHECK(translated_weight(l510, eps_minus(1)) == -2);

    const auto spin5 = DominantWeight::parse(5, "1/2,1/2");
    CHECK(translated_weight(spin5, eps_plus(1)) == Rat(5, 2));
    CHECK(translated_weight(spin5, eps_zero()) == 0);
}

TEST_CASE("ordered targets for 1-forms on so(3)")
{
    const auto t = ordered_targets(DominantWeight::parse(3, "1"));
    REQUIRE(t.N() == 3);
    CHECK(t.ell() == 2);
    CHECK(t.by_index(1).epsilon_name() == "+e1");
    CHECK(t.by_index(1).wtilde == 2);
    CHECK(t.by_index(2).epsilon_name() == "0");
    CHECK(t.by_index(2).wtilde == 0);
    CHECK(t.by_index(3).epsilon_name() == "-e1");
    CHECK(t.by_index(3).wtilde == -1);
}

TEST_CASE("ordered targets for the odd spinor")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "1/2,1/2"));
    REQUIRE(t.N() == 2);
    CHECK(t.ell() == 1);
    CHECK(t.by_index(1).wtilde == Rat(5, 2));
    CHECK(t.by_index(2).wtilde == 0);
}

TEST_CASE("merged summand on so(6), lambda=(1,1,0)")
{
    const auto t = ordered_targets(DominantWeight::parse(6, "1,1,0"));
    REQUIRE(t.N() == 3);
    const auto& mid = t.by_index(2);
    CHECK(mid.merged);
    CHECK(mid.epsilon_name() == "+-e3");
    CHECK(mid.wtilde == Rat(1, 2));
    CHECK(t.index_of(eps_plus(3)) == 2);
    CHECK(t.index_of(eps_minus(3)) == 2);
    CHECK_FALSE(t.exceptional_config());
}

TEST_CASE("exceptional configuration detection")
{
    CHECK(ordered_targets(DominantWeight::parse(5, "3/2,3/2")).exceptional_config());
    CHECK_FALSE(ordered_targets(DominantWeight::parse(5, "1,1")).exceptional_config());
    CHECK_FALSE(ordered_targets(DominantWeight::parse(5, "1/2,1/2")).exceptional_config());
}

TEST_CASE("cancellation identity")
{
    CHECK(cancellation_check(DominantWeight::parse(5, "1,1"), 1));
    CHECK(cancellation_check(DominantWeight::parse(7, "2,2,0"), 1));
    CHECK(cancellation_check(DominantWeight::parse(5, "1,0"), 1));  // vacuous
    for (const auto& lambda : sweep_corpus({3, 8, Rat(5, 2), false}))
        for (int i = 1; i < lambda.rank(); ++i) CHECK(cancellation_check(lambda, i));
}

TEST_CASE("strictly decreasing translated weights across the sweep")
{
    for (const auto& lambda : sweep_corpus({3, 9, Rat(3), false})) {
        const auto t = ordered_targets(lambda);
        for (int i = 1; i < t.N(); ++i) CHECK(t.by_index(i).wtilde > t.by_index(i + 1).wtilde);
        CHECK(t.by_index(1).epsilon == eps_plus(1));
        CHECK(t.by_index(1).wtilde > Rat(1, 2));
    }
}
