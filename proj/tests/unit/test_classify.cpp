#include "ellgrad/classify.hpp"
#include "ellgrad/sweep.hpp"
#include "ellgrad/verify.hpp"

#include <doctest.h>

using namespace ellgrad;

TEST_CASE("minimal elliptic sets, so(3) 1-forms")
{
    const auto t = ordered_targets(DominantWeight::parse(3, "1"));
    CHECK(minimal_elliptic_sets(t) == std::vector<IndexSet>{{1}, {2, 3}});
    CHECK(weight_names(t, {2, 3}) == std::vector<std::string>{"0", "-e1"});
    CHECK(maximal_non_elliptic_sets(t) == std::vector<IndexSet>{{2}, {3}});
}

TEST_CASE("minimal elliptic sets, odd spinor")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "1/2,1/2"));
    CHECK(minimal_elliptic_sets(t) == std::vector<IndexSet>{{1}, {2}});
    CHECK(maximal_non_elliptic_sets(t) == std::vector<IndexSet>{{}});
}

TEST_CASE("minimal elliptic sets, exceptional carrier (3/2,3/2)")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "3/2,3/2"));
    CHECK(minimal_elliptic_sets(t) == std::vector<IndexSet>{{1}, {2}});
    CHECK(maximal_non_elliptic_sets(t) == std::vector<IndexSet>{{3}});
    CHECK(weight_names(t, {3}) == std::vector<std::string>{"-e2"});
}

TEST_CASE("minimal elliptic sets, so(6) (2,1,-1)")
{
    // The theorem's {-e2,-e3} family is vacuous here: -e2 and -e3 are not
    // relevant for this lambda, so three minimal sets remain.
    const auto t = ordered_targets(DominantWeight::parse(6, "2,1,-1"));
    REQUIRE(t.N() == 4);
    CHECK(minimal_elliptic_sets(t) == std::vector<IndexSet>{{1}, {2, 4}, {3}});
    CHECK(weight_names(t, {3}) == std::vector<std::string>{"+e3"});
    CHECK(weight_names(t, {2, 4}) == std::vector<std::string>{"+e2", "-e1"});
}

TEST_CASE("merged case keeps one middle pair, so(6) (1,1,0)")
{
    const auto t = ordered_targets(DominantWeight::parse(6, "1,1,0"));
    CHECK(minimal_elliptic_sets(t) == std::vector<IndexSet>{{1}, {2, 3}});
    CHECK(weight_names(t, {2, 3}) == std::vector<std::string>{"+-e3", "-e2"});
}

TEST_CASE("is_elliptic via the subset rule")
{
    const auto t3 = ordered_targets(DominantWeight::parse(3, "1"));
    CHECK_FALSE(is_elliptic(t3, {2}).elliptic);
    CHECK(is_elliptic(t3, {2, 3}).elliptic);
    CHECK(is_elliptic(t3, {1}).strongly_elliptic_label);
    CHECK_FALSE(is_elliptic(t3, {2, 3}).strongly_elliptic_label);
    CHECK(is_elliptic(t3, {1, 2, 3}).elliptic);  // rough Laplacian

    const auto t5 = ordered_targets(DominantWeight::parse(5, "1,0"));
    CHECK(is_elliptic(t5, {2, 3}).elliptic);

    CHECK_THROWS_AS(is_elliptic(t3, {}), std::invalid_argument);
    CHECK_THROWS_AS(is_elliptic(t3, {5}), std::invalid_argument);
}

TEST_CASE("complement of the top gradient is elliptic")
{
    for (const auto& lam : {std::pair<int, std::string>{3, "1"}, {5, "1/2,1/2"}, {7, "1,1,0"},
                            {6, "2,1,-1"}, {5, "3/2,3/2"}}) {
        const auto t = ordered_targets(DominantWeight::parse(lam.first, lam.second));
        CHECK(complement_of_top(t).elliptic);
    }
}

TEST_CASE("monotonicity of ellipticity under inclusion")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "2,1"));
    for (unsigned mask = 1; mask < (1u << t.N()); ++mask) {
        IndexSet I;
        for (int i = 0; i < t.N(); ++i)
            if (mask & (1u << i)) I.push_back(i + 1);
        if (!is_elliptic(t, I).elliptic) continue;
        for (int extra = 1; extra <= t.N(); ++extra) {
            if (contains(I, extra)) continue;
            IndexSet bigger = I;
            bigger.push_back(extra);
            std::sort(bigger.begin(), bigger.end());
            CHECK(is_elliptic(t, bigger).elliptic);
        }
    }
}

TEST_CASE("theorem families match brute-force minimality across a sweep")
{
    for (const auto& lambda : sweep_corpus({3, 8, Rat(5, 2), false})) {
        const auto t = ordered_targets(lambda);
        REQUIRE(minimal_elliptic_sets(t) == brute_force_minimal_elliptic(t));
    }
}
