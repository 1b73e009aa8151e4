#include "ellgrad/branching.hpp"
#include "ellgrad/rep.hpp"
#include "ellgrad/sweep.hpp"

#include <doctest.h>

using namespace ellgrad;

namespace {

std::vector<std::string> names(const std::vector<DominantWeight>& ws)
{
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.to_string());
    return out;
}

}  // namespace

TEST_CASE("branching fixtures")
{
    CHECK(names(branch(DominantWeight::parse(5, "1/2,1/2"))) ==
          std::vector<std::string>{"1/2,1/2", "1/2,-1/2"});
    CHECK(names(branch(DominantWeight::parse(5, "1,0"))) ==
          std::vector<std::string>{"1,0", "0,0"});
    CHECK(names(branch(DominantWeight::parse(4, "1,0"))) == std::vector<std::string>{"1", "0"});
    CHECK(names(branch(DominantWeight::parse(3, "3/2"))) ==
          std::vector<std::string>{"3/2", "1/2", "-1/2", "-3/2"});
}

TEST_CASE("branch lists are duplicate-free and dimension-exact")
{
    for (const auto& lambda : sweep_corpus({3, 9, Rat(5, 2), true})) {
        const auto gammas = branch(lambda);
        for (std::size_t a = 0; a < gammas.size(); ++a)
            for (std::size_t b = a + 1; b < gammas.size(); ++b)
                REQUIRE_FALSE(gammas[a] == gammas[b]);
        long long total = 0;
        for (const auto& g : gammas) total += weyl_dim(g);
        REQUIRE(total == weyl_dim(lambda));
    }
}

TEST_CASE("certificate construction fixtures")
{
    SUBCASE("so(5), (1,0)")
    {
        const auto t = ordered_targets(DominantWeight::parse(5, "1,0"));
        const auto c1 = certificate(t, {eps_minus(1)});
        CHECK(c1.gamma.to_string() == "1,0");
        CHECK(c1.verified);
        const auto c2 = certificate(t, {eps_plus(2)});
        CHECK(c2.gamma.to_string() == "0,0");
        CHECK(c2.verified);
    }
    SUBCASE("so(6), (2,2,-1): negative end rule")
    {
        const auto t = ordered_targets(DominantWeight::parse(6, "2,2,-1"));
        const auto cert = certificate(t, {eps_minus(3)});
        CHECK(cert.gamma.to_string() == "2,1");  // gamma_2 = -l_3
        CHECK(cert.verified);
    }
    SUBCASE("so(6), (1,1,0): merged member excludes both shifted targets")
    {
        const auto t = ordered_targets(DominantWeight::parse(6, "1,1,0"));
        const auto cert = certificate(t, {eps_plus(3)});
        CHECK(cert.gamma.to_string() == "1,0");
        CHECK(cert.verified);
        // lambda, lambda+e3, lambda-e3 must all have been checked.
        CHECK(cert.checks.size() == 3);
    }
    SUBCASE("zero-weight member refused")
    {
        const auto t = ordered_targets(DominantWeight::parse(5, "1,1"));
        CHECK_THROWS_AS(certificate(t, {eps_zero()}), std::domain_error);
    }
    SUBCASE("non-NE set rejected")
    {
        const auto t = ordered_targets(DominantWeight::parse(5, "1,0"));
        CHECK_THROWS_AS(certificate(t, {eps_plus(1)}), std::invalid_argument);
    }
}

TEST_CASE("negative controls")
{
    const auto t = ordered_targets(DominantWeight::parse(5, "1,0"));
    SUBCASE("forged gamma lies in a shifted target")
    {
        const auto forged = verify_certificate(t, DominantWeight::parse(4, "1,0"), {eps_plus(2)});
        CHECK_FALSE(forged.verified);
        REQUIRE(forged.failed_target.has_value());
        CHECK(*forged.failed_target == "1,1");  // gamma=(1,0) branches from (1,1)
    }
    SUBCASE("gamma outside branch(lambda)")
    {
        const auto forged = verify_certificate(t, DominantWeight::parse(4, "2,0"), {eps_minus(1)});
        CHECK_FALSE(forged.verified);
        REQUIRE(forged.failed_target.has_value());
        CHECK(*forged.failed_target == "1,0");  // the source check itself
    }
}

TEST_CASE("all zero-free NE members certify across a sweep")
{
    for (const auto& lambda : sweep_corpus({3, 8, Rat(5, 2), false})) {
        const auto t = ordered_targets(lambda);
        for (const auto& J : ne_sets(t)) {
            std::vector<RelevantWeight> weights;
            bool has_zero = false;
            for (const int i : J) {
                weights.push_back(t.by_index(i).epsilon);
                has_zero = has_zero || t.by_index(i).epsilon.is_zero();
            }
            if (has_zero) continue;
            REQUIRE(certificate(t, weights).verified);
        }
    }
}
