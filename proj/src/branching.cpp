#include "ellgrad/branching.hpp"

#include "ellgrad/kato.hpp"

#include <algorithm>
#include <functional>

namespace ellgrad {

bool branches_to(const DominantWeight& lambda, const DominantWeight& gamma)
{
    const int n = lambda.n();
    if (gamma.n() != n - 1) throw std::invalid_argument("branches_to: gamma must live in so(n-1)");
    if (lambda.integrality() != gamma.integrality()) return false;
    const int m = lambda.rank();
    if (n % 2 == 1) {
        // so(2m+1) -> so(2m): l1 >= g1 >= l2 >= ... >= g_{m-1} >= l_m >= |g_m|
        for (int i = 1; i <= m - 1; ++i)
            if (!(lambda.coord(i) >= gamma.coord(i) && gamma.coord(i) >= lambda.coord(i + 1)))
                return false;
        Rat gm = gamma.coord(m);
        if (gm < 0) gm = -gm;
        return lambda.coord(m) >= gm;
    }
    // so(2m) -> so(2m-1): l1 >= g1 >= l2 >= ... >= g_{m-1} >= |l_m|
    for (int i = 1; i <= m - 2; ++i)
        if (!(lambda.coord(i) >= gamma.coord(i) && gamma.coord(i) >= lambda.coord(i + 1)))
            return false;
    Rat lm = lambda.coord(m);
    if (lm < 0) lm = -lm;
    return lambda.coord(m - 1) >= gamma.coord(m - 1) && gamma.coord(m - 1) >= lm;
}

std::vector<DominantWeight> branch(const DominantWeight& lambda)
{
    const int n = lambda.n();
    const int m = lambda.rank();
    const int gm_rank = (n - 1) / 2;  // rank of so(n-1)

    std::vector<std::pair<Rat, Rat>> ranges;  // [lo, hi] per gamma coordinate
    if (n % 2 == 1) {
        for (int i = 1; i <= m - 1; ++i) ranges.emplace_back(lambda.coord(i + 1), lambda.coord(i));
        ranges.emplace_back(-lambda.coord(m), lambda.coord(m));
    } else {
        for (int i = 1; i <= m - 2; ++i) ranges.emplace_back(lambda.coord(i + 1), lambda.coord(i));
        Rat lm = lambda.coord(m);
        if (lm < 0) lm = -lm;
        ranges.emplace_back(lm, lambda.coord(m - 1));
    }

    std::vector<DominantWeight> out;
    std::vector<Rat> gamma(gm_rank);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == gm_rank) {
            out.emplace_back(n - 1, gamma);
            return;
        }
        for (Rat v = ranges[pos].second; v >= ranges[pos].first; v -= 1) {
            gamma[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const DominantWeight& a, const DominantWeight& b) {
        return a.coords() > b.coords();
    });
    return out;
}

namespace {

bool weight_in(const std::vector<RelevantWeight>& set, const RelevantWeight& w)
{
    return std::find(set.begin(), set.end(), w) != set.end();
}

}  // namespace

Certificate certificate(const TargetDecomposition& t, const std::vector<RelevantWeight>& J)
{
    const DominantWeight& lambda = t.lambda();
    const int n = lambda.n();
    const int m = lambda.rank();

    for (const auto& w : J)
        if (w.is_zero())
            throw std::domain_error(
                "certificate: no branching witness exists for sets containing the zero weight");

    // J must pick exactly one member from each two-weight box.
    {
        IndexSet idx;
        for (const auto& w : J) idx.push_back(t.index_of(w));
        std::sort(idx.begin(), idx.end());
        const auto ne = ne_sets(t);
        if (std::find(ne.begin(), ne.end(), idx) == ne.end())
            throw std::invalid_argument("certificate: J is not a member of NE");
    }

    std::vector<Rat> gamma;
    const int gm_rank = (n - 1) / 2;
    if (n % 2 == 1) {
        for (int i = 1; i <= m - 1; ++i) {
            if (weight_in(J, eps_plus(i + 1)))
                gamma.push_back(lambda.coord(i + 1));
            else
                gamma.push_back(lambda.coord(i));  // l_i = l_{i+1} or -e_i in J
        }
        gamma.push_back(lambda.coord(m));
    } else {
        for (int i = 1; i <= m - 2; ++i) {
            if (weight_in(J, eps_plus(i + 1)))
                gamma.push_back(lambda.coord(i + 1));
            else
                gamma.push_back(lambda.coord(i));
        }
        if (weight_in(J, eps_plus(m)))  // includes the merged summand (l_m = 0)
            gamma.push_back(lambda.coord(m));
        else if (weight_in(J, eps_minus(m)))
            gamma.push_back(-lambda.coord(m));
        else
            gamma.push_back(lambda.coord(m - 1));  // last box inactive or -e_{m-1} in J
    }
    if (static_cast<int>(gamma.size()) != gm_rank) throw std::logic_error("certificate rank mismatch");

    return verify_certificate(t, DominantWeight(n - 1, std::move(gamma)), J);
}

Certificate verify_certificate(const TargetDecomposition& t, const DominantWeight& gamma,
                               const std::vector<RelevantWeight>& J)
{
    const DominantWeight& lambda = t.lambda();
    Certificate cert{lambda, gamma, J, true, {}, std::nullopt};

    const bool in_source = branches_to(lambda, gamma);
    cert.checks.push_back({lambda.to_string(), true, in_source});
    if (!in_source) {
        cert.verified = false;
        cert.failed_target = lambda.to_string();
    }

    auto check_target = [&](const RelevantWeight& eps) {
        const auto shifted = lambda.shifted_coords(eps);
        if (!DominantWeight::is_dominant(lambda.n(), shifted))
            throw std::invalid_argument("certificate target " + eps.name() + " is not relevant");
        const DominantWeight target(lambda.n(), shifted);
        const bool occurs = branches_to(target, gamma);
        cert.checks.push_back({target.to_string(), false, !occurs});
        if (occurs) {
            cert.verified = false;
            if (!cert.failed_target) cert.failed_target = target.to_string();
        }
    };
    for (const auto& eps : J) {
        const int idx = t.index_of(eps);
        if (t.by_index(idx).merged) {
            check_target(eps_plus(eps.index));
            check_target(eps_minus(eps.index));
        } else {
            check_target(eps);
        }
    }
    return cert;
}

}  // namespace ellgrad
