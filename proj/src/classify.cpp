#include "ellgrad/classify.hpp"

#include <algorithm>

namespace ellgrad {

std::string provenance_name(Provenance p)
{
    switch (p) {
        case Provenance::theorem: return "theorem";
        case Provenance::kato_bound: return "kato-bound";
        case Provenance::certificate: return "certificate";
        case Provenance::oracle: return "oracle";
    }
    return "?";
}

static void require_nonzero(const TargetDecomposition& t, const char* what)
{
    if (t.lambda().is_zero())
        throw std::invalid_argument(std::string(what) + " requires lambda != 0");
}

std::vector<IndexSet> minimal_elliptic_sets(const TargetDecomposition& t)
{
    require_nonzero(t, "minimal_elliptic_sets");
    const int N = t.N();
    const int ell = t.ell();
    const bool n_even_count = N == 2 * ell;
    const bool half = t.lambda().integrality() == Integrality::half_integral;
    const Rat& lm = t.lambda().coord(t.lambda().rank());

    std::vector<IndexSet> out;
    out.push_back({1});
    if (n_even_count && lm != 0) out.push_back({ell + 1});
    if (!n_even_count && half && ell >= 2) out.push_back({ell});
    for (int i = 2; i <= ell - 1; ++i) out.push_back({i, N + 2 - i});
    if (ell >= 2) {
        if (n_even_count)
            out.push_back({ell, ell + 2});
        else if (!half)
            out.push_back({ell, ell + 1});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSet> maximal_non_elliptic_sets(const TargetDecomposition& t)
{
    require_nonzero(t, "maximal_non_elliptic_sets");
    std::vector<IndexSet> out = ne_sets(t);
    if (t.exceptional_config()) {
        const int ell = t.ell();
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [ell](const IndexSet& J) { return contains(J, ell); }),
                  out.end());
    }
    return out;
}

EllipticityVerdict is_elliptic(const TargetDecomposition& t, const IndexSet& I)
{
    if (I.empty()) throw std::invalid_argument("is_elliptic: I must be nonempty");
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k] < 1 || I[k] > t.N()) throw std::invalid_argument("is_elliptic: index out of range");
        if (k > 0 && I[k] <= I[k - 1])
            throw std::invalid_argument("is_elliptic: indices must be strictly ascending");
    }
    EllipticityVerdict v;
    v.I = I;
    v.provenance = Provenance::theorem;
    v.strongly_elliptic_label = (I.size() == 1 && I[0] == 1);
    v.elliptic = true;
    for (const auto& J : maximal_non_elliptic_sets(t))
        if (is_subset(I, J)) {
            v.elliptic = false;
            break;
        }
    return v;
}

EllipticityVerdict complement_of_top(const TargetDecomposition& t)
{
    require_nonzero(t, "complement_of_top");
    if (t.N() < 2) throw std::invalid_argument("complement_of_top needs N >= 2");
    IndexSet rest;
    for (int i = 2; i <= t.N(); ++i) rest.push_back(i);
    return is_elliptic(t, rest);
}

std::vector<std::string> weight_names(const TargetDecomposition& t, const IndexSet& I)
{
    std::vector<std::string> out;
    out.reserve(I.size());
    for (const int i : I) out.push_back(t.by_index(i).epsilon_name());
    return out;
}

}  // namespace ellgrad
