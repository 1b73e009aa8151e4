#include "ellgrad/kato.hpp"

#include <algorithm>

namespace ellgrad {

bool contains(const IndexSet& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

bool is_subset(const IndexSet& a, const IndexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet complement_set(const IndexSet& s, int N)
{
    IndexSet out;
    for (int i = 1; i <= N; ++i)
        if (!contains(s, i)) out.push_back(i);
    return out;
}

static void validate_index_set(const TargetDecomposition& t, const IndexSet& s, const char* what)
{
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 1 || s[k] > t.N())
            throw std::invalid_argument(std::string(what) + ": index out of range 1..N");
        if (k > 0 && s[k] <= s[k - 1])
            throw std::invalid_argument(std::string(what) + ": indices must be strictly ascending");
    }
}

std::vector<IndexSet> ne_sets(const TargetDecomposition& t)
{
    const int N = t.N();
    const int ell = t.ell();
    std::vector<IndexSet> out;
    const int pairs = ell - 1;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        IndexSet J;
        for (int p = 0; p < pairs; ++p) {
            const int i = p + 2;
            J.push_back((mask >> p) & 1 ? N + 2 - i : i);
        }
        std::sort(J.begin(), J.end());
        out.push_back(std::move(J));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QPoint vertex_coords(const TargetDecomposition& t, const IndexSet& J)
{
    validate_index_set(t, J, "vertex_coords");
    const int ell = t.ell();
    if (static_cast<int>(J.size()) != ell - 1)
        throw std::invalid_argument("vertex_coords: |J| must be ell-1");
    // Q_k = sigma_{k-1} of the squares, via the coefficient recursion of
    // prod_{j in J} (x - w_j^2).
    std::vector<Rat> sigma(ell, Rat(0));
    sigma[0] = 1;
    std::size_t used = 0;
    for (const int j : J) {
        const Rat w2 = t.by_index(j).wtilde * t.by_index(j).wtilde;
        ++used;
        for (std::size_t k = used; k >= 1; --k) sigma[k] += w2 * sigma[k - 1];
    }
    QPoint q;
    for (int k = 2; k <= ell; ++k) q.coords.push_back(sigma[k - 1]);
    return q;
}

Rat pi_value(const TargetDecomposition& t, int j, const QPoint& q)
{
    const int N = t.N();
    const int ell = t.ell();
    if (j < 1 || j > N) throw std::invalid_argument("pi_value: summand index out of range");
    if (static_cast<int>(q.coords.size()) != ell - 1)
        throw std::invalid_argument("pi_value: Q must have ell-1 coordinates");

    const Rat& wj = t.by_index(j).wtilde;
    const Rat wj2 = wj * wj;
    std::vector<Rat> pow2(ell, Rat(1));  // pow2[d] = wj^(2d)
    for (int d = 1; d < ell; ++d) pow2[d] = pow2[d - 1] * wj2;

    Rat numerator = pow2[ell - 1];
    for (int k = 2; k <= ell; ++k) {
        const Rat term = pow2[ell - k] * q.coords[k - 2];
        numerator += (k % 2 == 0) ? -term : term;  // minus (-1)^k w^(2(ell-k)) Q_k
    }
    Rat denominator = 1;
    for (int k = 1; k <= N; ++k)
        if (k != j) denominator *= wj - t.by_index(k).wtilde;

    Rat value = numerator / denominator;
    if (N % 2 == 0) value *= wj - Rat(1, 2);
    return value;
}

Rat pi_at_vertex(const TargetDecomposition& t, int j, const IndexSet& J)
{
    const int N = t.N();
    if (j < 1 || j > N) throw std::invalid_argument("pi_at_vertex: summand index out of range");
    validate_index_set(t, J, "pi_at_vertex");
    if (static_cast<int>(J.size()) != t.ell() - 1)
        throw std::invalid_argument("pi_at_vertex: |J| must be ell-1");
    if (contains(J, j)) return Rat(0);

    const Rat& wj = t.by_index(j).wtilde;
    Rat numerator = 1;
    for (const int k : J) numerator *= wj + t.by_index(k).wtilde;
    Rat denominator = 1;
    for (int k = 1; k <= N; ++k)
        if (k != j && !contains(J, k)) denominator *= wj - t.by_index(k).wtilde;

    Rat value = numerator / denominator;
    if (N % 2 == 0) value *= wj - Rat(1, 2);
    return value;
}

KatoReport kato_bound(const TargetDecomposition& t, const IndexSet& I)
{
    if (I.empty()) throw std::invalid_argument("kato_bound: I must be nonempty");
    validate_index_set(t, I, "kato_bound");

    KatoReport report;
    report.I = I;
    report.exceptional_config = t.exceptional_config();

    const auto ne = ne_sets(t);
    bool first = true;
    Rat best_max, best_min;
    std::vector<IndexSet> extremizers;
    for (const auto& J : ne) {
        Rat sum_i = 0, sum_ihat = 0;  // over I\J resp. complement(I)\J
        for (int i = 1; i <= t.N(); ++i) {
            if (contains(J, i)) continue;
            const Rat v = pi_at_vertex(t, i, J);
            (contains(I, i) ? sum_i : sum_ihat) += v;
        }
        if (sum_i + sum_ihat != 1)
            throw std::logic_error("projection norms at a vertex must sum to 1");
        if (first || sum_ihat > best_max) {
            best_max = sum_ihat;
            extremizers.clear();
        }
        if (sum_ihat == best_max) extremizers.push_back(J);
        if (first || sum_i < best_min) best_min = sum_i;
        first = false;
    }
    if (best_max != 1 - best_min)
        throw std::logic_error("max form and 1 - min form of the bound disagree");

    report.c_squared = best_max;
    report.extremizers = std::move(extremizers);
    report.elliptic_by_bound = report.c_squared < 1;
    if (report.exceptional_config) {
        const int ell = t.ell();
        report.optimal = std::any_of(report.extremizers.begin(), report.extremizers.end(),
                                     [ell](const IndexSet& J) { return !contains(J, ell); });
    }
    return report;
}

}  // namespace ellgrad
