#include "ellgrad/conformal.hpp"

#include <algorithm>

namespace ellgrad {

Rat translated_weight(const DominantWeight& lambda, const RelevantWeight& eps)
{
    if (eps.is_zero()) return Rat(0);
    const int n = lambda.n();
    const int i = eps.index;
    if (i < 1 || i > lambda.rank()) throw std::out_of_range("epsilon index");
    if (eps.sign > 0) return lambda.coord(i) - i + Rat(n + 1, 2);
    return -lambda.coord(i) + i - Rat(n - 1, 2);
}

std::string TargetSummand::epsilon_name() const
{
    if (merged) return "+-e" + std::to_string(epsilon.index);
    return epsilon.name();
}

TargetDecomposition::TargetDecomposition(DominantWeight lambda) : lambda_(std::move(lambda))
{
    const int m = lambda_.rank();
    const bool even = lambda_.n() % 2 == 0;
    const bool merge = even && m >= 2 && lambda_.coord(m) == 0 && lambda_.coord(m - 1) > 0;

    for (const auto& eps : relevant_weights(lambda_)) {
        if (merge && eps.index == m) {
            if (eps.sign < 0) continue;  // folded into the +e_m entry
            summands_.push_back({eps, translated_weight(lambda_, eps), 0, true});
            if (translated_weight(lambda_, eps_minus(m)) != summands_.back().wtilde)
                throw std::logic_error("merged summands must share their translated weight");
        } else {
            summands_.push_back({eps, translated_weight(lambda_, eps), 0, false});
        }
    }
    std::stable_sort(summands_.begin(), summands_.end(),
                     [](const TargetSummand& a, const TargetSummand& b) { return a.wtilde > b.wtilde; });
    for (std::size_t k = 0; k + 1 < summands_.size(); ++k)
        if (summands_[k].wtilde == summands_[k + 1].wtilde)
            throw std::logic_error("translated conformal weights must be strictly ordered (lambda=" +
                                   lambda_.to_string() + ")");
    for (std::size_t k = 0; k < summands_.size(); ++k) summands_[k].index = static_cast<int>(k) + 1;
}

const TargetSummand& TargetDecomposition::by_index(int i) const
{
    if (i < 1 || i > N()) throw std::out_of_range("summand index");
    return summands_[i - 1];
}

bool TargetDecomposition::exceptional_config() const
{
    return n_odd() && lambda_.integrality() == Integrality::half_integral && N() == 2 * ell() - 1;
}

int TargetDecomposition::index_of(const RelevantWeight& eps) const
{
    for (const auto& s : summands_) {
        if (s.epsilon == eps) return s.index;
        if (s.merged && eps.index == s.epsilon.index && eps.sign != 0) return s.index;
    }
    throw std::invalid_argument("weight " + eps.name() + " is not a target summand of lambda=" +
                                lambda_.to_string());
}

bool cancellation_check(const DominantWeight& lambda, int i)
{
    if (i < 1 || i >= lambda.rank()) throw std::out_of_range("cancellation index");
    if (lambda.coord(i) != lambda.coord(i + 1)) return true;
    return translated_weight(lambda, eps_minus(i)) + translated_weight(lambda, eps_plus(i + 1)) == 0;
}

}  // namespace ellgrad
