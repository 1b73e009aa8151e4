#pragma once

#include "ellgrad/weights.hpp"

#include <vector>

namespace ellgrad {

/// Translated conformal weight of the target lambda+eps:
///   w~(0) = 0,  w~(+e_i) = l_i - i + (n+1)/2,  w~(-e_i) = -l_i + i - (n-1)/2.
/// eps may be virtual (not relevant for lambda); only the formula is applied.
Rat translated_weight(const DominantWeight& lambda, const RelevantWeight& eps);

struct TargetSummand {
    RelevantWeight epsilon;  // representative +e_m when merged
    Rat wtilde;
    int index = 0;  // 1-based rank in strictly decreasing w~ order
    bool merged = false;

    std::string epsilon_name() const;  // "+-e3" when merged
};

/// The decomposition of T* (x) V_lambda into ordered target summands.
class TargetDecomposition {
public:
    explicit TargetDecomposition(DominantWeight lambda);

    const DominantWeight& lambda() const { return lambda_; }
    const std::vector<TargetSummand>& summands() const { return summands_; }
    const TargetSummand& by_index(int i) const;  // 1-based
    int N() const { return static_cast<int>(summands_.size()); }
    /// N = 2*ell - 1 or N = 2*ell.
    int ell() const { return (N() + 1) / 2; }
    bool n_odd() const { return lambda_.n() % 2 == 1; }

    /// n odd, N = 2*ell-1, lambda properly half-integral: the configuration in
    /// which index ell (the zero weight) escapes the bound/certificate methods.
    bool exceptional_config() const;

    /// Index of a summand by weight name; merged accepts +e_m, -e_m, +-e_m.
    int index_of(const RelevantWeight& eps) const;  // throws if not a summand

private:
    DominantWeight lambda_;
    std::vector<TargetSummand> summands_;
};

inline TargetDecomposition ordered_targets(const DominantWeight& lambda)
{
    return TargetDecomposition(lambda);
}

/// Identity behind the merge bookkeeping: if l_i = l_{i+1} then the virtual
/// weights -e_i, +e_{i+1} have translated weights summing to zero.
bool cancellation_check(const DominantWeight& lambda, int i);

}  // namespace ellgrad
