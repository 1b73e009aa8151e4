#pragma once

#include "ellgrad/branching.hpp"
#include "ellgrad/classify.hpp"
#include "ellgrad/polytope.hpp"
#include "ellgrad/rep.hpp"
#include "ellgrad/sweep.hpp"

#include <optional>

namespace ellgrad {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    bool oracle = false;
    bool all_subsets = false;  // with oracle: every nonempty I, else a structured selection
    int dim_cap = 2000;
    int vertex_cap = 6;
    int random_q_points = 100;
    unsigned rng_seed = 20240913;
};

/// Bound / theorem / oracle verdicts for one operator; the exceptional-case
/// instrument (zero-weight summand, n odd, properly half-integral lambda).
struct ThreeWayVerdict {
    IndexSet I;
    Rat bound_c_squared;
    bool bound_elliptic = false;   // c^2 < 1
    bool theorem_elliptic = false;
    std::optional<int> oracle_rank;
    int dim = 0;
    std::optional<bool> oracle_elliptic;
};

struct LambdaVerification {
    DominantWeight lambda;
    std::vector<CheckItem> checks;
    bool ok = true;
    std::optional<ThreeWayVerdict> zero_weight_three_way;
};

/// Runs the formula/polytope/classification/certificate checks for one
/// lambda; with opts.oracle also the matrix-representation cross-checks.
LambdaVerification verify_lambda(const DominantWeight& lambda, const VerifyOptions& opts);

struct SweepVerification {
    int lambdas = 0;
    int checks = 0;
    std::vector<CheckItem> failures;  // names prefixed with the lambda
    bool ok = true;
};

SweepVerification verify_sweep(const SweepConfig& cfg, const VerifyOptions& opts);

/// Brute-force minimal elliptic sets derived from the maximal non-elliptic
/// family by subset search (2^N candidates). Oracle for the classification.
std::vector<IndexSet> brute_force_minimal_elliptic(const TargetDecomposition& t);

}  // namespace ellgrad
