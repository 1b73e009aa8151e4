#pragma once

#include "ellgrad/weights.hpp"

#include <vector>

namespace ellgrad {

struct SweepConfig {
    int n_min = 3;
    int n_max = 9;
    Rat lambda1_max = 3;
    bool include_zero = false;
};

/// "n<=7,l1<=3" (also accepts "l1<=5/2"). Throws std::invalid_argument.
SweepConfig parse_sweep_spec(const std::string& spec);

/// All dominant weights with n in [n_min, n_max], l1 <= lambda1_max, both
/// integrality classes, negative l_m included for n even.
std::vector<DominantWeight> sweep_corpus(const SweepConfig& cfg);

}  // namespace ellgrad
