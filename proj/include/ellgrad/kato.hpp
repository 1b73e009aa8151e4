#pragma once

#include "ellgrad/conformal.hpp"

#include <vector>

namespace ellgrad {

/// Sorted ascending list of 1-based summand indices.
using IndexSet = std::vector<int>;

bool contains(const IndexSet& s, int i);
bool is_subset(const IndexSet& a, const IndexSet& b);
IndexSet complement_set(const IndexSet& s, int N);

/// All subsets of {1..N} meeting each pair {i, N+2-i}, 2 <= i <= ell, in
/// exactly one element: 2^(ell-1) sets of size ell-1, lexicographically sorted.
std::vector<IndexSet> ne_sets(const TargetDecomposition& t);

/// Point of the Q-space (coordinates Q_2..Q_ell).
struct QPoint {
    std::vector<Rat> coords;
};

/// Q^J: elementary symmetric functions of the squared translated weights of J.
QPoint vertex_coords(const TargetDecomposition& t, const IndexSet& J);

/// The affine squared projection norm pi_j evaluated at Q.
Rat pi_value(const TargetDecomposition& t, int j, const QPoint& q);

/// Closed form of pi_j(Q^J); zero iff j in J.
Rat pi_at_vertex(const TargetDecomposition& t, int j, const IndexSet& J);

struct KatoReport {
    IndexSet I;
    Rat c_squared;                     // upper bound for the squared Kato constant
    std::vector<IndexSet> extremizers; // the J in NE attaining the extremum
    bool exceptional_config = false;
    bool optimal = true;               // false only when the exceptional case hides the extremum
    bool elliptic_by_bound = false;    // c_squared < 1
};

/// c_I^2 as max over NE of the complement sums, cross-checked against the
/// 1 - min form. Throws std::invalid_argument for empty or out-of-range I.
KatoReport kato_bound(const TargetDecomposition& t, const IndexSet& I);

}  // namespace ellgrad
