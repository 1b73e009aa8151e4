#pragma once

#include "ellgrad/kato.hpp"

namespace ellgrad {

enum class Provenance { theorem, kato_bound, certificate, oracle };

std::string provenance_name(Provenance p);

struct EllipticityVerdict {
    IndexSet I;
    bool elliptic = false;
    Provenance provenance = Provenance::theorem;
    bool strongly_elliptic_label = false;  // carried label, only for I = {1}
};

/// Index sets of the minimal elliptic operators, in the ordering induced by
/// the decreasing translated conformal weights. Requires lambda != 0.
std::vector<IndexSet> minimal_elliptic_sets(const TargetDecomposition& t);

/// NE, except that in the exceptional configuration the members containing
/// index ell are dropped (those operators are elliptic). Requires lambda != 0.
std::vector<IndexSet> maximal_non_elliptic_sets(const TargetDecomposition& t);

/// Decision by the subset rule: non-elliptic iff I lies inside some maximal
/// non-elliptic set. Throws std::invalid_argument for empty/out-of-range I.
EllipticityVerdict is_elliptic(const TargetDecomposition& t, const IndexSet& I);

/// The complement {2..N} of the Cartan summand; elliptic for every lambda != 0.
EllipticityVerdict complement_of_top(const TargetDecomposition& t);

/// Weight-name rendering of an index set ("+e1", "-e2", "0", "+-e3").
std::vector<std::string> weight_names(const TargetDecomposition& t, const IndexSet& I);

}  // namespace ellgrad
