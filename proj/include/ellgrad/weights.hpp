#pragma once

#include "ellgrad/rational.hpp"

#include <string>
#include <vector>

namespace ellgrad {

enum class Integrality { integral, half_integral };

/// A weight of the standard representation: +e_j, -e_j, or the zero weight.
struct RelevantWeight {
    int sign = 0;   // +1, -1, or 0 for the zero weight
    int index = 0;  // 1..m; 0 for the zero weight

    bool is_zero() const { return sign == 0; }
    std::string name() const;  // "+e1", "-e2", "0"

    friend bool operator==(const RelevantWeight& a, const RelevantWeight& b)
    {
        return a.sign == b.sign && a.index == b.index;
    }
    /// Canonical order: +e1, -e1, +e2, -e2, ..., 0.
    friend bool operator<(const RelevantWeight& a, const RelevantWeight& b)
    {
        if (a.is_zero() != b.is_zero()) return !a.is_zero();
        if (a.index != b.index) return a.index < b.index;
        return a.sign > b.sign;
    }
};

RelevantWeight eps_plus(int j);
RelevantWeight eps_minus(int j);
RelevantWeight eps_zero();
/// Parses "+e1", "e1", "-e2", "0". Throws std::invalid_argument.
RelevantWeight parse_weight_name(const std::string& s);

/// Highest weight of an irreducible so(n)-representation, n >= 3.
/// Coordinates are all integers or all half-odd-integers and satisfy
/// l1 >= ... >= l_{m-1} >= l_m >= 0 (n odd) resp. >= |l_m| (n even).
/// n = 2 is admitted for branching targets (single coordinate, any sign).
class DominantWeight {
public:
    DominantWeight(int n, std::vector<Rat> coords);  // throws std::invalid_argument
    static DominantWeight parse(int n, const std::string& text);
    static bool is_dominant(int n, const std::vector<Rat>& coords);

    int n() const { return n_; }
    int rank() const { return static_cast<int>(coords_.size()); }
    const Rat& coord(int i) const;  // 1-based
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    Integrality integrality() const;
    std::string to_string() const;  // "1,0" / "3/2,1/2"

    /// Coordinates of lambda+eps (no dominance requirement on the result).
    std::vector<Rat> shifted_coords(const RelevantWeight& eps) const;
    /// True iff lambda+eps is dominant (eps = 0 handled as lambda itself).
    bool shift_is_dominant(const RelevantWeight& eps) const;

    friend bool operator==(const DominantWeight& a, const DominantWeight& b)
    {
        return a.n_ == b.n_ && a.coords_ == b.coords_;
    }

private:
    int n_;
    std::vector<Rat> coords_;
};

/// The weights eps with lambda+eps occurring in tau (x) lambda, in canonical
/// order, plus the zero weight iff n is odd and l_m > 0.
std::vector<RelevantWeight> relevant_weights(const DominantWeight& lambda);

struct BoxEntry {
    RelevantWeight eps;
    bool merged = false;  // stands for both +e_m and -e_m (n even, l_m = 0)
};

/// Relevance-condition boxes of the selection-rule diagrams. Every relevant
/// weight lies in exactly one box (merged entries expand to +-e_m).
struct BoxStructure {
    std::vector<std::array<BoxEntry, 2>> pairs;
    std::vector<BoxEntry> singletons;

    /// All box contents as plain weights, merged entries expanded.
    std::vector<RelevantWeight> expanded_contents() const;
};

BoxStructure box_structure(const DominantWeight& lambda);

}  // namespace ellgrad
