#pragma once

#include "ellgrad/kato.hpp"

#include <optional>

namespace ellgrad {

/// One linear constraint sum_k coeffs[k-2] * Q_k  (>= | <=)  rhs, tagged with
/// the summand whose projection norm it encodes (pi_j >= 0).
struct ConstraintRow {
    int summand = 0;
    std::vector<Rat> coeffs;  // for Q_2 .. Q_ell
    Rat rhs;
    bool ge = true;

    Rat lhs_at(const QPoint& q) const;
    bool satisfied_at(const QPoint& q) const;
    bool tight_at(const QPoint& q) const;
};

struct PolytopeModel {
    int N = 0;
    int ell = 0;
    std::vector<ConstraintRow> rows;
};

/// The N-row inequality system cutting the feasibility region out of Q-space.
PolytopeModel inequality_system(const TargetDecomposition& t);

struct Vertex {
    QPoint point;
    IndexSet defining;  // lexicographically smallest row subset producing it
    IndexSet active;    // all rows tight at the point
};

struct VertexSet {
    std::vector<Vertex> vertices;
};

/// Exhaustive exact enumeration over (ell-1)-subsets of rows.
/// Throws std::runtime_error when ell-1 exceeds the cap.
VertexSet enumerate_vertices(const PolytopeModel& model, int cap = 6);

struct VertexInclusionReport {
    bool inclusion = false;        // every enumerated vertex is some Q^J, J in NE
    bool equality = false;         // and every Q^J is feasible (hence a vertex)
    std::vector<IndexSet> matched; // the J matched per enumerated vertex
    std::vector<IndexSet> infeasible_ne;  // J in NE whose Q^J violates a row
    bool exceptional_config = false;
};

VertexInclusionReport verify_vertex_inclusion(const TargetDecomposition& t, int cap = 6);

/// For an (ell-1)-subset J outside NE, an index i with pi_i(Q^J) < 0.
/// Throws std::logic_error if no witness exists.
int sign_witness(const TargetDecomposition& t, const IndexSet& J);

/// Certified attained extremum of +-Q_k over the polytope: the optimal vertex
/// together with a nonnegative multiplier certificate on its active rows.
struct DirectionBound {
    int coordinate = 0;  // k in 2..ell
    bool maximize = true;
    Rat value;
    QPoint argopt;
    bool certified = false;
};
std::vector<DirectionBound> coordinate_bounds(const PolytopeModel& model, const VertexSet& verts);

}  // namespace ellgrad
