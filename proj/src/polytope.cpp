#include "ellgrad/polytope.hpp"

#include "ellgrad/matrix.hpp"

#include <algorithm>
#include <functional>

namespace ellgrad {

Rat ConstraintRow::lhs_at(const QPoint& q) const
{
    if (q.coords.size() != coeffs.size())
        throw std::invalid_argument("constraint/point dimension mismatch");
    Rat v = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k] * q.coords[k];
    return v;
}

bool ConstraintRow::satisfied_at(const QPoint& q) const
{
    const Rat v = lhs_at(q);
    return ge ? v >= rhs : v <= rhs;
}

bool ConstraintRow::tight_at(const QPoint& q) const { return lhs_at(q) == rhs; }

PolytopeModel inequality_system(const TargetDecomposition& t)
{
    PolytopeModel model;
    model.N = t.N();
    model.ell = t.ell();
    const bool n_even_system = model.N % 2 == 0;
    for (int j = 1; j <= model.N; ++j) {
        ConstraintRow row;
        row.summand = j;
        const Rat& wj = t.by_index(j).wtilde;
        const Rat wj2 = wj * wj;
        std::vector<Rat> pow2(model.ell, Rat(1));
        for (int d = 1; d < model.ell; ++d) pow2[d] = pow2[d - 1] * wj2;
        for (int k = 2; k <= model.ell; ++k) {
            Rat c = pow2[model.ell - k];
            if ((j + k) % 2 != 0) c = -c;
            row.coeffs.push_back(c);
        }
        row.rhs = (j % 2 == 0) ? pow2[model.ell - 1] : -pow2[model.ell - 1];
        row.ge = n_even_system ? (j <= model.ell) : true;
        model.rows.push_back(std::move(row));
    }
    return model;
}

namespace {

void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(pick);
            return;
        }
        for (int v = start; v <= n - (k - depth) + 1; ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
}

}  // namespace

VertexSet enumerate_vertices(const PolytopeModel& model, int cap)
{
    const int dim = model.ell - 1;
    if (dim > cap)
        throw std::runtime_error("vertex enumeration dimension ell-1=" + std::to_string(dim) +
                                 " exceeds cap " + std::to_string(cap) +
                                 "; raise the cap to enumerate this polytope");
    VertexSet out;
    auto consider = [&](const std::vector<int>& rows) {
        RMat a(dim, dim);
        std::vector<Rat> b(dim);
        for (int r = 0; r < dim; ++r) {
            const ConstraintRow& row = model.rows[rows[r] - 1];
            for (int k = 0; k < dim; ++k) a(r, k) = row.coeffs[k];
            b[r] = row.rhs;
        }
        std::vector<Rat> x;
        if (!solve_square(a, std::move(b), x)) return;  // singular subset
        QPoint q{std::move(x)};
        for (const auto& row : model.rows)
            if (!row.satisfied_at(q)) return;
        for (auto& v : out.vertices)
            if (v.point.coords == q.coords) return;  // already found via another subset
        Vertex v;
        v.point = std::move(q);
        v.defining.assign(rows.begin(), rows.end());
        for (const auto& row : model.rows)
            if (row.tight_at(v.point)) v.active.push_back(row.summand);
        out.vertices.push_back(std::move(v));
    };
    subsets_of_size(model.N, dim, consider);  // dim 0 yields the single empty point
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.point.coords < b.point.coords; });
    return out;
}

VertexInclusionReport verify_vertex_inclusion(const TargetDecomposition& t, int cap)
{
    const PolytopeModel model = inequality_system(t);
    const VertexSet verts = enumerate_vertices(model, cap);
    const auto ne = ne_sets(t);

    VertexInclusionReport report;
    report.exceptional_config = t.exceptional_config();
    report.inclusion = true;

    std::vector<QPoint> ne_points;
    ne_points.reserve(ne.size());
    for (const auto& J : ne) ne_points.push_back(vertex_coords(t, J));

    for (const auto& v : verts.vertices) {
        bool found = false;
        for (std::size_t k = 0; k < ne.size(); ++k) {
            if (ne_points[k].coords == v.point.coords) {
                report.matched.push_back(ne[k]);
                found = true;
                break;
            }
        }
        if (!found) report.inclusion = false;
    }

    report.equality = report.inclusion;
    for (std::size_t k = 0; k < ne.size(); ++k) {
        bool feasible = true;
        for (const auto& row : model.rows) feasible = feasible && row.satisfied_at(ne_points[k]);
        if (!feasible) {
            report.infeasible_ne.push_back(ne[k]);
            report.equality = false;
        }
    }
    return report;
}

int sign_witness(const TargetDecomposition& t, const IndexSet& J)
{
    const int N = t.N();
    const int ell = t.ell();
    if (static_cast<int>(J.size()) != ell - 1)
        throw std::invalid_argument("sign_witness: |J| must be ell-1");
    const auto ne = ne_sets(t);
    if (std::find(ne.begin(), ne.end(), J) != ne.end())
        throw std::invalid_argument("sign_witness: J lies in NE");

    // The proof's route: a box pair disjoint from J carries opposite signs.
    for (int i = 2; i <= ell; ++i) {
        const int mate = N + 2 - i;
        if (contains(J, i) || contains(J, mate)) continue;
        if (pi_at_vertex(t, i, J) < 0) return i;
        if (pi_at_vertex(t, mate, J) < 0) return mate;
    }
    for (int i = 1; i <= N; ++i)
        if (!contains(J, i) && pi_at_vertex(t, i, J) < 0) return i;
    throw std::logic_error("no negative projection value at Q^J for J outside NE");
}

std::vector<DirectionBound> coordinate_bounds(const PolytopeModel& model, const VertexSet& verts)
{
    std::vector<DirectionBound> out;
    const int dim = model.ell - 1;
    if (verts.vertices.empty()) throw std::logic_error("coordinate_bounds needs a nonempty vertex set");
    for (int k = 0; k < dim; ++k) {
        for (const bool maximize : {true, false}) {
            DirectionBound db;
            db.coordinate = k + 2;
            db.maximize = maximize;
            const Vertex* best = nullptr;
            for (const auto& v : verts.vertices) {
                if (!best || (maximize ? v.point.coords[k] > best->point.coords[k]
                                       : v.point.coords[k] < best->point.coords[k]))
                    best = &v;
            }
            db.value = best->point.coords[k];
            db.argopt = best->point;

            // KKT certificate: the objective direction is a nonnegative
            // combination of outward normals of rows active at the optimum.
            std::vector<const ConstraintRow*> active;
            for (const auto& row : model.rows)
                if (row.tight_at(best->point)) active.push_back(&row);
            std::vector<Rat> c(dim, Rat(0));
            c[k] = maximize ? 1 : -1;
            auto try_subset = [&](const std::vector<int>& pick) -> bool {
                RMat a(dim, dim);
                for (int col = 0; col < dim; ++col) {
                    const ConstraintRow& row = *active[pick[col] - 1];
                    for (int r = 0; r < dim; ++r) {
                        Rat normal = row.coeffs[r];
                        if (row.ge) normal = -normal;  // rewrite a.Q >= b as -a.Q <= -b
                        a(r, col) = normal;
                    }
                }
                std::vector<Rat> mu;
                if (!solve_square(a, c, mu)) return false;
                for (const auto& m : mu)
                    if (m < 0) return false;
                return true;
            };
            bool certified = false;
            subsets_of_size(static_cast<int>(active.size()), dim, [&](const std::vector<int>& pick) {
                if (!certified && try_subset(pick)) certified = true;
            });
            db.certified = certified;
            out.push_back(std::move(db));
        }
    }
    return out;
}

}  // namespace ellgrad
