#include "ellgrad/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace ellgrad {

namespace {

std::string index_set_str(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
    return out + "}";
}

void add_check(LambdaVerification& v, const std::string& name,
               const std::function<bool(std::string&)>& body)
{
    CheckItem item;
    item.name = name;
    try {
        item.pass = body(item.detail);
    } catch (const std::exception& e) {
        item.pass = false;
        item.detail = e.what();
    }
    v.ok = v.ok && item.pass;
    v.checks.push_back(std::move(item));
}

std::vector<IndexSet> all_nonempty_subsets(int N)
{
    std::vector<IndexSet> out;
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        IndexSet s;
        for (int i = 0; i < N; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool squared_order_pattern(const TargetDecomposition& t, std::string& detail)
{
    const int N = t.N();
    const int ell = t.ell();
    std::vector<int> expected;
    expected.push_back(1);
    for (int i = 2; i <= ell; ++i) {
        expected.push_back(N + 2 - i);
        expected.push_back(i);
    }
    if (N == 2 * ell) expected.push_back(ell + 1);
    std::vector<int> actual(N);
    for (int i = 0; i < N; ++i) actual[i] = i + 1;
    std::stable_sort(actual.begin(), actual.end(), [&](int a, int b) {
        return t.by_index(a).wtilde * t.by_index(a).wtilde > t.by_index(b).wtilde * t.by_index(b).wtilde;
    });
    if (actual != expected) {
        detail = "squared weights sorted as " + index_set_str(actual) + ", expected " +
                 index_set_str(expected);
        return false;
    }
    return true;
}

void formula_checks(LambdaVerification& v, const TargetDecomposition& t, const VerifyOptions& opts)
{
    const DominantWeight& lambda = t.lambda();
    const int N = t.N();
    const int ell = t.ell();

    add_check(v, "targets.top_summand", [&](std::string& detail) {
        if (!(t.by_index(1).epsilon == eps_plus(1))) {
            detail = "index 1 is " + t.by_index(1).epsilon_name();
            return false;
        }
        const Rat w1 = t.by_index(1).wtilde;
        if (!(w1 == lambda.coord(1) + Rat(lambda.n() - 1, 2)) || !(w1 > Rat(1, 2))) {
            detail = "w~_1 = " + rat_to_string(w1);
            return false;
        }
        return true;
    });

    add_check(v, "targets.squared_interleaving", [&](std::string& detail) {
        return squared_order_pattern(t, detail);
    });

    add_check(v, "targets.box_pairs_match_index_pairs", [&](std::string& detail) {
        const auto box = box_structure(lambda);
        std::vector<IndexSet> box_pairs;
        for (const auto& p : box.pairs) {
            IndexSet pair = {t.index_of(p[0].eps), t.index_of(p[1].eps)};
            std::sort(pair.begin(), pair.end());
            box_pairs.push_back(pair);
        }
        std::sort(box_pairs.begin(), box_pairs.end());
        std::vector<IndexSet> index_pairs;
        for (int i = 2; i <= ell; ++i) index_pairs.push_back({i, N + 2 - i});
        std::sort(index_pairs.begin(), index_pairs.end());
        if (box_pairs != index_pairs) {
            detail = "box pairs do not realize {i, N+2-i}";
            return false;
        }
        // Boxes partition the relevant weights.
        auto contents = box.expanded_contents();
        auto rel = relevant_weights(lambda);
        std::sort(contents.begin(), contents.end());
        std::sort(rel.begin(), rel.end());
        if (std::adjacent_find(contents.begin(), contents.end()) != contents.end()) {
            detail = "a weight appears in two boxes";
            return false;
        }
        if (contents != rel) {
            detail = "box contents differ from the relevant weights";
            return false;
        }
        return true;
    });

    add_check(v, "conformal.cancellation", [&](std::string& detail) {
        for (int i = 1; i < lambda.rank(); ++i)
            if (!cancellation_check(lambda, i)) {
                detail = "i = " + std::to_string(i);
                return false;
            }
        return true;
    });

    const auto ne = ne_sets(t);

    add_check(v, "kato.partition_of_unity", [&](std::string& detail) {
        for (const auto& J : ne) {
            const QPoint q = vertex_coords(t, J);
            Rat sum = 0;
            for (int j = 1; j <= N; ++j) sum += pi_value(t, j, q);
            if (sum != 1) {
                detail = "vertex " + index_set_str(J);
                return false;
            }
        }
        std::mt19937 rng(opts.rng_seed);
        std::uniform_int_distribution<int> num(-60, 60);
        std::uniform_int_distribution<int> den(1, 24);
        for (int trial = 0; trial < opts.random_q_points; ++trial) {
            QPoint q;
            for (int k = 0; k < ell - 1; ++k) q.coords.emplace_back(num(rng), den(rng));
            Rat sum = 0;
            for (int j = 1; j <= N; ++j) sum += pi_value(t, j, q);
            if (sum != 1) {
                detail = "random Q trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    });

    add_check(v, "kato.vertex_values", [&](std::string& detail) {
        for (const auto& J : ne) {
            const QPoint q = vertex_coords(t, J);
            for (int j = 1; j <= N; ++j) {
                const Rat closed = pi_at_vertex(t, j, J);
                if (closed != pi_value(t, j, q)) {
                    detail = "closed form mismatch at J=" + index_set_str(J);
                    return false;
                }
                if (contains(J, j) != (closed == 0)) {
                    detail = "zero pattern mismatch at J=" + index_set_str(J);
                    return false;
                }
                if (closed < 0) {
                    detail = "pi_" + std::to_string(j) + " < 0 at J=" + index_set_str(J);
                    return false;
                }
            }
        }
        return true;
    });

    add_check(v, "polytope.vertex_inclusion", [&](std::string& detail) {
        const auto report = verify_vertex_inclusion(t, opts.vertex_cap);
        if (!report.inclusion) {
            detail = "an enumerated vertex is not of the form Q^J";
            return false;
        }
        if (!report.equality && !report.exceptional_config) {
            detail = "equality fails outside the exceptional case";
            return false;
        }
        if (!report.equality) detail = "equality open (exceptional case)";
        return true;
    });

    add_check(v, "polytope.bounded", [&](std::string& detail) {
        const auto model = inequality_system(t);
        const auto verts = enumerate_vertices(model, opts.vertex_cap);
        if (verts.vertices.empty()) {
            detail = "no vertex found";
            return false;
        }
        for (const auto& db : coordinate_bounds(model, verts))
            if (!db.certified) {
                detail = "no multiplier certificate for Q_" + std::to_string(db.coordinate);
                return false;
            }
        return true;
    });

    add_check(v, "polytope.sign_witness", [&](std::string& detail) {
        if (ell < 2) return true;  // no (ell-1)-subsets outside NE
        std::vector<int> pick(ell - 1);
        bool ok = true;
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (!ok) return;
            if (depth == ell - 1) {
                IndexSet J(pick.begin(), pick.end());
                if (std::find(ne.begin(), ne.end(), J) != ne.end()) return;
                const int witness = sign_witness(t, J);
                if (pi_at_vertex(t, witness, J) >= 0) ok = false;
                if (!ok) detail = "J=" + index_set_str(J);
                return;
            }
            for (int v2 = start; v2 <= N; ++v2) {
                pick[depth] = v2;
                rec(v2 + 1, depth + 1);
            }
        };
        rec(1, 0);
        return ok;
    });

    add_check(v, "kato.elliptic_families_below_one", [&](std::string& detail) {
        std::vector<IndexSet> families;
        families.push_back({1});
        if (N == 2 * ell && lambda.coord(lambda.rank()) != 0) families.push_back({ell + 1});
        for (int i = 2; i <= ell; ++i) families.push_back({i, N + 2 - i});
        for (const auto& I : families) {
            const auto rep = kato_bound(t, I);
            if (!(rep.c_squared < 1)) {
                detail = "c^2 = " + rat_to_string(rep.c_squared) + " for I=" + index_set_str(I);
                return false;
            }
        }
        return true;
    });

    add_check(v, "kato.ne_members_at_one", [&](std::string& detail) {
        for (const auto& J : ne) {
            if (J.empty()) continue;
            for (const auto& I : {J, IndexSet{J.front()}}) {
                const auto rep = kato_bound(t, I);
                if (rep.c_squared != 1) {
                    detail = "c^2 = " + rat_to_string(rep.c_squared) + " for I=" + index_set_str(I);
                    return false;
                }
            }
        }
        return true;
    });

    add_check(v, "classify.brute_force_regression", [&](std::string& detail) {
        const auto direct = minimal_elliptic_sets(t);
        const auto brute = brute_force_minimal_elliptic(t);
        if (direct != brute) {
            detail = "theorem list and brute-force minimality differ";
            return false;
        }
        return true;
    });

    add_check(v, "classify.partition_of_indices", [&](std::string& detail) {
        std::vector<int> covered;
        for (const auto& I : minimal_elliptic_sets(t)) covered.insert(covered.end(), I.begin(), I.end());
        std::sort(covered.begin(), covered.end());
        if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
            detail = "an index lies in two minimal sets";
            return false;
        }
        IndexSet expected;
        for (int i = 1; i <= N; ++i)
            if (!(t.exceptional_config() && i == ell + 1)) expected.push_back(i);
        if (IndexSet(covered.begin(), covered.end()) != expected) {
            detail = "covered " + index_set_str(IndexSet(covered.begin(), covered.end()));
            return false;
        }
        return true;
    });

    add_check(v, "classify.complement_of_top", [&](std::string& detail) {
        const auto verdict = complement_of_top(t);
        if (!verdict.elliptic) {
            detail = "complement of the top gradient judged non-elliptic";
            return false;
        }
        return true;
    });

    add_check(v, "branching.certificates", [&](std::string& detail) {
        for (const auto& J : ne) {
            std::vector<RelevantWeight> weights;
            bool has_zero = false;
            for (const int i : J) {
                const auto& s = t.by_index(i);
                has_zero = has_zero || s.epsilon.is_zero();
                weights.push_back(s.epsilon);
            }
            if (has_zero) {
                try {
                    certificate(t, weights);
                    detail = "zero-weight member not refused";
                    return false;
                } catch (const std::domain_error&) {
                    continue;  // refusal is the contract
                }
            } else {
                const auto cert = certificate(t, weights);
                if (!cert.verified) {
                    detail = "certificate fails for J=" + index_set_str(J) +
                             " (target " + cert.failed_target.value_or("?") + ")";
                    return false;
                }
                if (!J.empty() && is_elliptic(t, J).elliptic) {
                    detail = "verified certificate for a set judged elliptic: " + index_set_str(J);
                    return false;
                }
            }
        }
        return true;
    });

    add_check(v, "branching.dimension_sum", [&](std::string& detail) {
        if (lambda.n() > 9) return true;  // corpus guard: dimensions stay desk-sized
        long long total = 0;
        for (const auto& gamma : branch(lambda)) total += weyl_dim(gamma);
        const long long expect = weyl_dim(lambda);
        if (total != expect) {
            detail = "sum " + std::to_string(total) + " != dim " + std::to_string(expect);
            return false;
        }
        return true;
    });
}

void oracle_checks(LambdaVerification& v, const TargetDecomposition& t, const VerifyOptions& opts)
{
    const DominantWeight& lambda = t.lambda();
    ExplicitRep rep;
    try {
        rep = build_rep(lambda, BuildOptions{opts.dim_cap});
    } catch (const std::exception& e) {
        CheckItem item{"oracle.build", false, e.what()};
        v.ok = false;
        v.checks.push_back(std::move(item));
        return;
    }

    add_check(v, "oracle.structure", [&](std::string&) {
        validate_rep(rep);
        return true;
    });

    add_check(v, "oracle.dimension_bookkeeping", [&](std::string& detail) {
        long long total = 0;
        for (const auto& line : expected_spectrum(t)) total += line.multiplicity;
        if (total != static_cast<long long>(rep.n) * rep.dim) {
            detail = "sum of target dimensions " + std::to_string(total) + " != n*dim";
            return false;
        }
        return true;
    });

    std::vector<GMat> projections;
    add_check(v, "oracle.conformal_spectrum", [&](std::string&) {
        projections = spectral_projections(rep, t);  // throws on any spectral defect
        return true;
    });
    if (projections.empty()) return;

    std::vector<IndexSet> subsets;
    if (opts.all_subsets) {
        subsets = all_nonempty_subsets(t.N());
    } else {
        subsets = minimal_elliptic_sets(t);
        for (const auto& J : maximal_non_elliptic_sets(t))
            if (!J.empty()) subsets.push_back(J);
        IndexSet rest;
        for (int i = 2; i <= t.N(); ++i) rest.push_back(i);
        subsets.push_back(rest);
        std::sort(subsets.begin(), subsets.end());
        subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
    }

    add_check(v, "oracle.symbol_vs_theorem", [&](std::string& detail) {
        for (const auto& I : subsets) {
            const auto sr = symbol_rank(rep, t, projections, I);
            const auto verdict = is_elliptic(t, I);
            if (sr.elliptic != verdict.elliptic) {
                detail = "I=" + index_set_str(I) + ": rank " + std::to_string(sr.rank) + "/" +
                         std::to_string(sr.dim) + " vs theorem " +
                         (verdict.elliptic ? "elliptic" : "non-elliptic");
                return false;
            }
        }
        return true;
    });

    add_check(v, "oracle.kato_exact_vs_formula", [&](std::string& detail) {
        for (const auto& I : subsets) {
            const auto bound = kato_bound(t, I);
            if (!bound.optimal) continue;
            const auto exact = kato_exact(rep, t, projections, I, bound.c_squared);
            if (!exact.matches_candidate) {
                detail = "I=" + index_set_str(I) + ": k^2 in [" + rat_to_string(exact.k2_lo) + ", " +
                         rat_to_string(exact.k2_hi) + "] vs c^2 = " + rat_to_string(bound.c_squared);
                return false;
            }
        }
        return true;
    });

    // Zero-weight three-way instrument (bound vs theorem vs oracle).
    for (const auto& s : t.summands()) {
        if (!s.epsilon.is_zero()) continue;
        ThreeWayVerdict tw;
        tw.I = {s.index};
        const auto bound = kato_bound(t, tw.I);
        tw.bound_c_squared = bound.c_squared;
        tw.bound_elliptic = bound.elliptic_by_bound;
        tw.theorem_elliptic = is_elliptic(t, tw.I).elliptic;
        const auto sr = symbol_rank(rep, t, projections, tw.I);
        tw.oracle_rank = sr.rank;
        tw.dim = sr.dim;
        tw.oracle_elliptic = sr.elliptic;
        v.zero_weight_three_way = tw;
        add_check(v, "oracle.zero_weight_three_way", [&](std::string& detail) {
            if (*tw.oracle_elliptic != tw.theorem_elliptic) {
                detail = "oracle and theorem disagree on the zero-weight summand";
                return false;
            }
            detail = "bound c^2 = " + rat_to_string(tw.bound_c_squared) + ", theorem " +
                     (tw.theorem_elliptic ? "elliptic" : "non-elliptic") + ", oracle rank " +
                     std::to_string(sr.rank) + "/" + std::to_string(sr.dim);
            return true;
        });
    }
}

}  // namespace

std::vector<IndexSet> brute_force_minimal_elliptic(const TargetDecomposition& t)
{
    const auto maximal = maximal_non_elliptic_sets(t);
    const auto elliptic = [&maximal](const IndexSet& I) {
        for (const auto& J : maximal)
            if (is_subset(I, J)) return false;
        return true;
    };
    std::vector<IndexSet> out;
    for (const auto& I : all_nonempty_subsets(t.N())) {
        if (!elliptic(I)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < I.size() && minimal; ++drop) {
            IndexSet sub;
            for (std::size_t k = 0; k < I.size(); ++k)
                if (k != drop) sub.push_back(I[k]);
            if (!sub.empty() && elliptic(sub)) minimal = false;
        }
        if (minimal) out.push_back(I);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LambdaVerification verify_lambda(const DominantWeight& lambda, const VerifyOptions& opts)
{
    LambdaVerification v{lambda, {}, true, std::nullopt};
    if (lambda.is_zero()) {
        add_check(v, "targets.trivial_weight", [&](std::string& detail) {
            const auto rel = relevant_weights(lambda);
            if (rel.size() != 1 || !(rel[0] == eps_plus(1))) {
                detail = "relevant weights of 0 differ from {+e1}";
                return false;
            }
            return true;
        });
        return v;
    }
    const TargetDecomposition t(lambda);
    formula_checks(v, t, opts);
    if (opts.oracle) oracle_checks(v, t, opts);
    return v;
}

SweepVerification verify_sweep(const SweepConfig& cfg, const VerifyOptions& opts)
{
    SweepVerification summary;
    for (const auto& lambda : sweep_corpus(cfg)) {
        const auto v = verify_lambda(lambda, opts);
        ++summary.lambdas;
        summary.checks += static_cast<int>(v.checks.size());
        for (const auto& c : v.checks)
            if (!c.pass) {
                summary.ok = false;
                summary.failures.push_back(
                    {"so(" + std::to_string(lambda.n()) + ") lambda=" + lambda.to_string() + ": " + c.name,
                     false, c.detail});
            }
    }
    return summary;
}

}  // namespace ellgrad
