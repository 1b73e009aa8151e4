#include "ellgrad/reports.hpp"

namespace ellgrad {

namespace {

json weight_set_json(const TargetDecomposition& t, const IndexSet& I)
{
    json j = json::array();
    for (const auto& name : weight_names(t, I)) j.push_back(name);
    return j;
}

json header(const TargetDecomposition& t, const char* schema)
{
    json j;
    j["schema"] = schema;
    j["n"] = t.lambda().n();
    j["lambda"] = t.lambda().to_string();
    return j;
}

}  // namespace

json targets_report(const TargetDecomposition& t)
{
    json j = header(t, "ellgrad.targets/1");
    j["N"] = t.N();
    j["ell"] = t.ell();
    j["integrality"] =
        t.lambda().integrality() == Integrality::integral ? "integral" : "half-integral";
    auto& rows = j["summands"] = json::array();
    for (const auto& s : t.summands()) {
        json row;
        row["index"] = s.index;
        row["epsilon"] = s.epsilon_name();
        row["wtilde"] = rat_to_string(s.wtilde);
        row["merged"] = s.merged;
        long long dim = weyl_dim(DominantWeight(t.lambda().n(), t.lambda().shifted_coords(s.epsilon)));
        if (s.merged)
            dim += weyl_dim(DominantWeight(t.lambda().n(),
                                           t.lambda().shifted_coords({-s.epsilon.sign, s.epsilon.index})));
        row["target_dim"] = dim;
        rows.push_back(std::move(row));
    }
    const auto box = box_structure(t.lambda());
    json pairs = json::array();
    for (const auto& p : box.pairs) {
        const auto name = [&](const BoxEntry& e) {
            return e.merged ? "+-e" + std::to_string(e.eps.index) : e.eps.name();
        };
        pairs.push_back(json::array({name(p[0]), name(p[1])}));
    }
    json singles = json::array();
    for (const auto& s : box.singletons) singles.push_back(s.eps.name());
    j["boxes"] = json{{"pairs", pairs}, {"singletons", singles}};
    return j;
}

json classify_report(const TargetDecomposition& t)
{
    json j = header(t, "ellgrad.classify/1");
    j["N"] = t.N();
    j["exceptional_case"] = t.exceptional_config();
    auto& minimal = j["minimal_elliptic"] = json::array();
    for (const auto& I : minimal_elliptic_sets(t)) {
        json row;
        row["indices"] = I;
        row["weights"] = weight_set_json(t, I);
        row["strongly_elliptic"] = (I.size() == 1 && I[0] == 1);
        minimal.push_back(std::move(row));
    }
    auto& maximal = j["maximal_non_elliptic"] = json::array();
    for (const auto& J : maximal_non_elliptic_sets(t)) {
        json row;
        row["indices"] = J;
        row["weights"] = weight_set_json(t, J);
        maximal.push_back(std::move(row));
    }
    return j;
}

json kato_report(const TargetDecomposition& t, const IndexSet& I)
{
    const KatoReport r = kato_bound(t, I);
    json j = header(t, "ellgrad.kato/1");
    j["I"] = r.I;
    j["I_weights"] = weight_set_json(t, r.I);
    j["c2"] = rat_to_string(r.c_squared);
    auto& arg = j["argmax"] = json::array();
    for (const auto& J : r.extremizers) arg.push_back(J);
    j["optimal"] = r.optimal;
    j["elliptic_by_bound"] = r.elliptic_by_bound;
    j["exceptional_case"] = r.exceptional_config;
    return j;
}

json vertices_report(const TargetDecomposition& t, int cap)
{
    const auto model = inequality_system(t);
    const auto verts = enumerate_vertices(model, cap);
    const auto inclusion = verify_vertex_inclusion(t, cap);

    json j = header(t, "ellgrad.vertices/1");
    j["N"] = model.N;
    j["ell"] = model.ell;
    auto& rows = j["rows"] = json::array();
    for (const auto& row : model.rows) {
        json r;
        r["summand"] = row.summand;
        json coeffs = json::array();
        for (const auto& c : row.coeffs) coeffs.push_back(rat_to_string(c));
        r["coeffs"] = std::move(coeffs);
        r["rhs"] = rat_to_string(row.rhs);
        r["sense"] = row.ge ? ">=" : "<=";
        rows.push_back(std::move(r));
    }
    auto& vs = j["vertices"] = json::array();
    for (const auto& v : verts.vertices) {
        json r;
        json q = json::array();
        for (const auto& c : v.point.coords) q.push_back(rat_to_string(c));
        r["Q"] = std::move(q);
        r["active"] = v.active;
        vs.push_back(std::move(r));
    }
    auto& nej = j["ne_points"] = json::array();
    for (const auto& J : ne_sets(t)) {
        json r;
        r["J"] = J;
        json q = json::array();
        for (const auto& c : vertex_coords(t, J).coords) q.push_back(rat_to_string(c));
        r["Q"] = std::move(q);
        nej.push_back(std::move(r));
    }
    j["inclusion"] = inclusion.inclusion;
    j["equality"] = inclusion.equality;
    j["exceptional_case"] = inclusion.exceptional_config;
    return j;
}

namespace {

json certificate_json(const Certificate& cert)
{
    json j;
    j["gamma"] = cert.gamma.to_string();
    json jw = json::array();
    for (const auto& w : cert.J) jw.push_back(w.name());
    j["J"] = std::move(jw);
    j["verified"] = cert.verified;
    j["failed_target"] = cert.failed_target ? json(*cert.failed_target) : json(nullptr);
    auto& checks = j["checks"] = json::array();
    for (const auto& c : cert.checks) {
        json row;
        row["target"] = c.target;
        row["expected_member"] = c.expected_member;
        row["passed"] = c.passed;
        checks.push_back(std::move(row));
    }
    return j;
}

}  // namespace

json certify_report(const TargetDecomposition& t,
                    const std::optional<std::vector<RelevantWeight>>& J)
{
    json j = header(t, "ellgrad.certify/1");
    auto& certs = j["certificates"] = json::array();
    if (J) {
        certs.push_back(certificate_json(certificate(t, *J)));
        return j;
    }
    for (const auto& idx : ne_sets(t)) {
        std::vector<RelevantWeight> weights;
        bool has_zero = false;
        for (const int i : idx) {
            weights.push_back(t.by_index(i).epsilon);
            has_zero = has_zero || t.by_index(i).epsilon.is_zero();
        }
        if (has_zero) {
            json row;
            row["J"] = weight_set_json(t, idx);
            row["refused"] = "contains the zero weight; no branching certificate exists";
            certs.push_back(std::move(row));
        } else {
            certs.push_back(certificate_json(certificate(t, weights)));
        }
    }
    return j;
}

json verdict_report(const TargetDecomposition& t, const IndexSet& I)
{
    const auto verdict = is_elliptic(t, I);
    const auto bound = kato_bound(t, I);
    json j = header(t, "ellgrad.verdict/1");
    j["I"] = I;
    j["I_weights"] = weight_set_json(t, I);
    j["verdict"] = verdict.elliptic ? "elliptic" : "non-elliptic";
    j["provenance"] = provenance_name(verdict.provenance);
    j["strongly_elliptic_label"] = verdict.strongly_elliptic_label;
    j["kato_bound_c2"] = rat_to_string(bound.c_squared);
    j["kato_bound_elliptic"] = bound.elliptic_by_bound;
    bool cert_available = false;
    if (!verdict.elliptic) {
        for (const auto& J : maximal_non_elliptic_sets(t)) {
            if (!is_subset(I, J)) continue;
            bool has_zero = false;
            for (const int i : J) has_zero = has_zero || t.by_index(i).epsilon.is_zero();
            if (!has_zero) {
                cert_available = true;
                break;
            }
        }
    }
    j["certificate_available"] = cert_available;
    return j;
}

json verification_report(const LambdaVerification& v)
{
    json j;
    j["schema"] = "ellgrad.verify/1";
    j["n"] = v.lambda.n();
    j["lambda"] = v.lambda.to_string();
    j["ok"] = v.ok;
    auto& checks = j["checks"] = json::array();
    for (const auto& c : v.checks) {
        json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        if (!c.detail.empty()) row["detail"] = c.detail;
        checks.push_back(std::move(row));
    }
    if (v.zero_weight_three_way) {
        const auto& tw = *v.zero_weight_three_way;
        json r;
        r["I"] = tw.I;
        r["bound_c2"] = rat_to_string(tw.bound_c_squared);
        r["bound_elliptic"] = tw.bound_elliptic;
        r["theorem"] = tw.theorem_elliptic ? "elliptic" : "non-elliptic";
        if (tw.oracle_rank) {
            r["oracle_rank"] = *tw.oracle_rank;
            r["dim"] = tw.dim;
            r["oracle"] = *tw.oracle_elliptic ? "elliptic" : "non-elliptic";
        }
        j["zero_weight_three_way"] = std::move(r);
    }
    return j;
}

json sweep_report(const SweepVerification& s, const SweepConfig& cfg)
{
    json j;
    j["schema"] = "ellgrad.sweep/1";
    j["n_max"] = cfg.n_max;
    j["lambda1_max"] = rat_to_string(cfg.lambda1_max);
    j["lambdas"] = s.lambdas;
    j["checks"] = s.checks;
    j["ok"] = s.ok;
    auto& failures = j["failures"] = json::array();
    for (const auto& f : s.failures) {
        json row;
        row["name"] = f.name;
        if (!f.detail.empty()) row["detail"] = f.detail;
        failures.push_back(std::move(row));
    }
    return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ellgrad
