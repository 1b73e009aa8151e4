#pragma once

#include "ellgrad/verify.hpp"

#include <json.hpp>

namespace ellgrad {

using json = nlohmann::json;

/// Relevant weights, translated weights, indices, merge flags, and boxes.
json targets_report(const TargetDecomposition& t);

/// Minimal elliptic and maximal non-elliptic families, index and weight form.
json classify_report(const TargetDecomposition& t);

/// KatoReport serialization: c2 as an exact "p/q" string.
json kato_report(const TargetDecomposition& t, const IndexSet& I);

/// Inequality system, enumerated vertices, and the NE comparison.
json vertices_report(const TargetDecomposition& t, int cap);

/// Certificate for one NE member (weight names) or for all of them.
json certify_report(const TargetDecomposition& t,
                    const std::optional<std::vector<RelevantWeight>>& J);

/// Ellipticity verdict for one I with provenance and cross-check flags.
json verdict_report(const TargetDecomposition& t, const IndexSet& I);

json verification_report(const LambdaVerification& v);
json sweep_report(const SweepVerification& s, const SweepConfig& cfg);

/// Canonical dump: two-space indent, sorted keys (nlohmann objects are
/// key-sorted by construction), trailing newline.
std::string dump_report(const json& j);

}  // namespace ellgrad
