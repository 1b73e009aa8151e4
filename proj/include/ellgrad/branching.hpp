#pragma once

#include "ellgrad/conformal.hpp"

#include <optional>

namespace ellgrad {

/// True iff gamma (an so(n-1) highest weight) interleaves lambda, i.e. the
/// so(n-1)-representation gamma occurs in the restriction of lambda.
bool branches_to(const DominantWeight& lambda, const DominantWeight& gamma);

/// The multiplicity-free restriction so(n) -> so(n-1): all interleaving gamma
/// in the same integrality class, sorted lexicographically descending.
std::vector<DominantWeight> branch(const DominantWeight& lambda);

struct CertificateCheck {
    std::string target;  // "lambda" itself or a shifted weight "l1,...,lm"
    bool expected_member;
    bool passed;
};

/// Witness that P_J is non-elliptic: an so(n-1) highest weight occurring in
/// lambda but in none of the J-shifted targets.
struct Certificate {
    DominantWeight lambda;
    DominantWeight gamma;
    std::vector<RelevantWeight> J;  // merged member listed once as +e_m
    bool verified = false;
    std::vector<CertificateCheck> checks;
    std::optional<std::string> failed_target;
};

/// Builds the certificate for a weight-set member J of NE. Throws
/// std::domain_error when J contains the zero weight (no certificate exists
/// there) and std::invalid_argument when J is not an NE member.
Certificate certificate(const TargetDecomposition& t, const std::vector<RelevantWeight>& J);

/// Re-checks an arbitrary (gamma, J) pair against lambda; fills the check
/// record. Used both for constructed certificates and forged negative controls.
Certificate verify_certificate(const TargetDecomposition& t, const DominantWeight& gamma,
                               const std::vector<RelevantWeight>& J);

}  // namespace ellgrad
