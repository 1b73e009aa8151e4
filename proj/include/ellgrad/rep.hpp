#pragma once

#include "ellgrad/kato.hpp"
#include "ellgrad/matrix.hpp"
#include "ellgrad/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellgrad {

/// Weyl dimension of the irreducible so(n)-representation of highest weight
/// lambda, as an exact integer.
long long weyl_dim(const DominantWeight& lambda);

/// Explicit so(n)-action on a concrete carrier space over Gaussian rationals.
/// Basis vectors are pairwise orthogonal; gram holds their squared norms
/// (all 1 for the direct constructions, diagonal rationals after extraction).
struct ExplicitRep {
    int n = 0;
    std::optional<DominantWeight> highest_weight;
    int dim = 0;
    std::vector<GMat> generators;  // e_i ^ e_j for 1 <= i < j <= n, flattened
    std::vector<Rat> gram;
    std::vector<std::string> chain;  // construction steps, e.g. "wedge(2)"

    const GMat& generator(int i, int j) const;  // i < j
    GMat action(int i, int j) const;            // any i != j, antisymmetric in (i, j)
    const DominantWeight& hw() const { return *highest_weight; }
};

struct BuildOptions {
    int dim_cap = 2000;  // largest carrier (including intermediate tensors)
};

/// Constructs the representation of highest weight lambda: standard/exterior
/// powers, gamma-matrix spinors, and otherwise an iterated Cartan-summand
/// chain over tensor products of those, with the mirror trick for n even,
/// l_m < 0. Throws std::runtime_error when the cap is exceeded.
ExplicitRep build_rep(const DominantWeight& lambda, const BuildOptions& opts = {});

// Building blocks (exposed for tests and the chain builder).
ExplicitRep trivial_rep(int n);
ExplicitRep standard_rep(int n);
ExplicitRep exterior_power_rep(int n, int p);
ExplicitRep spinor_rep(int n);                       // n odd
ExplicitRep half_spinor_rep(int n, int chirality);   // n even, chirality +-1
ExplicitRep tensor_rep(const ExplicitRep& a, const ExplicitRep& b);
ExplicitRep cartan_extract(const ExplicitRep& tens, const DominantWeight& target);
ExplicitRep mirror_rep(const ExplicitRep& rep);      // n even: l_m -> -l_m

/// Casimir sum_{i<j} A_ij^2; acts as -<lambda, lambda+2 rho> on V_lambda.
GMat casimir(const ExplicitRep& rep);
Rat casimir_eigenvalue(const DominantWeight& lambda);

/// Exact structural checks: skew-adjointness w.r.t. gram, bracket relations,
/// Casimir scalar, Weyl dimension. Throws std::logic_error on failure.
void validate_rep(const ExplicitRep& rep);

/// Conformal weight operator B on T* (x) V and its translate B + (n-1)/2.
GMat conformal_operator(const ExplicitRep& rep);
GMat translated_conformal_operator(const ExplicitRep& rep);

struct SpectrumLine {
    Rat wtilde;
    long long multiplicity;  // Weyl dimension of the target (merged: the sum)
};
std::vector<SpectrumLine> expected_spectrum(const TargetDecomposition& t);

/// Orthogonal spectral projections of the translated conformal weight
/// operator, one per target summand, via Lagrange interpolation. Validates
/// idempotence, orthogonality, completeness, and the expected ranks; a
/// failure signals a wrong action normalization and throws std::logic_error.
std::vector<GMat> spectral_projections(const ExplicitRep& rep, const TargetDecomposition& t);

struct SymbolRank {
    int rank = 0;
    int dim = 0;
    bool elliptic = false;  // rank == dim V_lambda
};

/// Rank of v -> Pi_I(e_n (x) v), computed by exact elimination.
SymbolRank symbol_rank(const ExplicitRep& rep, const TargetDecomposition& t,
                       const std::vector<GMat>& projections, const IndexSet& I);

struct KatoExactResult {
    bool elliptic = false;            // smallest Gram eigenvalue > 0
    std::optional<Rat> k2_exact;      // set when the value is certified rational
    Rat k2_lo, k2_hi;                 // certified enclosure of k_I^2
    double k2_approx = 0.0;
    bool matches_candidate = false;   // candidate c^2 given and k^2 == c^2 exactly
};

/// k_I^2 = 1 - (smallest eigenvalue of the symbol Gram form), from the exact
/// characteristic polynomial with Sturm root isolation. When candidate_c2 is
/// given, equality with it is decided exactly.
KatoExactResult kato_exact(const ExplicitRep& rep, const TargetDecomposition& t,
                           const std::vector<GMat>& projections, const IndexSet& I,
                           const std::optional<Rat>& candidate_c2 = std::nullopt);

/// Textual on-disk form of a rep (endian-free, rationals as "p/q" strings).
std::string rep_to_json(const ExplicitRep& rep);
ExplicitRep rep_from_json(const std::string& text);

}  // namespace ellgrad
