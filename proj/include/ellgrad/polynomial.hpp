#pragma once

#include "ellgrad/rational.hpp"

#include <optional>
#include <vector>

namespace ellgrad {

/// Polynomial over Q, coefficients c[k] for x^k. Normalized so the leading
/// coefficient is nonzero (zero polynomial has empty coefficient vector).
struct Poly {
    std::vector<Rat> c;

    static Poly from_coeffs(std::vector<Rat> coeffs);
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rat eval(const Rat& x) const;
    Poly derivative() const;

    /// Euclidean remainder of *this by d (d nonzero).
    Poly rem(const Poly& d) const;
    static Poly gcd(Poly a, Poly b);
    /// Exact quotient; throws if the division is not exact.
    Poly divide_exact(const Poly& d) const;
};

/// Number of distinct real roots in the half-open interval (a, b], a < b.
int count_roots_in(const Poly& p, const Rat& a, const Rat& b);

/// Smallest real root of p inside (lo, hi], isolated by Sturm bisection to
/// width <= tol. Returns nullopt if p has no root there. When the root is
/// rational and discovered exactly, exact is set and lo==hi==root.
struct RootBracket {
    Rat lo;
    Rat hi;
    std::optional<Rat> exact;
    double midpoint() const;
};
std::optional<RootBracket> smallest_root(const Poly& p, Rat lo, Rat hi, const Rat& tol);

}  // namespace ellgrad
