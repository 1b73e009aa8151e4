#include "ellgrad/polynomial.hpp"

#include <algorithm>

namespace ellgrad {

Poly Poly::from_coeffs(std::vector<Rat> coeffs)
{
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return Poly{std::move(coeffs)};
}

Rat Poly::eval(const Rat& x) const
{
    Rat v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

Poly Poly::derivative() const
{
    if (c.size() <= 1) return Poly{};
    std::vector<Rat> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * c[k];
    return Poly::from_coeffs(std::move(d));
}

Poly Poly::rem(const Poly& d) const
{
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r = c;
    const int dd = d.degree();
    while (static_cast<int>(r.size()) - 1 >= dd) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dd) break;
        const Rat q = r.back() / d.c.back();
        const std::size_t shift = r.size() - 1 - dd;
        for (int k = 0; k <= dd; ++k) r[shift + k] -= q * d.c[k];
        r.pop_back();
    }
    return Poly::from_coeffs(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        const Rat lead = a.c.back();
        for (auto& x : a.c) x /= lead;
    }
    return a;
}

Poly Poly::divide_exact(const Poly& d) const
{
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r = c;
    std::vector<Rat> q(c.size(), Rat(0));
    const int dd = d.degree();
    while (true) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dd) break;
        const Rat f = r.back() / d.c.back();
        const std::size_t shift = r.size() - 1 - dd;
        q[shift] = f;
        for (int k = 0; k <= dd; ++k) r[shift + k] -= f * d.c[k];
        r.pop_back();
    }
    if (!Poly::from_coeffs(std::move(r)).is_zero())
        throw std::domain_error("polynomial division not exact");
    return Poly::from_coeffs(std::move(q));
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p)
{
    std::vector<Poly> chain;
    Poly square_free = p;
    const Poly g = Poly::gcd(p, p.derivative());
    if (g.degree() > 0) square_free = p.divide_exact(g);
    chain.push_back(square_free);
    chain.push_back(square_free.derivative());
    while (!chain.back().is_zero()) {
        Poly r = chain[chain.size() - 2].rem(chain.back());
        for (auto& x : r.c) x = -x;
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    return chain;
}

int sign_changes_at(const std::vector<Poly>& chain, const Rat& x)
{
    int changes = 0;
    int prev = 0;
    for (const auto& q : chain) {
        const Rat v = q.eval(x);
        const int s = (v > 0) - (v < 0);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

}  // namespace

int count_roots_in(const Poly& p, const Rat& a, const Rat& b)
{
    if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
    if (!(a < b)) throw std::invalid_argument("count_roots_in needs a < b");
    const auto chain = sturm_chain(p);
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

double RootBracket::midpoint() const
{
    const Rat m = exact ? *exact : (lo + hi) / 2;
    return numerator(m).convert_to<double>() / denominator(m).convert_to<double>();
}

std::optional<RootBracket> smallest_root(const Poly& p, Rat lo, Rat hi, const Rat& tol)
{
    if (p.is_zero()) throw std::domain_error("smallest_root of zero polynomial");
    if (count_roots_in(p, lo, hi) == 0) return std::nullopt;
    // Invariant: (lo, hi] contains at least one root and no root lies in (orig_lo, lo].
    while (hi - lo > tol) {
        const Rat mid = (lo + hi) / 2;
        const int below = count_roots_in(p, lo, mid);
        if (below == 1 && p.eval(mid) == 0) return RootBracket{mid, mid, mid};
        if (below > 0)
            hi = mid;
        else
            lo = mid;
    }
    return RootBracket{lo, hi, std::nullopt};
}

}  // namespace ellgrad
