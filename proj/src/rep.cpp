#include "ellgrad/rep.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace ellgrad {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int i, int j)
{
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("generator pair out of range");
    return (i - 1) * n - i * (i + 1) / 2 + j - 1;
}

std::vector<Rat> rho(int n)
{
    const int m = n / 2;
    std::vector<Rat> r(m);
    for (int i = 1; i <= m; ++i) r[i - 1] = (n % 2) ? Rat(2 * (m - i) + 1, 2) : Rat(m - i);
    return r;
}

GMat kron(const GMat& a, const GMat& b)
{
    GMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

DominantWeight weight_sum(const DominantWeight& a, const DominantWeight& b)
{
    if (a.n() != b.n()) throw std::invalid_argument("weight sum across different n");
    std::vector<Rat> c(a.rank());
    for (int i = 0; i < a.rank(); ++i) c[i] = a.coords()[i] + b.coords()[i];
    return DominantWeight(a.n(), std::move(c));
}

}  // namespace

long long weyl_dim(const DominantWeight& lambda)
{
    const int n = lambda.n();
    const int m = lambda.rank();
    const auto r = rho(n);
    Rat num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= (lambda.coords()[i] + r[i]) - (lambda.coords()[j] + r[j]);
            den *= r[i] - r[j];
            num *= (lambda.coords()[i] + r[i]) + (lambda.coords()[j] + r[j]);
            den *= r[i] + r[j];
        }
    if (n % 2)
        for (int i = 0; i < m; ++i) {
            num *= lambda.coords()[i] + r[i];
            den *= r[i];
        }
    return rat_to_ll(num / den);
}

const GMat& ExplicitRep::generator(int i, int j) const { return generators[pair_index(n, i, j)]; }

GMat ExplicitRep::action(int i, int j) const
{
    if (i == j) throw std::invalid_argument("action needs i != j");
    if (i < j) return generator(i, j);
    return -generator(j, i);
}

ExplicitRep trivial_rep(int n)
{
    ExplicitRep rep;
    rep.n = n;
    rep.highest_weight = DominantWeight(n, std::vector<Rat>(n / 2, Rat(0)));
    rep.dim = 1;
    rep.generators.assign(pair_count(n), GMat(1, 1));
    rep.gram.assign(1, Rat(1));
    rep.chain = {"trivial"};
    return rep;
}

ExplicitRep standard_rep(int n)
{
    ExplicitRep rep;
    rep.n = n;
    std::vector<Rat> hw(n / 2, Rat(0));
    hw[0] = 1;
    rep.highest_weight = DominantWeight(n, std::move(hw));
    rep.dim = n;
    rep.gram.assign(n, Rat(1));
    rep.chain = {"standard"};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            GMat a(n, n);
            a(j - 1, i - 1) = GRat(1);   // e_i -> e_j
            a(i - 1, j - 1) = GRat(-1);  // e_j -> -e_i
            rep.generators.push_back(std::move(a));
        }
    return rep;
}

ExplicitRep exterior_power_rep(int n, int p)
{
    const int m = n / 2;
    if (p < 1 || p > n) throw std::invalid_argument("exterior power degree out of range");
    if (p > m && !(n % 2 == 1 && p == m)) {
        // Lambda^p for p > m is equivalent to Lambda^(n-p); keep to the
        // irreducible range used by the weight chain.
        throw std::invalid_argument("exterior power outside the irreducible range");
    }

    std::vector<std::vector<int>> basis;
    std::vector<int> pick(p);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == p) {
            basis.push_back(pick);
            return;
        }
        for (int v = start; v <= n - (p - depth) + 1; ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);

    std::map<std::vector<int>, int> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = static_cast<int>(k);

    ExplicitRep rep;
    rep.n = n;
    std::vector<Rat> hw(m, Rat(0));
    for (int i = 0; i < std::min(p, m); ++i) hw[i] = 1;
    rep.highest_weight = DominantWeight(n, std::move(hw));
    rep.dim = static_cast<int>(basis.size());
    rep.gram.assign(rep.dim, Rat(1));
    rep.chain = {"wedge(" + std::to_string(p) + ")"};

    auto substitute = [&](const std::vector<int>& s, int from, int to) -> std::pair<int, int> {
        // Returns (basis index, sign) of s with `from` replaced by `to`, or (-1, 0).
        if (std::find(s.begin(), s.end(), to) != s.end()) return {-1, 0};
        std::vector<int> out;
        out.reserve(s.size());
        for (int v : s)
            if (v != from) out.push_back(v);
        const auto pos = std::lower_bound(out.begin(), out.end(), to);
        const int moved = static_cast<int>(pos - out.begin());
        out.insert(pos, to);
        // Sign from moving `to` out of `from`'s slot into sorted position.
        int from_slot = 0;
        for (int v : s) {
            if (v == from) break;
            ++from_slot;
        }
        const int sign = ((moved - from_slot) % 2 == 0) ? 1 : -1;
        return {idx.at(out), sign};
    };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            GMat a(rep.dim, rep.dim);
            for (int col = 0; col < rep.dim; ++col) {
                const auto& s = basis[col];
                if (std::find(s.begin(), s.end(), i) != s.end()) {
                    const auto [row, sign] = substitute(s, i, j);  // e_i -> e_j
                    if (row >= 0) a(row, col) += GRat(sign);
                }
                if (std::find(s.begin(), s.end(), j) != s.end()) {
                    const auto [row, sign] = substitute(s, j, i);  // e_j -> -e_i
                    if (row >= 0) a(row, col) += GRat(-sign);
                }
            }
            rep.generators.push_back(std::move(a));
        }
    return rep;
}

namespace {

std::vector<GMat> gamma_matrices(int n)
{
    const int m = n / 2;
    GMat s1(2, 2), s2(2, 2), s3(2, 2), id2 = GMat::identity(2);
    s1(0, 1) = GRat(1);
    s1(1, 0) = GRat(1);
    s2(0, 1) = -gaussian_i();
    s2(1, 0) = gaussian_i();
    s3(0, 0) = GRat(1);
    s3(1, 1) = GRat(-1);

    auto build = [&](int slot, const GMat& mid) {  // s3^(slot-1) (x) mid (x) id^(m-slot)
        GMat g = GMat::identity(1);
        for (int k = 1; k <= m; ++k) g = kron(g, k < slot ? s3 : (k == slot ? mid : id2));
        return g;
    };

    std::vector<GMat> gammas;
    for (int k = 1; k <= m; ++k) {
        gammas.push_back(build(k, s1));
        gammas.push_back(build(k, s2));
    }
    if (n % 2) gammas.push_back(build(m + 1, s3));  // sigma3 in every slot
    return gammas;
}

ExplicitRep spinor_from_gammas(int n)
{
    const auto gammas = gamma_matrices(n);
    const int dim = 1 << (n / 2);
    ExplicitRep rep;
    rep.n = n;
    rep.dim = dim;
    rep.gram.assign(dim, Rat(1));
    const GRat minus_half(Rat(-1, 2));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            rep.generators.push_back(minus_half * (gammas[i - 1] * gammas[j - 1]));
    return rep;
}

}  // namespace

ExplicitRep spinor_rep(int n)
{
    if (n % 2 == 0) throw std::invalid_argument("spinor_rep needs n odd; use half_spinor_rep");
    ExplicitRep rep = spinor_from_gammas(n);
    rep.highest_weight = DominantWeight(n, std::vector<Rat>(n / 2, Rat(1, 2)));
    rep.chain = {"spinor"};
    return rep;
}

ExplicitRep half_spinor_rep(int n, int chirality)
{
    if (n % 2 == 1 || (chirality != 1 && chirality != -1))
        throw std::invalid_argument("half_spinor_rep needs n even and chirality +-1");
    const int m = n / 2;
    ExplicitRep full = spinor_from_gammas(n);

    // Weights are read off the diagonal Cartan images; the chirality sign of
    // the basis vector carrying (1/2,...,1/2,chi/2) labels the component.
    std::vector<std::vector<Rat>> weight(full.dim, std::vector<Rat>(m));
    for (int k = 1; k <= m; ++k) {
        const GMat h = full.action(2 * k - 1, 2 * k);
        for (int r = 0; r < full.dim; ++r) {
            for (int c = 0; c < full.dim; ++c)
                if (c != r && !is_zero(h(r, c)))
                    throw std::logic_error("Cartan generator not diagonal in the spinor basis");
            if (h(r, r).re != 0) throw std::logic_error("Cartan eigenvalue not purely imaginary");
            weight[r][k - 1] = h(r, r).im;
        }
    }
    std::vector<int> chir(full.dim);
    for (int r = 0; r < full.dim; ++r) {
        int bits = 0;
        for (int k = 0; k < m; ++k)
            if ((r >> (m - 1 - k)) & 1) ++bits;
        chir[r] = (bits % 2 == 0) ? 1 : -1;  // diagonal of sigma3^(x m)
    }
    std::vector<Rat> target(m, Rat(1, 2));
    target[m - 1] = Rat(chirality, 2);
    int label = 0;
    bool found = false;
    for (int r = 0; r < full.dim; ++r)
        if (weight[r] == target) {
            label = chir[r];
            found = true;
            break;
        }
    if (!found) throw std::logic_error("half-spinor highest weight vector not found");

    std::vector<int> keep;
    for (int r = 0; r < full.dim; ++r)
        if (chir[r] == label) keep.push_back(r);

    ExplicitRep rep;
    rep.n = n;
    rep.highest_weight = DominantWeight(n, target);
    rep.dim = static_cast<int>(keep.size());
    rep.gram.assign(rep.dim, Rat(1));
    rep.chain = {std::string("half_spinor(") + (chirality > 0 ? "+" : "-") + ")"};
    for (const auto& g : full.generators) {
        GMat a(rep.dim, rep.dim);
        for (int r = 0; r < rep.dim; ++r)
            for (int c = 0; c < rep.dim; ++c) a(r, c) = g(keep[r], keep[c]);
        // The spin action preserves chirality; anything off-block is a bug.
        for (int r = 0; r < full.dim; ++r)
            for (int c : keep)
                if (chir[r] != label && !is_zero(g(r, c)))
                    throw std::logic_error("spin action does not preserve chirality");
        rep.generators.push_back(std::move(a));
    }
    return rep;
}

ExplicitRep tensor_rep(const ExplicitRep& a, const ExplicitRep& b)
{
    if (a.n != b.n) throw std::invalid_argument("tensor of representations of different so(n)");
    ExplicitRep rep;
    rep.n = a.n;
    rep.dim = a.dim * b.dim;
    rep.highest_weight.reset();  // reducible in general
    rep.gram.resize(rep.dim);
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < b.dim; ++y) rep.gram[x * b.dim + y] = a.gram[x] * b.gram[y];
    const GMat ia = GMat::identity(a.dim), ib = GMat::identity(b.dim);
    for (int k = 0; k < pair_count(a.n); ++k)
        rep.generators.push_back(kron(a.generators[k], ib) + kron(ia, b.generators[k]));
    rep.chain = a.chain;
    rep.chain.push_back("tensor");
    rep.chain.insert(rep.chain.end(), b.chain.begin(), b.chain.end());
    return rep;
}

GMat casimir(const ExplicitRep& rep)
{
    GMat c(rep.dim, rep.dim);
    for (const auto& g : rep.generators) c = c + g * g;
    return c;
}

Rat casimir_eigenvalue(const DominantWeight& lambda)
{
    const auto r = rho(lambda.n());
    Rat c = 0;
    for (int i = 0; i < lambda.rank(); ++i)
        c += lambda.coords()[i] * (lambda.coords()[i] + 2 * r[i]);
    return c;
}

namespace {

GRat gram_inner(const std::vector<Rat>& gram, const GMat& u, std::size_t ucol, const GMat& v,
                std::size_t vcol)
{
    GRat s;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (is_zero(u(i, ucol)) || is_zero(v(i, vcol))) continue;
        s += conj(u(i, ucol)) * GRat(gram[i]) * v(i, vcol);
    }
    return s;
}

}  // namespace

ExplicitRep cartan_extract(const ExplicitRep& tens, const DominantWeight& target)
{
    const Rat c = casimir_eigenvalue(target);
    const GMat shifted = casimir(tens).add_scalar_diag(GRat(c));
    GMat basis = shifted.kernel_basis();
    const long long expect = weyl_dim(target);
    if (static_cast<long long>(basis.cols()) != expect)
        throw std::logic_error("top Casimir eigenspace has dimension " +
                               std::to_string(basis.cols()) + ", expected " + std::to_string(expect));

    // Unnormalized Gram-Schmidt keeps everything rational; norms go to gram.
    const std::size_t d = basis.cols();
    const std::size_t big = basis.rows();
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < k; ++l) {
            const GRat num = gram_inner(tens.gram, basis, l, basis, k);
            if (is_zero(num)) continue;
            const GRat coef = num / gram_inner(tens.gram, basis, l, basis, l);
            for (std::size_t i = 0; i < big; ++i) basis(i, k) -= coef * basis(i, l);
        }
    }

    ExplicitRep rep;
    rep.n = tens.n;
    rep.highest_weight = target;
    rep.dim = static_cast<int>(d);
    rep.gram.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
        const GRat nrm = gram_inner(tens.gram, basis, k, basis, k);
        if (nrm.im != 0 || nrm.re <= 0) throw std::logic_error("degenerate Gram after extraction");
        rep.gram[k] = nrm.re;
    }
    for (const auto& g : tens.generators) {
        const GMat w = g * basis;
        GMat coords(d, d);
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t k = 0; k < d; ++k)
                coords(l, k) = gram_inner(tens.gram, basis, l, w, k) / GRat(rep.gram[l]);
        if (!(basis * coords == w))
            throw std::logic_error("extracted subspace is not invariant under the action");
        rep.generators.push_back(std::move(coords));
    }
    rep.chain = tens.chain;
    rep.chain.push_back("cartan(" + target.to_string() + ")");
    return rep;
}

ExplicitRep mirror_rep(const ExplicitRep& rep)
{
    if (rep.n % 2) throw std::invalid_argument("mirror_rep applies to n even");
    ExplicitRep out = rep;
    for (int i = 1; i < rep.n; ++i)
        out.generators[pair_index(rep.n, i, rep.n)] = -rep.generator(i, rep.n);
    if (rep.highest_weight) {
        auto hw = rep.hw().coords();
        hw.back() = -hw.back();
        out.highest_weight = DominantWeight(rep.n, std::move(hw));
    }
    out.chain.push_back("mirror");
    return out;
}

ExplicitRep build_rep(const DominantWeight& lambda, const BuildOptions& opts)
{
    const int n = lambda.n();
    const int m = lambda.rank();

    if (lambda.is_zero()) return trivial_rep(n);
    {
        const long long d = weyl_dim(lambda);
        if (d > opts.dim_cap)
            throw std::runtime_error("dim cap exceeded: dim V_lambda = " + std::to_string(d) +
                                     " > " + std::to_string(opts.dim_cap) +
                                     "; raise --dim-cap to build this representation");
    }

    // Direct constructions: exterior powers and gamma-matrix spinors.
    {
        int p = 0;
        bool pform = true;
        for (int i = 0; i < m; ++i) {
            if (lambda.coords()[i] == 1 && i == p)
                ++p;
            else if (lambda.coords()[i] != 0)
                pform = false;
        }
        if (pform && p >= 1 && (p <= m - 1 || (n % 2 == 1 && p == m)))
            return exterior_power_rep(n, p);

        const bool spin_body = std::all_of(lambda.coords().begin(), lambda.coords().end() - 1,
                                           [](const Rat& c) { return c == Rat(1, 2); });
        if (spin_body && lambda.coord(m) == Rat(1, 2))
            return n % 2 == 1 ? spinor_rep(n) : half_spinor_rep(n, +1);
        if (spin_body && n % 2 == 0 && lambda.coord(m) == Rat(-1, 2)) return half_spinor_rep(n, -1);
    }

    if (n % 2 == 0 && lambda.coord(m) < 0) {
        auto flipped = lambda.coords();
        flipped.back() = -flipped.back();
        return mirror_rep(build_rep(DominantWeight(n, std::move(flipped)), opts));
    }

    // Chain: lambda = sum of fundamental factors, folded by Cartan extraction.
    std::vector<ExplicitRep> factors;
    std::vector<Rat> rest = lambda.coords();
    if (lambda.integrality() == Integrality::half_integral) {
        factors.push_back(n % 2 == 1 ? spinor_rep(n) : half_spinor_rep(n, +1));
        for (int i = 0; i < m; ++i) rest[i] -= Rat(1, 2);
    }
    for (int p = 1; p <= m - 1; ++p) {
        const Rat count = rest[p - 1] - rest[p];
        for (Rat k = 0; k < count; k += 1) factors.push_back(exterior_power_rep(n, p));
    }
    for (Rat k = 0; k < rest[m - 1]; k += 1) {
        if (n % 2 == 1) {
            factors.push_back(exterior_power_rep(n, m));
        } else {
            // (1,...,1) realized as the Cartan summand of S+ (x) S+.
            const ExplicitRep s = half_spinor_rep(n, +1);
            factors.push_back(cartan_extract(tensor_rep(s, s),
                                             DominantWeight(n, std::vector<Rat>(m, Rat(1)))));
        }
    }
    if (factors.empty()) throw std::logic_error("empty factor chain for nonzero weight");

    std::sort(factors.begin(), factors.end(),
              [](const ExplicitRep& a, const ExplicitRep& b) { return a.dim > b.dim; });
    ExplicitRep current = std::move(factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k) {
        const long long tensor_dim = static_cast<long long>(current.dim) * factors[k].dim;
        if (tensor_dim > opts.dim_cap)
            throw std::runtime_error("dim cap exceeded: intermediate tensor of dimension " +
                                     std::to_string(tensor_dim) + " > " +
                                     std::to_string(opts.dim_cap));
        const DominantWeight target = weight_sum(current.hw(), factors[k].hw());
        current = cartan_extract(tensor_rep(current, factors[k]), target);
    }
    if (!(current.hw() == lambda)) throw std::logic_error("chain builder produced the wrong weight");
    return current;
}

void validate_rep(const ExplicitRep& rep)
{
    if (static_cast<int>(rep.generators.size()) != pair_count(rep.n))
        throw std::logic_error("wrong number of generators");
    for (const auto& g : rep.generators) {
        if (g.rows() != static_cast<std::size_t>(rep.dim) || g.cols() != g.rows())
            throw std::logic_error("generator shape mismatch");
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j)
                if (conj(g(j, i)) * GRat(rep.gram[j]) + GRat(rep.gram[i]) * g(i, j) != GRat(0))
                    throw std::logic_error("generator is not skew-adjoint for the Gram form");
    }
    for (int i = 1; i <= rep.n; ++i)
        for (int j = i + 1; j <= rep.n; ++j)
            for (int k = 1; k <= rep.n; ++k)
                for (int l = k + 1; l <= rep.n; ++l) {
                    const GMat lhs =
                        rep.generator(i, j) * rep.generator(k, l) - rep.generator(k, l) * rep.generator(i, j);
                    GMat rhs(rep.dim, rep.dim);
                    auto add = [&](int a, int b, int sign) {
                        if (a == b) return;
                        rhs = sign > 0 ? rhs + rep.action(a, b) : rhs - rep.action(a, b);
                    };
                    if (i == k) add(j, l, +1);
                    if (j == l) add(i, k, +1);
                    if (j == k) add(i, l, -1);
                    if (i == l) add(j, k, -1);
                    if (!(lhs == rhs)) throw std::logic_error("bracket relations fail");
                }
    if (rep.highest_weight) {
        if (weyl_dim(rep.hw()) != rep.dim) throw std::logic_error("dimension mismatch with Weyl formula");
        const GMat cas = casimir(rep);
        const GMat expect = GRat(-casimir_eigenvalue(rep.hw())) * GMat::identity(rep.dim);
        if (!(cas == expect)) throw std::logic_error("Casimir is not the expected scalar");
    }
}

GMat conformal_operator(const ExplicitRep& rep)
{
    const int n = rep.n;
    const int d = rep.dim;
    GMat b(n * d, n * d);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const GMat a = rep.action(i, j);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    if (!is_zero(a(r, c))) b((i - 1) * d + r, (j - 1) * d + c) = a(r, c);
        }
    return b;
}

GMat translated_conformal_operator(const ExplicitRep& rep)
{
    return conformal_operator(rep).add_scalar_diag(GRat(Rat(rep.n - 1, 2)));
}

std::vector<SpectrumLine> expected_spectrum(const TargetDecomposition& t)
{
    std::vector<SpectrumLine> out;
    const DominantWeight& lambda = t.lambda();
    for (const auto& s : t.summands()) {
        long long mult = weyl_dim(DominantWeight(lambda.n(), lambda.shifted_coords(s.epsilon)));
        if (s.merged)
            mult += weyl_dim(DominantWeight(
                lambda.n(), lambda.shifted_coords({-s.epsilon.sign, s.epsilon.index})));
        out.push_back({s.wtilde, mult});
    }
    return out;
}

std::vector<GMat> spectral_projections(const ExplicitRep& rep, const TargetDecomposition& t)
{
    if (!(rep.hw() == t.lambda())) throw std::invalid_argument("rep/targets weight mismatch");
    const GMat btilde = translated_conformal_operator(rep);
    const auto lines = expected_spectrum(t);
    const std::size_t nd = btilde.rows();

    long long total = 0;
    for (const auto& line : lines) total += line.multiplicity;
    if (total != static_cast<long long>(nd))
        throw std::logic_error("expected multiplicities do not fill T* (x) V");

    std::vector<GMat> projections;
    for (std::size_t j = 0; j < lines.size(); ++j) {
        GMat p = GMat::identity(nd);
        for (std::size_t k = 0; k < lines.size(); ++k) {
            if (k == j) continue;
            const GRat scale = GRat(1) / GRat(lines[j].wtilde - lines[k].wtilde);
            p = p * (scale * btilde.add_scalar_diag(GRat(-lines[k].wtilde)));
        }
        projections.push_back(std::move(p));
    }

    GMat sum(nd, nd);
    for (const auto& p : projections) sum = sum + p;
    if (!(sum == GMat::identity(nd)))
        throw std::logic_error(
            "spectral projections do not sum to the identity; the conformal weight operator has an "
            "unexpected eigenvalue (wrong action normalization?)");
    for (std::size_t a = 0; a < projections.size(); ++a) {
        if (!(btilde * projections[a] == GRat(lines[a].wtilde) * projections[a]))
            throw std::logic_error("projection does not land in the expected eigenspace");
        for (std::size_t b = a + 1; b < projections.size(); ++b)
            if (!(projections[a] * projections[b]).is_zero())
                throw std::logic_error("spectral projections are not mutually orthogonal");
        const auto rank = static_cast<long long>(projections[a].rank());
        if (rank != lines[a].multiplicity)
            throw std::logic_error("eigenspace multiplicity mismatch: target " +
                                   t.by_index(static_cast<int>(a) + 1).epsilon_name() + " has rank " +
                                   std::to_string(rank) + ", expected " +
                                   std::to_string(lines[a].multiplicity));
    }
    return projections;
}

namespace {

GMat symbol_matrix(const ExplicitRep& rep, const std::vector<GMat>& projections, const IndexSet& I)
{
    const int d = rep.dim;
    const std::size_t nd = projections.front().rows();
    GMat s(nd, d);
    for (const int i : I) {
        const GMat& p = projections[i - 1];
        for (std::size_t r = 0; r < nd; ++r)
            for (int c = 0; c < d; ++c) s(r, c) += p(r, (rep.n - 1) * d + c);
    }
    return s;
}

}  // namespace

SymbolRank symbol_rank(const ExplicitRep& rep, const TargetDecomposition& t,
                       const std::vector<GMat>& projections, const IndexSet& I)
{
    if (I.empty()) throw std::invalid_argument("symbol_rank: I must be nonempty");
    for (const int i : I)
        if (i < 1 || i > t.N()) throw std::invalid_argument("symbol_rank: index out of range");
    const GMat s = symbol_matrix(rep, projections, I);
    SymbolRank out;
    out.dim = rep.dim;
    out.rank = static_cast<int>(s.rank());
    out.elliptic = out.rank == out.dim;
    return out;
}

KatoExactResult kato_exact(const ExplicitRep& rep, const TargetDecomposition& t,
                           const std::vector<GMat>& projections, const IndexSet& I,
                           const std::optional<Rat>& candidate_c2)
{
    const GMat s = symbol_matrix(rep, projections, I);
    const int d = rep.dim;
    const std::size_t nd = s.rows();

    // Rayleigh form: min |Pi_I(e_n (x) v)|^2 / |v|^2 = min eigenvalue of
    // G^-1 S^H G~ S, with G the diagonal Gram of V and G~ its extension.
    GMat h(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            GRat acc;
            for (std::size_t r = 0; r < nd; ++r) {
                if (is_zero(s(r, a)) || is_zero(s(r, b))) continue;
                acc += conj(s(r, a)) * GRat(rep.gram[r % d]) * s(r, b);
            }
            h(a, b) = acc / GRat(rep.gram[a]);
        }

    const auto coeffs = charpoly(h);
    std::vector<Rat> real_coeffs(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].im != 0) throw std::logic_error("characteristic polynomial is not real");
        real_coeffs[k] = coeffs[k].re;
    }
    const Poly p = Poly::from_coeffs(std::move(real_coeffs));

    // All eigenvalues lie in [0, 1]: the form is a Gram restriction of a
    // projection. Anything outside signals broken Gram bookkeeping.
    Rat bound = 2;  // Cauchy root bound for the monic p
    for (const auto& ck : p.c) {
        const Rat a = ck < 0 ? Rat(-ck) : ck;
        if (1 + a > bound) bound = 1 + a;
    }
    if (count_roots_in(p, -bound, Rat(0)) != (p.eval(0) == 0 ? 1 : 0) ||
        count_roots_in(p, Rat(1), bound) != 0)
        throw std::logic_error("symbol Gram eigenvalues escape [0, 1]");

    KatoExactResult out;
    out.elliptic = p.eval(0) != 0;

    if (candidate_c2) {
        const Rat target = 1 - *candidate_c2;  // candidate minimal eigenvalue
        const bool hit = (target == 0) ? p.eval(0) == 0
                                       : (p.eval(target) == 0 &&
                                          count_roots_in(p, Rat(-1), target) == 1);
        if (hit) {
            out.matches_candidate = true;
            out.k2_exact = *candidate_c2;
            out.k2_lo = out.k2_hi = *candidate_c2;
            out.k2_approx = RootBracket{target, target, target}.midpoint();
            out.k2_approx = 1.0 - out.k2_approx;
            return out;
        }
    }

    const auto bracket = smallest_root(p, Rat(-1), Rat(2), Rat(1, BigInt("1000000000000000000")));
    if (!bracket) throw std::logic_error("symbol Gram form has no eigenvalue");
    out.k2_lo = 1 - bracket->hi;
    out.k2_hi = 1 - bracket->lo;
    if (bracket->exact) out.k2_exact = 1 - *bracket->exact;
    out.k2_approx = 1.0 - bracket->midpoint();
    return out;
}

std::string rep_to_json(const ExplicitRep& rep)
{
    nlohmann::json j;
    j["schema"] = "ellgrad.rep/1";
    j["n"] = rep.n;
    j["highest_weight"] = rep.highest_weight ? rep.hw().to_string() : "";
    j["dim"] = rep.dim;
    j["chain"] = rep.chain;
    auto& gram = j["gram"] = nlohmann::json::array();
    for (const auto& g : rep.gram) gram.push_back(rat_to_string(g));
    auto& gens = j["generators"] = nlohmann::json::array();
    for (const auto& g : rep.generators) {
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c) {
                if (is_zero(g(r, c))) continue;
                entries.push_back({r, c, rat_to_string(g(r, c).re), rat_to_string(g(r, c).im)});
            }
        gens.push_back(std::move(entries));
    }
    return j.dump();
}

ExplicitRep rep_from_json(const std::string& text)
{
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("schema") != "ellgrad.rep/1") throw std::invalid_argument("unknown rep cache schema");
    ExplicitRep rep;
    rep.n = j.at("n").get<int>();
    rep.dim = j.at("dim").get<int>();
    const std::string hw = j.at("highest_weight").get<std::string>();
    if (!hw.empty()) rep.highest_weight = DominantWeight::parse(rep.n, hw);
    rep.chain = j.at("chain").get<std::vector<std::string>>();
    for (const auto& g : j.at("gram")) rep.gram.push_back(parse_rat(g.get<std::string>()));
    for (const auto& gen : j.at("generators")) {
        GMat a(rep.dim, rep.dim);
        for (const auto& e : gen)
            a(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()) =
                GRat(parse_rat(e.at(2).get<std::string>()), parse_rat(e.at(3).get<std::string>()));
        rep.generators.push_back(std::move(a));
    }
    return rep;
}

}  // namespace ellgrad
