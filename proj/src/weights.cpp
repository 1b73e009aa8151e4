#include "ellgrad/weights.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ellgrad {

std::string RelevantWeight::name() const
{
    if (is_zero()) return "0";
    return std::string(sign > 0 ? "+e" : "-e") + std::to_string(index);
}

RelevantWeight eps_plus(int j) { return {+1, j}; }
RelevantWeight eps_minus(int j) { return {-1, j}; }
RelevantWeight eps_zero() { return {0, 0}; }

RelevantWeight parse_weight_name(const std::string& s)
{
    if (s == "0") return eps_zero();
    std::size_t i = 0;
    int sign = +1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) sign = (s[i++] == '+') ? +1 : -1;
    if (i >= s.size() || s[i] != 'e') throw std::invalid_argument("bad weight name: " + s);
    ++i;
    if (i >= s.size()) throw std::invalid_argument("bad weight name: " + s);
    int idx = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad weight name: " + s);
        idx = idx * 10 + (s[i] - '0');
    }
    if (idx < 1) throw std::invalid_argument("bad weight name: " + s);
    return {sign, idx};
}

bool DominantWeight::is_dominant(int n, const std::vector<Rat>& coords)
{
    const int m = n / 2;
    if (n < 2 || static_cast<int>(coords.size()) != m)
        throw std::invalid_argument("weight length must be floor(n/2), n >= 2");
    bool all_int = true, all_half = true;
    for (const auto& c : coords) {
        all_int = all_int && rat_is_integer(c);
        all_half = all_half && rat_is_half_odd(c);
    }
    if (!all_int && !all_half) return false;
    if (n == 2) return true;  // so(2) branching targets: any single coordinate
    for (int i = 0; i + 1 < m - 1; ++i)
        if (coords[i] < coords[i + 1]) return false;
    if (m >= 2) {
        Rat last = coords[m - 1];
        if (n % 2 == 0 && last < 0) last = -last;
        if (coords[m - 2] < last) return false;
    }
    if (n % 2 && coords[m - 1] < 0) return false;
    return true;
}

DominantWeight::DominantWeight(int n, std::vector<Rat> coords) : n_(n), coords_(std::move(coords))
{
    if (!is_dominant(n_, coords_)) {
        std::string s;
        for (const auto& c : coords_) s += (s.empty() ? "" : ",") + rat_to_string(c);
        throw std::invalid_argument("not a dominant weight for so(" + std::to_string(n) + "): " + s);
    }
}

DominantWeight DominantWeight::parse(int n, const std::string& text)
{
    std::vector<Rat> coords;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(parse_rat(tok));
    return DominantWeight(n, std::move(coords));
}

const Rat& DominantWeight::coord(int i) const
{
    if (i < 1 || i > rank()) throw std::out_of_range("weight coordinate index");
    return coords_[i - 1];
}

bool DominantWeight::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

Integrality DominantWeight::integrality() const
{
    return rat_is_integer(coords_[0]) ? Integrality::integral : Integrality::half_integral;
}

std::string DominantWeight::to_string() const
{
    std::string s;
    for (const auto& c : coords_) s += (s.empty() ? "" : ",") + rat_to_string(c);
    return s;
}

std::vector<Rat> DominantWeight::shifted_coords(const RelevantWeight& eps) const
{
    std::vector<Rat> out = coords_;
    if (!eps.is_zero()) {
        if (eps.index < 1 || eps.index > rank()) throw std::out_of_range("epsilon index");
        out[eps.index - 1] += eps.sign;
    }
    return out;
}

bool DominantWeight::shift_is_dominant(const RelevantWeight& eps) const
{
    const auto shifted = shifted_coords(eps);
    return is_dominant(n_, shifted);
}

std::vector<RelevantWeight> relevant_weights(const DominantWeight& lambda)
{
    const int n = lambda.n();
    const int m = lambda.rank();
    std::vector<RelevantWeight> out;
    for (int j = 1; j <= m; ++j)
        for (int sign : {+1, -1}) {
            const RelevantWeight eps{sign, j};
            if (lambda.shift_is_dominant(eps)) out.push_back(eps);
        }
    if (n % 2 == 1 && lambda.coord(m) > 0) out.push_back(eps_zero());
    return out;
}

std::vector<RelevantWeight> BoxStructure::expanded_contents() const
{
    std::vector<RelevantWeight> out;
    auto add = [&out](const BoxEntry& e) {
        out.push_back(e.eps);
        if (e.merged) out.push_back({-e.eps.sign, e.eps.index});
    };
    for (const auto& p : pairs) {
        add(p[0]);
        add(p[1]);
    }
    for (const auto& s : singletons) add(s);
    return out;
}

BoxStructure box_structure(const DominantWeight& lambda)
{
    const int n = lambda.n();
    const int m = lambda.rank();
    BoxStructure box;
    box.singletons.push_back({eps_plus(1), false});

    const int inner_pairs = (n % 2) ? m - 1 : m - 2;
    for (int i = 1; i <= inner_pairs; ++i)
        if (lambda.coord(i) > lambda.coord(i + 1))
            box.pairs.push_back({BoxEntry{eps_minus(i)}, BoxEntry{eps_plus(i + 1)}});

    const Rat& lm = lambda.coord(m);
    if (n % 2 == 1) {
        // Last box {-e_m, 0}; for l_m = 1/2 only the zero weight survives.
        if (lm >= 1)
            box.pairs.push_back({BoxEntry{eps_minus(m)}, BoxEntry{eps_zero()}});
        else if (lm > 0)
            box.singletons.push_back({eps_zero(), false});
    } else {
        const Rat& lprev = lambda.coord(m - 1);
        if (lm > 0) {
            if (lprev > lm) box.pairs.push_back({BoxEntry{eps_minus(m - 1)}, BoxEntry{eps_plus(m)}});
            box.singletons.push_back({eps_minus(m), false});
        } else if (lm < 0) {
            if (lprev > -lm) box.pairs.push_back({BoxEntry{eps_minus(m - 1)}, BoxEntry{eps_minus(m)}});
            box.singletons.push_back({eps_plus(m), false});
        } else if (lprev > 0) {
            // l_m = 0: +-e_m carry equal translated weights and act as one summand.
            box.pairs.push_back({BoxEntry{eps_minus(m - 1)}, BoxEntry{eps_plus(m), true}});
        }
    }
    return box;
}

}  // namespace ellgrad
