#include "ellgrad/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace ellgrad {

SweepConfig parse_sweep_spec(const std::string& spec)
{
    SweepConfig cfg;
    std::stringstream ss(spec);
    std::string tok;
    const auto strip = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };
    while (std::getline(ss, tok, ',')) {
        tok = strip(tok);
        if (tok.empty()) continue;
        const auto pos = tok.find("<=");
        if (pos == std::string::npos) throw std::invalid_argument("bad sweep clause: " + tok);
        const std::string key = strip(tok.substr(0, pos));
        const std::string val = strip(tok.substr(pos + 2));
        if (key == "n")
            cfg.n_max = static_cast<int>(rat_to_ll(parse_rat(val)));
        else if (key == "l1")
            cfg.lambda1_max = parse_rat(val);
        else
            throw std::invalid_argument("unknown sweep key: " + key);
    }
    if (cfg.n_max < cfg.n_min) throw std::invalid_argument("sweep needs n >= 3");
    return cfg;
}

std::vector<DominantWeight> sweep_corpus(const SweepConfig& cfg)
{
    std::vector<DominantWeight> out;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const int m = n / 2;
        for (const Rat base : {Rat(0), Rat(1, 2)}) {
            Rat top = cfg.lambda1_max;
            if (rat_is_integer(top) != rat_is_integer(base)) top -= Rat(1, 2);
            if (top < base) continue;

            std::vector<Rat> coords(m);
            std::function<void(int, const Rat&)> rec = [&](int pos, const Rat& hi) {
                if (pos == m) {
                    out.emplace_back(n, coords);
                    return;
                }
                const Rat lo = (pos == m - 1 && n % 2 == 0) ? Rat(-hi) : base;
                for (Rat v = hi; v >= lo; v -= 1) {
                    coords[pos] = v;
                    rec(pos + 1, v);
                }
            };
            rec(0, top);
        }
    }
    if (!cfg.include_zero)
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const DominantWeight& w) { return w.is_zero(); }),
                  out.end());
    return out;
}

}  // namespace ellgrad
