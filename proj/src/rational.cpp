#include "ellgrad/rational.hpp"

#include <cctype>

namespace ellgrad {

std::string rat_to_string(const Rat& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

Rat parse_rat(std::string_view text)
{
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto is_int_literal = [](const std::string& t) {
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int_literal(s)) throw std::invalid_argument("bad rational literal: " + s);
        return Rat(BigInt(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_int_literal(num) || !is_int_literal(den))
        throw std::invalid_argument("bad rational literal: " + s);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(BigInt(num), d);
}

long long rat_to_ll(const Rat& q)
{
    if (!rat_is_integer(q)) throw std::invalid_argument("not an integer: " + rat_to_string(q));
    const BigInt n = numerator(q);
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer out of range: " + n.str());
    return n.convert_to<long long>();
}

}  // namespace ellgrad
