#include "gls/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gls {

Int binomial(const Int& n, unsigned k) {
    if (k == 0) return 1;
    if (n < k) return 0;
    Int num = 1;
    Int den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den; // exact: den | num
}

Int gcd(Int a, Int b) {
    return boost::multiprecision::gcd(a, b);
}

Int parse_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("malformed integer: " + text);
    for (; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed integer: " + text);
    return Int(text);
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int p = parse_int(text.substr(0, slash));
        Int q = parse_int(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rat(p, q);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string tail = text.substr(dot + 1);
        if (tail.empty()) return Rat(parse_int(head));
        bool neg = !head.empty() && head[0] == '-';
        Int ip = head.empty() || head == "-" || head == "+" ? Int(0) : parse_int(head);
        Int frac = parse_int(tail);
        Int scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Rat r = Rat(boost::multiprecision::abs(ip)) + Rat(frac, scale);
        return neg ? Rat(-r) : r;
    }
    return Rat(parse_int(text));
}

std::string to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const Int& n) { return n.str(); }

std::optional<std::int64_t> to_int64(const Int& n) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi) return std::nullopt;
    return static_cast<std::int64_t>(n);
}

} // namespace gls
