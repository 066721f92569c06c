#include "dp5/arith.hpp"

#include <stdexcept>

namespace dp5 {

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Integer q = a / b;
    Integer r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer floor(const Rational& r) { return floor_div(numer(r), denom(r)); }

static Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i == s.size()) throw std::invalid_argument("malformed number: " + std::string(whole));
    Integer v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed number: " + std::string(whole));
        v = v * 10 + (s[i] - '0');
    }
    return neg ? Integer(-v) : v;
}

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
    Integer p = parse_integer(s.substr(0, slash), s);
    auto qs = s.substr(slash + 1);
    if (!qs.empty() && (qs[0] == '-' || qs[0] == '+'))
        throw std::invalid_argument("malformed number: " + std::string(s));
    Integer q = parse_integer(qs, s);
    if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    return Rational(p, q);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
    if (is_integral(r)) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

long to_long(const Integer& z) {
    if (z > Integer(std::numeric_limits<long>::max()) || z < Integer(std::numeric_limits<long>::min()))
        throw std::overflow_error("integer out of machine range");
    return z.convert_to<long>();
}

}  // namespace dp5
