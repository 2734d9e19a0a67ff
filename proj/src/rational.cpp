#include "pcg/rational.hpp"

#include "pcg/errors.hpp"

#include <cctype>

namespace pcg {

std::string format_rational(const Rational& r) {
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string format_bound(const UpperBound& b) {
    if (b.is_infinite()) return "inf";
    return format_rational(b.value());
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    const auto slash = s.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string::npos) {
        if (!all_digits(s))
            throw ParseError("expected integer or p/q rational, got '" + text + "'", 0);
        num = Integer(s);
    } else {
        const std::string p = s.substr(0, slash);
        const std::string q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw ParseError("expected integer or p/q rational, got '" + text + "'", 0);
        num = Integer(p);
        den = Integer(q);
        if (den == 0)
            throw ParseError("zero denominator in '" + text + "'", 0);
    }
    Rational r(num, den);
    if (negative) r = -r;
    return r;
}

UpperBound parse_bound(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "infinity")
        return UpperBound::infinity();
    return UpperBound(parse_rational(text));
}

}  // namespace pcg
