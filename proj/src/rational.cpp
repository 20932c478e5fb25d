#include "stabregion/rational.hpp"

#include <cctype>

namespace stabreg {

Int floor(const Rational& q) {
    const Int n = numerator(q);
    const Int d = denominator(q);  // > 0 in canonical form
    Int quo = n / d;               // truncates toward zero
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

Int ceil(const Rational& q) { return floor(q) + 1; }

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Int floor_sum_defect(const Rational& x, const Rational& y) {
    return floor(x + y) - floor(x) - floor(y);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.find('.') != std::string::npos) {
        throw std::invalid_argument("decimal input is not exact, write '" + text +
                                    "' as a fraction p/q");
    }
    const auto slash = s.find('/');
    Int num, den = 1;
    if (slash == std::string::npos) {
        if (!all_digits(s)) throw std::invalid_argument("not a rational: '" + text + "'");
        num = Int(s);
    } else {
        const std::string ns = s.substr(0, slash);
        const std::string ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds)) {
            throw std::invalid_argument("not a rational: '" + text + "'");
        }
        num = Int(ns);
        den = Int(ds);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string format_int(const Int& n) { return n.str(); }

Int parse_int(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + text + "'");
    Int n(s);
    return negative ? -n : n;
}

}  // namespace stabreg
