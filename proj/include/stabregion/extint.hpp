#pragma once

#include "stabregion/rational.hpp"

#include <stdexcept>
#include <string>

namespace stabreg {

// Integer extended with +infinity. Hom degree data uses +inf to encode an
// empty hom space; all constraints compared against +inf are vacuous.
// There is no -infinity, so the sums formed here never reach inf - inf.
class ExtInt {
public:
    ExtInt() : finite_(true), value_(0) {}
    ExtInt(int v) : finite_(true), value_(v) {}
    ExtInt(long long v) : finite_(true), value_(v) {}
    ExtInt(Int v) : finite_(true), value_(std::move(v)) {}

    static ExtInt inf() {
        ExtInt e;
        e.finite_ = false;
        return e;
    }

    bool finite() const { return finite_; }

    const Int& value() const {
        if (!finite_) throw std::domain_error("ExtInt: value() on +inf");
        return value_;
    }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (!a.finite_) return false;        // inf < anything is false
        if (!b.finite_) return true;         // finite < inf
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

    friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
        if (!a.finite_ || !b.finite_) return inf();
        return ExtInt(a.value_ + b.value_);
    }
    friend ExtInt operator+(const ExtInt& a, int b) { return a + ExtInt(b); }
    friend ExtInt operator-(const ExtInt& a, int b) {
        if (!a.finite_) return inf();
        return ExtInt(a.value_ - b);
    }

private:
    bool finite_;
    Int value_;
};

inline ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

// Comparisons of exact scalars against a possibly infinite bound.
inline bool operator<(const Rational& q, const ExtInt& b) {
    return !b.finite() || q < Rational(b.value());
}
inline bool operator<(const Int& n, const ExtInt& b) { return !b.finite() || n < b.value(); }
inline bool operator<=(const Int& n, const ExtInt& b) { return !b.finite() || n <= b.value(); }
inline bool operator==(const Int& n, const ExtInt& b) { return b.finite() && n == b.value(); }
inline bool operator==(const ExtInt& b, const Int& n) { return n == b; }

// "inf" or an integer string.
ExtInt parse_extint(const std::string& text);
std::string format_extint(const ExtInt& e);

}  // namespace stabreg
