#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace pcg {

// Exact rational arithmetic on every decision path. Membership verdicts and
// witness checks compare path sums against bounds where equality matters, so
// nothing here is ever evaluated in floating point.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Upper distance bound; +infinity encodes the "lower bound only" regime.
class UpperBound {
public:
    UpperBound(Rational value) : value_(std::move(value)), infinite_(false) {}
    UpperBound(int value) : value_(value), infinite_(false) {}

    static UpperBound infinity() { return UpperBound(infinite_tag{}); }

    bool is_infinite() const { return infinite_; }

    const Rational& value() const {
        if (infinite_)
            throw std::logic_error("UpperBound: value() of +infinity");
        return value_;
    }

    // d <= bound
    bool admits(const Rational& d) const { return infinite_ || d <= value_; }

    bool operator==(const UpperBound& other) const {
        if (infinite_ != other.infinite_) return false;
        return infinite_ || value_ == other.value_;
    }

private:
    struct infinite_tag {};
    explicit UpperBound(infinite_tag) : value_(0), infinite_(true) {}

    Rational value_;
    bool infinite_;
};

// "3", "-7/2"
std::string format_rational(const Rational& r);
// as above, or "inf"
std::string format_bound(const UpperBound& b);

// Accepts an optionally signed integer or p/q fraction. Decimals are
// rejected: every quantity in this library is an exact rational.
Rational parse_rational(const std::string& text);
UpperBound parse_bound(const std::string& text);

}  // namespace pcg
