#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace nvk {

/// Exact rational number on int64 with overflow-checked arithmetic.
/// Used for actions, action gaps and bar lengths, so that comparisons
/// and doublings are exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    static Rational from_double(double x);           // exact dyadic conversion
    static Rational parse(const std::string& text);  // "p/q", "-3", "1.25"

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    // remainder in [0, m) under subtraction of integer multiples of m > 0
    Rational mod(const Rational& m) const;
    std::int64_t floor_div(const Rational& m) const;

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p/q" for non-integers, plain integer otherwise
    std::string str() const;
    // decimal string when the denominator is 2^a*5^b, else str()
    std::string decimal_str() const;

private:
    std::int64_t num_;
    std::int64_t den_;  // > 0

    void normalize();
};

}  // namespace nvk
