#include "nvk/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace nvk {

namespace {

std::int64_t checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("Rational: int64 overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite input");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral
    std::int64_t mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    while (exp > 0) { r = r * Rational(2); --exp; }
    while (exp < 0) { r = r / Rational(2); ++exp; }
    return r;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = std::stoll(text.substr(0, slash));
        std::int64_t d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    bool neg = text[0] == '-';
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (neg) digits = digits.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("Rational: bad decimal '" + text + "'");
    std::int64_t n = 0, d = 1;
    for (char c : digits) {
        n = checked(static_cast<__int128>(n) * 10 + (c - '0'));
    }
    for (std::size_t i = dot + 1; i < text.size(); ++i) d = checked(static_cast<__int128>(d) * 10);
    return Rational(neg ? -n : n, d);
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    __int128 g = 1;
    {
        // reduce before the int64 check to dodge avoidable overflow
        std::int64_t gd = std::gcd(den_, o.den_);
        if (gd > 1) { g = gd; }
    }
    return Rational(checked(n / g), checked(d / g));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    return Rational(checked(n), checked(d));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 l = static_cast<__int128>(num_) * o.den_;
    __int128 r = static_cast<__int128>(o.num_) * den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Rational::floor_div(const Rational& m) const {
    if (m.sign() <= 0) throw std::domain_error("Rational: floor_div by non-positive");
    // floor((num/den) / (m.num/m.den)) = floor(num*m.den / (den*m.num))
    __int128 a = static_cast<__int128>(num_) * m.den_;
    __int128 b = static_cast<__int128>(den_) * m.num_;
    __int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return checked(q);
}

Rational Rational::mod(const Rational& m) const {
    std::int64_t q = floor_div(m);
    return *this - m * Rational(q);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal_str() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return str();
    int digits = twos > fives ? twos : fives;
    __int128 scaled = num_;
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= den_;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s;
    for (__int128 v = scaled; v > 0 || s.empty(); v /= 10) s.insert(s.begin(), static_cast<char>('0' + int(v % 10)));
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace nvk
