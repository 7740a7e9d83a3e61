#include "nvk/scalar.hpp"

#include <bit>
#include <cstddef>
#include <stdexcept>

namespace nvk {

// ---------------------------------------------------------------------------
// F2Poly

void F2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void F2Poly::set(std::int64_t k) {
    std::size_t w = static_cast<std::size_t>(k / 64);
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= (std::uint64_t{1} << (k % 64));
}

F2Poly F2Poly::monomial(std::int64_t degree) {
    if (degree < 0) throw std::domain_error("F2Poly: negative degree");
    F2Poly p;
    p.set(degree);
    return p;
}

F2Poly F2Poly::from_coeffs(const std::vector<std::int64_t>& degrees) {
    F2Poly p;
    for (auto d : degrees) {
        if (d < 0) throw std::domain_error("F2Poly: negative degree");
        p.set(d);
    }
    p.trim();
    return p;
}

std::int64_t F2Poly::degree() const {
    if (words_.empty()) return -1;
    std::uint64_t top = words_.back();
    return static_cast<std::int64_t>((words_.size() - 1) * 64 + (63 - std::countl_zero(top)));
}

std::int64_t F2Poly::trailing() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<std::int64_t>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

bool F2Poly::coeff(std::int64_t k) const {
    if (k < 0) return false;
    std::size_t w = static_cast<std::size_t>(k / 64);
    if (w >= words_.size()) return false;
    return (words_[w] >> (k % 64)) & 1;
}

std::vector<std::int64_t> F2Poly::support() const {
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t v = words_[w];
        while (v) {
            int b = std::countr_zero(v);
            out.push_back(static_cast<std::int64_t>(w * 64 + b));
            v &= v - 1;
        }
    }
    return out;
}

int F2Poly::term_count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
    F2Poly r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i];
    for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
}

F2Poly F2Poly::shl(std::int64_t k) const {
    if (k < 0) throw std::domain_error("F2Poly::shl: negative shift");
    if (is_zero() || k == 0) return *this;
    F2Poly r;
    std::size_t wshift = static_cast<std::size_t>(k / 64);
    int bshift = static_cast<int>(k % 64);
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] |= words_[i] << bshift;
        if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (64 - bshift);
    }
    r.trim();
    return r;
}

F2Poly F2Poly::shr(std::int64_t k) const {
    if (k < 0) throw std::domain_error("F2Poly::shr: negative shift");
    if (is_zero() || k == 0) return *this;
    if (trailing() < k) throw std::domain_error("F2Poly::shr: inexact shift");
    F2Poly r;
    std::size_t wshift = static_cast<std::size_t>(k / 64);
    int bshift = static_cast<int>(k % 64);
    if (wshift >= words_.size()) return F2Poly();
    r.words_.assign(words_.size() - wshift, 0);
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
        r.words_[i] = words_[i + wshift] >> bshift;
        if (bshift && i + wshift + 1 < words_.size())
            r.words_[i] |= words_[i + wshift + 1] << (64 - bshift);
    }
    r.trim();
    return r;
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
    if (is_zero() || o.is_zero()) return F2Poly();
    // schoolbook over the sparser operand
    const F2Poly& a = term_count() <= o.term_count() ? *this : o;
    const F2Poly& b = term_count() <= o.term_count() ? o : *this;
    F2Poly acc;
    for (auto e : a.support()) acc = acc + b.shl(e);
    return acc;
}

std::pair<F2Poly, F2Poly> F2Poly::divmod(const F2Poly& o) const {
    if (o.is_zero()) throw std::domain_error("F2Poly: division by zero");
    F2Poly quot, rem = *this;
    std::int64_t dg = o.degree();
    while (!rem.is_zero() && rem.degree() >= dg) {
        std::int64_t k = rem.degree() - dg;
        quot.set(k);
        rem = rem + o.shl(k);
    }
    quot.trim();
    return {quot, rem};
}

F2Poly F2Poly::gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

F2Poly F2Poly::substitute_square() const {
    F2Poly r;
    for (auto e : support()) r.set(2 * e);
    r.trim();
    return r;
}

std::string F2Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto e : support()) {
        if (!s.empty()) s += "+";
        if (e == 0) s += "1";
        else if (e == 1) s += "q";
        else s += "q^" + std::to_string(e);
    }
    return s;
}

// ---------------------------------------------------------------------------
// NovikovScalar

NovikovScalar NovikovScalar::monomial(std::int64_t k) {
    NovikovScalar s;
    s.num_ = F2Poly::one();
    s.den_ = F2Poly::one();
    s.shift_ = k;
    return s;
}

NovikovScalar NovikovScalar::make(F2Poly num, F2Poly den, std::int64_t shift) {
    if (den.is_zero()) throw std::domain_error("NovikovScalar: zero denominator");
    NovikovScalar s;
    if (num.is_zero()) return s;
    std::int64_t tn = num.trailing();
    if (tn > 0) { num = num.shr(tn); shift += tn; }
    std::int64_t td = den.trailing();
    if (td > 0) { den = den.shr(td); shift -= td; }
    F2Poly g = F2Poly::gcd(num, den);
    if (!g.is_one()) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.shift_ = shift;
    return s;
}

NovikovScalar NovikovScalar::operator+(const NovikovScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::int64_t s = shift_ < o.shift_ ? shift_ : o.shift_;
    F2Poly n = num_ * o.den_;
    n = n.shl(shift_ - s);
    F2Poly m = o.num_ * den_;
    m = m.shl(o.shift_ - s);
    return make(n + m, den_ * o.den_, s);
}

NovikovScalar NovikovScalar::operator*(const NovikovScalar& o) const {
    if (is_zero() || o.is_zero()) return zero();
    if (is_monomial() && o.is_monomial()) return monomial(shift_ + o.shift_);
    return make(num_ * o.num_, den_ * o.den_, shift_ + o.shift_);
}

NovikovScalar NovikovScalar::inv() const {
    if (is_zero()) throw std::domain_error("NovikovScalar: inverse of zero");
    NovikovScalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.shift_ = -shift_;
    return r;
}

NovikovScalar NovikovScalar::mul_monomial(std::int64_t k) const {
    if (is_zero()) return *this;
    NovikovScalar r = *this;
    r.shift_ += k;
    return r;
}

std::vector<std::int64_t> NovikovScalar::laurent_support() const {
    if (!is_laurent_poly()) throw std::domain_error("NovikovScalar: not a Laurent polynomial");
    std::vector<std::int64_t> out = num_.support();
    for (auto& e : out) e += shift_;
    return out;
}

bool NovikovScalar::laurent_coeff(std::int64_t k) const {
    if (!is_laurent_poly()) throw std::domain_error("NovikovScalar: not a Laurent polynomial");
    return num_.coeff(k - shift_);
}

NovikovScalar NovikovScalar::frobenius_square() const {
    if (is_zero()) return *this;
    NovikovScalar r;
    r.num_ = num_.substitute_square();
    r.den_ = den_.substitute_square();
    r.shift_ = 2 * shift_;
    return r;
}

std::string NovikovScalar::str() const {
    if (is_zero()) return "0";
    std::string head;
    if (shift_ != 0) {
        head = shift_ == 1 ? "q" : "q^" + std::to_string(shift_);
        if (!num_.is_one()) head += "*(" + num_.str() + ")";
    } else if (num_.is_one()) {
        head = "1";
    } else {
        head = den_.is_one() ? num_.str() : "(" + num_.str() + ")";
    }
    if (!den_.is_one()) head += "/(" + den_.str() + ")";
    return head;
}

// Recursive-descent parser for sums/products/quotients of 0, 1, q, q^k and
// parenthesized subexpressions. Accepts everything str() emits and more.
namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("scalar parse error at " + std::to_string(pos) + ": " + why);
    }

    std::int64_t integer() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        skip_ws();
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        std::int64_t v = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    NovikovScalar factor() {
        skip_ws();
        if (eat('(')) {
            NovikovScalar e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '0') { ++pos; return NovikovScalar::zero(); }
        if (c == '1') { ++pos; return NovikovScalar::one(); }
        if (c == 'q') {
            ++pos;
            std::int64_t k = 1;
            if (eat('^')) k = integer();
            return NovikovScalar::monomial(k);
        }
        fail("unexpected character");
    }

    NovikovScalar product() {
        NovikovScalar acc = factor();
        for (;;) {
            if (eat('*')) acc = acc * factor();
            else if (eat('/')) {
                NovikovScalar d = factor();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else break;
        }
        return acc;
    }

    NovikovScalar expr() {
        NovikovScalar acc = product();
        while (eat('+')) acc = acc + product();
        return acc;
    }
};

}  // namespace

NovikovScalar NovikovScalar::parse(const std::string& text) {
    Parser p(text);
    NovikovScalar v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace nvk
