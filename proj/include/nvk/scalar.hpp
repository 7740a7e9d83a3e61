#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace nvk {

/// Polynomial over F2 in q, coefficients bit-packed (bit k = coefficient of q^k).
/// Addition is XOR; the zero polynomial has no words.
class F2Poly {
public:
    F2Poly() = default;
    static F2Poly zero() { return F2Poly(); }
    static F2Poly one() { return monomial(0); }
    static F2Poly monomial(std::int64_t degree);
    static F2Poly from_coeffs(const std::vector<std::int64_t>& degrees);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    std::int64_t degree() const;       // -1 for zero
    std::int64_t trailing() const;     // lowest set bit; -1 for zero
    bool coeff(std::int64_t k) const;
    std::vector<std::int64_t> support() const;  // sorted exponents
    int term_count() const;

    F2Poly operator+(const F2Poly& o) const;  // == subtraction in char 2
    F2Poly operator*(const F2Poly& o) const;
    F2Poly shl(std::int64_t k) const;  // multiply by q^k, k >= 0
    F2Poly shr(std::int64_t k) const;  // exact divide by q^k (low bits must vanish)

    // long division: *this = quot*o + rem with deg rem < deg o
    std::pair<F2Poly, F2Poly> divmod(const F2Poly& o) const;

    static F2Poly gcd(F2Poly a, F2Poly b);

    // substitute q -> q^2 (the char-2 Frobenius on coefficients is trivial)
    F2Poly substitute_square() const;

    bool operator==(const F2Poly& o) const { return words_ == o.words_; }

    std::string str() const;  // "0", "1", "q", "1+q^2", increasing powers

private:
    std::vector<std::uint64_t> words_;
    void trim();
    void set(std::int64_t k);
};

/// Element of the rational-function subfield F2(q) of the Novikov field
/// F2((q)), kept in canonical form:
///   value = q^shift * num / den
/// with num, den having nonzero constant term, gcd(num, den) = 1,
/// and zero represented as num = 0, den = 1, shift = 0.
class NovikovScalar {
public:
    static constexpr std::int64_t kInfValuation = std::numeric_limits<std::int64_t>::max();

    NovikovScalar() : num_(F2Poly::zero()), den_(F2Poly::one()), shift_(0) {}
    static NovikovScalar zero() { return NovikovScalar(); }
    static NovikovScalar one() { return monomial(0); }
    static NovikovScalar monomial(std::int64_t k);  // q^k
    static NovikovScalar make(F2Poly num, F2Poly den, std::int64_t shift);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_monomial() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent_poly() const { return den_.is_one(); }

    /// q-adic order of vanishing; kInfValuation for zero.
    std::int64_t valuation() const { return is_zero() ? kInfValuation : shift_; }

    const F2Poly& num() const { return num_; }
    const F2Poly& den() const { return den_; }
    std::int64_t shift() const { return shift_; }

    NovikovScalar operator+(const NovikovScalar& o) const;
    NovikovScalar operator*(const NovikovScalar& o) const;
    NovikovScalar inv() const;  // throws std::domain_error on zero
    NovikovScalar operator/(const NovikovScalar& o) const { return *this * o.inv(); }

    NovikovScalar mul_monomial(std::int64_t k) const;  // * q^k

    // exponents of the Laurent-polynomial expansion; throws if den != 1
    std::vector<std::int64_t> laurent_support() const;
    // F2 coefficient of q^k; throws if den != 1
    bool laurent_coeff(std::int64_t k) const;

    // q -> q^2 (Frobenius square: squares the value in char 2)
    NovikovScalar frobenius_square() const;

    bool operator==(const NovikovScalar& o) const {
        return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
    }

    std::string str() const;
    static NovikovScalar parse(const std::string& text);  // round-trips str()

private:
    F2Poly num_, den_;
    std::int64_t shift_;
};

}  // namespace nvk
