#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nvk/rational.hpp"
#include "nvk/scalar.hpp"

namespace nvk {

// Recapping convention, kept in one place: multiplication by q raises the
// action by +lambda0 and the index by +2N. The opposite convention is a sign
// flip here.
inline constexpr int kRecapActionSign = +1;
inline constexpr int kRecapIndexSign = +1;

struct GlobalParams {
    int N = 1;                 // minimal Chern number, |q| = 2N
    Rational lambda0{1};       // rationality constant, > 0
    int n = 0;                 // half-dimension, enters the Seidel exponent
};

struct OrbitClass {
    std::string label;
    Rational action;
    std::int64_t index = 0;
};

/// A capped generator is an orbit class together with a recapping power of q.
struct CappedGenerator {
    int orbit = 0;
    std::int64_t recap = 0;

    auto operator<=>(const CappedGenerator&) const = default;
};

/// Action with +infinity (the zero chain).
class Action {
public:
    Action() : finite_(false) {}
    explicit Action(Rational v) : finite_(true), value_(v) {}
    static Action infinity() { return Action(); }

    bool is_infinite() const { return !finite_; }
    const Rational& value() const;

    bool operator==(const Action& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || value_ == o.value_;
    }
    bool operator<(const Action& o) const {
        if (!finite_) return false;
        if (!o.finite_) return true;
        return value_ < o.value_;
    }
    bool operator<=(const Action& o) const { return *this < o || *this == o; }

    std::string str() const { return finite_ ? value_.str() : "inf"; }

private:
    bool finite_;
    Rational value_;
};

/// Sparse chain over the orbit basis with NovikovScalar coefficients.
/// No zero coefficients are stored.
class ChainVector {
public:
    ChainVector() = default;
    static ChainVector unit(int orbit) {
        ChainVector v;
        v.coeffs_[orbit] = NovikovScalar::one();
        return v;
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }
    const std::map<int, NovikovScalar>& coeffs() const { return coeffs_; }
    NovikovScalar coeff(int orbit) const;

    void add(int orbit, const NovikovScalar& c);
    ChainVector operator+(const ChainVector& o) const;
    ChainVector scaled(const NovikovScalar& c) const;
    ChainVector recapped(std::int64_t k) const { return scaled(NovikovScalar::monomial(k)); }

    bool operator==(const ChainVector& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<int, NovikovScalar> coeffs_;
};

struct Violation {
    std::string code;     // "d-squared", "action", "grading", "entry", "structure"
    std::string message;
    std::string from, to;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// Action-filtered chain complex over the Novikov field, stored on orbit
/// classes. Differential rows are sources: d(x_i) = sum_j D[i][j] x_j.
class FilteredComplex {
public:
    GlobalParams params;
    std::vector<OrbitClass> orbits;
    bool graded = true;
    // strict_action is dropped for the h=1 complex, whose differential is
    // only non-strictly action-increasing away from the h^0 part
    bool strict_action = true;
    bool actions_from_float = false;

    int orbit_count() const { return static_cast<int>(orbits.size()); }
    std::optional<int> orbit_id(const std::string& label) const;
    const OrbitClass& orbit(int id) const { return orbits[static_cast<std::size_t>(id)]; }

    void set_entry(int from, int to, const NovikovScalar& value);
    void clear_differential();
    NovikovScalar entry(int from, int to) const;
    const std::map<int, NovikovScalar>& row(int from) const;
    std::vector<std::pair<std::pair<int, int>, NovikovScalar>> entries() const;  // sorted

    Rational action_of(const CappedGenerator& g) const {
        return orbit(g.orbit).action + params.lambda0 * Rational(kRecapActionSign * g.recap);
    }
    std::int64_t index_of(const CappedGenerator& g) const {
        return orbit(g.orbit).index + 2 * params.N * kRecapIndexSign * g.recap;
    }

    Action action_of_chain(const ChainVector& chain) const;
    ChainVector differential(const ChainVector& chain) const;

    ValidationReport validate() const;

    /// F2 coefficient of the capped generator inside the chain; throws if the
    /// relevant coefficient is not a Laurent polynomial.
    bool pairing_coefficient(const CappedGenerator& g, const ChainVector& chain) const;

    /// Entrywise Frobenius square: actions doubled, coefficients squared,
    /// labels suffixed. d-squared and strict action increase are preserved.
    FilteredComplex frobenius_double() const;

private:
    std::vector<std::map<int, NovikovScalar>> rows_;
    std::map<std::string, int> label_to_id_;

public:
    void rebuild_index();  // refresh label lookup after editing orbits
};

ChainVector recap_chain(const ChainVector& chain, std::int64_t k);

}  // namespace nvk
