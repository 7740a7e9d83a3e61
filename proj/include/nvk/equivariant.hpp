#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nvk/complex.hpp"

namespace nvk {

/// Sparse matrix of NovikovScalar entries on the orbit set of a complex.
class SparseMatrix {
public:
    void set(int from, int to, const NovikovScalar& v);
    NovikovScalar at(int from, int to) const;
    const std::map<std::pair<int, int>, NovikovScalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    ChainVector apply(const ChainVector& chain) const;
    SparseMatrix compose(const SparseMatrix& then) const;  // this followed by `then`
    SparseMatrix operator+(const SparseMatrix& o) const;

    bool operator==(const SparseMatrix& o) const { return entries_ == o.entries_; }

private:
    std::map<std::pair<int, int>, NovikovScalar> entries_;
};

/// Chain in CF(phi^2)[h]: coefficients indexed by (orbit, h-power).
class EqChain {
public:
    using Key = std::pair<int, int>;  // (orbit, h-power)

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Key, NovikovScalar>& coeffs() const { return coeffs_; }
    void add(int orbit, int h_power, const NovikovScalar& c);
    EqChain operator+(const EqChain& o) const;
    EqChain scaled(const NovikovScalar& c) const;
    EqChain h_shifted(int k) const;  // multiply by h^k

    bool operator==(const EqChain& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<Key, NovikovScalar> coeffs_;
};

/// The Z2-equivariant complex CF(phi^2)[h]: the underlying complex for
/// phi^2 plus the correction terms of d_eq = d_Fl + h d_1 + ... + h^K d_K.
struct EquivariantComplex {
    FilteredComplex base;                   // carries d_0 = d_Fl
    std::vector<SparseMatrix> corrections;  // d_1 .. d_K

    int correction_order() const { return static_cast<int>(corrections.size()); }
    const SparseMatrix& correction(int k) const;  // k >= 1

    EqChain apply_differential(const EqChain& chain) const;
    Action action_of(const EqChain& chain) const;  // h-powers ignored

    ValidationReport validate() const;
};

/// The h = 1 evaluation complex C~: same orbit set, d~ = d_0 + d_1 + ... + d_K,
/// ungraded and only non-strictly action-increasing.
struct H1Complex {
    FilteredComplex complex;
};

H1Complex evaluate_h1(const EquivariantComplex& eq);

/// h = 1 evaluation of chains, the projection pi.
ChainVector evaluate_h1(const EqChain& chain);

/// Inverse of evaluate_h1 on differentials: split an ungraded differential
/// into graded pieces d_k using the index rule; the h-power of every monomial
/// is forced. Throws std::domain_error if a monomial implies k < 0.
EquivariantComplex split_by_grading(const FilteredComplex& h1,
                                    const std::vector<std::int64_t>& indices, int N);

/// Group cochain complex C(Z2; CF x CF) = CF(phi) x CF(phi) [h] with
/// d = d_Fl x id + id x d_Fl + h (id + tau).
class GroupCochainComplex {
public:
    explicit GroupCochainComplex(const FilteredComplex& c) : c_(&c) {}

    using PairKey = std::pair<int, int>;  // ordered orbit pair (x, y)

    /// Element: coefficients on ordered pairs by h-power.
    class Element {
    public:
        using Key = std::pair<PairKey, int>;  // ((x, y), h-power)
        bool is_zero() const { return coeffs_.empty(); }
        const std::map<Key, NovikovScalar>& coeffs() const { return coeffs_; }
        void add(PairKey pair, int h_power, const NovikovScalar& c);
        Element operator+(const Element& o) const;

        bool operator==(const Element& o) const { return coeffs_ == o.coeffs_; }

    private:
        std::map<Key, NovikovScalar> coeffs_;
    };

    static Element basis(PairKey pair) {
        Element e;
        e.add(pair, 0, NovikovScalar::one());
        return e;
    }

    Element differential(const Element& e) const;
    Action action_of(const Element& e) const;  // A(x) + A(y), minimized

    const FilteredComplex& underlying() const { return *c_; }

private:
    const FilteredComplex* c_;
};

GroupCochainComplex build_group_cochain(const FilteredComplex& complex);

/// F2-dimension of the homology of the subquotient complex generated by the
/// capped generators with action in the half-open window [lo, hi).
int rank_window(const FilteredComplex& complex, const Rational& lo, const Rational& hi);

}  // namespace nvk
