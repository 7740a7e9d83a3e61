#include "nvk/equivariant.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nvk {

// ---------------------------------------------------------------------------
// SparseMatrix

void SparseMatrix::set(int from, int to, const NovikovScalar& v) {
    if (v.is_zero()) entries_.erase({from, to});
    else entries_[{from, to}] = v;
}

NovikovScalar SparseMatrix::at(int from, int to) const {
    auto it = entries_.find({from, to});
    return it == entries_.end() ? NovikovScalar::zero() : it->second;
}

ChainVector SparseMatrix::apply(const ChainVector& chain) const {
    ChainVector out;
    for (const auto& [key, v] : entries_) {
        NovikovScalar c = chain.coeff(key.first);
        if (!c.is_zero()) out.add(key.second, c * v);
    }
    return out;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& then) const {
    SparseMatrix out;
    for (const auto& [ab, u] : entries_)
        for (const auto& [bc, v] : then.entries_) {
            if (ab.second != bc.first) continue;
            auto key = std::make_pair(ab.first, bc.second);
            out.set(key.first, key.second, out.at(key.first, key.second) + u * v);
        }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    SparseMatrix out = *this;
    for (const auto& [key, v] : o.entries_) out.set(key.first, key.second, out.at(key.first, key.second) + v);
    return out;
}

// ---------------------------------------------------------------------------
// EqChain

void EqChain::add(int orbit, int h_power, const NovikovScalar& c) {
    if (c.is_zero()) return;
    Key key{orbit, h_power};
    auto [it, inserted] = coeffs_.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

EqChain EqChain::operator+(const EqChain& o) const {
    EqChain r = *this;
    for (const auto& [key, c] : o.coeffs_) r.add(key.first, key.second, c);
    return r;
}

EqChain EqChain::scaled(const NovikovScalar& c) const {
    EqChain r;
    if (c.is_zero()) return r;
    for (const auto& [key, v] : coeffs_) r.coeffs_[key] = v * c;
    return r;
}

EqChain EqChain::h_shifted(int k) const {
    EqChain r;
    for (const auto& [key, v] : coeffs_) r.coeffs_[{key.first, key.second + k}] = v;
    return r;
}

// ---------------------------------------------------------------------------
// EquivariantComplex

const SparseMatrix& EquivariantComplex::correction(int k) const {
    if (k < 1 || k > correction_order())
        throw std::out_of_range("EquivariantComplex: correction index");
    return corrections[static_cast<std::size_t>(k - 1)];
}

EqChain EquivariantComplex::apply_differential(const EqChain& chain) const {
    EqChain out;
    for (const auto& [key, c] : chain.coeffs()) {
        auto [orbit, h] = key;
        for (const auto& [to, v] : base.row(orbit)) out.add(to, h, c * v);
        for (int k = 1; k <= correction_order(); ++k)
            for (const auto& [ft, v] : correction(k).entries())
                if (ft.first == orbit) out.add(ft.second, h + k, c * v);
    }
    return out;
}

Action EquivariantComplex::action_of(const EqChain& chain) const {
    Action best = Action::infinity();
    for (const auto& [key, c] : chain.coeffs()) {
        Rational a = base.orbit(key.first).action +
                     base.params.lambda0 * Rational(kRecapActionSign * c.valuation());
        Action cand{a};
        if (cand < best) best = cand;
    }
    return best;
}

ValidationReport EquivariantComplex::validate() const {
    ValidationReport report = base.validate();
    auto flag = [&](std::string code, std::string msg, int from = -1, int to = -1) {
        Violation v;
        v.code = std::move(code);
        v.message = std::move(msg);
        if (from >= 0) v.from = base.orbit(from).label;
        if (to >= 0) v.to = base.orbit(to).label;
        report.violations.push_back(std::move(v));
    };

    const int K = correction_order();
    const int N = base.params.N;
    for (int k = 1; k <= K; ++k) {
        for (const auto& [ft, v] : correction(k).entries()) {
            auto [from, to] = ft;
            if (!v.is_laurent_poly()) {
                flag("entry", "d_" + std::to_string(k) + " entry is not a Laurent polynomial", from, to);
                continue;
            }
            // index rule mu(y) = mu(x) + 1 - k forces a monomial
            if (!v.is_monomial()) {
                flag("grading", "d_" + std::to_string(k) + " entry must be a monomial: " + v.str(),
                     from, to);
            } else {
                std::int64_t j = v.valuation();
                std::int64_t lhs = base.orbit(to).index + 2 * N * kRecapIndexSign * j;
                std::int64_t rhs = base.orbit(from).index + 1 - k;
                if (lhs != rhs)
                    flag("grading",
                         "d_" + std::to_string(k) + " index mismatch: " + std::to_string(lhs) +
                             " != " + std::to_string(rhs),
                         from, to);
            }
            // non-strict action increase for the h-positive part
            Rational gap = base.orbit(to).action - base.orbit(from).action +
                           base.params.lambda0 * Rational(kRecapActionSign * v.valuation());
            if (gap.sign() < 0)
                flag("action", "d_" + std::to_string(k) + " entry decreases action (gap " + gap.str() + ")",
                     from, to);
        }
    }

    // h-graded d^2 = 0: sum over i + j = k of d_i d_j vanishes for each k
    std::vector<SparseMatrix> pieces(static_cast<std::size_t>(K + 1));
    for (const auto& [key, v] : base.entries()) pieces[0].set(key.first, key.second, v);
    for (int k = 1; k <= K; ++k) pieces[static_cast<std::size_t>(k)] = correction(k);
    for (int k = 0; k <= 2 * K; ++k) {
        SparseMatrix sum;
        for (int i = std::max(0, k - K); i <= std::min(k, K); ++i)
            sum = sum + pieces[static_cast<std::size_t>(i)].compose(pieces[static_cast<std::size_t>(k - i)]);
        if (!sum.is_zero()) {
            const auto& [ft, v] = *sum.entries().begin();
            flag("d-squared",
                 "h^" + std::to_string(k) + " component of d_eq^2 is nonzero (value " + v.str() + ")",
                 ft.first, ft.second);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// h = 1 evaluation and its inverse

H1Complex evaluate_h1(const EquivariantComplex& eq) {
    H1Complex out;
    out.complex = eq.base;
    out.complex.graded = false;
    out.complex.strict_action = false;
    SparseMatrix total;
    for (const auto& [key, v] : eq.base.entries()) total.set(key.first, key.second, v);
    for (int k = 1; k <= eq.correction_order(); ++k) total = total + eq.correction(k);
    out.complex.clear_differential();
    for (const auto& [key, v] : total.entries()) out.complex.set_entry(key.first, key.second, v);
    return out;
}

ChainVector evaluate_h1(const EqChain& chain) {
    ChainVector out;
    for (const auto& [key, c] : chain.coeffs()) out.add(key.first, c);
    return out;
}

EquivariantComplex split_by_grading(const FilteredComplex& h1,
                                    const std::vector<std::int64_t>& indices, int N) {
    if (static_cast<int>(indices.size()) != h1.orbit_count())
        throw std::invalid_argument("split_by_grading: index count mismatch");
    EquivariantComplex out;
    out.base = h1;
    out.base.graded = true;
    out.base.strict_action = true;
    for (int i = 0; i < out.base.orbit_count(); ++i)
        out.base.orbits[static_cast<std::size_t>(i)].index = indices[static_cast<std::size_t>(i)];
    out.base.rebuild_index();
    out.base.clear_differential();  // entries are re-distributed by h-degree below

    for (const auto& [key, v] : h1.entries()) {
        auto [from, to] = key;
        if (!v.is_laurent_poly())
            throw std::domain_error("split_by_grading: entry is not a Laurent polynomial");
        for (std::int64_t j : v.laurent_support()) {
            std::int64_t k = indices[static_cast<std::size_t>(from)] + 1 -
                             indices[static_cast<std::size_t>(to)] -
                             2 * N * kRecapIndexSign * j;
            if (k < 0)
                throw std::domain_error("split_by_grading: monomial q^" + std::to_string(j) +
                                        " from " + h1.orbit(from).label + " to " + h1.orbit(to).label +
                                        " implies h-degree " + std::to_string(k));
            NovikovScalar monomial = NovikovScalar::monomial(j);
            if (k == 0) {
                out.base.set_entry(from, to, out.base.entry(from, to) + monomial);
            } else {
                if (static_cast<int>(out.corrections.size()) < k)
                    out.corrections.resize(static_cast<std::size_t>(k));
                auto& m = out.corrections[static_cast<std::size_t>(k - 1)];
                m.set(from, to, m.at(from, to) + monomial);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// group cochain complex

void GroupCochainComplex::Element::add(PairKey pair, int h_power, const NovikovScalar& c) {
    if (c.is_zero()) return;
    Key key{pair, h_power};
    auto [it, inserted] = coeffs_.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

GroupCochainComplex::Element GroupCochainComplex::Element::operator+(const Element& o) const {
    Element r = *this;
    for (const auto& [key, c] : o.coeffs_) r.add(key.first, key.second, c);
    return r;
}

GroupCochainComplex::Element GroupCochainComplex::differential(const Element& e) const {
    Element out;
    for (const auto& [key, c] : e.coeffs()) {
        auto [pair, h] = key;
        auto [x, y] = pair;
        // d_Fl x id + id x d_Fl
        for (const auto& [to, v] : c_->row(x)) out.add({to, y}, h, c * v);
        for (const auto& [to, v] : c_->row(y)) out.add({x, to}, h, c * v);
        // h (id + tau)
        out.add({x, y}, h + 1, c);
        out.add({y, x}, h + 1, c);
    }
    return out;
}

Action GroupCochainComplex::action_of(const Element& e) const {
    Action best = Action::infinity();
    for (const auto& [key, c] : e.coeffs()) {
        auto [x, y] = key.first;
        Rational a = c_->orbit(x).action + c_->orbit(y).action +
                     c_->params.lambda0 * Rational(kRecapActionSign * c.valuation());
        Action cand{a};
        if (cand < best) best = cand;
    }
    return best;
}

GroupCochainComplex build_group_cochain(const FilteredComplex& complex) {
    return GroupCochainComplex(complex);
}

// ---------------------------------------------------------------------------
// window ranks

int rank_window(const FilteredComplex& C, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) return 0;
    // collect capped generators with action in [lo, hi):
    // lo <= a + k*lambda0 < hi bounds k by ceil/floor divisions
    std::map<CappedGenerator, int> gens;
    for (int i = 0; i < C.orbit_count(); ++i) {
        const Rational a = C.orbit(i).action;
        std::int64_t kmin = -((a - lo).floor_div(C.params.lambda0));
        std::int64_t kmax = (hi - a).floor_div(C.params.lambda0);
        for (std::int64_t k = kmin; k <= kmax; ++k) {
            std::int64_t recap = kRecapActionSign * k;
            Rational level = C.action_of({i, recap});
            if (!(level < lo) && level < hi)
                gens.emplace(CappedGenerator{i, recap}, static_cast<int>(gens.size()));
        }
    }
    // induced differential: capped-level monomial arrows staying in the window
    std::vector<std::vector<std::uint64_t>> rows;
    const std::size_t words = (gens.size() + 63) / 64;
    for (const auto& [g, row_id] : gens) {
        std::vector<std::uint64_t> row(words, 0);
        for (const auto& [to, v] : C.row(g.orbit)) {
            for (std::int64_t j : v.laurent_support()) {
                CappedGenerator tgt{to, g.recap + j};
                auto it = gens.find(tgt);
                if (it == gens.end()) continue;  // quotiented away
                row[static_cast<std::size_t>(it->second) / 64] ^=
                    std::uint64_t{1} << (it->second % 64);
            }
        }
        rows.push_back(std::move(row));
    }
    // F2 rank of the induced matrix
    int rank = 0;
    std::map<int, std::vector<std::uint64_t>> echelon;
    for (auto row : rows) {
        for (;;) {
            int lead = -1;
            for (int w = static_cast<int>(row.size()) - 1; w >= 0 && lead < 0; --w)
                if (row[static_cast<std::size_t>(w)])
                    lead = w * 64 + 63 - std::countl_zero(row[static_cast<std::size_t>(w)]);
            if (lead < 0) break;
            auto it = echelon.find(lead);
            if (it == echelon.end()) {
                echelon.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= it->second[w];
        }
    }
    return static_cast<int>(gens.size()) - 2 * rank;
}

}  // namespace nvk
