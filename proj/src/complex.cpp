#include "nvk/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace nvk {

const Rational& Action::value() const {
    if (!finite_) throw std::domain_error("Action: infinite has no value");
    return value_;
}

NovikovScalar ChainVector::coeff(int orbit) const {
    auto it = coeffs_.find(orbit);
    return it == coeffs_.end() ? NovikovScalar::zero() : it->second;
}

void ChainVector::add(int orbit, const NovikovScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(orbit, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

ChainVector ChainVector::operator+(const ChainVector& o) const {
    ChainVector r = *this;
    for (const auto& [orbit, c] : o.coeffs_) r.add(orbit, c);
    return r;
}

ChainVector ChainVector::scaled(const NovikovScalar& c) const {
    ChainVector r;
    if (c.is_zero()) return r;
    for (const auto& [orbit, v] : coeffs_) r.coeffs_[orbit] = v * c;
    return r;
}

ChainVector recap_chain(const ChainVector& chain, std::int64_t k) {
    return chain.recapped(k);
}

std::optional<int> FilteredComplex::orbit_id(const std::string& label) const {
    auto it = label_to_id_.find(label);
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
}

void FilteredComplex::rebuild_index() {
    label_to_id_.clear();
    for (int i = 0; i < orbit_count(); ++i) label_to_id_[orbits[static_cast<std::size_t>(i)].label] = i;
    rows_.resize(orbits.size());
}

void FilteredComplex::clear_differential() {
    rows_.assign(orbits.size(), {});
}

void FilteredComplex::set_entry(int from, int to, const NovikovScalar& value) {
    if (rows_.size() != orbits.size()) rows_.resize(orbits.size());
    auto& row = rows_[static_cast<std::size_t>(from)];
    if (value.is_zero()) row.erase(to);
    else row[to] = value;
}

NovikovScalar FilteredComplex::entry(int from, int to) const {
    if (static_cast<std::size_t>(from) >= rows_.size()) return NovikovScalar::zero();
    const auto& row = rows_[static_cast<std::size_t>(from)];
    auto it = row.find(to);
    return it == row.end() ? NovikovScalar::zero() : it->second;
}

const std::map<int, NovikovScalar>& FilteredComplex::row(int from) const {
    static const std::map<int, NovikovScalar> kEmpty;
    if (static_cast<std::size_t>(from) >= rows_.size()) return kEmpty;
    return rows_[static_cast<std::size_t>(from)];
}

std::vector<std::pair<std::pair<int, int>, NovikovScalar>> FilteredComplex::entries() const {
    std::vector<std::pair<std::pair<int, int>, NovikovScalar>> out;
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
        for (const auto& [j, v] : rows_[static_cast<std::size_t>(i)])
            out.push_back({{i, j}, v});
    return out;
}

Action FilteredComplex::action_of_chain(const ChainVector& chain) const {
    Action best = Action::infinity();
    for (const auto& [orbit_id, c] : chain.coeffs()) {
        Rational a = orbit(orbit_id).action +
                     params.lambda0 * Rational(kRecapActionSign * c.valuation());
        Action cand{a};
        if (cand < best) best = cand;
    }
    return best;
}

ChainVector FilteredComplex::differential(const ChainVector& chain) const {
    ChainVector out;
    for (const auto& [orbit_id, c] : chain.coeffs())
        for (const auto& [to, v] : row(orbit_id)) out.add(to, c * v);
    return out;
}

bool FilteredComplex::pairing_coefficient(const CappedGenerator& g, const ChainVector& chain) const {
    NovikovScalar c = chain.coeff(g.orbit);
    if (c.is_zero()) return false;
    return c.laurent_coeff(g.recap);  // throws on genuine rational functions
}

ValidationReport FilteredComplex::validate() const {
    ValidationReport report;
    auto flag = [&](std::string code, std::string msg, int from = -1, int to = -1) {
        Violation v;
        v.code = std::move(code);
        v.message = std::move(msg);
        if (from >= 0) v.from = orbit(from).label;
        if (to >= 0) v.to = orbit(to).label;
        report.violations.push_back(std::move(v));
    };

    if (params.N < 1) flag("structure", "N must be >= 1");
    if (params.lambda0.sign() <= 0) flag("structure", "lambda0 must be positive");
    {
        std::map<std::string, int> seen;
        for (const auto& o : orbits)
            if (++seen[o.label] == 2) flag("structure", "duplicate orbit label '" + o.label + "'");
    }

    for (const auto& [key, value] : entries()) {
        auto [from, to] = key;
        if (!value.is_laurent_poly()) {
            flag("entry", "entry is not a Laurent polynomial: " + value.str(), from, to);
            continue;
        }
        // minimal capped-level gap of the entry
        Rational gap = orbit(to).action - orbit(from).action +
                       params.lambda0 * Rational(kRecapActionSign * value.valuation());
        if (strict_action ? gap.sign() <= 0 : gap.sign() < 0) {
            flag("action",
                 std::string("entry does not ") + (strict_action ? "strictly " : "") +
                     "increase action (gap " + gap.str() + ")",
                 from, to);
        }
        if (graded) {
            if (!value.is_monomial()) {
                flag("grading", "graded complex entry must be a monomial: " + value.str(), from, to);
            } else {
                std::int64_t k = value.valuation();
                std::int64_t lhs = orbit(to).index + 2 * params.N * kRecapIndexSign * k;
                if (lhs != orbit(from).index + 1)
                    flag("grading",
                         "index mismatch: target index " + std::to_string(lhs) +
                             " != source index + 1 = " + std::to_string(orbit(from).index + 1),
                         from, to);
            }
        }
    }

    // d^2 = 0, checked row by row
    for (int i = 0; i < orbit_count(); ++i) {
        std::map<int, NovikovScalar> square;
        for (const auto& [mid, a] : row(i))
            for (const auto& [to, b] : row(mid)) {
                auto [it, inserted] = square.emplace(to, a * b);
                if (!inserted) it->second = it->second + a * b;
            }
        for (const auto& [to, v] : square)
            if (!v.is_zero())
                flag("d-squared", "d^2 has coefficient " + v.str(), i, to);
    }

    return report;
}

FilteredComplex FilteredComplex::frobenius_double() const {
    FilteredComplex out;
    out.params = params;
    out.graded = false;  // index data for the double is assigned by the caller if needed
    out.strict_action = strict_action;
    out.actions_from_float = actions_from_float;
    for (const auto& o : orbits)
        out.orbits.push_back({o.label + "^2", o.action * Rational(2), o.index});
    out.rebuild_index();
    for (const auto& [key, value] : entries())
        out.set_entry(key.first, key.second, value.frobenius_square());
    return out;
}

}  // namespace nvk
