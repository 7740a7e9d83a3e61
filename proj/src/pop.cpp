#include "nvk/pop.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include "nvk/generate.hpp"
#include "nvk/harness.hpp"

namespace nvk {

// ---------------------------------------------------------------------------
// PairOfPantsMap

const EqChain& PairOfPantsMap::value(int x, int y) const {
    static const EqChain kZero;
    auto it = values_.find({x, y});
    return it == values_.end() ? kZero : it->second;
}

void PairOfPantsMap::set_value(int x, int y, EqChain chain) {
    if (chain.is_zero()) values_.erase({x, y});
    else values_[{x, y}] = std::move(chain);
}

EqChain PairOfPantsMap::apply_pair(const ChainVector& xi, const ChainVector& zeta) const {
    EqChain out;
    for (const auto& [x, cx] : xi.coeffs())
        for (const auto& [y, cy] : zeta.coeffs())
            out = out + value(x, y).scaled(cx * cy);
    return out;
}

EqChain PairOfPantsMap::apply(const GroupCochainComplex::Element& e) const {
    EqChain out;
    for (const auto& [key, c] : e.coeffs()) {
        auto [pair, h] = key;
        out = out + value(pair.first, pair.second).scaled(c).h_shifted(h);
    }
    return out;
}

// ---------------------------------------------------------------------------
// axiom checks

AxiomCheck check_chain_map(const PairOfPantsMap& pop, const FilteredComplex& c,
                           const EquivariantComplex& e) {
    AxiomCheck out;
    GroupCochainComplex gc(c);
    for (int x = 0; x < c.orbit_count(); ++x)
        for (int y = 0; y < c.orbit_count(); ++y) {
            EqChain lhs = pop.apply(gc.differential(GroupCochainComplex::basis({x, y})));
            EqChain rhs = e.apply_differential(pop.value(x, y));
            if (!(lhs == rhs)) {
                out.pass = false;
                out.failures.push_back("chain-map identity fails on (" + c.orbit(x).label + ", " +
                                       c.orbit(y).label + ")");
            }
        }
    return out;
}

AxiomCheck check_filtration(const PairOfPantsMap& pop, const FilteredComplex& c,
                            const EquivariantComplex& e) {
    AxiomCheck out;
    for (int x = 0; x < c.orbit_count(); ++x)
        for (int y = 0; y < c.orbit_count(); ++y) {
            const EqChain& img = pop.value(x, y);
            if (img.is_zero()) continue;  // A = +inf, vacuous
            Action a = e.action_of(img);
            Rational bound = c.orbit(x).action + c.orbit(y).action;
            if (a < Action(bound)) {
                out.pass = false;
                out.failures.push_back("filtration fails on (" + c.orbit(x).label + ", " +
                                       c.orbit(y).label + "): " + a.str() + " < " + bound.str());
            }
        }
    return out;
}

AxiomCheck check_seidel(const PairOfPantsMap& pop, const FilteredComplex& c,
                        const EquivariantComplex& e) {
    AxiomCheck out;
    auto fail = [&](const std::string& msg) {
        out.pass = false;
        out.failures.push_back(msg);
    };
    if (static_cast<int>(pop.squaring.size()) != c.orbit_count()) {
        fail("squaring assignment size mismatch");
        return out;
    }
    for (int x = 0; x < c.orbit_count(); ++x) {
        int xsq = pop.squaring[static_cast<std::size_t>(x)];
        if (xsq < 0 || xsq >= e.base.orbit_count()) {
            fail("squaring of " + c.orbit(x).label + " out of range");
            continue;
        }
        const Rational twice = c.orbit(x).action * Rational(2);
        if (!(e.base.orbit(xsq).action == twice))
            fail("squaring of " + c.orbit(x).label + " does not double the action");
        std::int64_t m = 2 * c.orbit(x).index - e.base.orbit(xsq).index + c.params.n;
        if (m < 0) {
            fail("Seidel exponent negative for " + c.orbit(x).label);
            continue;
        }
        const EqChain& img = pop.value(x, x);
        bool found_lead = false;
        for (const auto& [key, coeff] : img.coeffs()) {
            auto [orbit, h] = key;
            if (!coeff.is_laurent_poly()) {
                fail("p(" + c.orbit(x).label + " x same) has a non-polynomial coefficient");
                continue;
            }
            for (std::int64_t j : coeff.laurent_support()) {
                bool is_lead = orbit == xsq && j == 0;
                if (is_lead) {
                    if (h == m) {
                        found_lead = true;
                        continue;
                    }
                    fail("leading term of p(" + c.orbit(x).label + " x same) at h^" +
                         std::to_string(h) + ", expected h^" + std::to_string(m));
                    continue;
                }
                // tail terms must sit at action strictly above 2A(x)
                Rational a = e.base.action_of({orbit, j});
                if (!(twice < a))
                    fail("tail term of p(" + c.orbit(x).label + " x same) on " +
                         e.base.orbit(orbit).label + " q^" + std::to_string(j) +
                         " has action " + a.str() + " <= " + twice.str());
            }
        }
        if (!found_lead)
            fail("p(" + c.orbit(x).label + " x same) is missing the h^" + std::to_string(m) +
                 " leading term (Seidel non-vanishing)");
    }
    return out;
}

AxiomCheck check_h0_reduction(const PairOfPantsMap& pop,
                              const std::optional<ClassicalProductTable>& table) {
    AxiomCheck out;
    if (!table) {
        out.skipped = true;
        return out;
    }
    std::set<std::pair<int, int>> keys;
    for (const auto& [key, chain] : *table) keys.insert(key);
    for (const auto& [key, chain] : pop.values()) keys.insert(key);
    for (const auto& key : keys) {
        ChainVector h0;
        for (const auto& [ck, coeff] : pop.value(key.first, key.second).coeffs())
            if (ck.second == 0) h0.add(ck.first, coeff);
        ChainVector expected;
        auto it = table->find(key);
        if (it != table->end()) expected = it->second;
        if (!(h0 == expected)) {
            out.pass = false;
            out.failures.push_back("h^0 part differs from the classical product on pair (" +
                                   std::to_string(key.first) + ", " + std::to_string(key.second) +
                                   ")");
        }
    }
    return out;
}

AxiomReport check_all(const PairOfPantsMap& pop, const FilteredComplex& c,
                      const EquivariantComplex& e,
                      const std::optional<ClassicalProductTable>& table) {
    AxiomReport report;
    report.chain_map = check_chain_map(pop, c, e);
    report.filtration = check_filtration(pop, c, e);
    report.seidel = check_seidel(pop, c, e);
    report.h0 = check_h0_reduction(pop, table);
    return report;
}

// ---------------------------------------------------------------------------
// synthetic generation

namespace {

std::int64_t ceil_div(const Rational& r, const Rational& m) { return -((-r).floor_div(m)); }

// m-assignment for the frobenius model: m(y) >= m(x) + 1 along every arrow,
// via longest outgoing path in the (acyclic) orbit graph
std::vector<int> seidel_exponents(const FilteredComplex& c, Rng& rng) {
    const int n = c.orbit_count();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    // iterative DFS for longest path; cycles make the model unsatisfiable
    for (int start = 0; start < n; ++start) {
        if (depth[static_cast<std::size_t>(start)] >= 0) continue;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            if (state[static_cast<std::size_t>(v)] == 0) {
                state[static_cast<std::size_t>(v)] = 1;
                for (const auto& [to, coeff] : c.row(v)) {
                    if (state[static_cast<std::size_t>(to)] == 1)
                        throw UnsatisfiableError("orbit arrow graph has a cycle");
                    if (depth[static_cast<std::size_t>(to)] < 0) stack.push_back(to);
                }
            } else {
                stack.pop_back();
                if (state[static_cast<std::size_t>(v)] == 2) continue;
                state[static_cast<std::size_t>(v)] = 2;
                int d = 0;
                for (const auto& [to, coeff] : c.row(v))
                    d = std::max(d, depth[static_cast<std::size_t>(to)] + 1);
                depth[static_cast<std::size_t>(v)] = d;
            }
        }
    }
    int dmax = 0;
    for (int v = 0; v < n; ++v) dmax = std::max(dmax, depth[static_cast<std::size_t>(v)]);
    const int stretch = static_cast<int>(rng.range(1, 2));
    const int base = static_cast<int>(rng.range(0, 2));
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        m[static_cast<std::size_t>(v)] = stretch * (dmax - depth[static_cast<std::size_t>(v)]) + base;
    return m;
}

// Exact F2 solver for the chain-map constraints at one pair-action level.
class LevelSolver {
public:
    LevelSolver(const FilteredComplex& c, const EquivariantComplex& e, PairOfPantsMap& pop,
                Rng& rng, int h_cap, std::int64_t q_width, bool randomize_free)
        : c_(c), e_(e), pop_(pop), rng_(rng), h_cap_(h_cap), q_width_(q_width),
          randomize_free_(randomize_free) {}

    // pairs: ordered pairs at this level; diag: diagonal constraints assigned here
    bool solve(const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& diag,
               const Rational& level) {
        vars_.clear();
        var_keys_.clear();
        rows_.clear();
        row_of_coord_.clear();

        // variable layout per unknown pair, restricted to reachable orbits
        std::set<int> support;
        for (const auto& [x, y] : pairs) {
            grow_support(support, pop_.squaring[static_cast<std::size_t>(x)]);
            grow_support(support, pop_.squaring[static_cast<std::size_t>(y)]);
            for (const auto& [z, coeff] : c_.row(x)) grow_support(support, pop_.squaring[static_cast<std::size_t>(z)]);
            for (const auto& [z, coeff] : c_.row(y)) grow_support(support, pop_.squaring[static_cast<std::size_t>(z)]);
        }
        for (const auto& [x, y] : pairs)
            for (int w : support) {
                std::int64_t jlow = ceil_div(level - e_.base.orbit(w).action, e_.base.params.lambda0);
                for (int h = 0; h <= h_cap_; ++h)
                    for (std::int64_t j = jlow; j < jlow + q_width_; ++j) {
                        var_keys_.push_back({{x, y}, {w, h, j}});
                        vars_[{{x, y}, {w, h, j}}] = static_cast<int>(var_keys_.size()) - 1;
                    }
            }

        // constraint rows
        for (const auto& [x, y] : pairs) build_offdiag_constraint(x, y, level);
        for (int x : diag) build_diag_constraint(x, level);

        return eliminate_and_assign(pairs);
    }

private:
    struct Coord {
        int orbit;
        int h;
        std::int64_t j;
        auto operator<=>(const Coord&) const = default;
    };
    using VarKey = std::pair<std::pair<int, int>, Coord>;

    const FilteredComplex& c_;
    const EquivariantComplex& e_;
    PairOfPantsMap& pop_;
    Rng& rng_;
    int h_cap_;
    std::int64_t q_width_;
    bool randomize_free_;

    std::map<VarKey, int> vars_;
    std::vector<VarKey> var_keys_;
    struct Row {
        std::vector<std::uint64_t> bits;
        bool rhs = false;
    };
    std::vector<Row> rows_;
    std::map<std::pair<std::pair<int, int>, Coord>, int> row_of_coord_;  // constraint id x coord

    void grow_support(std::set<int>& support, int seed_orbit) {
        // descendants in the arrow graph of d~ (all graded pieces)
        std::vector<int> stack{seed_orbit};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (!support.insert(v).second) continue;
            for (const auto& [to, coeff] : e_.base.row(v)) stack.push_back(to);
            for (int k = 1; k <= e_.correction_order(); ++k)
                for (const auto& [ft, coeff] : e_.correction(k).entries())
                    if (ft.first == v) stack.push_back(ft.second);
        }
    }

    int row_for(std::pair<int, int> constraint, const Coord& coord) {
        auto [it, inserted] = row_of_coord_.emplace(std::make_pair(constraint, coord),
                                                    static_cast<int>(rows_.size()));
        if (inserted) rows_.emplace_back();
        return it->second;
    }

    void put_var(int row_id, int var_id) {
        auto& bits = rows_[static_cast<std::size_t>(row_id)].bits;
        std::size_t word = static_cast<std::size_t>(var_id) / 64;
        if (bits.size() <= word) bits.resize(word + 1, 0);
        bits[word] ^= std::uint64_t{1} << (var_id % 64);
    }

    void put_rhs(std::pair<int, int> constraint, const EqChain& chain) {
        for (const auto& [key, coeff] : chain.coeffs()) {
            for (std::int64_t j : coeff.laurent_support()) {
                int row_id = row_for(constraint, {key.first, key.second, j});
                rows_[static_cast<std::size_t>(row_id)].rhs ^= true;
            }
        }
    }

    // d_eq images of an unknown coordinate, plus the h-symmetrization term
    void put_unknown_images(std::pair<int, int> constraint, std::pair<int, int> pair,
                            bool with_h_shift, bool with_deq) {
        for (const auto& [key, var_id] : vars_) {
            if (key.first != pair) continue;
            const Coord& coord = key.second;
            if (with_deq) {
                for (const auto& [to, v] : e_.base.row(coord.orbit))
                    put_var(row_for(constraint, {to, coord.h, coord.j + v.valuation()}), var_id);
                for (int k = 1; k <= e_.correction_order(); ++k)
                    for (const auto& [ft, v] : e_.correction(k).entries())
                        if (ft.first == coord.orbit)
                            put_var(row_for(constraint, {ft.second, coord.h + k, coord.j + v.valuation()}),
                                    var_id);
            }
            if (with_h_shift)
                put_var(row_for(constraint, {coord.orbit, coord.h + 1, coord.j}), var_id);
        }
    }

    // known part of p(dx tensor y) + p(x tensor dy) relative to current unknowns
    EqChain known_cross_terms(int x, int y, const std::set<std::pair<int, int>>& unknown) {
        EqChain out;
        for (const auto& [z, coeff] : c_.row(x))
            if (!unknown.count({z, y})) out = out + pop_.value(z, y).scaled(coeff);
        for (const auto& [w, coeff] : c_.row(y))
            if (!unknown.count({x, w})) out = out + pop_.value(x, w).scaled(coeff);
        return out;
    }

    std::set<std::pair<int, int>> unknown_set_;

public:
    void set_unknowns(const std::vector<std::pair<int, int>>& pairs) {
        unknown_set_ = {pairs.begin(), pairs.end()};
    }

private:
    void build_offdiag_constraint(int x, int y, const Rational& level) {
        std::pair<int, int> con{x, y};
        put_unknown_images(con, {x, y}, /*h_shift=*/true, /*deq=*/true);
        put_unknown_images(con, {y, x}, /*h_shift=*/true, /*deq=*/false);
        put_rhs(con, known_cross_terms(x, y, unknown_set_));
        // cross terms hitting current unknowns: p(dx x y) with (z, y) unknown
        for (const auto& [z, coeff] : c_.row(x))
            if (unknown_set_.count({z, y})) put_scaled_unknown(con, {z, y}, coeff.valuation());
        for (const auto& [w, coeff] : c_.row(y))
            if (unknown_set_.count({x, w})) put_scaled_unknown(con, {x, w}, coeff.valuation());
    }

    void build_diag_constraint(int x, const Rational& level) {
        std::pair<int, int> con{x, x};
        EqChain known = e_.apply_differential(pop_.value(x, x));
        known = known + known_cross_terms(x, x, unknown_set_);
        put_rhs(con, known);
        for (const auto& [z, coeff] : c_.row(x)) {
            if (unknown_set_.count({z, x})) put_scaled_unknown(con, {z, x}, coeff.valuation());
            if (unknown_set_.count({x, z})) put_scaled_unknown(con, {x, z}, coeff.valuation());
        }
    }

    void put_scaled_unknown(std::pair<int, int> constraint, std::pair<int, int> pair,
                            std::int64_t q_shift) {
        for (const auto& [key, var_id] : vars_) {
            if (key.first != pair) continue;
            const Coord& coord = key.second;
            put_var(row_for(constraint, {coord.orbit, coord.h, coord.j + q_shift}), var_id);
        }
    }

    bool eliminate_and_assign(const std::vector<std::pair<int, int>>& pairs) {
        const int V = static_cast<int>(var_keys_.size());
        const std::size_t words = static_cast<std::size_t>(V + 63) / 64;
        for (auto& row : rows_) row.bits.resize(words, 0);

        std::vector<int> pivot_of_var(static_cast<std::size_t>(V), -1);
        std::vector<Row*> pivots;
        for (auto& row : rows_) {
            Row* r = &row;
            for (;;) {
                int lead = -1;
                for (int w = static_cast<int>(words) - 1; w >= 0 && lead < 0; --w)
                    if (r->bits[static_cast<std::size_t>(w)])
                        lead = w * 64 + 63 - std::countl_zero(r->bits[static_cast<std::size_t>(w)]);
                if (lead < 0) {
                    if (r->rhs) return false;  // inconsistent
                    break;
                }
                int p = pivot_of_var[static_cast<std::size_t>(lead)];
                if (p < 0) {
                    pivot_of_var[static_cast<std::size_t>(lead)] = static_cast<int>(pivots.size());
                    pivots.push_back(r);
                    break;
                }
                Row* other = pivots[static_cast<std::size_t>(p)];
                for (std::size_t w = 0; w < words; ++w) r->bits[w] ^= other->bits[w];
                r->rhs ^= other->rhs;
            }
        }

        // assign free variables (randomized, sparse bias), then substitute
        // pivots in ascending lead order: every non-lead bit of a pivot row
        // sits strictly below the lead, so its value is already fixed
        std::vector<int> value(static_cast<std::size_t>(V), -1);
        for (int v = 0; v < V; ++v)
            if (pivot_of_var[static_cast<std::size_t>(v)] < 0)
                value[static_cast<std::size_t>(v)] = (randomize_free_ && rng_.chance(1, 16)) ? 1 : 0;
        for (int v = 0; v < V; ++v) {
            int p = pivot_of_var[static_cast<std::size_t>(v)];
            if (p < 0) continue;
            const Row* row = pivots[static_cast<std::size_t>(p)];
            int acc = row->rhs ? 1 : 0;
            for (int u = 0; u < v; ++u) {
                if (((row->bits[static_cast<std::size_t>(u) / 64] >> (u % 64)) & 1) == 0) continue;
                acc ^= value[static_cast<std::size_t>(u)];
            }
            value[static_cast<std::size_t>(v)] = acc;
        }

        // write the solution into the map
        for (const auto& pr : pairs) {
            EqChain chain;
            for (const auto& [key, var_id] : vars_) {
                if (key.first != pr) continue;
                if (value[static_cast<std::size_t>(var_id)] == 1)
                    chain.add(key.second.orbit, key.second.h, NovikovScalar::monomial(key.second.j));
            }
            pop_.set_value(pr.first, pr.second, chain);
        }
        return true;
    }
};

Triple frobenius_triple(const GeneratorSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    RandomComplexSpec cs;
    cs.pair_count = std::max(1, spec.orbit_count / 2 - (spec.orbit_count > 5 ? 1 : 0));
    cs.free_count = spec.orbit_count - 2 * cs.pair_count;
    cs.bar_lengths = spec.bar_lengths;
    cs.transvections = spec.orbit_count;
    cs.seed = rng.next();
    cs.params = {1, Rational(10), static_cast<int>(rng.range(0, 3))};
    // frobenius doubling needs an acyclic orbit graph; keep the base order
    // monotone by planting recap-free pairs only
    cs.graded = true;
    cs.monotone = true;

    Triple t;
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 64) throw UnsatisfiableError("no background-generic sample found");
        RandomComplexSpec draw = cs;
        draw.seed = rng.next();
        auto planted = random_planted_complex(draw);
        t.c = std::move(planted.complex);
        if (!t.c.validate().valid()) continue;
        // squared complex: actions doubled, entries squared
        FilteredComplex doubled = t.c.frobenius_double();
        if (spec.require_background && !check_background_assumption(t.c, doubled).ok) continue;
        try {
            std::vector<int> m = seidel_exponents(t.c, rng);
            std::vector<std::int64_t> indices;
            for (int i = 0; i < t.c.orbit_count(); ++i)
                indices.push_back(2 * t.c.orbit(i).index + t.c.params.n -
                                  m[static_cast<std::size_t>(i)]);
            t.e = split_by_grading(doubled, indices, t.c.params.N);
            if (!t.e.validate().valid())
                throw UnsatisfiableError("frobenius double failed validation");

            t.pop = PairOfPantsMap{};
            t.pop.squaring.resize(static_cast<std::size_t>(t.c.orbit_count()));
            for (int i = 0; i < t.c.orbit_count(); ++i) {
                t.pop.squaring[static_cast<std::size_t>(i)] = i;
                EqChain diag;
                diag.add(i, m[static_cast<std::size_t>(i)], NovikovScalar::one());
                t.pop.set_value(i, i, diag);
            }

            // solve the chain-map constraints level by level, descending
            std::map<Rational, std::vector<std::pair<int, int>>, std::greater<Rational>> levels;
            for (int x = 0; x < t.c.orbit_count(); ++x)
                for (int y = x + 1; y < t.c.orbit_count(); ++y) {
                    Rational level = t.c.orbit(x).action + t.c.orbit(y).action;
                    levels[level].push_back({x, y});
                    levels[level].push_back({y, x});
                }
            std::map<Rational, std::vector<int>, std::greater<Rational>> diag_at;
            for (int x = 0; x < t.c.orbit_count(); ++x) {
                if (t.c.row(x).empty()) continue;  // d x = 0: the identity holds by construction
                Rational lowest;
                bool first = true;
                for (const auto& [z, coeff] : t.c.row(x)) {
                    Rational lv = t.c.orbit(x).action + t.c.orbit(z).action;
                    if (first || lv < lowest) lowest = lv;
                    first = false;
                }
                diag_at[lowest].push_back(x);
            }

            int max_m = 0;
            for (int v : m) max_m = std::max(max_m, v);
            int h_cap = max_m + t.e.correction_order() + 3;
            std::int64_t q_width = 4;
            // pass 0: randomized free choices; pass 1: zero free choices
            // (randomization at a high level can obstruct a lower one);
            // pass 2: zero choices with widened windows
            for (int pass = 0; pass < 3; ++pass) {
                bool all_ok = true;
                LevelSolver solver(t.c, t.e, t.pop, rng, pass == 2 ? h_cap + 6 : h_cap,
                                   pass == 2 ? q_width + 4 : q_width, pass == 0);
                for (const auto& [level, pairs] : levels) {
                    solver.set_unknowns(pairs);
                    std::vector<int> diag;
                    auto dit = diag_at.find(level);
                    if (dit != diag_at.end()) diag = dit->second;
                    if (!solver.solve(pairs, diag, level)) {
                        all_ok = false;
                        break;
                    }
                }
                if (all_ok) break;
                if (pass == 2) throw UnsatisfiableError("chain-map solve infeasible");
                for (int x = 0; x < t.c.orbit_count(); ++x)
                    for (int y = 0; y < t.c.orbit_count(); ++y)
                        if (x != y) t.pop.set_value(x, y, EqChain{});
            }

            auto report = check_all(t.pop, t.c, t.e);
            if (!report.all_pass()) {
                std::string why = "generated map fails the axioms";
                for (const auto& list :
                     {report.chain_map.failures, report.filtration.failures, report.seidel.failures})
                    if (!list.empty()) { why += ": " + list.front(); break; }
                throw UnsatisfiableError(why);
            }
            return t;
        } catch (const UnsatisfiableError&) {
            if (attempt >= 63) throw;
        }
    }
}

Triple pseudo_rotation_triple(const GeneratorSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    RandomComplexSpec cs;
    cs.pair_count = 0;
    cs.free_count = std::max(1, spec.orbit_count);
    cs.seed = rng.next();
    cs.params = {1, Rational(10), static_cast<int>(rng.range(0, 3))};

    for (int attempt = 0; attempt < 64; ++attempt) {
        RandomComplexSpec draw = cs;
        draw.seed = rng.next();
        Triple t;
        t.c = random_planted_complex(draw).complex;
        FilteredComplex doubled = t.c.frobenius_double();
        if (spec.require_background && !check_background_assumption(t.c, doubled).ok) continue;
        std::vector<int> m;
        std::vector<std::int64_t> indices;
        for (int i = 0; i < t.c.orbit_count(); ++i) {
            m.push_back(static_cast<int>(rng.range(0, 3)));
            indices.push_back(2 * t.c.orbit(i).index + t.c.params.n - m.back());
        }
        t.e = split_by_grading(doubled, indices, t.c.params.N);
        t.pop.squaring.resize(static_cast<std::size_t>(t.c.orbit_count()));
        for (int i = 0; i < t.c.orbit_count(); ++i) {
            t.pop.squaring[static_cast<std::size_t>(i)] = i;
            EqChain diag;
            diag.add(i, m[static_cast<std::size_t>(i)], NovikovScalar::one());
            t.pop.set_value(i, i, diag);
        }
        auto report = check_all(t.pop, t.c, t.e);
        if (!report.all_pass()) throw UnsatisfiableError("pseudo-rotation axioms fail");
        return t;
    }
    throw UnsatisfiableError("no background-generic sample found");
}

}  // namespace

Triple generate_synthetic(const GeneratorSpec& spec) {
    if (spec.orbit_count < 1) throw std::invalid_argument("generate_synthetic: orbit_count >= 1");
    std::uint64_t seed = spec.seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
    if (spec.model == SyntheticModel::PseudoRotation) return pseudo_rotation_triple(spec, seed);
    return frobenius_triple(spec, seed);
}

}  // namespace nvk
