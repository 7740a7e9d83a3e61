#include "nvk/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nvk {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t Rng::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("Rng::below(0)");
    // rejection sampling keeps the draw unbiased and platform-independent
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        std::uint64_t v = next();
        if (v < limit) return v % bound;
    }
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(int num, int den) {
    return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num);
}

PlantedComplex random_planted_complex(const RandomComplexSpec& spec) {
    Rng rng(spec.seed);
    const int n = 2 * spec.pair_count + spec.free_count;
    const int N = spec.params.N;
    PlantedComplex out;

    std::vector<Rational> bars = spec.bar_lengths;
    while (static_cast<int>(bars.size()) < spec.pair_count)
        bars.push_back(Rational(rng.range(1, 4 * spec.action_denominator), spec.action_denominator));
    bars.resize(static_cast<std::size_t>(spec.pair_count));

    FilteredComplex c;
    c.params = spec.params;
    c.graded = spec.graded;

    // sample base actions; optionally insist on genericity mod lambda0
    for (int attempt = 0; attempt < 256; ++attempt) {
        c.orbits.clear();
        std::vector<Rational> actions;
        auto fresh_action = [&]() {
            return Rational(rng.range(0, 6 * spec.action_denominator), spec.action_denominator);
        };
        bool ok = true;
        // eta orbits carry the bar starts; gamma orbits sit at start + length
        for (int s = 0; s < spec.pair_count && ok; ++s) {
            Rational start = fresh_action();
            std::int64_t mu = rng.range(0, spec.index_range - 1);
            std::int64_t k = (spec.graded && !spec.monotone) ? rng.range(-1, 1) : 0;
            Rational gamma_action =
                start + bars[static_cast<std::size_t>(s)] -
                c.params.lambda0 * Rational(kRecapActionSign * k);
            c.orbits.push_back({"e" + std::to_string(s), start, mu});
            c.orbits.push_back(
                {"g" + std::to_string(s), gamma_action, mu + 1 - 2 * N * kRecapIndexSign * k});
            actions.push_back(start);
            actions.push_back(gamma_action);
        }
        for (int f = 0; f < spec.free_count && ok; ++f) {
            Rational a = fresh_action();
            c.orbits.push_back({"f" + std::to_string(f), a, rng.range(0, spec.index_range - 1)});
            actions.push_back(a);
        }
        if (spec.distinct_actions_mod_lambda0) {
            std::set<Rational> seen;
            for (const auto& a : actions)
                if (!seen.insert(a.mod(c.params.lambda0)).second) ok = false;
        }
        if (ok) break;
        if (attempt == 255) throw std::runtime_error("random_planted_complex: action sampling failed");
    }
    c.rebuild_index();

    // elementary differential: d(eta_s) = q^k gamma_s, bar length as planted
    for (int s = 0; s < spec.pair_count; ++s) {
        int eta = 2 * s, gamma = 2 * s + 1;
        std::int64_t k = 0;
        if (spec.graded) {
            // recover k from the planted index relation
            k = (c.orbits[static_cast<std::size_t>(eta)].index + 1 -
                 c.orbits[static_cast<std::size_t>(gamma)].index) /
                (2 * N * kRecapIndexSign);
        }
        c.set_entry(eta, gamma, NovikovScalar::monomial(k));
    }

    // mix with filtered transvections x_a := x_a + q^j x_b, A(q^j x_b) > A(x_a),
    // A(x_b) > A(x_a) so the change of basis is unitriangular (char 2: T = T^-1).
    // Conjugation: row_a += q^j row_b, then col_b += q^j col_a.
    int applied = 0;
    for (int tries = 0; tries < spec.transvections * 20 && applied < spec.transvections; ++tries) {
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (a == b) continue;
        const auto& oa = c.orbits[static_cast<std::size_t>(a)];
        const auto& ob = c.orbits[static_cast<std::size_t>(b)];
        if (!(oa.action < ob.action)) continue;
        std::int64_t j;
        if (spec.graded) {
            std::int64_t diff = oa.index - ob.index;
            if (diff % (2 * N * kRecapIndexSign) != 0) continue;
            j = diff / (2 * N * kRecapIndexSign);
        } else {
            j = rng.range(-1, 2);
        }
        // strict filtration: A(x_b) + j*lambda0 > A(x_a)
        Rational gap = ob.action - oa.action + c.params.lambda0 * Rational(kRecapActionSign * j);
        if (gap.sign() <= 0) continue;
        NovikovScalar t = NovikovScalar::monomial(j);
        // row_a += t * row_b
        for (const auto& [to, v] : c.row(b)) c.set_entry(a, to, c.entry(a, to) + t * v);
        // col_b += t * col_a
        for (int i = 0; i < n; ++i) {
            NovikovScalar v = c.entry(i, a);
            if (!v.is_zero()) c.set_entry(i, b, c.entry(i, b) + t * v);
        }
        ++applied;
    }

    out.complex = std::move(c);
    out.planted_bars = bars;
    std::sort(out.planted_bars.begin(), out.planted_bars.end());
    out.planted_infinite = spec.free_count;
    return out;
}

}  // namespace nvk
