#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nvk/complex.hpp"

namespace nvk {

/// One finite bar: d(eta) = gamma, length = A(gamma) - A(eta) > 0 for
/// strictly action-increasing differentials.
struct BarPair {
    ChainVector eta;
    ChainVector gamma;
    Rational length;
    std::string eta_lead;    // leading orbit labels, for reports
    std::string gamma_lead;
};

/// Basis {alpha_i, eta_j, gamma_j} of Def. "singular decomposition":
/// d(alpha) = 0, d(eta_j) = gamma_j, the whole family orthogonal.
struct SingularDecomposition {
    std::vector<ChainVector> cycles;  // alpha_i
    std::vector<BarPair> pairs;       // sorted by (length, eta_lead)
};

struct Barcode {
    std::vector<Rational> finite_bars;  // ascending
    int infinite_bar_count = 0;
    std::vector<std::pair<std::string, std::string>> witnesses;  // (eta_lead, gamma_lead) per bar

    Action beta_min() const {
        return finite_bars.empty() ? Action::infinity() : Action(finite_bars.front());
    }
    // boundary depth; 0 when the differential vanishes
    Rational beta() const { return finite_bars.empty() ? Rational(0) : finite_bars.back(); }
};

/// Pivot-selection order for the elimination. Both orders must produce the
/// same bar multiset; the acceptance suite checks this.
enum class PivotPolicy {
    GlobalMinGap,          // smallest action gap anywhere in the matrix
    GlobalMinGapReversed,  // same gaps, reversed tie-breaking
    ColumnSweep,           // columns by increasing target action, min gap within
};

SingularDecomposition singular_decomposition(const FilteredComplex& complex,
                                             PivotPolicy policy = PivotPolicy::GlobalMinGap);

Barcode barcode(const FilteredComplex& complex, PivotPolicy policy = PivotPolicy::GlobalMinGap);

Action beta_min(const FilteredComplex& complex);
Rational beta(const FilteredComplex& complex);

/// Independent route to the shortest bar: minimum capped-level action gap
/// over the raw differential entries, no elimination involved.
Action beta_min_entry_oracle(const FilteredComplex& complex);

/// Exact orthogonality test: per action class mod lambda0, aligned leading
/// parts must be F2-linearly independent.
bool is_orthogonal(const std::vector<ChainVector>& vectors, const FilteredComplex& complex);

/// Literal brute-force over monomial coefficient tuples q^k with k in a
/// window covering the action span. Exponential; intended for test-scale
/// inputs (throws beyond the stated budget).
bool is_orthogonal_window_oracle(const std::vector<ChainVector>& vectors,
                                 const FilteredComplex& complex);

struct ChainProbeReport {
    int trials = 0;
    int skipped = 0;  // sampled chains with d(chain) = 0
    std::vector<std::string> violations;
    bool witness_attains = false;  // gap of eta_1 equals beta_min
    Action beta_min_value;
    bool ok() const { return violations.empty(); }
};

/// Samples random chains and checks A(d xi) - A(xi) >= beta_min, plus the
/// witness eta_1 attaining equality.
ChainProbeReport beta_min_chain_probe(const FilteredComplex& complex, int trials,
                                      std::uint64_t seed);

}  // namespace nvk
