#pragma once

#include <hypemb/domain.hpp>
#include <hypemb/lattice.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hypemb {

struct SearchBudget {
    /// Largest q tried when the degree inequality leaves q unbounded.
    int q_cap = 4;
    /// Partial and complete pair multisets examined per (l, q) cell.
    std::int64_t call_cap = 1'000'000;
    /// Wall-clock limit per search in seconds; 0 disables it.
    double time_cap_seconds = 0.0;
    /// Worker threads for the cell grid; 1 runs the serial reference path.
    int threads = 1;
};

/// The combinatorial data (l, q, x_i, y_i, Φ) that every Liouville embedding
/// X_d -> X_d' between main-range divisor complements induces:
///
///   Σd <= l <= Σd',  q(Σd - n - 1) <= l - n - 1,
///   x_i in Z^k_{>=0} \ 0 with at most n nonzero entries, Σ x_i = q·d,
///   y_i in Z^k'_{>=0} \ 0, Σ y_i = d',
///   Φ: Z^k/(d) -> Z^k'/(d') with Φ(x_i) = y_i.
///
/// The pairs (x_i, y_i) are a multiset; their order carries no meaning.
struct CombinatorialWitness {
    std::int64_t l = 0;
    std::int64_t q = 0;
    std::vector<IntVector> xs;
    std::vector<IntVector> ys;
    IntMatrix map{1, 1};
};

/// Checks every defining condition from scratch, without trusting the search.
auto check_witness(int n, const DegreeTuple & d, const DegreeTuple & target, const CombinatorialWitness & w) -> bool;

enum class SearchStatus { Feasible, Infeasible, BudgetExceeded };

auto to_string(SearchStatus s) -> std::string;

/// One (l, q) cell of the grid. When max_x_entry is finite the cell ranges
/// over residues of a single-component source rather than a fixed lift.
struct SearchCell {
    std::int64_t l;
    std::int64_t q;
    std::int64_t max_x_entry = std::numeric_limits<std::int64_t>::max();
};

/// Per-l summary of which q were covered.
struct LBounds {
    std::int64_t l;
    std::int64_t q_min;
    std::int64_t q_max;
    /// Exhausting [q_min, q_max] settles this l for every q >= 1.
    bool exhaustive;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Infeasible;
    std::optional<CombinatorialWitness> witness;
    std::int64_t l_min = 0;
    std::int64_t l_max = 0;
    std::vector<LBounds> bounds;
    std::int64_t candidates = 0;
    std::int64_t hom_solves = 0;
    std::string note;
};

/// The cells the search visits, in order: ascending l, then ascending q.
auto search_grid(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget)
    -> std::vector<SearchCell>;

auto grid_bounds(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget)
    -> std::vector<LBounds>;

/// Exhaustive witness search over the grid. Infeasible is returned only when
/// the grid covers every admissible q; otherwise an unsuccessful search ends
/// in BudgetExceeded. Cells are searched in parallel when budget.threads > 1,
/// with results merged in grid order so the outcome matches the serial path.
/// Throws Error(HypothesisViolated) unless both degree sums are at least n+1.
auto witness_search(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget = {})
    -> SearchResult;

/// Single-threaded reference implementation of the same search.
auto witness_search_serial(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget = {})
    -> SearchResult;

}  // namespace hypemb
