#pragma once

#include <hypemb/domain.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hypemb {

/// One step of the combination/duplication order. Indices refer to the
/// canonical (non-increasing) form of the tuple the move is applied to.
struct Move {
    enum class Kind { Combine, Duplicate };

    Kind kind;
    std::size_t i;
    std::size_t j = 0;  // Combine only; i < j

    static auto combine(std::size_t i, std::size_t j) -> Move { return {Kind::Combine, i, j}; }
    static auto duplicate(std::size_t i) -> Move { return {Kind::Duplicate, i, 0}; }

    // Combine < Duplicate, then by indices.
    auto operator<=>(const Move &) const = default;
    auto operator==(const Move &) const -> bool = default;

    auto to_string() const -> std::string;
};

using MoveSequence = std::vector<Move>;

/// Applies one move; nullopt if its indices are out of range.
auto apply_move(const DegreeTuple & d, const Move & move) -> std::optional<DegreeTuple>;

/// Replays a whole sequence; nullopt if any step is invalid.
auto replay(const DegreeTuple & d, const MoveSequence & moves) -> std::optional<DegreeTuple>;

/// Rows z_i in Z^k'_{>=0} \ {0} with sum_i d_i z_i = d'.
struct DecompositionWitness {
    std::vector<IntVector> rows;
};

auto is_valid_decomposition(const DegreeTuple & d, const DegreeTuple & target, const DecompositionWitness & w) -> bool;

/// Exhaustive breadth-first search over canonical tuples. Among the shortest
/// sequences it returns the lexicographically smallest.
auto leqq_bfs(const DegreeTuple & d, const DegreeTuple & target) -> std::optional<MoveSequence>;

/// Exact feasibility of sum_i d_i z_i = d' with every z_i nonzero.
auto leqq_decomposition(const DegreeTuple & d, const DegreeTuple & target) -> std::optional<DecompositionWitness>;

/// Duplicate each d_i up to |z_i| copies, then combine into the entries of d'.
auto moves_from_decomposition(const DegreeTuple & d, const DegreeTuple & target, const DecompositionWitness & w)
    -> MoveSequence;

struct LeqqResult {
    bool holds = false;
    std::optional<DecompositionWitness> decomposition;
    MoveSequence moves;
};

/// Decides d ≤≤ d' through the decomposition route. With cross_check set the
/// BFS route is run too and any disagreement throws std::logic_error.
auto leqq(const DegreeTuple & d, const DegreeTuple & target, bool cross_check = false) -> LeqqResult;

/// Liouville embedding criterion for compact surfaces Σ_{g,k} -> Σ_{g',k'}.
/// Throws Error(InvalidSurface).
auto surface_embeds(int genus, int boundary, int target_genus, int target_boundary) -> bool;

/// All canonical tuples with entry sum exactly `total`, in descending lex order.
auto tuples_with_sum(std::int64_t total) -> std::vector<DegreeTuple>;

}  // namespace hypemb
