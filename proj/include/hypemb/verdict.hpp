#pragma once

#include <hypemb/domain.hpp>
#include <hypemb/partial_order.hpp>
#include <hypemb/witness_search.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypemb {

enum class Mode { Liouville, Weinstein, Symplectic };

auto to_string(Mode m) -> std::string;
auto parse_mode(std::string_view s) -> std::optional<Mode>;

enum class VerdictKind { Yes, No, Unknown };

auto to_string(VerdictKind k) -> std::string;

/// Obstruction rules a NO verdict can cite. The string forms are part of the
/// JSON schema and never change.
enum class Rule {
    SumDrop,
    HyperplaneTarget,
    GcdSingle,
    FnAlmostSymplectic,
    CombinatorialInfeasible,
    DegreeHypothesisNotLeqq,
};

auto to_string(Rule r) -> std::string;
auto parse_rule(std::string_view s) -> std::optional<Rule>;

struct Certificate {
    Rule rule;
    /// The numbers the rule compared, in a fixed order.
    std::vector<std::pair<std::string, std::int64_t>> data;
    /// The (l, q) ranges exhausted, for CombinatorialInfeasible.
    std::vector<LBounds> search_bounds;
    /// q_cap in force when the bounds were produced.
    int q_cap = 0;

    auto value(std::string_view key) const -> std::optional<std::int64_t>;
};

struct Witness {
    enum class Kind {
        /// Combination/duplication moves from the source to the target.
        Moves,
        /// Add back all components but one of degree g = gcd(d), then move
        /// from (g) to the target.
        GcdComponent,
    };

    Kind kind = Kind::Moves;
    DegreeTuple start{1};
    MoveSequence moves;
    std::optional<DecompositionWitness> decomposition;
};

struct TraceStep {
    std::string check;
    std::string outcome;
};

struct SearchSummary {
    SearchStatus status;
    std::int64_t l_min, l_max;
    std::vector<LBounds> bounds;
    std::int64_t candidates;
    std::int64_t hom_solves;
    std::string note;
    std::optional<CombinatorialWitness> witness;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    Mode mode = Mode::Liouville;
    int n = 1;
    DegreeTuple source{1};
    DegreeTuple target{1};
    std::optional<Witness> witness;
    std::optional<Certificate> certificate;
    std::string reason;
    std::vector<TraceStep> trace;
    std::optional<SearchSummary> search;
};

}  // namespace hypemb
