#pragma once

#include <hypemb/verdict.hpp>

#include <optional>
#include <vector>

namespace hypemb {

struct DecideOptions {
    SearchBudget budget;
    /// Under the degree hypothesis, answer NO from ≤≤ alone without running
    /// the witness search.
    bool fast_path = false;
    /// Run the BFS route alongside the decomposition route and, under the
    /// degree hypothesis, insist that the search agrees with ≤≤. Mismatches
    /// throw std::logic_error.
    bool cross_check = false;
};

/// Σd' < 2Σd - n - 1.
auto degree_hypothesis(int n, const DegreeTuple & d, const DegreeTuple & target) -> bool;

/// Both degree sums are at least n+1.
auto in_main_range(int n, const DegreeTuple & d, const DegreeTuple & target) -> bool;

/// Cheap necessary conditions. Returns the first rule that fires.
auto quick_checks(int n, const DegreeTuple & d, const DegreeTuple & target, Mode mode) -> std::optional<Certificate>;

auto decide(int n, const DegreeTuple & d, const DegreeTuple & target, Mode mode, const DecideOptions & options = {})
    -> Verdict;

/// Re-runs the rule named by a certificate on the given inputs; true iff it
/// reproduces the NO and the stored numbers match.
auto replay_certificate(int n, const DegreeTuple & d, const DegreeTuple & target, Mode mode,
    const Certificate & certificate) -> bool;

/// Checks that a YES witness rebuilds the target.
auto replay_witness(const DegreeTuple & d, const DegreeTuple & target, Mode mode, const Witness & witness) -> bool;

/// Independent validation of a verdict's payload.
auto verify_verdict(const Verdict & v) -> bool;

struct Query {
    int n;
    DegreeTuple source;
    DegreeTuple target;
    Mode mode;
};

/// Decides a batch of queries, in parallel over queries when threads > 1.
/// Each query itself runs single-threaded; output order matches input order.
auto decide_batch(const std::vector<Query> & queries, const DecideOptions & options, int threads)
    -> std::vector<Verdict>;

/// Serial reference for decide_batch.
auto decide_batch_serial(const std::vector<Query> & queries, const DecideOptions & options) -> std::vector<Verdict>;

}  // namespace hypemb
