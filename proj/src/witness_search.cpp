#include <hypemb/error.hpp>
#include <hypemb/partitions.hpp>
#include <hypemb/witness_search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <utility>

#include <omp.h>

namespace hypemb {

using std::size_t;
using std::vector;
using Clock = std::chrono::steady_clock;

auto to_string(SearchStatus s) -> std::string
{
    switch (s) {
        case SearchStatus::Feasible: return "FEASIBLE";
        case SearchStatus::Infeasible: return "INFEASIBLE";
        case SearchStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

auto check_witness(int n, const DegreeTuple & d, const DegreeTuple & target, const CombinatorialWitness & w) -> bool
{
    auto s = d.total(), sp = target.total();
    if (s < n + 1 || sp < n + 1)
        return false;
    if (w.q < 1 || w.l < s || w.l > sp)
        return false;
    if (w.q * (s - n - 1) > w.l - n - 1)
        return false;
    if (static_cast<std::int64_t>(w.xs.size()) != w.l || static_cast<std::int64_t>(w.ys.size()) != w.l)
        return false;

    IntVector xsum(d.size(), 0), ysum(target.size(), 0);
    vector<HomConstraint> pairs;
    for (std::int64_t i = 0; i < w.l; ++i) {
        auto & x = w.xs[i];
        auto & y = w.ys[i];
        if (x.size() != d.size() || y.size() != target.size())
            return false;
        if (is_zero(x) || is_zero(y) || support_size(x) > n)
            return false;
        for (size_t c = 0; c < x.size(); ++c) {
            if (x[c] < 0)
                return false;
            xsum[c] += x[c];
        }
        for (size_t c = 0; c < y.size(); ++c) {
            if (y[c] < 0)
                return false;
            ysum[c] += y[c];
        }
        pairs.push_back({x, y});
    }
    for (size_t c = 0; c < d.size(); ++c)
        if (xsum[c] != w.q * d[c])
            return false;
    if (ysum != target.entries())
        return false;
    return is_valid_hom(d, target, pairs, w.map);
}

auto search_grid(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget)
    -> vector<SearchCell>
{
    vector<SearchCell> cells;
    auto s = d.total(), sp = target.total();
    for (auto l = s; l <= sp; ++l) {
        if (s > n + 1) {
            auto q_max = (l - n - 1) / (s - n - 1);
            for (std::int64_t q = 1; q <= q_max; ++q)
                cells.push_back({l, q});
        }
        else if (d.size() == 1) {
            // Only x_i mod d_1 matters, and a residue in [1, d_1] is its own
            // smallest lift, so q <= l covers every residue assignment.
            for (std::int64_t q = 1; q <= l; ++q)
                cells.push_back({l, q, d[0]});
        }
        else {
            for (std::int64_t q = 1; q <= budget.q_cap; ++q)
                cells.push_back({l, q});
        }
    }
    return cells;
}

auto grid_bounds(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget)
    -> vector<LBounds>
{
    vector<LBounds> out;
    for (auto & cell : search_grid(n, d, target, budget)) {
        if (out.empty() || out.back().l != cell.l)
            out.push_back({cell.l, cell.q, cell.q, true});
        out.back().q_max = cell.q;
    }
    auto s = d.total();
    if (s == n + 1 && d.size() > 1)
        for (auto & b : out)
            b.exhaustive = false;
    return out;
}

namespace {
    struct CellResult {
        SearchStatus status = SearchStatus::Infeasible;
        std::optional<CombinatorialWitness> witness;
        std::int64_t candidates = 0;
        std::int64_t hom_solves = 0;
    };

    using ResidueKey = vector<std::pair<IntVector, IntVector>>;

    auto search_cell(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchCell & cell,
        const SearchBudget & budget, Clock::time_point start) -> CellResult
    {
        auto k = d.size(), kp = target.size();
        IntVector joint;
        for (auto e : d.entries())
            joint.push_back(checked_mul(cell.q, e));
        for (auto e : target.entries())
            joint.push_back(e);

        PartBlock blocks[2] = {
            {k, static_cast<size_t>(n), cell.max_x_entry},
            {kp, kp},
        };

        CellResult result;
        std::map<ResidueKey, std::optional<IntMatrix>> memo;
        HomSolver solver(d, target);

        // Φ only sees residues, so equal residue pairs impose one constraint.
        auto solve = [&](std::span<const IntVector> parts) -> const std::optional<IntMatrix> & {
            ResidueKey key;
            key.reserve(parts.size());
            for (auto & part : parts) {
                IntVector x(part.begin(), part.begin() + k), y(part.begin() + k, part.end());
                key.emplace_back(homology_reduce(x, d).representative(), homology_reduce(y, target).representative());
            }
            std::sort(key.begin(), key.end());
            key.erase(std::unique(key.begin(), key.end()), key.end());

            auto found = memo.find(key);
            if (found != memo.end())
                return found->second;
            std::optional<IntMatrix> map;
            bool clash = false;
            for (size_t i = 1; i < key.size(); ++i)
                if (key[i].first == key[i - 1].first)
                    clash = true;
            if (! clash) {
                vector<HomConstraint> pairs;
                for (auto & [x, y] : key)
                    pairs.push_back({x, y});
                ++result.hom_solves;
                map = solver.solve(pairs);
            }
            return memo.emplace(std::move(key), std::move(map)).first->second;
        };

        auto out_of_budget = [&] {
            if (result.candidates >= budget.call_cap)
                return true;
            return budget.time_cap_seconds > 0
                && std::chrono::duration<double>(Clock::now() - start).count() > budget.time_cap_seconds;
        };

        // A prefix with no Φ has no completion with one.
        auto accept_prefix = [&](std::span<const IntVector> parts) {
            if (result.status == SearchStatus::BudgetExceeded)
                return false;
            if (out_of_budget()) {
                result.status = SearchStatus::BudgetExceeded;
                return false;
            }
            ++result.candidates;
            return solve(parts).has_value();
        };

        auto visit = [&](std::span<const IntVector> parts) {
            if (out_of_budget()) {
                result.status = SearchStatus::BudgetExceeded;
                return false;
            }
            ++result.candidates;
            auto & map = solve(parts);
            if (! map)
                return true;

            CombinatorialWitness w;
            w.l = cell.l;
            w.q = cell.q;
            for (auto & part : parts) {
                w.xs.emplace_back(part.begin(), part.begin() + k);
                w.ys.emplace_back(part.begin() + k, part.end());
            }
            w.map = *map;
            result.status = SearchStatus::Feasible;
            result.witness = std::move(w);
            return false;
        };

        enumerate_block_partitions(joint, static_cast<size_t>(cell.l), blocks, visit, accept_prefix);
        return result;
    }

    auto prepare(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget)
        -> std::pair<SearchResult, vector<SearchCell>>
    {
        if (d.total() < n + 1 || target.total() < n + 1)
            throw Error(ErrorCode::HypothesisViolated, "both degree sums must be at least n+1 = "
                    + std::to_string(n + 1));
        SearchResult r;
        r.l_min = d.total();
        r.l_max = target.total();
        r.bounds = grid_bounds(n, d, target, budget);
        return {std::move(r), search_grid(n, d, target, budget)};
    }

    // Folds cell results in grid order: the first feasible cell wins, and
    // only cells up to it contribute to the statistics.
    auto merge(SearchResult r, const vector<std::optional<CellResult>> & results, int n, const DegreeTuple & d)
        -> SearchResult
    {
        bool budget_hit = false;
        for (auto & cell : results) {
            if (! cell)
                break;
            r.candidates += cell->candidates;
            r.hom_solves += cell->hom_solves;
            if (cell->status == SearchStatus::Feasible) {
                r.status = SearchStatus::Feasible;
                r.witness = cell->witness;
                return r;
            }
            if (cell->status == SearchStatus::BudgetExceeded)
                budget_hit = true;
        }
        if (r.bounds.empty()) {
            r.status = SearchStatus::Infeasible;
            r.note = "empty l-range";
        }
        else if (budget_hit) {
            r.status = SearchStatus::BudgetExceeded;
            r.note = "call or time cap reached";
        }
        else if (d.total() == n + 1 && d.size() > 1) {
            r.status = SearchStatus::BudgetExceeded;
            r.note = "q unbounded at total degree n+1; searched q <= q_cap";
        }
        else {
            r.status = SearchStatus::Infeasible;
            r.note = "grid exhausted";
        }
        return r;
    }
}

auto witness_search_serial(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget)
    -> SearchResult
{
    auto [result, cells] = prepare(n, d, target, budget);
    auto start = Clock::now();
    vector<std::optional<CellResult>> results(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
        results[i] = search_cell(n, d, target, cells[i], budget, start);
        if (results[i]->status == SearchStatus::Feasible)
            break;
    }
    return merge(std::move(result), results, n, d);
}

auto witness_search(int n, const DegreeTuple & d, const DegreeTuple & target, const SearchBudget & budget)
    -> SearchResult
{
    if (budget.threads <= 1)
        return witness_search_serial(n, d, target, budget);

    auto [result, cells] = prepare(n, d, target, budget);
    auto start = Clock::now();
    vector<std::optional<CellResult>> results(cells.size());
    std::atomic<size_t> first_feasible{cells.size()};
    std::exception_ptr failure;
    auto count = static_cast<std::int64_t>(cells.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(budget.threads)
    for (std::int64_t i = 0; i < count; ++i) {
        auto idx = static_cast<size_t>(i);
        if (idx > first_feasible.load())
            continue;
        try {
            auto r = search_cell(n, d, target, cells[idx], budget, start);
            if (r.status == SearchStatus::Feasible) {
                auto current = first_feasible.load();
                while (idx < current && ! first_feasible.compare_exchange_weak(current, idx)) {
                }
            }
            results[idx] = std::move(r);
        }
        catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    // Cells past the first feasible one may be missing; merge stops there.
    auto cut = first_feasible.load();
    if (cut < results.size())
        results.resize(cut + 1);
    return merge(std::move(result), results, n, d);
}

}  // namespace hypemb
