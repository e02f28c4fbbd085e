#include <hypemb/error.hpp>
#include <hypemb/partial_order.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace hypemb {

using std::size_t;
using std::vector;

auto Move::to_string() const -> std::string
{
    if (kind == Kind::Combine)
        return "combine(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return "duplicate(" + std::to_string(i) + ")";
}

namespace {
    auto apply_raw(const IntVector & d, const Move & move) -> std::optional<IntVector>
    {
        IntVector out;
        if (move.kind == Move::Kind::Combine) {
            if (move.i >= move.j || move.j >= d.size())
                return std::nullopt;
            out.reserve(d.size() - 1);
            for (size_t t = 0; t < d.size(); ++t)
                if (t != move.i && t != move.j)
                    out.push_back(d[t]);
            out.push_back(checked_add(d[move.i], d[move.j]));
        }
        else {
            if (move.i >= d.size())
                return std::nullopt;
            out = d;
            out.push_back(d[move.i]);
        }
        std::sort(out.begin(), out.end(), std::greater<>{});
        return out;
    }
}

auto apply_move(const DegreeTuple & d, const Move & move) -> std::optional<DegreeTuple>
{
    auto out = apply_raw(d.entries(), move);
    if (! out)
        return std::nullopt;
    return DegreeTuple(*out);
}

auto replay(const DegreeTuple & d, const MoveSequence & moves) -> std::optional<DegreeTuple>
{
    auto current = d.entries();
    for (auto & m : moves) {
        auto next = apply_raw(current, m);
        if (! next)
            return std::nullopt;
        current = std::move(*next);
    }
    return DegreeTuple(current);
}

auto is_valid_decomposition(const DegreeTuple & d, const DegreeTuple & target, const DecompositionWitness & w) -> bool
{
    if (w.rows.size() != d.size())
        return false;
    IntVector total(target.size(), 0);
    for (size_t i = 0; i < d.size(); ++i) {
        auto & z = w.rows[i];
        if (z.size() != target.size() || is_zero(z))
            return false;
        for (size_t j = 0; j < z.size(); ++j) {
            if (z[j] < 0)
                return false;
            total[j] = checked_add(total[j], checked_mul(d[i], z[j]));
        }
    }
    return total == target.entries();
}

auto leqq_bfs(const DegreeTuple & d, const DegreeTuple & target) -> std::optional<MoveSequence>
{
    auto goal = target.entries();
    auto limit_total = target.total();
    auto limit_entry = target.max();

    struct Parent {
        IntVector state;
        Move move;
    };
    std::map<IntVector, std::optional<Parent>> seen;
    std::deque<IntVector> queue;

    auto start = d.entries();
    if (d.total() > limit_total || d.max() > limit_entry)
        return std::nullopt;
    seen.emplace(start, std::nullopt);
    queue.push_back(start);

    auto rebuild = [&](IntVector state) {
        MoveSequence path;
        while (true) {
            auto & parent = seen.at(state);
            if (! parent)
                break;
            path.push_back(parent->move);
            state = parent->state;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    if (start == goal)
        return MoveSequence{};

    while (! queue.empty()) {
        auto state = std::move(queue.front());
        queue.pop_front();

        auto visit = [&](const Move & m) -> bool {
            auto child = apply_raw(state, m);
            if (sum(*child) > limit_total || child->front() > limit_entry)
                return false;
            if (! seen.emplace(*child, Parent{state, m}).second)
                return false;
            if (*child == goal)
                return true;
            queue.push_back(std::move(*child));
            return false;
        };

        for (size_t i = 0; i < state.size(); ++i)
            for (size_t j = i + 1; j < state.size(); ++j)
                if (visit(Move::combine(i, j)))
                    return rebuild(goal);
        for (size_t i = 0; i < state.size(); ++i)
            if (visit(Move::duplicate(i)))
                return rebuild(goal);
    }
    return std::nullopt;
}

namespace {
    // Distinct degree values (descending) with their multiplicities.
    struct Groups {
        IntVector values;
        vector<int> counts;
    };

    auto group_degrees(const DegreeTuple & d) -> Groups
    {
        Groups g;
        for (auto e : d.entries()) {
            if (! g.values.empty() && g.values.back() == e)
                ++g.counts.back();
            else {
                g.values.push_back(e);
                g.counts.push_back(1);
            }
        }
        return g;
    }

    // Every way to write `amount` as sum_g values[g]*c[g], c >= 0; the
    // coefficient vectors come out in descending lex order.
    void representations(const IntVector & values, std::int64_t amount, size_t g, vector<std::int64_t> & current,
        vector<vector<std::int64_t>> & out)
    {
        if (g == values.size()) {
            if (amount == 0)
                out.push_back(current);
            return;
        }
        for (auto c = amount / values[g]; c >= 0; --c) {
            current[g] = c;
            representations(values, amount - c * values[g], g + 1, current, out);
        }
        current[g] = 0;
    }
}

auto leqq_decomposition(const DegreeTuple & d, const DegreeTuple & target) -> std::optional<DecompositionWitness>
{
    if (d.total() > target.total())
        return std::nullopt;

    auto groups = group_degrees(d);
    auto ng = groups.values.size();
    auto kp = target.size();

    // Per target entry, the distinct representations over the degree groups.
    vector<vector<vector<std::int64_t>>> reps(kp);
    for (size_t j = 0; j < kp; ++j) {
        vector<std::int64_t> current(ng, 0);
        representations(groups.values, target[j], 0, current, reps[j]);
        if (reps[j].empty())
            return std::nullopt;
    }

    // Dynamic programme over target entries. A state records, per group, how
    // many units have been placed so far, capped at the group's multiplicity:
    // a group of m equal degrees is covered once it has m units to hand out.
    using State = vector<int>;
    struct Step {
        State previous;
        size_t rep;
    };
    vector<std::map<State, Step>> layers(kp + 1);
    layers[0].emplace(State(ng, 0), Step{{}, 0});
    for (size_t j = 0; j < kp; ++j) {
        for (auto & [state, _] : layers[j]) {
            for (size_t r = 0; r < reps[j].size(); ++r) {
                State next = state;
                for (size_t g = 0; g < ng; ++g)
                    next[g] = static_cast<int>(std::min<std::int64_t>(groups.counts[g], next[g] + reps[j][r][g]));
                layers[j + 1].emplace(std::move(next), Step{state, r});
            }
        }
    }

    State full(groups.counts.begin(), groups.counts.end());
    if (! layers[kp].contains(full))
        return std::nullopt;

    vector<size_t> chosen(kp);
    State state = full;
    for (size_t j = kp; j-- > 0;) {
        auto & step = layers[j + 1].at(state);
        chosen[j] = step.rep;
        state = step.previous;
    }

    // Hand the units of each group out to its rows: first one unit to every
    // row, then any surplus to the group's first row.
    DecompositionWitness w;
    w.rows.assign(d.size(), IntVector(kp, 0));
    size_t first_row = 0;
    for (size_t g = 0; g < ng; ++g) {
        size_t next_empty = 0;
        for (size_t j = 0; j < kp; ++j)
            for (auto u = reps[j][chosen[j]][g]; u > 0; --u) {
                size_t row = first_row;
                if (next_empty < static_cast<size_t>(groups.counts[g]))
                    row = first_row + next_empty++;
                ++w.rows[row][j];
            }
        first_row += groups.counts[g];
    }
    return w;
}

auto moves_from_decomposition(const DegreeTuple & d, const DegreeTuple & target, const DecompositionWitness & w)
    -> MoveSequence
{
    MoveSequence moves;
    IntVector current = d.entries();

    auto first_index = [&](std::int64_t value, size_t from = 0) {
        for (size_t t = from; t < current.size(); ++t)
            if (current[t] == value)
                return t;
        throw std::logic_error("decomposition replay lost a piece of value " + std::to_string(value));
    };
    auto step = [&](const Move & m) {
        moves.push_back(m);
        current = *apply_raw(current, m);
    };

    for (size_t i = 0; i < d.size(); ++i)
        for (auto c = sum(w.rows[i]); c > 1; --c)
            step(Move::duplicate(first_index(d[i])));

    for (size_t j = 0; j < target.size(); ++j) {
        IntVector pieces;
        for (size_t i = 0; i < d.size(); ++i)
            for (auto c = w.rows[i][j]; c > 0; --c)
                pieces.push_back(d[i]);
        auto partial = pieces.front();
        for (size_t p = 1; p < pieces.size(); ++p) {
            auto hi = std::max(partial, pieces[p]), lo = std::min(partial, pieces[p]);
            auto a = first_index(hi);
            auto b = first_index(lo, hi == lo ? a + 1 : 0);
            step(Move::combine(a, b));
            partial += pieces[p];
        }
    }
    return moves;
}

auto leqq(const DegreeTuple & d, const DegreeTuple & target, bool cross_check) -> LeqqResult
{
    LeqqResult result;
    result.decomposition = leqq_decomposition(d, target);
    result.holds = result.decomposition.has_value();
    if (result.holds)
        result.moves = moves_from_decomposition(d, target, *result.decomposition);

    if (cross_check) {
        auto bfs = leqq_bfs(d, target);
        if (bfs.has_value() != result.holds)
            throw std::logic_error("leqq routes disagree on " + d.to_string() + " vs " + target.to_string());
    }
    return result;
}

auto surface_embeds(int genus, int boundary, int target_genus, int target_boundary) -> bool
{
    if (genus < 0 || target_genus < 0 || boundary < 1 || target_boundary < 1)
        throw Error(ErrorCode::InvalidSurface, "surfaces need genus >= 0 and at least one boundary component");
    return genus <= target_genus && boundary - target_boundary <= target_genus - genus;
}

auto tuples_with_sum(std::int64_t total) -> vector<DegreeTuple>
{
    vector<DegreeTuple> out;
    IntVector current;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining, std::int64_t cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (auto e = std::min(remaining, cap); e >= 1; --e) {
            current.push_back(e);
            rec(remaining - e, e);
            current.pop_back();
        }
    };
    if (total >= 1)
        rec(total, total);
    return out;
}

}  // namespace hypemb
