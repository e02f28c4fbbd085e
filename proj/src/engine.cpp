#include <hypemb/engine.hpp>
#include <hypemb/index_calculus.hpp>

#include <algorithm>
#include <exception>
#include <stdexcept>

#include <omp.h>

namespace hypemb {

using std::vector;

auto to_string(Mode m) -> std::string
{
    switch (m) {
        case Mode::Liouville: return "liouville";
        case Mode::Weinstein: return "weinstein";
        case Mode::Symplectic: return "symplectic";
    }
    return "?";
}

auto parse_mode(std::string_view s) -> std::optional<Mode>
{
    if (s == "liouville")
        return Mode::Liouville;
    if (s == "weinstein")
        return Mode::Weinstein;
    if (s == "symplectic")
        return Mode::Symplectic;
    return std::nullopt;
}

auto to_string(VerdictKind k) -> std::string
{
    switch (k) {
        case VerdictKind::Yes: return "YES";
        case VerdictKind::No: return "NO";
        case VerdictKind::Unknown: return "UNKNOWN";
    }
    return "?";
}

auto to_string(Rule r) -> std::string
{
    switch (r) {
        case Rule::SumDrop: return "SUM_DROP";
        case Rule::HyperplaneTarget: return "HYPERPLANE_TARGET";
        case Rule::GcdSingle: return "GCD_SINGLE";
        case Rule::FnAlmostSymplectic: return "FN_ALMOST_SYMPLECTIC";
        case Rule::CombinatorialInfeasible: return "THM18_INFEASIBLE";
        case Rule::DegreeHypothesisNotLeqq: return "DEGREE_HYP_NOT_LEQQ";
    }
    return "?";
}

auto parse_rule(std::string_view s) -> std::optional<Rule>
{
    for (auto r : {Rule::SumDrop, Rule::HyperplaneTarget, Rule::GcdSingle, Rule::FnAlmostSymplectic,
             Rule::CombinatorialInfeasible, Rule::DegreeHypothesisNotLeqq})
        if (to_string(r) == s)
            return r;
    return std::nullopt;
}

auto Certificate::value(std::string_view key) const -> std::optional<std::int64_t>
{
    for (auto & [k, v] : data)
        if (k == key)
            return v;
    return std::nullopt;
}

auto degree_hypothesis(int n, const DegreeTuple & d, const DegreeTuple & target) -> bool
{
    return target.total() < 2 * d.total() - n - 1;
}

auto in_main_range(int n, const DegreeTuple & d, const DegreeTuple & target) -> bool
{
    return d.total() >= n + 1 && target.total() >= n + 1;
}

namespace {
    auto divides(std::int64_t a, std::int64_t b) -> bool
    {
        return b % a == 0;
    }

    auto contains(const DegreeTuple & d, std::int64_t value) -> bool
    {
        auto & e = d.entries();
        return std::find(e.begin(), e.end(), value) != e.end();
    }

    auto fn_certificate(int n, const DegreeTuple & d, const DegreeTuple & target) -> std::optional<Certificate>
    {
        auto fs = f_invariant(n, d), ft = f_invariant(n, target);
        if (divides(fs, ft))
            return std::nullopt;
        return Certificate{Rule::FnAlmostSymplectic, {{"n", n}, {"source_fn", fs}, {"target_fn", ft}}, {}, 0};
    }

    auto sum_drop(int n, const DegreeTuple & d, const DegreeTuple & target) -> std::optional<Certificate>
    {
        if (d.total() <= target.total())
            return std::nullopt;
        // Σd > Σd' is exactly an empty range Σd <= l <= Σd'.
        return Certificate{Rule::SumDrop,
            {{"n", n}, {"source_sum", d.total()}, {"target_sum", target.total()}, {"l_min", d.total()},
                {"l_max", target.total()}},
            {}, 0};
    }

    auto hyperplane_target(const DegreeTuple & d, const DegreeTuple & target) -> std::optional<Certificate>
    {
        if (! target.all_ones() || d.all_ones())
            return std::nullopt;
        return Certificate{Rule::HyperplaneTarget,
            {{"source_max_degree", d.max()}, {"target_max_degree", target.max()},
                {"target_components", static_cast<std::int64_t>(target.size())}},
            {}, 0};
    }

    auto gcd_single(const DegreeTuple & d, const DegreeTuple & target) -> std::optional<Certificate>
    {
        if (d.size() != 1 || divides(d[0], target.gcd()))
            return std::nullopt;
        return Certificate{Rule::GcdSingle, {{"source_degree", d[0]}, {"target_gcd", target.gcd()}}, {}, 0};
    }

    struct Ladder {
        Verdict v;

        void note(std::string check, std::string outcome)
        {
            v.trace.push_back({std::move(check), std::move(outcome)});
        }

        auto yes(Witness w) -> Verdict
        {
            v.kind = VerdictKind::Yes;
            v.witness = std::move(w);
            return std::move(v);
        }

        auto no(Certificate c) -> Verdict
        {
            v.kind = VerdictKind::No;
            v.certificate = std::move(c);
            return std::move(v);
        }

        auto unknown(std::string reason) -> Verdict
        {
            v.kind = VerdictKind::Unknown;
            v.reason = std::move(reason);
            return std::move(v);
        }
    };

    auto moves_witness(const DegreeTuple & start, const LeqqResult & r) -> Witness
    {
        return Witness{Witness::Kind::Moves, start, r.moves, r.decomposition};
    }

    auto summarize(const SearchResult & r) -> SearchSummary
    {
        return SearchSummary{r.status, r.l_min, r.l_max, r.bounds, r.candidates, r.hom_solves, r.note, r.witness};
    }

    auto decide_symplectic(Ladder & ladder, int n, const DegreeTuple & d, const DegreeTuple & target,
        const DecideOptions & options) -> Verdict
    {
        auto g = d.gcd(), gp = target.gcd();
        bool main_range = in_main_range(n, d, target);

        if (main_range && ! divides(g, gp)) {
            ladder.note("gcd_divisibility", "fires");
            return ladder.no(Certificate{Rule::GcdSingle, {{"source_gcd", g}, {"target_gcd", gp}}, {}, 0});
        }
        ladder.note("gcd_divisibility", main_range ? "passes" : "skipped: outside main range");

        if (divides(g, gp) && contains(d, g)) {
            DegreeTuple single{g};
            auto r = leqq(single, target, options.cross_check);
            ladder.note("gcd_component_construction", "applies");
            auto w = moves_witness(single, r);
            w.kind = Witness::Kind::GcdComponent;
            return ladder.yes(std::move(w));
        }
        ladder.note("gcd_component_construction", "does not apply");

        auto r = leqq(d, target, options.cross_check);
        if (r.holds) {
            ladder.note("leqq", "holds");
            return ladder.yes(moves_witness(d, r));
        }
        ladder.note("leqq", "fails");

        if (auto c = fn_certificate(n, d, target)) {
            ladder.note("fn_divisibility", "fires");
            return ladder.no(*c);
        }
        ladder.note("fn_divisibility", "passes");
        return ladder.unknown("no symplectic obstruction or construction applies");
    }
}

auto quick_checks(int n, const DegreeTuple & d, const DegreeTuple & target, Mode mode) -> std::optional<Certificate>
{
    if (auto c = fn_certificate(n, d, target))
        return c;
    if (mode == Mode::Symplectic || ! in_main_range(n, d, target))
        return std::nullopt;
    if (auto c = sum_drop(n, d, target))
        return c;
    if (auto c = hyperplane_target(d, target))
        return c;
    if (auto c = gcd_single(d, target))
        return c;
    return std::nullopt;
}

auto decide(int n, const DegreeTuple & d, const DegreeTuple & target, Mode mode, const DecideOptions & options)
    -> Verdict
{
    if (n < 1)
        throw std::invalid_argument("dimension n must be at least 1");

    Ladder ladder;
    ladder.v.mode = mode;
    ladder.v.n = n;
    ladder.v.source = d;
    ladder.v.target = target;

    if (mode == Mode::Symplectic)
        return decide_symplectic(ladder, n, d, target, options);

    auto order = leqq(d, target, options.cross_check);
    if (order.holds) {
        ladder.note("leqq", "holds");
        return ladder.yes(moves_witness(d, order));
    }
    ladder.note("leqq", "fails");

    if (auto c = quick_checks(n, d, target, mode)) {
        ladder.note("quick_checks", to_string(c->rule));
        return ladder.no(*c);
    }
    ladder.note("quick_checks", "none fire");

    if (! in_main_range(n, d, target)) {
        ladder.note("main_range", "fails");
        return ladder.unknown("degree sums below n+1; obstruction theory does not apply");
    }

    bool hypothesis = degree_hypothesis(n, d, target);
    Certificate hypothesis_certificate{Rule::DegreeHypothesisNotLeqq,
        {{"n", n}, {"source_sum", d.total()}, {"target_sum", target.total()}}, {}, 0};

    if (hypothesis && options.fast_path) {
        ladder.note("degree_hypothesis", "holds; fast path");
        return ladder.no(std::move(hypothesis_certificate));
    }

    auto search = witness_search(n, d, target, options.budget);
    ladder.v.search = summarize(search);
    ladder.note("witness_search", to_string(search.status));

    if (search.status == SearchStatus::Infeasible) {
        if (options.cross_check && search.witness)
            throw std::logic_error("infeasible search carried a witness");
        return ladder.no(Certificate{Rule::CombinatorialInfeasible,
            {{"n", n}, {"l_min", search.l_min}, {"l_max", search.l_max}}, search.bounds, options.budget.q_cap});
    }

    if (hypothesis) {
        if (options.cross_check && search.status == SearchStatus::Feasible)
            throw std::logic_error("witness found under the degree hypothesis although "
                + d.to_string() + " is not ≤≤ " + target.to_string());
        ladder.note("degree_hypothesis", "holds");
        return ladder.no(std::move(hypothesis_certificate));
    }
    ladder.note("degree_hypothesis", "fails");

    if (search.status == SearchStatus::Feasible)
        return ladder.unknown("combinatorial witness exists but no embedding construction is known");
    return ladder.unknown("witness search exceeded its budget: " + search.note);
}

auto replay_certificate(int n, const DegreeTuple & d, const DegreeTuple & target, Mode mode,
    const Certificate & c) -> bool
{
    auto same = [&](std::optional<Certificate> fresh) {
        return fresh && fresh->rule == c.rule && fresh->data == c.data;
    };
    bool liouville = mode != Mode::Symplectic;
    bool main_range = in_main_range(n, d, target);

    switch (c.rule) {
        case Rule::FnAlmostSymplectic:
            return same(fn_certificate(n, d, target));
        case Rule::SumDrop:
            return liouville && main_range && same(sum_drop(n, d, target));
        case Rule::HyperplaneTarget:
            return liouville && main_range && same(hyperplane_target(d, target));
        case Rule::GcdSingle:
            if (liouville)
                return main_range && same(gcd_single(d, target));
            return main_range && ! divides(d.gcd(), target.gcd())
                && c.value("source_gcd") == d.gcd() && c.value("target_gcd") == target.gcd();
        case Rule::DegreeHypothesisNotLeqq:
            return liouville && main_range && degree_hypothesis(n, d, target) && ! leqq(d, target).holds
                && c.value("source_sum") == d.total() && c.value("target_sum") == target.total();
        case Rule::CombinatorialInfeasible: {
            if (! liouville || ! main_range)
                return false;
            SearchBudget budget;
            budget.q_cap = c.q_cap;
            auto r = witness_search_serial(n, d, target, budget);
            if (r.status != SearchStatus::Infeasible || r.bounds.size() != c.search_bounds.size())
                return false;
            for (std::size_t i = 0; i < r.bounds.size(); ++i) {
                auto & a = r.bounds[i];
                auto & b = c.search_bounds[i];
                if (a.l != b.l || a.q_min != b.q_min || a.q_max != b.q_max || a.exhaustive != b.exhaustive)
                    return false;
            }
            return true;
        }
    }
    return false;
}

auto replay_witness(const DegreeTuple & d, const DegreeTuple & target, Mode mode, const Witness & w) -> bool
{
    if (w.kind == Witness::Kind::GcdComponent) {
        if (mode != Mode::Symplectic)
            return false;
        if (w.start.size() != 1 || w.start[0] != d.gcd() || ! contains(d, w.start[0]))
            return false;
    }
    else if (w.start != d)
        return false;

    auto end = replay(w.start, w.moves);
    if (! end || *end != target)
        return false;
    if (w.decomposition && ! is_valid_decomposition(w.start, target, *w.decomposition))
        return false;
    return true;
}

auto verify_verdict(const Verdict & v) -> bool
{
    switch (v.kind) {
        case VerdictKind::Yes:
            return v.witness && ! v.certificate && replay_witness(v.source, v.target, v.mode, *v.witness);
        case VerdictKind::No:
            return v.certificate && ! v.witness
                && replay_certificate(v.n, v.source, v.target, v.mode, *v.certificate);
        case VerdictKind::Unknown:
            return ! v.witness && ! v.certificate && ! v.reason.empty();
    }
    return false;
}

auto decide_batch_serial(const vector<Query> & queries, const DecideOptions & options) -> vector<Verdict>
{
    auto single = options;
    single.budget.threads = 1;
    vector<Verdict> out;
    out.reserve(queries.size());
    for (auto & q : queries)
        out.push_back(decide(q.n, q.source, q.target, q.mode, single));
    return out;
}

auto decide_batch(const vector<Query> & queries, const DecideOptions & options, int threads) -> vector<Verdict>
{
    if (threads <= 1)
        return decide_batch_serial(queries, options);

    auto single = options;
    single.budget.threads = 1;
    vector<std::optional<Verdict>> slots(queries.size());
    std::exception_ptr failure;
    auto count = static_cast<std::int64_t>(queries.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            auto & q = queries[i];
            slots[i] = decide(q.n, q.source, q.target, q.mode, single);
        }
        catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    vector<Verdict> out;
    out.reserve(slots.size());
    for (auto & s : slots)
        out.push_back(std::move(*s));
    return out;
}

}  // namespace hypemb
