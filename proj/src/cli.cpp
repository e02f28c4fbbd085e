#include <hypemb/cli.hpp>
#include <hypemb/error.hpp>
#include <hypemb/serialize.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace hypemb {

using Clock = std::chrono::steady_clock;

auto parse_int_list(const std::string & text) -> std::vector<std::int64_t>
{
    std::vector<std::int64_t> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(item, &used);
        }
        catch (const std::exception &) {
            throw Error(ErrorCode::Parse, "not an integer: '" + item + "'");
        }
        if (used != item.size())
            throw Error(ErrorCode::Parse, "not an integer: '" + item + "'");
        out.push_back(value);
    }
    if (out.empty() || text.back() == ',')
        throw Error(ErrorCode::Parse, "expected a comma-separated list, got '" + text + "'");
    return out;
}

namespace {
    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    auto parse_tuple(const std::string & text, const char * flag) -> DegreeTuple
    {
        try {
            auto raw = parse_int_list(text);
            return canonicalize(raw);
        }
        catch (const Error & e) {
            throw UsageError(std::string(flag) + ": " + e.what());
        }
    }

    auto kind_exit(VerdictKind k) -> int
    {
        switch (k) {
            case VerdictKind::Yes: return exit_code::yes;
            case VerdictKind::No: return exit_code::no;
            case VerdictKind::Unknown: return exit_code::unknown;
        }
        return exit_code::unknown;
    }

    auto elapsed(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    struct Common {
        int n = 0;
        bool human = false;
        bool json = false;
        std::string out_path;
    };

    struct BudgetFlags {
        int q_cap = SearchBudget{}.q_cap;
        std::int64_t call_cap = SearchBudget{}.call_cap;
        double time_cap = 0.0;
        int threads = 1;
        bool fast_path = false;

        void add_to(CLI::App & app)
        {
            app.add_option("--q-cap", q_cap, "largest q tried when q is unbounded")->check(CLI::PositiveNumber);
            app.add_option("--call-cap", call_cap, "candidates examined per (l,q) cell")->check(CLI::PositiveNumber);
            app.add_option("--time-cap", time_cap, "wall-clock seconds per search, 0 = none")
                ->check(CLI::NonNegativeNumber);
            app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
            app.add_flag("--fast-path", fast_path, "skip the witness search under the degree hypothesis");
        }

        auto options() const -> DecideOptions
        {
            DecideOptions o;
            o.budget.q_cap = q_cap;
            o.budget.call_cap = call_cap;
            o.budget.time_cap_seconds = time_cap;
            o.budget.threads = threads;
            o.fast_path = fast_path;
            return o;
        }

        auto to_json() const -> Json
        {
            return {{"q_cap", q_cap}, {"call_cap", call_cap}, {"time_cap", time_cap}, {"fast_path", fast_path}};
        }
    };

    void write_record(const Common & common, const QueryRecord & record)
    {
        if (common.out_path.empty())
            return;
        std::ofstream file(common.out_path);
        if (! file)
            throw UsageError("--out: cannot open " + common.out_path);
        file << to_json(record).dump(2) << '\n';
    }

    auto join_moves(const MoveSequence & moves) -> std::string
    {
        if (moves.empty())
            return "no moves";
        std::string s;
        for (auto & m : moves)
            s += (s.empty() ? "" : ", ") + m.to_string();
        return s;
    }

    void print_human(std::ostream & out, const Verdict & v)
    {
        out << to_string(v.kind) << ": " << v.source << " -> " << v.target << " (n=" << v.n << ", "
            << to_string(v.mode) << ")\n";
        if (v.witness) {
            if (v.witness->kind == Witness::Kind::GcdComponent)
                out << "  keep one component of degree " << v.witness->start << ", add back the rest\n";
            out << "  moves from " << v.witness->start << ": " << join_moves(v.witness->moves) << '\n';
        }
        if (v.certificate) {
            out << "  rule " << to_string(v.certificate->rule) << ':';
            for (auto & [k, x] : v.certificate->data)
                out << ' ' << k << '=' << x;
            out << '\n';
        }
        if (! v.reason.empty())
            out << "  " << v.reason << '\n';
        for (auto & step : v.trace)
            out << "  . " << step.check << ": " << step.outcome << '\n';
    }

    auto mode_option(CLI::App & app, std::string & mode)
    {
        return app.add_option("--mode", mode, "liouville | weinstein | symplectic")
            ->check(CLI::IsMember({"liouville", "weinstein", "symplectic"}));
    }

    // OrbitClass text "1,0,2" or "1,0,2:A" with A the Morse index (default 0).
    auto parse_end(int n, const std::string & text) -> OrbitClass
    {
        auto colon = text.find(':');
        int morse = 0;
        try {
            if (colon != std::string::npos)
                morse = std::stoi(text.substr(colon + 1));
            return make_orbit(n, parse_int_list(text.substr(0, colon)), morse);
        }
        catch (const Error & e) {
            throw UsageError("--end " + text + ": " + e.what());
        }
        catch (const std::exception &) {
            throw UsageError("--end " + text + ": bad Morse index");
        }
    }

    auto poset_nodes(int n, std::int64_t max_sum) -> std::vector<DegreeTuple>
    {
        std::vector<DegreeTuple> nodes;
        for (std::int64_t s = n + 1; s <= max_sum; ++s)
            for (auto & t : tuples_with_sum(s))
                nodes.push_back(t);
        return nodes;
    }

    auto dot_quote(const DegreeTuple & d) -> std::string
    {
        return "\"" + d.to_string() + "\"";
    }

    auto parse_mode_or_throw(const std::string & text) -> Mode
    {
        auto m = parse_mode(text);
        if (! m)
            throw UsageError("unknown mode '" + text + "'");
        return *m;
    }
}

auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Embedding obstructions between projective hypersurface complements", "hypemb"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common common;
    std::string source_text, target_text, degrees_text, mode_text = "liouville";
    BudgetFlags budget;

    auto add_output = [&](CLI::App * cmd) {
        auto json = cmd->add_flag("--json", common.json, "JSON on stdout (default)");
        cmd->add_flag("--human", common.human, "plain text on stdout")->excludes(json);
        cmd->add_option("--out", common.out_path, "also write the query record to this file");
    };
    // Accepted everywhere so scripts can pass one flag set; these commands run serially.
    auto add_threads = [&](CLI::App * cmd) {
        cmd->add_option("--threads", budget.threads, "ignored, this command is serial")->check(CLI::PositiveNumber);
    };

    auto decide_cmd = app.add_subcommand("decide", "decide whether X_d embeds into X_d'");
    decide_cmd->add_option("--n", common.n, "complex dimension")->required()->check(CLI::PositiveNumber);
    decide_cmd->add_option("--source", source_text, "source degrees, e.g. 3,2,2")->required();
    decide_cmd->add_option("--target", target_text, "target degrees")->required();
    mode_option(*decide_cmd, mode_text);
    budget.add_to(*decide_cmd);
    add_output(decide_cmd);

    bool use_bfs = false;
    auto leqq_cmd = app.add_subcommand("leqq", "decide the combination/duplication order");
    leqq_cmd->add_option("--source", source_text, "source degrees")->required();
    leqq_cmd->add_option("--target", target_text, "target degrees")->required();
    leqq_cmd->add_flag("--bfs", use_bfs, "report the shortest move sequence found by breadth-first search");
    add_output(leqq_cmd);
    add_threads(leqq_cmd);

    std::int64_t action_cap = 0;
    auto spectrum_cmd = app.add_subcommand("spectrum", "list Reeb orbit classes up to an action bound");
    spectrum_cmd->add_option("--n", common.n, "complex dimension")->required()->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--degrees", degrees_text, "divisor degrees")->required();
    spectrum_cmd->add_option("--action-cap", action_cap, "largest action")->required()->check(CLI::PositiveNumber);
    add_output(spectrum_cmd);
    add_threads(spectrum_cmd);

    std::vector<std::string> end_texts;
    std::optional<int> tangency;
    std::optional<std::int64_t> q_value;
    auto index_cmd = app.add_subcommand("index", "Fredholm index of a formal genus-zero curve");
    index_cmd->add_option("--n", common.n, "complex dimension")->required()->check(CLI::PositiveNumber);
    index_cmd->add_option("--degrees", degrees_text, "divisor degrees")->required();
    index_cmd->add_option("--end", end_texts, "positive end v[:A], repeatable")->required();
    index_cmd->add_option("--tangency", tangency, "order m of the constraint <<T^m p>>")
        ->check(CLI::NonNegativeNumber);
    index_cmd->add_option("--q", q_value, "capped degree; inferred from the ends when omitted")
        ->check(CLI::PositiveNumber);
    add_output(index_cmd);
    add_threads(index_cmd);

    auto invariants_cmd = app.add_subcommand("invariants", "F_n, G and homology data of one complement");
    invariants_cmd->add_option("--n", common.n, "complex dimension")->required()->check(CLI::PositiveNumber);
    invariants_cmd->add_option("--degrees", degrees_text, "divisor degrees")->required();
    add_output(invariants_cmd);
    add_threads(invariants_cmd);

    std::int64_t max_sum = 0;
    auto poset_cmd = app.add_subcommand("poset", "DOT graph of the covering relations of the order");
    poset_cmd->add_option("--n", common.n, "complex dimension")->required()->check(CLI::PositiveNumber);
    poset_cmd->add_option("--max-sum", max_sum, "largest total degree")->required()->check(CLI::NonNegativeNumber);
    mode_option(*poset_cmd, mode_text);
    budget.add_to(*poset_cmd);

    std::string batch_path;
    auto batch_cmd = app.add_subcommand("batch", "decide every query in a file, one 'n source target [mode]' per line");
    batch_cmd->add_option("--file", batch_path, "query file")->required()->check(CLI::ExistingFile);
    budget.add_to(*batch_cmd);
    add_output(batch_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp & e) {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp & e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    auto start = Clock::now();
    try {
        if (decide_cmd->parsed()) {
            auto d = parse_tuple(source_text, "--source");
            auto t = parse_tuple(target_text, "--target");
            auto mode = parse_mode_or_throw(mode_text);
            auto v = decide(common.n, d, t, mode, budget.options());

            Json inputs{{"n", common.n}, {"source", to_json(d)}, {"target", to_json(t)}, {"mode", to_string(mode)}};
            inputs.update(budget.to_json());
            QueryRecord record{"decide", inputs, to_json(v), std::nullopt};
            if (common.human)
                print_human(out, v);
            else
                out << to_json(record).dump(2) << '\n';
            record.wall_time_seconds = elapsed(start);
            write_record(common, record);
            return kind_exit(v.kind);
        }

        if (leqq_cmd->parsed()) {
            auto d = parse_tuple(source_text, "--source");
            auto t = parse_tuple(target_text, "--target");
            auto r = leqq(d, t);
            MoveSequence moves = r.moves;
            if (use_bfs && r.holds)
                moves = *leqq_bfs(d, t);

            Json result{{"holds", r.holds}};
            if (r.holds) {
                result["moves"] = Json::array();
                for (auto & m : moves)
                    result["moves"].push_back(to_json(m));
                if (! use_bfs && r.decomposition) {
                    result["decomposition"] = Json::array();
                    for (auto & row : r.decomposition->rows)
                        result["decomposition"].push_back(row);
                }
            }
            QueryRecord record{"leqq", {{"source", to_json(d)}, {"target", to_json(t)}, {"bfs", use_bfs}}, result,
                std::nullopt};
            if (common.human) {
                out << d << (r.holds ? " <<= " : " not <<= ") << t << '\n';
                if (r.holds)
                    out << "  " << join_moves(moves) << '\n';
            }
            else
                out << to_json(record).dump(2) << '\n';
            record.wall_time_seconds = elapsed(start);
            write_record(common, record);
            return r.holds ? exit_code::yes : exit_code::no;
        }

        if (spectrum_cmd->parsed()) {
            auto d = parse_tuple(degrees_text, "--degrees");
            auto rows = orbit_spectrum(common.n, d, action_cap);
            auto table = Json::array();
            for (auto & o : rows)
                table.push_back(to_json(o, common.n, d));
            QueryRecord record{"spectrum", {{"n", common.n}, {"degrees", to_json(d)}, {"action_cap", action_cap}},
                {{"classes", table}}, std::nullopt};
            if (common.human) {
                out << "action  v  delta  |A|  cz  homology\n";
                for (auto & o : rows)
                    out << o.action(d) << "  " << format_vector(o.v) << "  " << o.delta << "  "
                        << o.morse_index(common.n) << "  " << o.cz() << "  "
                        << format_vector(o.homology(d).representative()) << '\n';
            }
            else
                out << to_json(record).dump(2) << '\n';
            record.wall_time_seconds = elapsed(start);
            write_record(common, record);
            return 0;
        }

        if (index_cmd->parsed()) {
            auto d = parse_tuple(degrees_text, "--degrees");
            std::vector<OrbitClass> ends;
            for (auto & text : end_texts)
                ends.push_back(parse_end(common.n, text));
            std::int64_t ind = 0;
            std::int64_t q = 0;
            try {
                if (q_value) {
                    q = *q_value;
                    ind = curve_index(FormalCurveSpec{common.n, d, ends, tangency, q});
                }
                else {
                    std::vector<IntVector> vs;
                    for (auto & o : ends)
                        vs.push_back(o.v);
                    auto inferred = is_nullhomologous_sum(vs, d);
                    if (! inferred)
                        throw UsageError("ends do not sum to a multiple of the degree vector; pass --q");
                    q = *inferred;
                    ind = curve_index(common.n, d, ends, tangency);
                }
            }
            catch (const Error & e) {
                throw UsageError(e.what());
            }
            auto end_rows = Json::array();
            for (auto & o : ends)
                end_rows.push_back(to_json(o, common.n, d));
            Json inputs{{"n", common.n}, {"degrees", to_json(d)}, {"ends", end_rows}};
            inputs["tangency"] = tangency ? Json(*tangency) : Json(nullptr);
            QueryRecord record{"index", inputs, {{"q", q}, {"index", ind}}, std::nullopt};
            if (common.human)
                out << "ind = " << ind << " (q = " << q << ")\n";
            else
                out << to_json(record).dump(2) << '\n';
            record.wall_time_seconds = elapsed(start);
            write_record(common, record);
            return 0;
        }

        if (invariants_cmd->parsed()) {
            auto d = parse_tuple(degrees_text, "--degrees");
            DivisorComplement x(common.n, d);
            auto g = g_invariant(common.n, d);
            Json result{{"total_degree", d.total()}, {"gcd", d.gcd()}, {"in_main_range", x.in_main_range()},
                {"f_invariant", f_invariant(common.n, d)}, {"g_invariant", g ? Json(*g) : Json("unknown")},
                {"gw_anchor", gw_anchor(common.n)}};
            QueryRecord record{"invariants", {{"n", common.n}, {"degrees", to_json(d)}}, result, std::nullopt};
            if (common.human)
                for (auto & [k, v] : result.items())
                    out << k << ": " << v.dump() << '\n';
            else
                out << to_json(record).dump(2) << '\n';
            record.wall_time_seconds = elapsed(start);
            write_record(common, record);
            return 0;
        }

        if (poset_cmd->parsed()) {
            auto mode = parse_mode_or_throw(mode_text);
            auto nodes = poset_nodes(common.n, max_sum);
            auto count = nodes.size();
            std::vector<char> below(count * count, 0);
            for (std::size_t a = 0; a < count; ++a)
                for (std::size_t b = 0; b < count; ++b)
                    below[a * count + b] = a != b && leqq(nodes[a], nodes[b]).holds;

            std::vector<std::pair<std::size_t, std::size_t>> covers;
            std::vector<Query> queries;
            for (std::size_t a = 0; a < count; ++a)
                for (std::size_t b = 0; b < count; ++b) {
                    if (! below[a * count + b])
                        continue;
                    bool direct = true;
                    for (std::size_t c = 0; c < count && direct; ++c)
                        if (below[a * count + c] && below[c * count + b])
                            direct = false;
                    if (direct) {
                        covers.emplace_back(a, b);
                        queries.push_back({common.n, nodes[a], nodes[b], mode});
                    }
                }
            auto options = budget.options();
            auto verdicts = decide_batch(queries, options, budget.threads);

            out << "digraph leqq {\n";
            out << "  rankdir = BT;\n";
            out << "  node [shape = box];\n";
            for (auto & node : nodes)
                out << "  " << dot_quote(node) << " [label = " << dot_quote(node) << "];\n";
            for (std::size_t e = 0; e < covers.size(); ++e)
                out << "  " << dot_quote(nodes[covers[e].first]) << " -> " << dot_quote(nodes[covers[e].second])
                    << " [label = \"" << to_string(verdicts[e].kind) << "\"];\n";
            out << "}\n";
            return 0;
        }

        if (batch_cmd->parsed()) {
            std::ifstream file(batch_path);
            std::vector<Query> queries;
            std::string line;
            for (int line_no = 1; std::getline(file, line); ++line_no) {
                if (line.empty() || line[0] == '#')
                    continue;
                std::istringstream fields(line);
                int n = 0;
                std::string s, t, m = "liouville";
                if (! (fields >> n >> s >> t) || n < 1)
                    throw UsageError(batch_path + ":" + std::to_string(line_no) + ": expected 'n source target [mode]'");
                fields >> m;
                queries.push_back({n, parse_tuple(s, "source"), parse_tuple(t, "target"), parse_mode_or_throw(m)});
            }
            auto verdicts = decide_batch(queries, budget.options(), budget.threads);
            auto rows = Json::array();
            for (auto & v : verdicts)
                rows.push_back(to_json(v));
            QueryRecord record{"batch", {{"file", batch_path}, {"queries", queries.size()}}, {{"verdicts", rows}},
                std::nullopt};
            record.inputs.update(budget.to_json());
            if (common.human)
                for (auto & v : verdicts)
                    print_human(out, v);
            else
                out << to_json(record).dump(2) << '\n';
            record.wall_time_seconds = elapsed(start);
            write_record(common, record);
            return 0;
        }
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

}  // namespace hypemb
