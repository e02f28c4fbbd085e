#include <hypemb/error.hpp>
#include <hypemb/serialize.hpp>

namespace hypemb {

namespace {
    auto parse_error(const std::string & what) -> Error
    {
        return Error(ErrorCode::Parse, what);
    }

    auto field(const Json & j, const char * key) -> const Json &
    {
        if (! j.is_object() || ! j.contains(key))
            throw parse_error(std::string("missing field '") + key + "'");
        return j.at(key);
    }

    template <class T>
    auto get(const Json & j, const char * key) -> T
    {
        try {
            return field(j, key).get<T>();
        }
        catch (const nlohmann::json::exception & e) {
            throw parse_error(std::string("field '") + key + "': " + e.what());
        }
    }

    auto vectors_to_json(const std::vector<IntVector> & vs) -> Json
    {
        auto out = Json::array();
        for (auto & v : vs)
            out.push_back(v);
        return out;
    }

    auto vectors_from_json(const Json & j) -> std::vector<IntVector>
    {
        return j.get<std::vector<IntVector>>();
    }

    auto bounds_to_json(const std::vector<LBounds> & bs) -> Json
    {
        auto out = Json::array();
        for (auto & b : bs)
            out.push_back({{"l", b.l}, {"q_min", b.q_min}, {"q_max", b.q_max}, {"exhaustive", b.exhaustive}});
        return out;
    }

    auto bounds_from_json(const Json & j) -> std::vector<LBounds>
    {
        std::vector<LBounds> out;
        for (auto & b : j)
            out.push_back({get<std::int64_t>(b, "l"), get<std::int64_t>(b, "q_min"), get<std::int64_t>(b, "q_max"),
                get<bool>(b, "exhaustive")});
        return out;
    }

    auto parse_kind(const std::string & s) -> VerdictKind
    {
        for (auto k : {VerdictKind::Yes, VerdictKind::No, VerdictKind::Unknown})
            if (to_string(k) == s)
                return k;
        throw parse_error("unknown verdict kind '" + s + "'");
    }

    auto parse_status(const std::string & s) -> SearchStatus
    {
        for (auto st : {SearchStatus::Feasible, SearchStatus::Infeasible, SearchStatus::BudgetExceeded})
            if (to_string(st) == s)
                return st;
        throw parse_error("unknown search status '" + s + "'");
    }
}

auto to_json(const DegreeTuple & d) -> Json
{
    return Json(d.entries());
}

auto tuple_from_json(const Json & j) -> DegreeTuple
{
    auto raw = j.get<IntVector>();
    return DegreeTuple(raw);
}

auto to_json(const Move & m) -> Json
{
    if (m.kind == Move::Kind::Combine)
        return {{"op", "combine"}, {"i", m.i}, {"j", m.j}};
    return {{"op", "duplicate"}, {"i", m.i}};
}

auto move_from_json(const Json & j) -> Move
{
    auto op = get<std::string>(j, "op");
    if (op == "combine")
        return Move::combine(get<std::size_t>(j, "i"), get<std::size_t>(j, "j"));
    if (op == "duplicate")
        return Move::duplicate(get<std::size_t>(j, "i"));
    throw parse_error("unknown move '" + op + "'");
}

auto to_json(const Witness & w) -> Json
{
    Json j;
    j["kind"] = w.kind == Witness::Kind::Moves ? "moves" : "gcd_component";
    j["start"] = to_json(w.start);
    j["moves"] = Json::array();
    for (auto & m : w.moves)
        j["moves"].push_back(to_json(m));
    if (w.decomposition)
        j["decomposition"] = vectors_to_json(w.decomposition->rows);
    return j;
}

auto witness_from_json(const Json & j) -> Witness
{
    Witness w;
    auto kind = get<std::string>(j, "kind");
    if (kind == "moves")
        w.kind = Witness::Kind::Moves;
    else if (kind == "gcd_component")
        w.kind = Witness::Kind::GcdComponent;
    else
        throw parse_error("unknown witness kind '" + kind + "'");
    w.start = tuple_from_json(field(j, "start"));
    for (auto & m : field(j, "moves"))
        w.moves.push_back(move_from_json(m));
    if (j.contains("decomposition"))
        w.decomposition = DecompositionWitness{vectors_from_json(j["decomposition"])};
    return w;
}

auto to_json(const Certificate & c) -> Json
{
    Json j;
    j["rule"] = to_string(c.rule);
    j["data"] = Json::object();
    for (auto & [k, v] : c.data)
        j["data"][k] = v;
    if (c.rule == Rule::CombinatorialInfeasible) {
        j["search_bounds"] = bounds_to_json(c.search_bounds);
        j["q_cap"] = c.q_cap;
    }
    return j;
}

auto certificate_from_json(const Json & j) -> Certificate
{
    Certificate c;
    auto name = get<std::string>(j, "rule");
    auto rule = parse_rule(name);
    if (! rule)
        throw parse_error("unknown rule '" + name + "'");
    c.rule = *rule;
    for (auto & [k, v] : field(j, "data").items())
        c.data.emplace_back(k, v.get<std::int64_t>());
    if (j.contains("search_bounds"))
        c.search_bounds = bounds_from_json(j["search_bounds"]);
    if (j.contains("q_cap"))
        c.q_cap = j["q_cap"].get<int>();
    return c;
}

auto to_json(const CombinatorialWitness & w) -> Json
{
    auto map = Json::array();
    for (std::size_t r = 0; r < w.map.rows(); ++r) {
        IntVector row;
        for (std::size_t c = 0; c < w.map.cols(); ++c)
            row.push_back(to_int64(w.map(r, c)));
        map.push_back(row);
    }
    return {{"l", w.l}, {"q", w.q}, {"xs", vectors_to_json(w.xs)}, {"ys", vectors_to_json(w.ys)}, {"map", map}};
}

auto combinatorial_witness_from_json(const Json & j) -> CombinatorialWitness
{
    CombinatorialWitness w;
    w.l = get<std::int64_t>(j, "l");
    w.q = get<std::int64_t>(j, "q");
    w.xs = vectors_from_json(field(j, "xs"));
    w.ys = vectors_from_json(field(j, "ys"));
    auto rows = vectors_from_json(field(j, "map"));
    if (rows.empty() || rows[0].empty())
        throw parse_error("empty map");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw parse_error("ragged map");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    w.map = std::move(m);
    return w;
}

auto to_json(const SearchSummary & s) -> Json
{
    Json j{{"status", to_string(s.status)}, {"l_min", s.l_min}, {"l_max", s.l_max},
        {"bounds", bounds_to_json(s.bounds)}, {"candidates", s.candidates}, {"hom_solves", s.hom_solves},
        {"note", s.note}};
    if (s.witness)
        j["witness"] = to_json(*s.witness);
    return j;
}

auto search_summary_from_json(const Json & j) -> SearchSummary
{
    SearchSummary s;
    s.status = parse_status(get<std::string>(j, "status"));
    s.l_min = get<std::int64_t>(j, "l_min");
    s.l_max = get<std::int64_t>(j, "l_max");
    s.bounds = bounds_from_json(field(j, "bounds"));
    s.candidates = get<std::int64_t>(j, "candidates");
    s.hom_solves = get<std::int64_t>(j, "hom_solves");
    s.note = get<std::string>(j, "note");
    if (j.contains("witness"))
        s.witness = combinatorial_witness_from_json(j["witness"]);
    return s;
}

auto to_json(const Verdict & v) -> Json
{
    Json j;
    j["kind"] = to_string(v.kind);
    j["mode"] = to_string(v.mode);
    j["n"] = v.n;
    j["source"] = to_json(v.source);
    j["target"] = to_json(v.target);
    if (v.witness)
        j["witness"] = to_json(*v.witness);
    if (v.certificate)
        j["certificate"] = to_json(*v.certificate);
    if (! v.reason.empty())
        j["reason"] = v.reason;
    j["trace"] = Json::array();
    for (auto & step : v.trace)
        j["trace"].push_back({{"check", step.check}, {"outcome", step.outcome}});
    if (v.search)
        j["search"] = to_json(*v.search);
    return j;
}

auto verdict_from_json(const Json & j) -> Verdict
{
    Verdict v;
    v.kind = parse_kind(get<std::string>(j, "kind"));
    auto mode = parse_mode(get<std::string>(j, "mode"));
    if (! mode)
        throw parse_error("unknown mode");
    v.mode = *mode;
    v.n = get<int>(j, "n");
    v.source = tuple_from_json(field(j, "source"));
    v.target = tuple_from_json(field(j, "target"));
    if (j.contains("witness"))
        v.witness = witness_from_json(j["witness"]);
    if (j.contains("certificate"))
        v.certificate = certificate_from_json(j["certificate"]);
    if (j.contains("reason"))
        v.reason = j["reason"].get<std::string>();
    for (auto & step : field(j, "trace"))
        v.trace.push_back({get<std::string>(step, "check"), get<std::string>(step, "outcome")});
    if (j.contains("search"))
        v.search = search_summary_from_json(j["search"]);
    return v;
}

auto to_json(const OrbitClass & o, int n, const DegreeTuple & d) -> Json
{
    return {{"v", o.v}, {"delta", o.delta}, {"morse_index", o.morse_index(n)}, {"support", o.support()},
        {"action", o.action(d)}, {"cz", o.cz()}, {"homology", o.homology(d).representative()}};
}

auto to_json(const QueryRecord & r) -> Json
{
    Json j{{"schema_version", schema_version}, {"engine_version", engine_version}, {"command", r.command},
        {"inputs", r.inputs}, {"result", r.result}};
    if (r.wall_time_seconds)
        j["wall_time_seconds"] = *r.wall_time_seconds;
    return j;
}

auto record_from_json(const Json & j) -> QueryRecord
{
    if (get<int>(j, "schema_version") != schema_version)
        throw parse_error("unsupported schema_version");
    QueryRecord r;
    r.command = get<std::string>(j, "command");
    r.inputs = field(j, "inputs");
    r.result = field(j, "result");
    if (j.contains("wall_time_seconds"))
        r.wall_time_seconds = j["wall_time_seconds"].get<double>();
    return r;
}

}  // namespace hypemb
