#pragma once

#include <hypemb/engine.hpp>
#include <hypemb/index_calculus.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace hypemb {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;
inline constexpr const char * engine_version = "0.1.0";

auto to_json(const DegreeTuple & d) -> Json;
auto tuple_from_json(const Json & j) -> DegreeTuple;

auto to_json(const Move & m) -> Json;
auto move_from_json(const Json & j) -> Move;

auto to_json(const Witness & w) -> Json;
auto witness_from_json(const Json & j) -> Witness;

auto to_json(const Certificate & c) -> Json;
auto certificate_from_json(const Json & j) -> Certificate;

auto to_json(const CombinatorialWitness & w) -> Json;
auto combinatorial_witness_from_json(const Json & j) -> CombinatorialWitness;

auto to_json(const SearchSummary & s) -> Json;
auto search_summary_from_json(const Json & j) -> SearchSummary;

auto to_json(const Verdict & v) -> Json;
auto verdict_from_json(const Json & j) -> Verdict;

auto to_json(const OrbitClass & o, int n, const DegreeTuple & d) -> Json;

/// Everything needed to reproduce and audit one CLI invocation. Wall time is
/// the only field that varies between runs.
struct QueryRecord {
    std::string command;
    Json inputs;
    Json result;
    std::optional<double> wall_time_seconds;
};

auto to_json(const QueryRecord & r) -> Json;
/// Throws Error(Parse) on a missing field or a foreign schema version.
auto record_from_json(const Json & j) -> QueryRecord;

}  // namespace hypemb
