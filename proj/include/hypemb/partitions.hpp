#pragma once

#include <hypemb/integer.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace hypemb {

/// A contiguous block of coordinates. Every part must be nonzero inside each
/// block, have at most max_support nonzero entries there, and no entry above
/// max_entry.
struct PartBlock {
    std::size_t size;
    std::size_t max_support = std::numeric_limits<std::size_t>::max();
    std::int64_t max_entry = std::numeric_limits<std::int64_t>::max();
};

/// Receives each multiset as a lex non-decreasing list of parts. Return false
/// to stop the enumeration.
using PartitionVisitor = std::function<bool(std::span<const IntVector>)>;

/// Visits every multiset of `parts` vectors in Z^m_{>=0}, each admissible for
/// all blocks, that sums to target. Multisets come in increasing lex order of
/// their sorted part lists, each exactly once. Returns false if the visitor
/// stopped early.
///
/// accept_prefix, when set, sees every proper prefix of a multiset under
/// construction; returning false skips all its completions.
auto enumerate_block_partitions(const IntVector & target, std::size_t parts, std::span<const PartBlock> blocks,
    const PartitionVisitor & visit, const PartitionVisitor & accept_prefix = {}) -> bool;

/// Single-block form: nonzero parts with at most max_support nonzero entries.
auto enumerate_vector_partitions(const IntVector & target, std::size_t parts, std::size_t max_support,
    const PartitionVisitor & visit) -> bool;

auto collect_vector_partitions(const IntVector & target, std::size_t parts, std::size_t max_support)
    -> std::vector<std::vector<IntVector>>;

}  // namespace hypemb
