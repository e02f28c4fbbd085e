#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypemb {

// Arbitrary precision integer used by the lattice code.
using Integer = boost::multiprecision::cpp_int;

using IntVector = std::vector<std::int64_t>;

// Overflow-checked 64-bit arithmetic. Overflow throws Error(Overflow).
auto checked_add(std::int64_t a, std::int64_t b) -> std::int64_t;
auto checked_sub(std::int64_t a, std::int64_t b) -> std::int64_t;
auto checked_mul(std::int64_t a, std::int64_t b) -> std::int64_t;

auto floor_div(std::int64_t a, std::int64_t b) -> std::int64_t;

auto sum(const IntVector & v) -> std::int64_t;
auto dot(const IntVector & a, const IntVector & b) -> std::int64_t;

// Number of nonzero entries.
auto support_size(const IntVector & v) -> int;

auto is_zero(const IntVector & v) -> bool;

// Narrow an Integer back to int64; throws Error(Overflow) if it does not fit.
auto to_int64(const Integer & x) -> std::int64_t;

}  // namespace hypemb
