#include <hypemb/error.hpp>
#include <hypemb/integer.hpp>

#include <algorithm>
#include <limits>

namespace hypemb {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidSurface: return "InvalidSurface";
        case ErrorCode::InadmissibleOrbit: return "InadmissibleOrbit";
        case ErrorCode::InconsistentHomology: return "InconsistentHomology";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    _code(code)
{
}

auto checked_add(std::int64_t a, std::int64_t b) -> std::int64_t
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "64-bit addition overflowed");
    return r;
}

auto checked_sub(std::int64_t a, std::int64_t b) -> std::int64_t
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "64-bit subtraction overflowed");
    return r;
}

auto checked_mul(std::int64_t a, std::int64_t b) -> std::int64_t
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "64-bit multiplication overflowed");
    return r;
}

auto floor_div(std::int64_t a, std::int64_t b) -> std::int64_t
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

auto sum(const IntVector & v) -> std::int64_t
{
    std::int64_t s = 0;
    for (auto x : v)
        s = checked_add(s, x);
    return s;
}

auto dot(const IntVector & a, const IntVector & b) -> std::int64_t
{
    if (a.size() != b.size())
        throw Error(ErrorCode::LengthMismatch, "dot product of vectors of different length");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

auto support_size(const IntVector & v) -> int
{
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
}

auto is_zero(const IntVector & v) -> bool
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

auto to_int64(const Integer & x) -> std::int64_t
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::Overflow, "integer does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

}  // namespace hypemb
