#include <hypemb/domain.hpp>
#include <hypemb/error.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hypemb {

DegreeTuple::DegreeTuple(std::span<const std::int64_t> raw) :
    _entries(raw.begin(), raw.end())
{
    if (_entries.empty())
        throw Error(ErrorCode::EmptyInput, "degree tuple must have at least one entry");
    for (auto e : _entries)
        if (e < 1)
            throw Error(ErrorCode::NonPositiveEntry, "degree " + std::to_string(e) + " is not positive");
    std::sort(_entries.begin(), _entries.end(), std::greater<>{});
}

DegreeTuple::DegreeTuple(std::initializer_list<std::int64_t> raw) :
    DegreeTuple(std::span<const std::int64_t>(raw.begin(), raw.size()))
{
}

auto DegreeTuple::total() const -> std::int64_t
{
    return sum(_entries);
}

auto DegreeTuple::gcd() const -> std::int64_t
{
    std::int64_t g = 0;
    for (auto e : _entries)
        g = std::gcd(g, e);
    return g;
}

auto DegreeTuple::to_string() const -> std::string
{
    return format_vector(_entries);
}

auto canonicalize(std::span<const std::int64_t> raw) -> DegreeTuple
{
    return DegreeTuple(raw);
}

auto operator<<(std::ostream & s, const DegreeTuple & d) -> std::ostream &
{
    return s << d.to_string();
}

DivisorComplement::DivisorComplement(int n_, DegreeTuple degrees_) :
    n(n_),
    degrees(std::move(degrees_))
{
    if (n < 1)
        throw Error(ErrorCode::NonPositiveEntry, "complex dimension must be at least 1");
}

HomologyElement::HomologyElement(IntVector rep, const DegreeTuple & modulus) :
    _rep(std::move(rep)),
    _modulus(modulus)
{
}

auto HomologyElement::is_zero() const -> bool
{
    return hypemb::is_zero(_rep);
}

auto homology_reduce(const IntVector & v, const DegreeTuple & d) -> HomologyElement
{
    if (v.size() != d.size())
        throw Error(ErrorCode::LengthMismatch, "vector length " + std::to_string(v.size()) + " does not match "
                + std::to_string(d.size()) + " divisor components");
    auto k = v.size();
    auto t = floor_div(v[k - 1], d[k - 1]);
    IntVector rep(k);
    for (std::size_t i = 0; i < k; ++i)
        rep[i] = checked_sub(v[i], checked_mul(t, d[i]));
    return HomologyElement(std::move(rep), d);
}

auto is_nullhomologous_sum(std::span<const IntVector> vs, const DegreeTuple & d) -> std::optional<std::int64_t>
{
    IntVector total(d.size(), 0);
    for (auto & v : vs) {
        if (v.size() != d.size())
            throw Error(ErrorCode::LengthMismatch, "orbit vector length does not match divisor components");
        for (std::size_t i = 0; i < v.size(); ++i)
            total[i] = checked_add(total[i], v[i]);
    }
    if (total[0] % d[0] != 0)
        return std::nullopt;
    auto q = total[0] / d[0];
    if (q < 1)
        return std::nullopt;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (total[i] != checked_mul(q, d[i]))
            return std::nullopt;
    return q;
}

auto format_vector(const IntVector & v) -> std::string
{
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        s << (i ? "," : "") << v[i];
    s << ')';
    return s.str();
}

}  // namespace hypemb
