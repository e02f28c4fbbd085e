#pragma once

#include <hypemb/domain.hpp>
#include <hypemb/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypemb {

/// Dense row-major matrix of arbitrary precision integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static auto identity(std::size_t n) -> IntMatrix;

    auto rows() const noexcept -> std::size_t { return _rows; }
    auto cols() const noexcept -> std::size_t { return _cols; }

    auto operator()(std::size_t r, std::size_t c) -> Integer & { return _data[r * _cols + c]; }
    auto operator()(std::size_t r, std::size_t c) const -> const Integer & { return _data[r * _cols + c]; }

    auto column(std::size_t c) const -> std::vector<Integer>;
    auto is_zero() const -> bool;

    auto operator==(const IntMatrix &) const -> bool = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer & factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer & factor);
    void negate_row(std::size_t r);

    auto to_string() const -> std::string;

private:
    std::size_t _rows, _cols;
    std::vector<Integer> _data;
};

auto operator*(const IntMatrix & a, const IntMatrix & b) -> IntMatrix;
auto operator*(const IntMatrix & a, const std::vector<Integer> & x) -> std::vector<Integer>;

auto to_integers(const IntVector & v) -> std::vector<Integer>;

/// U·A·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all >= 0.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    /// Number of nonzero diagonal entries.
    auto rank() const -> std::size_t;
};

auto smith_normal_form(const IntMatrix & a) -> SnfDecomposition;

struct DiophantineSolution {
    std::vector<Integer> particular;
    /// Basis of the integer kernel of A, one vector per entry.
    std::vector<std::vector<Integer>> kernel_basis;
};

/// All integer solutions of A·x = b, or nullopt when there are none.
/// Throws Error(DimensionMismatch).
auto solve_diophantine(const IntMatrix & a, const std::vector<Integer> & b) -> std::optional<DiophantineSolution>;

/// One constraint Φ(x mod d) = y mod d'.
struct HomConstraint {
    IntVector x;
    IntVector y;
};

/// Finds a homomorphism Φ: Z^k/(d) -> Z^k'/(d') with Φ(x_i) = y_i, given as a
/// k'×k integer matrix M with M·d ∈ Z·d' and M·x_i - y_i ∈ Z·d'. Columns of
/// the returned matrix are reduced to canonical homology representatives.
/// Throws Error(DimensionMismatch).
auto hom_exists(const DegreeTuple & source, const DegreeTuple & target, const std::vector<HomConstraint> & pairs)
    -> std::optional<IntMatrix>;

/// Answers hom_exists queries for one fixed (source, target) pair. The target
/// group is split as Z/g' ⊕ Z^(k'-1) with g' = gcd(d'), which turns each query
/// into one small system in the images of the source generators; its Smith
/// form is cached per list of x vectors. Not thread-safe.
class HomSolver {
public:
    HomSolver(DegreeTuple source, DegreeTuple target);

    /// Same contract as hom_exists. Throws Error(DimensionMismatch).
    auto solve(const std::vector<HomConstraint> & pairs) -> std::optional<IntMatrix>;

private:
    struct Factor {
        IntMatrix p, q;
        std::vector<Integer> diagonal;
    };

    auto factor(const std::vector<IntVector> & xs) -> const Factor &;

    DegreeTuple _source, _target;
    /// Unimodular, sends d' to g'·e_1.
    IntMatrix _frame;
    IntMatrix _frame_inverse;
    Integer _torsion;
    std::map<std::vector<IntVector>, Factor> _factors;
};

/// Independent check that M induces a well-defined homomorphism sending each
/// x_i to y_i on the quotients.
auto is_valid_hom(const DegreeTuple & source, const DegreeTuple & target, const std::vector<HomConstraint> & pairs,
    const IntMatrix & m) -> bool;

}  // namespace hypemb
