#include <hypemb/error.hpp>
#include <hypemb/lattice.hpp>

#include <sstream>

namespace hypemb {

using std::size_t;
using std::vector;

IntMatrix::IntMatrix(size_t rows, size_t cols) :
    _rows(rows),
    _cols(cols),
    _data(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) :
    _rows(rows.size()),
    _cols(rows.size() ? rows.begin()->size() : 0)
{
    _data.reserve(_rows * _cols);
    for (auto & row : rows) {
        if (row.size() != _cols)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (auto x : row)
            _data.emplace_back(x);
    }
}

auto IntMatrix::identity(size_t n) -> IntMatrix
{
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

auto IntMatrix::column(size_t c) const -> vector<Integer>
{
    vector<Integer> out(_rows);
    for (size_t r = 0; r < _rows; ++r)
        out[r] = (*this)(r, c);
    return out;
}

auto IntMatrix::is_zero() const -> bool
{
    for (auto & x : _data)
        if (x != 0)
            return false;
    return true;
}

void IntMatrix::swap_rows(size_t a, size_t b)
{
    if (a == b)
        return;
    for (size_t c = 0; c < _cols; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(size_t a, size_t b)
{
    if (a == b)
        return;
    for (size_t r = 0; r < _rows; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const Integer & factor)
{
    if (factor == 0)
        return;
    for (size_t c = 0; c < _cols; ++c)
        if ((*this)(src, c) != 0)
            (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const Integer & factor)
{
    if (factor == 0)
        return;
    for (size_t r = 0; r < _rows; ++r)
        if ((*this)(r, src) != 0)
            (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(size_t r)
{
    for (size_t c = 0; c < _cols; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

auto IntMatrix::to_string() const -> std::string
{
    std::ostringstream s;
    s << '[';
    for (size_t r = 0; r < _rows; ++r) {
        s << (r ? ",[" : "[");
        for (size_t c = 0; c < _cols; ++c)
            s << (c ? "," : "") << (*this)(r, c);
        s << ']';
    }
    s << ']';
    return s.str();
}

auto operator*(const IntMatrix & a, const IntMatrix & b) -> IntMatrix
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

auto operator*(const IntMatrix & a, const vector<Integer> & x) -> vector<Integer>
{
    if (a.cols() != x.size())
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    vector<Integer> out(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k)
            out[i] += a(i, k) * x[k];
    return out;
}

auto to_integers(const IntVector & v) -> vector<Integer>
{
    return vector<Integer>(v.begin(), v.end());
}

auto SnfDecomposition::rank() const -> size_t
{
    size_t r = 0;
    for (size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d(i, i) != 0)
            ++r;
    return r;
}

namespace {
    // Truncating quotient; leaves |a - q*b| < |b|.
    auto quotient(const Integer & a, const Integer & b) -> Integer
    {
        return a / b;
    }

    struct SnfState {
        IntMatrix a, u, v;

        // Locates the nonzero entry of least magnitude in the trailing block.
        auto find_pivot(size_t t, size_t & pr, size_t & pc) const -> bool
        {
            bool found = false;
            Integer best;
            for (size_t r = t; r < a.rows(); ++r)
                for (size_t c = t; c < a.cols(); ++c) {
                    auto & x = a(r, c);
                    if (x == 0)
                        continue;
                    Integer m = abs(x);
                    if (! found || m < best) {
                        found = true;
                        best = m;
                        pr = r;
                        pc = c;
                        if (best == 1)
                            return true;
                    }
                }
            return found;
        }

        void swap_rows(size_t i, size_t j)
        {
            a.swap_rows(i, j);
            u.swap_rows(i, j);
        }

        void swap_cols(size_t i, size_t j)
        {
            a.swap_cols(i, j);
            v.swap_cols(i, j);
        }

        void add_row(size_t dst, size_t src, const Integer & f)
        {
            a.add_row_multiple(dst, src, f);
            u.add_row_multiple(dst, src, f);
        }

        void add_col(size_t dst, size_t src, const Integer & f)
        {
            a.add_col_multiple(dst, src, f);
            v.add_col_multiple(dst, src, f);
        }

        // Clears row t and column t outside the diagonal. Returns false if a
        // smaller remainder appeared and the pivot must be re-chosen.
        auto clear_cross(size_t t) -> bool
        {
            bool clean = true;
            for (size_t r = t + 1; r < a.rows(); ++r) {
                if (a(r, t) == 0)
                    continue;
                add_row(r, t, -quotient(a(r, t), a(t, t)));
                if (a(r, t) != 0)
                    clean = false;
            }
            for (size_t c = t + 1; c < a.cols(); ++c) {
                if (a(t, c) == 0)
                    continue;
                add_col(c, t, -quotient(a(t, c), a(t, t)));
                if (a(t, c) != 0)
                    clean = false;
            }
            return clean;
        }
    };
}

auto smith_normal_form(const IntMatrix & input) -> SnfDecomposition
{
    SnfState s{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols())};
    auto & a = s.a;
    auto diag = std::min(a.rows(), a.cols());

    for (size_t t = 0; t < diag; ++t) {
        size_t pr = 0, pc = 0;
        if (! s.find_pivot(t, pr, pc))
            break;

        while (true) {
            s.swap_rows(t, pr);
            s.swap_cols(t, pc);
            if (! s.clear_cross(t)) {
                s.find_pivot(t, pr, pc);
                continue;
            }

            // Enforce divisibility of the trailing block by the pivot.
            bool divisible = true;
            for (size_t r = t + 1; r < a.rows() && divisible; ++r)
                for (size_t c = t + 1; c < a.cols(); ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        s.add_row(t, r, 1);
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
            s.find_pivot(t, pr, pc);
        }

        if (a(t, t) < 0) {
            a.negate_row(t);
            s.u.negate_row(t);
        }
    }

    return SnfDecomposition{std::move(s.u), std::move(s.a), std::move(s.v)};
}

auto solve_diophantine(const IntMatrix & a, const vector<Integer> & b) -> std::optional<DiophantineSolution>
{
    if (b.size() != a.rows())
        throw Error(ErrorCode::DimensionMismatch, "right-hand side has " + std::to_string(b.size())
                + " entries for a matrix with " + std::to_string(a.rows()) + " rows");

    auto snf = smith_normal_form(a);
    auto c = snf.u * b;
    auto rank = snf.rank();

    vector<Integer> y(a.cols());
    for (size_t i = 0; i < rank; ++i) {
        auto & pivot = snf.d(i, i);
        if (c[i] % pivot != 0)
            return std::nullopt;
        y[i] = c[i] / pivot;
    }
    for (size_t i = rank; i < c.size(); ++i)
        if (c[i] != 0)
            return std::nullopt;

    DiophantineSolution out;
    out.particular = snf.v * y;
    for (size_t j = rank; j < a.cols(); ++j)
        out.kernel_basis.push_back(snf.v.column(j));
    return out;
}

namespace {
    auto is_multiple_of(const vector<Integer> & w, const DegreeTuple & d) -> bool
    {
        if (w[0] % d[0] != 0)
            return false;
        Integer t = w[0] / d[0];
        for (size_t j = 0; j < d.size(); ++j)
            if (w[j] != t * d[j])
                return false;
        return true;
    }

    // Shift each column by a multiple of d' so its last entry is in [0, d'_k').
    void canonicalize_columns(IntMatrix & m, const DegreeTuple & target)
    {
        auto kp = target.size();
        for (size_t c = 0; c < m.cols(); ++c) {
            Integer last = m(kp - 1, c), modulus = target[kp - 1];
            Integer shift = last / modulus;
            if (last % modulus < 0)
                shift -= 1;
            for (size_t r = 0; r < kp; ++r)
                m(r, c) -= shift * target[r];
        }
    }

    auto floor_mod(const Integer & a, const Integer & m) -> Integer
    {
        Integer r = a % m;
        return r < 0 ? Integer(r + m) : r;
    }

    // Inverse of a modulo m, for gcd(a, m) = 1 and m >= 1.
    auto inverse_mod(const Integer & a, const Integer & m) -> Integer
    {
        Integer r0 = m, r1 = floor_mod(a, m), s0 = 0, s1 = 1;
        while (r1 != 0) {
            Integer quot = r0 / r1;
            Integer r2 = r0 - quot * r1, s2 = s0 - quot * s1;
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        return floor_mod(s0, m);
    }
}

auto hom_exists(const DegreeTuple & source, const DegreeTuple & target, const vector<HomConstraint> & pairs)
    -> std::optional<IntMatrix>
{
    auto k = source.size(), kp = target.size();
    for (auto & p : pairs)
        if (p.x.size() != k || p.y.size() != kp)
            throw Error(ErrorCode::DimensionMismatch, "homomorphism constraint has wrong vector lengths");

    // Unknowns: M row-major (kp*k), then t, then s_1..s_l.
    auto l = pairs.size();
    auto unknowns = kp * k + 1 + l;
    auto t_col = kp * k;
    IntMatrix a(kp * (1 + l), unknowns);
    vector<Integer> b(kp * (1 + l));

    // M·d - t·d' = 0
    for (size_t r = 0; r < kp; ++r) {
        for (size_t c = 0; c < k; ++c)
            a(r, r * k + c) = source[c];
        a(r, t_col) = -target[r];
    }
    // M·x_i - s_i·d' = y_i
    for (size_t i = 0; i < l; ++i)
        for (size_t r = 0; r < kp; ++r) {
            auto row = kp * (1 + i) + r;
            for (size_t c = 0; c < k; ++c)
                a(row, r * k + c) = pairs[i].x[c];
            a(row, t_col + 1 + i) = -target[r];
            b[row] = pairs[i].y[r];
        }

    auto solution = solve_diophantine(a, b);
    if (! solution)
        return std::nullopt;

    IntMatrix m(kp, k);
    for (size_t r = 0; r < kp; ++r)
        for (size_t c = 0; c < k; ++c)
            m(r, c) = solution->particular[r * k + c];

    canonicalize_columns(m, target);
    return m;
}

auto is_valid_hom(const DegreeTuple & source, const DegreeTuple & target, const vector<HomConstraint> & pairs,
    const IntMatrix & m) -> bool
{
    if (m.rows() != target.size() || m.cols() != source.size())
        return false;
    if (! is_multiple_of(m * to_integers(source.entries()), target))
        return false;
    for (auto & p : pairs) {
        auto image = m * to_integers(p.x);
        for (size_t r = 0; r < image.size(); ++r)
            image[r] -= p.y[r];
        if (! is_multiple_of(image, target))
            return false;
    }
    return true;
}

HomSolver::HomSolver(DegreeTuple source, DegreeTuple target) :
    _source(std::move(source)),
    _target(std::move(target)),
    _frame(_target.size(), _target.size()),
    _frame_inverse(_target.size(), _target.size())
{
    auto kp = _target.size();
    IntMatrix column(kp, 1);
    for (size_t r = 0; r < kp; ++r)
        column(r, 0) = _target[r];
    auto snf = smith_normal_form(column);
    _frame = snf.u;
    if (snf.v(0, 0) < 0)
        for (size_t r = 0; r < kp; ++r)
            _frame.negate_row(r);
    _torsion = _target.gcd();

    for (size_t c = 0; c < kp; ++c) {
        vector<Integer> unit(kp, 0);
        unit[c] = 1;
        auto solved = solve_diophantine(_frame, unit);
        for (size_t r = 0; r < kp; ++r)
            _frame_inverse(r, c) = solved->particular[r];
    }
}

auto HomSolver::factor(const vector<IntVector> & xs) -> const Factor &
{
    auto found = _factors.find(xs);
    if (found != _factors.end())
        return found->second;
    auto k = _source.size();
    IntMatrix a(1 + xs.size(), k);
    for (size_t c = 0; c < k; ++c)
        a(0, c) = _source[c];
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t c = 0; c < k; ++c)
            a(1 + i, c) = xs[i][c];
    auto snf = smith_normal_form(a);
    Factor f{snf.u, snf.v, {}};
    for (size_t i = 0; i < snf.rank(); ++i)
        f.diagonal.push_back(snf.d(i, i));
    return _factors.emplace(xs, std::move(f)).first->second;
}

auto HomSolver::solve(const vector<HomConstraint> & pairs) -> std::optional<IntMatrix>
{
    auto k = _source.size(), kp = _target.size();
    vector<IntVector> xs;
    for (auto & p : pairs) {
        if (p.x.size() != k || p.y.size() != kp)
            throw Error(ErrorCode::DimensionMismatch, "homomorphism constraint has wrong vector lengths");
        xs.push_back(p.x);
    }
    auto & f = factor(xs);
    auto rows = 1 + pairs.size();
    auto rank = f.diagonal.size();

    // Images of the source generators in frame coordinates: row 0 lives in
    // Z/g', the other rows in Z.
    IntMatrix images(kp, k);
    for (size_t r = 0; r < kp; ++r) {
        vector<Integer> b(rows, 0);
        for (size_t i = 0; i < pairs.size(); ++i)
            for (size_t j = 0; j < kp; ++j)
                b[1 + i] += _frame(r, j) * pairs[i].y[j];
        auto c = f.p * b;

        vector<Integer> nu(k, 0);
        if (r == 0) {
            if (_torsion == 1)
                continue;
            Integer g = _torsion;
            for (size_t i = 0; i < rows; ++i) {
                Integer pivot = i < rank ? f.diagonal[i] : Integer(0);
                Integer h = boost::multiprecision::gcd(floor_mod(pivot, g), g);
                if (floor_mod(c[i], h) != 0)
                    return std::nullopt;
                if (h != g)
                    nu[i] = floor_mod((c[i] / h) * inverse_mod(pivot / h, g / h), g / h);
            }
        }
        else {
            for (size_t i = 0; i < rows; ++i) {
                if (i >= rank) {
                    if (c[i] != 0)
                        return std::nullopt;
                    continue;
                }
                if (c[i] % f.diagonal[i] != 0)
                    return std::nullopt;
                nu[i] = c[i] / f.diagonal[i];
            }
        }
        auto mu = f.q * nu;
        for (size_t col = 0; col < k; ++col)
            images(r, col) = mu[col];
    }

    auto m = _frame_inverse * images;
    canonicalize_columns(m, _target);
    return m;
}

}  // namespace hypemb
