#include "sqzero/poly_matrix.hpp"

#include <stdexcept>
#include <string>

#include "sqzero/error.hpp"

namespace sqz {

namespace {

Poly exact_quotient(const Poly& f, const Poly& g) {
    auto q = divide_exact(f, g);
    if (!q)
        throw InvariantError("fraction-free elimination hit an inexact division");
    return *std::move(q);
}

Poly cofactor_det(const std::vector<std::vector<Poly>>& m, const FieldSpec& field, int n_vars) {
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    if (n == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Poly total(field, n_vars);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero())
            continue;
        std::vector<std::vector<Poly>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            sub.push_back(std::move(row));
        }
        const Poly term = m[0][c] * cofactor_det(sub, field, n_vars);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace

PolyMatrix::PolyMatrix(int rows, int cols, FieldSpec field, int n_vars)
    : rows_(rows), cols_(cols), field_(field), n_vars_(n_vars), zero_(field, n_vars) {
    if (rows < 1 || cols < 1)
        throw InputError("matrix dimensions must be positive");
}

void PolyMatrix::check_index(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw InputError("index (" + std::to_string(row) + "," + std::to_string(col) + ") outside " +
                         std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
}

const Poly& PolyMatrix::operator()(int row, int col) const {
    check_index(row, col);
    auto it = entries_.find({row, col});
    return it == entries_.end() ? zero_ : it->second;
}

void PolyMatrix::set(int row, int col, Poly p) {
    check_index(row, col);
    zero_.require_same_ring(p);
    if (p.is_zero())
        entries_.erase({row, col});
    else
        entries_.insert_or_assign({row, col}, std::move(p));
}

void PolyMatrix::set(int row, int col, std::string_view text) {
    set(row, col, Poly::parse(text, field_, n_vars_));
}

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw InputError("dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    if (!(a.field() == b.field()) || a.n_vars() != b.n_vars())
        throw InputError("matrix product over different rings");
    PolyMatrix c(a.rows(), b.cols(), a.field(), a.n_vars());
    std::map<PolyMatrix::Position, Poly> acc;
    for (const auto& [pa, fa] : a.entries()) {
        for (const auto& [pb, fb] : b.entries()) {
            if (pa.second != pb.first)
                continue;
            const PolyMatrix::Position pos{pa.first, pb.second};
            auto it = acc.try_emplace(pos, c.zero()).first;
            it->second += fa * fb;
        }
    }
    for (auto& [pos, p] : acc)
        c.set(pos.first, pos.second, std::move(p));
    return c;
}

SquareZeroCheck is_square_zero(const PolyMatrix& d) {
    if (!d.is_square())
        throw InputError("square-zero test needs a square matrix");
    const PolyMatrix sq = matrix_mul(d, d);
    SquareZeroCheck out;
    if (!sq.is_zero()) {
        const auto& [pos, p] = *sq.entries().begin();
        out.square_zero = false;
        out.position = pos;
        out.witness = p;
    }
    return out;
}

Poly determinant(std::vector<std::vector<Poly>> m, const FieldSpec& field, int n_vars) {
    const std::size_t n = m.size();
    if (n == 0)
        return Poly::constant(field, n_vars, 1);
    for (const auto& row : m)
        if (row.size() != n)
            throw InputError("determinant of a non-square array");
    if (n <= 4)
        return cofactor_det(m, field, n_vars);

    // Bareiss: after step k, m[i][j] (i, j > k) is the (k+2)-minor on rows/cols 0..k, i / j.
    Poly prev = Poly::constant(field, n_vars, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero())
                ++piv;
            if (piv == n)
                return Poly(field, n_vars);
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly(field, n_vars);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly minor(const PolyMatrix& x, std::span<const int> rows, std::span<const int> cols) {
    if (rows.size() != cols.size() || rows.empty())
        throw InputError("minor needs equally many (and at least one) rows and columns");
    std::vector<std::vector<Poly>> sub;
    for (int r : rows) {
        std::vector<Poly> row;
        for (int c : cols) {
            if (r < 1 || r > x.rows() || c < 1 || c > x.cols())
                throw InputError("minor index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
            row.push_back(x(r, c));
        }
        sub.push_back(std::move(row));
    }
    return determinant(std::move(sub), x.field(), x.n_vars());
}

int symbolic_rank(const PolyMatrix& x) {
    const int rows = x.rows();
    const int cols = x.cols();
    std::vector<std::vector<Poly>> m(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m[static_cast<std::size_t>(i)].push_back(x(i + 1, j + 1));

    Poly prev = Poly::constant(x.field(), x.n_vars(), 1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < static_cast<std::size_t>(cols) && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero())
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < static_cast<std::size_t>(cols); ++j)
                m[i][j] = exact_quotient(m[rank][c] * m[i][j] - m[i][c] * m[rank][j], prev);
            m[i][c] = x.zero();
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

int scalar_rank(std::vector<std::vector<Scalar>> m, const FieldSpec& field) {
    if (m.empty())
        return 0;
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[rank], m[piv]);
        const Scalar inv = field.inv(m[rank][c]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0)
                continue;
            const Scalar factor = field.mul(m[i][c], inv);
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = field.sub(m[i][j], field.mul(factor, m[rank][j]));
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<std::vector<Scalar>> evaluate(const PolyMatrix& x, std::span<const Scalar> point) {
    if (point.size() != static_cast<std::size_t>(x.n_vars()))
        throw InputError("point has " + std::to_string(point.size()) + " coordinates, matrix has " +
                         std::to_string(x.n_vars()) + " variables");
    std::vector<Scalar> normalized;
    for (const Scalar& s : point)
        normalized.push_back(x.field().normalize(s));
    std::vector<std::vector<Scalar>> out(static_cast<std::size_t>(x.rows()),
                                         std::vector<Scalar>(static_cast<std::size_t>(x.cols()), 0));
    for (const auto& [pos, p] : x.entries())
        out[static_cast<std::size_t>(pos.first - 1)][static_cast<std::size_t>(pos.second - 1)] = p.eval(normalized);
    return out;
}

int rank_at_point(const PolyMatrix& x, std::span<const Scalar> point) {
    return scalar_rank(evaluate(x, point), x.field());
}

ModpPolyMatrix::ModpPolyMatrix(const PolyMatrix& x)
    : field_(x.field().prime_field()), rows_(x.rows()), cols_(x.cols()) {
    for (const auto& [pos, p] : x.entries())
        entries_.emplace_back(pos, ModpPoly(p, field_));
}

ModMatrix ModpPolyMatrix::evaluate(std::span<const std::int64_t> point) const {
    ModMatrix m = ModMatrix::Zero(rows_, cols_);
    for (const auto& [pos, p] : entries_)
        m(pos.first - 1, pos.second - 1) = p.eval(point, field_);
    return m;
}

} // namespace sqz
