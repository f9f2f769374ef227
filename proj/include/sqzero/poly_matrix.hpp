#ifndef SQZERO_POLY_MATRIX_HPP
#define SQZERO_POLY_MATRIX_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sqzero/modp.hpp"
#include "sqzero/poly.hpp"

namespace sqz {

/// Matrix of polynomials over a common ring; absent entries are zero.
/// Indices are 1-based.
class PolyMatrix {
public:
    using Position = std::pair<int, int>;

    PolyMatrix(int rows, int cols, FieldSpec field, int n_vars);
    PolyMatrix(int n, FieldSpec field, int n_vars) : PolyMatrix(n, n, field, n_vars) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    /// Dimension of a square matrix.
    int n() const { return rows_; }
    const FieldSpec& field() const { return field_; }
    int n_vars() const { return n_vars_; }

    const Poly& operator()(int row, int col) const;
    /// Stores p (after ring check); a zero p erases the entry.
    void set(int row, int col, Poly p);
    void set(int row, int col, std::string_view text);
    const std::map<Position, Poly>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Poly zero() const { return Poly(field_, n_vars_); }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    void check_index(int row, int col) const;

    int rows_;
    int cols_;
    FieldSpec field_;
    int n_vars_;
    std::map<Position, Poly> entries_;
    Poly zero_;
};

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b);

struct SquareZeroCheck {
    bool square_zero = true;
    PolyMatrix::Position position{0, 0};   // first nonzero entry of D^2 when false
    std::optional<Poly> witness;
};
SquareZeroCheck is_square_zero(const PolyMatrix& d);

/// Determinant: cofactor expansion up to 4x4, fraction-free Bareiss above.
Poly determinant(std::vector<std::vector<Poly>> m, const FieldSpec& field, int n_vars);

/// Determinant of the submatrix on the given rows and columns (1-based).
Poly minor(const PolyMatrix& x, std::span<const int> rows, std::span<const int> cols);

/// Rank over the fraction field, by fraction-free elimination with exact division.
int symbolic_rank(const PolyMatrix& x);

/// Exact rank of a scalar matrix over the field.
int scalar_rank(std::vector<std::vector<Scalar>> m, const FieldSpec& field);

std::vector<std::vector<Scalar>> evaluate(const PolyMatrix& x, std::span<const Scalar> point);
int rank_at_point(const PolyMatrix& x, std::span<const Scalar> point);

/// A prime-field matrix prepared for evaluation at many points.
class ModpPolyMatrix {
public:
    explicit ModpPolyMatrix(const PolyMatrix& x);

    const PrimeField& field() const { return field_; }
    ModMatrix evaluate(std::span<const std::int64_t> point) const;

private:
    PrimeField field_;
    int rows_;
    int cols_;
    std::vector<std::pair<PolyMatrix::Position, ModpPoly>> entries_;
};

} // namespace sqz

#endif // SQZERO_POLY_MATRIX_HPP
