#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locmem/polynomial.hpp"

namespace locmem {

using ScalarVector = std::vector<Scalar>;
using IndexSet = std::vector<std::size_t>;

/// Dense r x c matrix over an exact field, row-major.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0)) {}

    static ScalarMatrix identity(Field field, std::size_t n);
    /// Matrix unit with a single 1 at (i, j).
    static ScalarMatrix unit(Field field, std::size_t n, std::size_t i, std::size_t j);
    static ScalarMatrix from_rows(Field field, const std::vector<std::vector<long>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar get(std::size_t i, std::size_t j) const { return Scalar(field_, (*this)(i, j)); }
    void set(std::size_t i, std::size_t j, const mpq_class& v) { data_[i * cols_ + j] = field_.canonical(v); }

    bool is_zero() const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix scaled(const mpq_class& c) const;
    ScalarMatrix transposed() const;
    ScalarVector apply(std::span<const Scalar> x) const;
    mpq_class trace() const;

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Dense r x c matrix of polynomials sharing one ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Field field, std::size_t nvars, std::size_t rows, std::size_t cols);
    /// Builds a matrix whose columns are the given vectors.
    static PolyMatrix from_columns(const std::vector<std::vector<Polynomial>>& columns, Field field,
                                   std::size_t nvars, std::size_t rows);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Polynomial p);

    PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    Field field_;
    std::size_t nvars_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> data_;
};

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> combinations(std::size_t n, std::size_t k);

/// Determinant by fraction-free (Bareiss) elimination.
Polynomial det(const PolyMatrix& m);

struct Minor {
    IndexSet rows;
    IndexSet cols;
    Polynomial value;
};

/// Every s x s minor, ordered by row set then column set (both lexicographic).
std::vector<Minor> minors(const PolyMatrix& m, std::size_t s);

/// Rank over the fraction field of the polynomial ring.
std::size_t rank_over_fraction_field(const PolyMatrix& m);

ScalarMatrix evaluate_matrix(const PolyMatrix& m, std::span<const Scalar> point);

/// Reduced row echelon form with its pivot columns.
struct RowEchelon {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const ScalarMatrix& a);

std::size_t rank(const ScalarMatrix& a);

/// A solution of a x = b with every free variable set to 0, or empty when
/// the system is inconsistent.
std::optional<ScalarVector> solve_over_field(const ScalarMatrix& a, std::span<const Scalar> b);

/// Right nullspace basis: one vector per free column f, with x_f = 1 and the
/// other free coordinates 0.
std::vector<ScalarVector> nullspace_over_field(const ScalarMatrix& a);

}  // namespace locmem
