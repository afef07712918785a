#include "locmem/polymat.hpp"

#include <utility>

namespace locmem {

// ------------------------------------------------------------ ScalarMatrix

ScalarMatrix ScalarMatrix::identity(Field field, std::size_t n) {
    ScalarMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ScalarMatrix ScalarMatrix::unit(Field field, std::size_t n, std::size_t i, std::size_t j) {
    ScalarMatrix m(field, n, n);
    m.set(i, j, 1);
    return m;
}

ScalarMatrix ScalarMatrix::from_rows(Field field, const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    ScalarMatrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    require_same_field(field_, o.field_);
    if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
    ScalarMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            mpq_class acc(0);
            for (std::size_t k = 0; k < cols_; ++k) acc = field_.add(acc, field_.mul((*this)(i, k), o(k, j)));
            r.data_[i * r.cols_ + j] = acc;
        }
    return r;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum dimension mismatch");
    ScalarMatrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
    return r;
}

ScalarMatrix ScalarMatrix::scaled(const mpq_class& c) const {
    ScalarMatrix r(*this);
    mpq_class cc = field_.canonical(c);
    for (auto& v : r.data_) v = field_.mul(v, cc);
    return r;
}

ScalarMatrix ScalarMatrix::transposed() const {
    ScalarMatrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = (*this)(i, j);
    return r;
}

ScalarVector ScalarMatrix::apply(std::span<const Scalar> x) const {
    if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    ScalarVector out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpq_class acc(0);
        for (std::size_t j = 0; j < cols_; ++j) {
            require_same_field(x[j].field(), field_);
            acc = field_.add(acc, field_.mul((*this)(i, j), x[j].value()));
        }
        out.emplace_back(field_, acc);
    }
    return out;
}

mpq_class ScalarMatrix::trace() const {
    if (rows_ != cols_) throw InputError("trace of a non-square matrix");
    mpq_class acc(0);
    for (std::size_t i = 0; i < rows_; ++i) acc = field_.add(acc, (*this)(i, i));
    return acc;
}

// -------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(Field field, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(field, nvars)) {}

PolyMatrix PolyMatrix::from_columns(const std::vector<std::vector<Polynomial>>& columns, Field field,
                                    std::size_t nvars, std::size_t rows) {
    PolyMatrix m(field, nvars, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw InputError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
    }
    return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
    require_same_field(p.field(), field_);
    if (p.nvars() != nvars_) throw InputError("matrix entry has wrong variable count");
    data_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    PolyMatrix r(field_, nvars_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.data_[i * r.cols_ + j] = (*this)(rows[i], cols[j]);
    return r;
}

std::vector<IndexSet> combinations(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    if (k > n) return out;
    IndexSet cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

// Fraction-free forward elimination in place. Returns the number of pivots
// and flips `sign` per row swap. Entries of pivot rows become leading
// principal minors of the pivoted matrix; division by the previous pivot is
// exact by Sylvester's identity.
std::size_t bareiss_eliminate(std::vector<std::vector<Polynomial>>& a, std::size_t cols, int& sign,
                              bool stop_on_singular_column) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    Polynomial prev = Polynomial::constant(a[0][0].field(), a[0][0].nvars(), 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) {
            if (stop_on_singular_column) return r;
            continue;
        }
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Polynomial v = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                a[i][j] = exact_quotient(v, prev);
            }
            a[i][c] = Polynomial(a[i][c].field(), a[i][c].nvars());
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::vector<std::vector<Polynomial>> to_rows(const PolyMatrix& m) {
    std::vector<std::vector<Polynomial>> a(m.rows(), std::vector<Polynomial>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    return a;
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw InputError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::constant(m.field(), m.nvars(), 1);
    auto a = to_rows(m);
    int sign = 1;
    if (bareiss_eliminate(a, n, sign, true) < n) return Polynomial(m.field(), m.nvars());
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<Minor> minors(const PolyMatrix& m, std::size_t s) {
    if (s < 1 || s > std::min(m.rows(), m.cols()))
        throw InputError("minor size " + std::to_string(s) + " out of range for a " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + " matrix");
    auto row_sets = combinations(m.rows(), s);
    auto col_sets = combinations(m.cols(), s);
    std::vector<Minor> out(row_sets.size() * col_sets.size());
    const long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k) {
        const auto& rs = row_sets[static_cast<std::size_t>(k) / col_sets.size()];
        const auto& cs = col_sets[static_cast<std::size_t>(k) % col_sets.size()];
        out[static_cast<std::size_t>(k)] = Minor{rs, cs, det(m.submatrix(rs, cs))};
    }
    return out;
}

std::size_t rank_over_fraction_field(const PolyMatrix& m) {
    auto a = to_rows(m);
    int sign = 1;
    return bareiss_eliminate(a, m.cols(), sign, false);
}

ScalarMatrix evaluate_matrix(const PolyMatrix& m, std::span<const Scalar> point) {
    if (point.size() != m.nvars()) throw InputError("evaluation point length mismatch");
    ScalarMatrix r(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, m(i, j).evaluate(point).value());
    return r;
}

// ------------------------------------------------------ field linear algebra

RowEchelon row_echelon(const ScalarMatrix& a) {
    const Field& f = a.field();
    ScalarMatrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                mpq_class t = m(p, j);
                m.set(p, j, m(r, j));
                m.set(r, j, t);
            }
        mpq_class inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.set(r, j, f.mul(m(r, j), inv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            mpq_class factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.set(i, j, f.sub(m(i, j), f.mul(factor, m(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const ScalarMatrix& a) { return row_echelon(a).pivots.size(); }

std::optional<ScalarVector> solve_over_field(const ScalarMatrix& a, std::span<const Scalar> b) {
    if (b.size() != a.rows())
        throw InputError("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                         std::to_string(a.rows()));
    const Field& f = a.field();
    ScalarMatrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        require_same_field(b[i].field(), f);
        for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a(i, j));
        aug.set(i, a.cols(), b[i].value());
    }
    auto [red, pivots] = row_echelon(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    ScalarVector x(a.cols(), Scalar(f, 0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = Scalar(f, red(r, a.cols()));
    return x;
}

std::vector<ScalarVector> nullspace_over_field(const ScalarMatrix& a) {
    const Field& f = a.field();
    auto [red, pivots] = row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<ScalarVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        ScalarVector v(a.cols(), Scalar(f, 0));
        v[free] = Scalar(f, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = Scalar(f, f.neg(red(r, free)));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace locmem
