#include "locmem/matspace.hpp"

#include <string>

namespace locmem {

namespace {

// Rows are the row-major vectorizations of the given matrices.
ScalarMatrix vectorized(Field field, std::size_t n, const std::vector<ScalarMatrix>& mats) {
    ScalarMatrix a(field, mats.size(), n * n);
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.set(k, i * n + j, mats[k](i, j));
    return a;
}

kernels::ModMatrices to_mod(const std::vector<ScalarMatrix>& mats, Field field, std::size_t n) {
    kernels::ModMatrices out;
    out.p = field.modulus();
    out.n = n;
    for (const auto& m : mats) {
        std::vector<std::uint64_t> flat(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = m(i, j).get_num().get_ui();
        out.mats.push_back(std::move(flat));
    }
    return out;
}

ScalarVector to_scalars(const std::vector<std::uint64_t>& xs, Field field) {
    ScalarVector out;
    for (auto x : xs) out.emplace_back(field, static_cast<long>(x));
    return out;
}

Rank1Idempotent e11(Field field, std::size_t n) {
    ScalarVector e(n, Scalar(field, 0));
    e[0] = Scalar(field, 1);
    return {e, e};
}

}  // namespace

MatrixSubspace::MatrixSubspace(Field field, std::size_t n, std::vector<ScalarMatrix> basis)
    : field_(field), n_(n), basis_(std::move(basis)) {
    for (const auto& b : basis_) {
        require_same_field(b.field(), field_);
        if (b.rows() != n_ || b.cols() != n_) throw InputError("basis matrix must be " + std::to_string(n_) + "x" + std::to_string(n_));
    }
    if (rank(vectorized(field_, n_, basis_)) != basis_.size()) throw InputError("matrix basis is linearly dependent");
}

MatrixSubspace MatrixSubspace::full(Field field, std::size_t n) {
    std::vector<ScalarMatrix> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis.push_back(ScalarMatrix::unit(field, n, i, j));
    return MatrixSubspace(field, n, std::move(basis));
}

bool MatrixSubspace::contains(const ScalarMatrix& m) const {
    auto mats = basis_;
    mats.push_back(m);
    return rank(vectorized(field_, n_, mats)) == basis_.size();
}

bool MatrixSubspace::same_subspace(const MatrixSubspace& other) const {
    if (!(field_ == other.field_) || n_ != other.n_ || dim() != other.dim()) return false;
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

MatrixSubspace MatrixSubspace::reduced_mod(std::uint64_t p) const {
    Field fp = Field::prime(p);
    std::vector<ScalarMatrix> out;
    for (const auto& b : basis_) {
        ScalarMatrix r(fp, n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.set(i, j, b(i, j));
        out.push_back(std::move(r));
    }
    return MatrixSubspace(fp, n_, std::move(out));
}

ScalarMatrix Rank1Idempotent::matrix() const {
    const Field f = u.front().field();
    ScalarMatrix m(f, u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m.set(i, j, (u[i] * v[j]).value());
    return m;
}

MatrixSubspace flat(const LinearSubspace& v) { return MatrixSubspace(v.field(), v.n(), v.coeff_matrices()); }

PolyVector unflat(const ScalarMatrix& b) {
    if (b.rows() != b.cols()) throw InputError("unflat needs a square matrix");
    return linear_forms(b);
}

Scalar trace_pairing(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw InputError("trace pairing needs two n x n matrices");
    require_same_field(a.field(), b.field());
    const Field& f = a.field();
    mpq_class acc(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, i)));
    return Scalar(f, acc);
}

MatrixSubspace perp(const MatrixSubspace& w) {
    const std::size_t n = w.n();
    // <b, X> = sum_{i,k} b_ik X_ki, so row k of the system reads b transposed.
    std::vector<ScalarMatrix> transposed;
    for (const auto& b : w.basis()) transposed.push_back(b.transposed());
    ScalarMatrix system = vectorized(w.field(), n, transposed);
    std::vector<ScalarMatrix> basis;
    for (const auto& x : nullspace_over_field(system)) {
        ScalarMatrix m(w.field(), n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, x[i * n + j].value());
        basis.push_back(std::move(m));
    }
    return MatrixSubspace(w.field(), n, std::move(basis));
}

R1FreeDecision is_r1_free_closure(const MatrixSubspace& w) {
    if (w.codim() >= w.n())
        throw InputError("r1-free decision requires codim < n (got codim " + std::to_string(w.codim()) + ")");
    if (w.codim() == 0) return {false, {}, e11(w.field(), w.n())};
    auto v = LinearSubspace::from_matrices(w.field(), w.n(), perp(w).basis());
    LocalDecision local = ylocal_closure(v);
    return {local.holds, std::move(local), std::nullopt};
}

R1FreeDecision is_r1_free_points(const MatrixSubspace& w, std::uint64_t budget, kernels::Execution exec) {
    if (w.codim() >= w.n())
        throw InputError("r1-free decision requires codim < n (got codim " + std::to_string(w.codim()) + ")");
    if (w.codim() == 0) return {false, {}, e11(w.field(), w.n())};
    auto v = LinearSubspace::from_matrices(w.field(), w.n(), perp(w).basis());
    LocalDecision local = ylocal_points(v, budget, exec);
    return {local.holds, std::move(local), std::nullopt};
}

std::optional<Rank1Idempotent> find_rank1_idempotent_bruteforce(const MatrixSubspace& w, std::uint64_t budget,
                                                                kernels::Execution exec) {
    if (!w.field().is_prime_field()) throw InputError("idempotent search requires a prime field instance");
    auto count = kernels::checked_power(w.field().modulus(), 2 * w.n());
    if (!count || *count > budget)
        throw BudgetExceeded("idempotent search needs p^(2n) candidates, above the budget of " + std::to_string(budget));
    // u v^T lies in W exactly when v^T c u = Tr(c u v^T) = 0 for all c in perp(W).
    auto hit = kernels::first_rank1_idempotent(to_mod(perp(w).basis(), w.field(), w.n()), exec);
    if (!hit) return std::nullopt;
    return Rank1Idempotent{to_scalars(hit->u, w.field()), to_scalars(hit->v, w.field())};
}

bool is_subspace_of_tracezero(const MatrixSubspace& w) {
    for (const auto& b : w.basis())
        if (sgn(b.trace()) != 0) return false;
    return true;
}

}  // namespace locmem
