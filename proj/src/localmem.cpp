#include "locmem/localmem.hpp"

#include <limits>
#include <string>

namespace locmem {

// ---------------------------------------------------------- LinearSubspace

PolyVector coordinate_vector(Field field, std::size_t n) {
    PolyVector y;
    y.reserve(n);
    for (std::size_t i = 0; i < n; ++i) y.push_back(Polynomial::variable(field, n, i));
    return y;
}

ScalarMatrix coefficient_matrix(const PolyVector& q, Field field, std::size_t n) {
    if (q.size() != n) throw InputError("vector has " + std::to_string(q.size()) + " components, expected " + std::to_string(n));
    ScalarMatrix b(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        require_same_field(q[r].field(), field);
        if (q[r].nvars() != n) throw InputError("component has wrong variable count");
        for (const auto& t : q[r].terms()) {
            if (t.mono.degree() != 1) throw InputError("component not a linear form: " + q[r].to_string());
            for (std::size_t c = 0; c < n; ++c)
                if (t.mono[c] == 1) b.set(r, c, t.coeff);
        }
    }
    return b;
}

PolyVector linear_forms(const ScalarMatrix& b) {
    if (b.rows() != b.cols()) throw InputError("coefficient matrix must be square");
    const std::size_t n = b.rows();
    PolyVector q;
    q.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < n; ++c)
            if (sgn(b(r, c)) != 0) terms.push_back({Monomial::variable(n, c), b(r, c)});
        q.push_back(Polynomial::from_terms(b.field(), n, std::move(terms)));
    }
    return q;
}

LinearSubspace LinearSubspace::from_vectors(Field field, std::size_t n, std::vector<PolyVector> basis) {
    if (basis.size() > n) throw InputError("basis size exceeds n");
    std::vector<ScalarMatrix> coeffs;
    coeffs.reserve(basis.size());
    for (const auto& q : basis) {
        coeffs.push_back(coefficient_matrix(q, field, n));
        if (coeffs.back().is_zero()) throw InputError("zero vector in basis");
    }
    return LinearSubspace(field, n, std::move(basis), std::move(coeffs));
}

LinearSubspace LinearSubspace::from_matrices(Field field, std::size_t n, std::vector<ScalarMatrix> coeffs) {
    std::vector<PolyVector> basis;
    for (const auto& b : coeffs) {
        require_same_field(b.field(), field);
        if (b.rows() != n || b.cols() != n) throw InputError("coefficient matrix must be n x n");
        basis.push_back(linear_forms(b));
    }
    return from_vectors(field, n, std::move(basis));
}

PolyMatrix LinearSubspace::basis_matrix() const { return PolyMatrix::from_columns(basis_, field_, n_, n_); }

PolyMatrix LinearSubspace::augmented(const PolyVector& target) const {
    auto cols = basis_;
    cols.push_back(target);
    return PolyMatrix::from_columns(cols, field_, n_, n_);
}

LinearSubspace LinearSubspace::reduced_mod(std::uint64_t p) const {
    Field fp = Field::prime(p);
    std::vector<ScalarMatrix> out;
    for (const auto& b : coeffs_) {
        ScalarMatrix r(fp, n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.set(i, j, b(i, j));
        out.push_back(std::move(r));
    }
    return from_matrices(fp, n_, std::move(out));
}

// ------------------------------------------------------------- membership

bool check_free_rank(const LinearSubspace& v) { return rank_over_fraction_field(v.basis_matrix()) == v.d(); }

std::optional<ScalarVector> span_over_field(const LinearSubspace& v, const PolyVector& target) {
    const std::size_t n = v.n(), d = v.d();
    ScalarMatrix bt = coefficient_matrix(target, v.field(), n);
    ScalarMatrix a(v.field(), n * n, d);
    ScalarVector rhs;
    rhs.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t i = 0; i < d; ++i) a.set(r * n + c, i, v.coeff_matrices()[i](r, c));
            rhs.push_back(bt.get(r, c));
        }
    return solve_over_field(a, rhs);
}

std::optional<ScalarVector> span_over_field(const LinearSubspace& v) {
    return span_over_field(v, coordinate_vector(v.field(), v.n()));
}

bool witness_identity_holds(const CramerWitness& w, const LinearSubspace& v, const PolyVector& target) {
    if (w.lambdas.size() != v.d() || target.size() != v.n()) return false;
    // Clear denominators: sum_j h_j (m / k_j) q_j = m * target.
    std::vector<Polynomial> scaled;
    for (const auto& l : w.lambdas) {
        auto q = divide_exact(w.m, l.denominator());
        if (!q) return false;
        scaled.push_back(l.numerator() * *q);
    }
    for (std::size_t r = 0; r < v.n(); ++r) {
        Polynomial lhs(v.field(), v.n());
        for (std::size_t j = 0; j < v.d(); ++j) lhs += scaled[j] * v.basis()[j][r];
        if (!(lhs == w.m * target[r])) return false;
    }
    return true;
}

std::optional<CramerWitness> span_over_fraction_field(const LinearSubspace& v, const PolyVector& target) {
    const std::size_t n = v.n(), d = v.d();
    coefficient_matrix(target, v.field(), n);  // validates the target
    PolyMatrix c = v.augmented(target);
    IndexSet q_cols(d);
    for (std::size_t j = 0; j < d; ++j) q_cols[j] = j;

    for (const auto& rows : combinations(n, d)) {
        Polynomial delta = det(c.submatrix(rows, q_cols));
        if (delta.is_zero()) continue;
        CramerWitness w;
        w.index_set = rows;
        w.m = Polynomial::constant(v.field(), n, 1);
        for (std::size_t j = 0; j < d; ++j) {
            IndexSet cols = q_cols;
            cols[j] = d;  // replace column j with the target
            w.lambdas.push_back(reduce_fraction(det(c.submatrix(rows, cols)), delta));
            w.m = poly_lcm(w.m, w.lambdas.back().denominator());
        }
        // The solution over L is unique, so a failed identity means target is not in V_L.
        if (!witness_identity_holds(w, v, target)) return std::nullopt;
        return w;
    }
    throw InputError("basis has no nonzero " + std::to_string(d) + "x" + std::to_string(d) +
                     " minor; it is not independent over the fraction field");
}

std::optional<CramerWitness> span_over_fraction_field(const LinearSubspace& v) {
    return span_over_fraction_field(v, coordinate_vector(v.field(), v.n()));
}

WitnessBoundsReport verify_witness_bounds(const CramerWitness& w, const LinearSubspace& v) {
    const PolyVector y = coordinate_vector(v.field(), v.n());
    if (!witness_identity_holds(w, v, y)) throw InputError("witness does not satisfy the membership identity");
    const std::size_t d = v.d();
    WitnessBoundsReport rep;
    rep.degrees_ok = true;
    for (const auto& l : w.lambdas) {
        LambdaBounds b;
        b.zero = l.is_zero();
        b.numerator_degree = l.numerator().total_degree();
        b.denominator_degree = l.denominator().total_degree();
        if (b.zero) {
            b.homogeneous = true;
            b.coprime = true;
            b.ok = l.denominator().is_one();
        } else {
            b.homogeneous = is_homogeneous(l.numerator()).homogeneous && is_homogeneous(l.denominator()).homogeneous;
            b.coprime = poly_gcd(l.numerator(), l.denominator()).is_one();
            b.ok = b.homogeneous && b.coprime && b.numerator_degree == b.denominator_degree && *b.numerator_degree <= d;
        }
        rep.degrees_ok = rep.degrees_ok && b.ok;
        rep.lambdas.push_back(b);
    }
    PolyMatrix q = v.basis_matrix();
    IndexSet all_cols(d);
    for (std::size_t j = 0; j < d; ++j) all_cols[j] = j;
    rep.m_divides_all_minors = true;
    for (const auto& rows : combinations(v.n(), d)) {
        Polynomial delta = det(q.submatrix(rows, all_cols));
        if (delta.is_zero()) continue;
        rep.nonzero_minor_sets.push_back(rows);
        if (!divide_exact(delta, w.m)) rep.m_divides_all_minors = false;
    }
    rep.m_degree = w.m.total_degree().value_or(0);
    rep.m_degree_below_d = rep.m_degree < d;
    return rep;
}

// ------------------------------------------------------ local membership

namespace {

struct AugmentedMinor {
    IndexSet rows;
    IndexSet cols;
    Polynomial value;
};

// s x s minors of c = [Q | y] that use the y column (index d), ordered by
// row set then column set.
std::vector<AugmentedMinor> augmented_minors(const PolyMatrix& c, std::size_t s) {
    const std::size_t n = c.rows(), d = c.cols() - 1;
    auto row_sets = combinations(n, s);
    auto col_sets = combinations(d, s - 1);
    std::vector<AugmentedMinor> out(row_sets.size() * col_sets.size());
    const long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k) {
        IndexSet cols = col_sets[static_cast<std::size_t>(k) % col_sets.size()];
        cols.push_back(d);
        const IndexSet& rows = row_sets[static_cast<std::size_t>(k) / col_sets.size()];
        out[static_cast<std::size_t>(k)] = {rows, cols, det(c.submatrix(rows, cols))};
    }
    return out;
}

}  // namespace

LocalDecision ylocal_closure(const LinearSubspace& v) {
    const std::size_t n = v.n(), d = v.d();
    if (d >= n) throw InputError("y-local decision requires d < n (got d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
    const PolyMatrix q = v.basis_matrix();
    const PolyMatrix c = v.augmented(coordinate_vector(v.field(), n));

    for (std::size_t s = 1; s <= d + 1; ++s) {
        Ideal minor_ideal(v.field(), n);
        if (s <= d)
            for (auto& m : minors(q, s)) minor_ideal.add(m.value);
        const GroebnerBasis gb = buchberger(minor_ideal);
        const auto candidates = augmented_minors(c, s);

        constexpr long kNone = std::numeric_limits<long>::max();
        long first_fail = kNone;
        const long total = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic) reduction(min : first_fail)
        for (long k = 0; k < total; ++k) {
            if (k > first_fail) continue;
            const Polynomial& m = candidates[static_cast<std::size_t>(k)].value;
            if (m.is_zero()) continue;
            bool in_radical = !minor_ideal.is_zero() && radical_membership(m, gb);
            if (!in_radical) first_fail = k;
        }
        if (first_fail != kNone) {
            const auto& bad = candidates[static_cast<std::size_t>(first_fail)];
            return {false, LocalMethod::closure_radical, FailureWitness{s, bad.rows, bad.cols, bad.value, std::nullopt}};
        }
    }
    return {true, LocalMethod::closure_radical, std::nullopt};
}

namespace {

kernels::ModMatrices to_mod_matrices(const std::vector<ScalarMatrix>& mats, Field field, std::size_t n) {
    kernels::ModMatrices out;
    out.p = field.modulus();
    out.n = n;
    for (const auto& b : mats) {
        std::vector<std::uint64_t> flat(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = b(i, j).get_num().get_ui();
        out.mats.push_back(std::move(flat));
    }
    return out;
}

}  // namespace

LocalDecision ylocal_points(const LinearSubspace& v, std::uint64_t budget, kernels::Execution exec) {
    if (!v.field().is_prime_field()) throw InputError("point enumeration requires a prime field instance");
    auto count = kernels::checked_power(v.field().modulus(), v.n());
    if (!count || *count > budget)
        throw BudgetExceeded("point enumeration needs p^n points, above the budget of " + std::to_string(budget));
    auto hit = kernels::first_rank_jump(to_mod_matrices(v.coeff_matrices(), v.field(), v.n()), exec);
    if (!hit) return {true, LocalMethod::point_enumeration, std::nullopt};

    ScalarVector point;
    for (auto x : *hit) point.emplace_back(v.field(), static_cast<long>(x));
    FailureWitness w;
    w.stratum = rank(evaluate_matrix(v.basis_matrix(), point)) + 1;
    w.point = std::move(point);
    return {false, LocalMethod::point_enumeration, std::move(w)};
}

Ideal build_incidence_ideal(const LinearSubspace& v) {
    const std::size_t n = v.n(), d = v.d(), total = n + d;
    Ideal ideal(v.field(), total);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial g = -Polynomial::variable(v.field(), total, j);
        for (std::size_t i = 0; i < d; ++i)
            g += Polynomial::variable(v.field(), total, n + i) * v.basis()[i][j].extended(total);
        ideal.add(g);
    }
    return ideal;
}

// ------------------------------------------------------------------ pencil

std::vector<ScalarMatrix> pencil_decompose(const LinearSubspace& v) {
    const std::size_t n = v.n();
    if (v.d() + 1 != n) throw InputError("pencil decomposition requires d = n - 1");
    std::vector<ScalarMatrix> pencil;
    for (std::size_t j = 0; j < n; ++j) {
        ScalarMatrix a(v.field(), n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col = 0; col + 1 < n; ++col) a.set(r, col, v.coeff_matrices()[col](r, j));
            a.set(r, n - 1, r == j ? 1 : 0);
        }
        pencil.push_back(std::move(a));
    }
    return pencil;
}

std::optional<ScalarVector> common_null_test(const std::vector<ScalarMatrix>& pencil) {
    if (pencil.empty()) throw InputError("empty pencil");
    const std::size_t n = pencil[0].cols();
    const Field field = pencil[0].field();
    for (const auto& a : pencil)
        if (a.cols() != n || a.rows() != n || !(a.field() == field)) throw InputError("malformed pencil");
    ScalarMatrix stacked(field, n * pencil.size(), n);
    for (std::size_t k = 0; k < pencil.size(); ++k)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked.set(k * n + r, c, pencil[k](r, c));
    auto basis = nullspace_over_field(stacked);
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

ScalarVector coefficients_from_null_vector(const ScalarVector& p) {
    if (p.empty() || p.back().is_zero()) throw InputError("null vector has zero last coordinate");
    ScalarVector out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back(-(p[i] / p.back()));
    return out;
}

// ----------------------------------------------------------------- example

LinearSubspace example_family(std::size_t n, std::size_t d, Field field) {
    if (n < 4 || d < 3 || d >= n)
        throw InputError("example family needs n >= 4 and 3 <= d < n (got n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
    auto y = [&](std::size_t i) { return Polynomial::variable(field, n, i - 1); };
    const Polynomial zero(field, n);
    std::vector<PolyVector> basis;

    PolyVector q1 = coordinate_vector(field, n);
    q1[n - 2] -= y(1);
    basis.push_back(q1);

    PolyVector q2(n, zero);
    q2[n - 2] = y(1);
    q2[n - 1] = -y(2);
    basis.push_back(q2);

    PolyVector q3(n, zero);
    q3[n - 1] = y(1);
    basis.push_back(q3);

    for (std::size_t j = 4; j <= d; ++j) {
        PolyVector qj(n, zero);
        qj[j - 4] = y(j);
        basis.push_back(qj);
    }
    return LinearSubspace::from_vectors(field, n, std::move(basis));
}

}  // namespace locmem
