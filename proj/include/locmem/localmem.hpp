#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "locmem/groebner.hpp"
#include "locmem/kernels.hpp"
#include "locmem/polymat.hpp"

namespace locmem {

using PolyVector = std::vector<Polynomial>;

/// A d-dimensional space V of n-vectors of linear forms, with basis q_1..q_d
/// and coefficient matrices b_i satisfying q_i = b_i y.
class LinearSubspace {
public:
    /// Every component must be 0 or a linear form; no basis vector may be zero.
    static LinearSubspace from_vectors(Field field, std::size_t n, std::vector<PolyVector> basis);
    static LinearSubspace from_matrices(Field field, std::size_t n, std::vector<ScalarMatrix> coeffs);

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t d() const { return basis_.size(); }
    const std::vector<PolyVector>& basis() const { return basis_; }
    const std::vector<ScalarMatrix>& coeff_matrices() const { return coeffs_; }

    /// The n x d matrix Q with columns q_1..q_d.
    PolyMatrix basis_matrix() const;
    /// [Q | target].
    PolyMatrix augmented(const PolyVector& target) const;

    /// Same coefficient matrices read in F_p.
    LinearSubspace reduced_mod(std::uint64_t p) const;

private:
    LinearSubspace(Field field, std::size_t n, std::vector<PolyVector> basis, std::vector<ScalarMatrix> coeffs)
        : field_(field), n_(n), basis_(std::move(basis)), coeffs_(std::move(coeffs)) {}

    Field field_;
    std::size_t n_ = 0;
    std::vector<PolyVector> basis_;
    std::vector<ScalarMatrix> coeffs_;
};

/// The coordinate vector y = (y_1, ..., y_n).
PolyVector coordinate_vector(Field field, std::size_t n);

/// b with q = b y; throws if some component is not a linear form.
ScalarMatrix coefficient_matrix(const PolyVector& q, Field field, std::size_t n);
/// The vector b y.
PolyVector linear_forms(const ScalarMatrix& b);

/// Cramer-rule coefficients expressing a target in the L-span of a basis.
struct CramerWitness {
    IndexSet index_set;                   // rows I with det(Q_I) != 0
    std::vector<RationalFunction> lambdas;  // reduced h_j / k_j
    Polynomial m;                         // lcm of the denominators
};

enum class LocalMethod { closure_radical, point_enumeration };

struct FailureWitness {
    std::size_t stratum = 0;  // minor size s
    IndexSet rows;
    IndexSet cols;  // columns of [Q | y]; the last index is the y column
    std::optional<Polynomial> minor;
    std::optional<ScalarVector> point;
};

struct LocalDecision {
    bool holds = false;
    LocalMethod method = LocalMethod::closure_radical;
    std::optional<FailureWitness> failure;
};

bool check_free_rank(const LinearSubspace& v);

/// Coefficients alpha in F with target = sum alpha_i q_i, if any.
std::optional<ScalarVector> span_over_field(const LinearSubspace& v, const PolyVector& target);
std::optional<ScalarVector> span_over_field(const LinearSubspace& v);

/// Cramer witness over the fraction field, or empty when the target is not
/// in V_L. Throws InputError when Q has no nonzero d x d minor.
std::optional<CramerWitness> span_over_fraction_field(const LinearSubspace& v, const PolyVector& target);
std::optional<CramerWitness> span_over_fraction_field(const LinearSubspace& v);

/// Does sum lambda_j q_j equal the target in every component?
bool witness_identity_holds(const CramerWitness& w, const LinearSubspace& v, const PolyVector& target);

struct LambdaBounds {
    bool zero = false;
    std::optional<unsigned> numerator_degree;
    std::optional<unsigned> denominator_degree;
    bool homogeneous = false;
    bool coprime = false;
    bool ok = false;
};

struct WitnessBoundsReport {
    std::vector<LambdaBounds> lambdas;
    bool degrees_ok = false;  // every lambda homogeneous, coprime, equal degrees <= d
    std::vector<IndexSet> nonzero_minor_sets;
    bool m_divides_all_minors = false;
    unsigned m_degree = 0;
    bool m_degree_below_d = false;
    bool passes() const { return degrees_ok && m_divides_all_minors; }
};

/// Checks the degree, divisibility and lcm-degree bounds of a verified
/// witness for target y. Throws InputError when the witness identity fails.
WitnessBoundsReport verify_witness_bounds(const CramerWitness& w, const LinearSubspace& v);

/// Decides the y-local membership property over the algebraic closure: for
/// every s, every s x s minor of [Q | y] that uses the y column must lie in
/// the radical of the ideal of s x s minors of Q. Requires d < n.
LocalDecision ylocal_closure(const LinearSubspace& v);

/// Checks rank [Q | y](a) = rank Q(a) at every a in F_p^n. Throws
/// BudgetExceeded when p^n > budget.
LocalDecision ylocal_points(const LinearSubspace& v, std::uint64_t budget,
                            kernels::Execution exec = kernels::Execution::parallel);

/// Generators c_1 q_{1,j} + ... + c_d q_{d,j} - y_j, j = 1..n, in the ring
/// with variables y_1..y_n, c_1..c_d.
Ideal build_incidence_ideal(const LinearSubspace& v);

/// A_1..A_n with [q_1 ... q_{n-1} | y] = sum_j y_j A_j. Requires d = n - 1.
std::vector<ScalarMatrix> pencil_decompose(const LinearSubspace& v);

/// A nonzero common null vector of the pencil, if any.
std::optional<ScalarVector> common_null_test(const std::vector<ScalarMatrix>& pencil);

/// Coefficients -p_i / p_n read off a common null vector.
ScalarVector coefficients_from_null_vector(const ScalarVector& p);

/// q_1 = y - y_1 e_{n-1}, q_2 = y_1 e_{n-1} - y_2 e_n, q_3 = y_1 e_n and
/// q_j = y_j e_{j-3} for 4 <= j <= d. Requires n >= 4 and 3 <= d < n.
LinearSubspace example_family(std::size_t n, std::size_t d, Field field = Field::rationals());

}  // namespace locmem
