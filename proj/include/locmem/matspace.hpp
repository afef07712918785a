#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "locmem/localmem.hpp"

namespace locmem {

/// Subspace of n x n matrices given by a linearly independent basis.
class MatrixSubspace {
public:
    /// Throws InputError if the basis is dependent or not n x n.
    MatrixSubspace(Field field, std::size_t n, std::vector<ScalarMatrix> basis);

    static MatrixSubspace full(Field field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t codim() const { return n_ * n_ - basis_.size(); }
    const std::vector<ScalarMatrix>& basis() const { return basis_; }

    bool contains(const ScalarMatrix& m) const;
    /// Same subspace (not merely same basis).
    bool same_subspace(const MatrixSubspace& other) const;

    MatrixSubspace reduced_mod(std::uint64_t p) const;

private:
    Field field_;
    std::size_t n_;
    std::vector<ScalarMatrix> basis_;
};

/// A rank-1 idempotent u v^T, v^T u = 1.
struct Rank1Idempotent {
    ScalarVector u;
    ScalarVector v;
    ScalarMatrix matrix() const;
};

/// The coefficient matrices of V's basis.
MatrixSubspace flat(const LinearSubspace& v);
/// The vector of linear forms b y.
PolyVector unflat(const ScalarMatrix& b);

/// Tr(a b).
Scalar trace_pairing(const ScalarMatrix& a, const ScalarMatrix& b);

/// Orthogonal complement under the trace pairing.
MatrixSubspace perp(const MatrixSubspace& w);

/// Decides whether W contains no rank-1 idempotent over the algebraic
/// closure, through the y-local property of V = unflat(perp(W)). Codimension
/// 0 is reported as not r1-free with witness E_11. Requires codim(W) < n.
struct R1FreeDecision {
    bool r1_free = false;
    LocalDecision local;                       // decision on V when codim >= 1
    std::optional<Rank1Idempotent> witness;    // codimension 0 only
};
R1FreeDecision is_r1_free_closure(const MatrixSubspace& w);

/// Same decision at rational points over F_p via ylocal_points.
R1FreeDecision is_r1_free_points(const MatrixSubspace& w, std::uint64_t budget,
                                 kernels::Execution exec = kernels::Execution::parallel);

/// Exhaustive search for a rank-1 idempotent in W over F_p. Throws
/// BudgetExceeded when p^(2n) > budget.
std::optional<Rank1Idempotent> find_rank1_idempotent_bruteforce(const MatrixSubspace& w, std::uint64_t budget,
                                                                kernels::Execution exec = kernels::Execution::parallel);

bool is_subspace_of_tracezero(const MatrixSubspace& w);

}  // namespace locmem
