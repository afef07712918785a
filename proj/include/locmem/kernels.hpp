#pragma once

// Enumeration kernels over small prime fields.
//
// Each kernel has a serial reference and an OpenMP version. Both return the
// first hit in the same fixed enumeration order, so their results are
// identical; the serial versions are kept for testing and benchmarking.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace locmem::kernels {

/// A list of n x n matrices with entries in [0, p), row-major.
struct ModMatrices {
    std::uint64_t p = 2;
    std::size_t n = 0;
    std::vector<std::vector<std::uint64_t>> mats;
};

enum class Execution { serial, parallel };

/// p^e, or empty on 64-bit overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t e);

/// Rank of a rows x cols matrix mod p; the matrix is overwritten.
std::size_t rank_mod_p(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint64_t p);

/// Point a of F_p^n with index `idx`; coordinate 0 is the most significant
/// digit, so increasing indices enumerate points lexicographically.
std::vector<std::uint64_t> decode_point(std::uint64_t idx, std::uint64_t p, std::size_t n);

/// First point a (lexicographic) with rank [b_1 a | ... | b_d a | a] >
/// rank [b_1 a | ... | b_d a], where `coeffs` holds b_1..b_d.
std::optional<std::vector<std::uint64_t>> first_rank_jump(const ModMatrices& coeffs, Execution exec);

struct IdempotentHit {
    std::vector<std::uint64_t> u;
    std::vector<std::uint64_t> v;
};

/// First (u, v) with v^T u = 1 and v^T c u = 0 for every c in
/// `annihilators`. u runs over vectors whose first nonzero entry is 1 and v
/// over all of F_p^n, both lexicographically, u outermost.
std::optional<IdempotentHit> first_rank1_idempotent(const ModMatrices& annihilators, Execution exec);

}  // namespace locmem::kernels
