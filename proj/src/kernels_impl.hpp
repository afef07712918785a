#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locmem/kernels.hpp"

namespace locmem::kernels::detail {

/// True when a lies outside the column span of [b_1 a | ... | b_d a].
/// `scratch` must hold n * (d + 1) entries.
bool has_rank_jump(const ModMatrices& coeffs, const std::vector<std::uint64_t>& a, std::vector<std::uint64_t>& scratch);

/// Is u a projective representative (first nonzero entry equal to 1)?
bool is_normalized(const std::vector<std::uint64_t>& u);

/// First v (lexicographic) with v^T u = 1 and v^T c u = 0 for all annihilators c.
std::optional<std::vector<std::uint64_t>> first_dual_vector(const ModMatrices& annihilators,
                                                            const std::vector<std::uint64_t>& u);

std::optional<std::vector<std::uint64_t>> first_rank_jump_serial(const ModMatrices& coeffs);
std::optional<std::vector<std::uint64_t>> first_rank_jump_omp(const ModMatrices& coeffs);
std::optional<IdempotentHit> first_rank1_idempotent_serial(const ModMatrices& annihilators);
std::optional<IdempotentHit> first_rank1_idempotent_omp(const ModMatrices& annihilators);

}  // namespace locmem::kernels::detail
