#include "kernels_impl.hpp"

namespace locmem::kernels::detail {

std::optional<std::vector<std::uint64_t>> first_rank_jump_serial(const ModMatrices& coeffs) {
    const std::uint64_t total = *checked_power(coeffs.p, coeffs.n);
    std::vector<std::uint64_t> scratch(coeffs.n * (coeffs.mats.size() + 1));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto a = decode_point(idx, coeffs.p, coeffs.n);
        if (has_rank_jump(coeffs, a, scratch)) return a;
    }
    return std::nullopt;
}

std::optional<IdempotentHit> first_rank1_idempotent_serial(const ModMatrices& annihilators) {
    const std::uint64_t total = *checked_power(annihilators.p, annihilators.n);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        auto u = decode_point(idx, annihilators.p, annihilators.n);
        if (!is_normalized(u)) continue;
        if (auto v = first_dual_vector(annihilators, u)) return IdempotentHit{std::move(u), *std::move(v)};
    }
    return std::nullopt;
}

}  // namespace locmem::kernels::detail
