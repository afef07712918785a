#include <cstdint>
#include <limits>

#include "kernels_impl.hpp"

namespace locmem::kernels::detail {

namespace {
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
}

// Every thread scans its share of indices; the minimum failing index wins,
// which reproduces the serial answer regardless of the schedule.
std::optional<std::vector<std::uint64_t>> first_rank_jump_omp(const ModMatrices& coeffs) {
    const std::int64_t total = static_cast<std::int64_t>(*checked_power(coeffs.p, coeffs.n));
    std::uint64_t best = kNone;
#pragma omp parallel reduction(min : best)
    {
        std::vector<std::uint64_t> scratch(coeffs.n * (coeffs.mats.size() + 1));
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            const auto uidx = static_cast<std::uint64_t>(idx);
            if (uidx > best) continue;
            if (has_rank_jump(coeffs, decode_point(uidx, coeffs.p, coeffs.n), scratch)) best = uidx;
        }
    }
    if (best == kNone) return std::nullopt;
    return decode_point(best, coeffs.p, coeffs.n);
}

std::optional<IdempotentHit> first_rank1_idempotent_omp(const ModMatrices& annihilators) {
    const std::int64_t total = static_cast<std::int64_t>(*checked_power(annihilators.p, annihilators.n));
    std::uint64_t best = kNone;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (std::int64_t idx = 1; idx < total; ++idx) {
        const auto uidx = static_cast<std::uint64_t>(idx);
        if (uidx > best) continue;
        auto u = decode_point(uidx, annihilators.p, annihilators.n);
        if (!is_normalized(u)) continue;
        if (first_dual_vector(annihilators, u)) best = uidx;
    }
    if (best == kNone) return std::nullopt;
    auto u = decode_point(best, annihilators.p, annihilators.n);
    auto v = first_dual_vector(annihilators, u);
    return IdempotentHit{std::move(u), *std::move(v)};
}

}  // namespace locmem::kernels::detail
