#include "locmem/kernels.hpp"

#include <stdexcept>

#include "kernels_impl.hpp"

namespace locmem::kernels {

std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (p != 0 && r > UINT64_MAX / p) return std::nullopt;
        r *= p;
    }
    return r;
}

std::size_t rank_mod_p(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint64_t p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
        const std::uint64_t pv = m[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = m[i * cols + c];
            if (f == 0) continue;
            // row_i <- pv * row_i - f * row_r keeps entries in [0, p).
            for (std::size_t j = c; j < cols; ++j)
                m[i * cols + j] = (pv * m[i * cols + j] % p + (p - f) * m[r * cols + j] % p) % p;
        }
        ++r;
    }
    return r;
}

std::vector<std::uint64_t> decode_point(std::uint64_t idx, std::uint64_t p, std::size_t n) {
    std::vector<std::uint64_t> a(n);
    for (std::size_t i = n; i-- > 0;) {
        a[i] = idx % p;
        idx /= p;
    }
    return a;
}

namespace detail {

bool has_rank_jump(const ModMatrices& coeffs, const std::vector<std::uint64_t>& a, std::vector<std::uint64_t>& scratch) {
    const std::size_t n = coeffs.n, d = coeffs.mats.size(), cols = d + 1;
    const std::uint64_t p = coeffs.p;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < d; ++i) {
            const auto& b = coeffs.mats[i];
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < n; ++c) acc = (acc + b[r * n + c] * a[c]) % p;
            scratch[r * cols + i] = acc;
        }
        scratch[r * cols + d] = a[r];
    }
    // Column-wise elimination: the last column receives a pivot exactly when
    // a is independent of the first d columns.
    std::size_t rows_used = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = rows_used;
        while (piv < n && scratch[piv * cols + c] == 0) ++piv;
        if (piv == n) continue;
        if (c == d) return true;
        if (piv != rows_used)
            for (std::size_t j = 0; j < cols; ++j) std::swap(scratch[piv * cols + j], scratch[rows_used * cols + j]);
        const std::uint64_t pv = scratch[rows_used * cols + c];
        for (std::size_t i = rows_used + 1; i < n; ++i) {
            const std::uint64_t f = scratch[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                scratch[i * cols + j] = (pv * scratch[i * cols + j] % p + (p - f) * scratch[rows_used * cols + j] % p) % p;
        }
        ++rows_used;
    }
    return false;
}

bool is_normalized(const std::vector<std::uint64_t>& u) {
    for (auto x : u)
        if (x != 0) return x == 1;
    return false;
}

std::optional<std::vector<std::uint64_t>> first_dual_vector(const ModMatrices& annihilators,
                                                            const std::vector<std::uint64_t>& u) {
    const std::size_t n = annihilators.n;
    const std::uint64_t p = annihilators.p;
    std::vector<std::vector<std::uint64_t>> w;
    w.reserve(annihilators.mats.size());
    for (const auto& c : annihilators.mats) {
        std::vector<std::uint64_t> cu(n, 0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) cu[r] = (cu[r] + c[r * n + k] * u[k]) % p;
        w.push_back(std::move(cu));
    }
    std::vector<std::uint64_t> v(n, 0);
    while (true) {
        std::uint64_t vu = 0;
        for (std::size_t k = 0; k < n; ++k) vu = (vu + v[k] * u[k]) % p;
        if (vu == 1) {
            bool ok = true;
            for (const auto& cu : w) {
                std::uint64_t s = 0;
                for (std::size_t k = 0; k < n; ++k) s = (s + v[k] * cu[k]) % p;
                if (s != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return v;
        }
        // Odometer step, last coordinate fastest.
        std::size_t k = n;
        while (k > 0 && v[k - 1] == p - 1) v[--k] = 0;
        if (k == 0) return std::nullopt;
        ++v[k - 1];
    }
}

}  // namespace detail

std::optional<std::vector<std::uint64_t>> first_rank_jump(const ModMatrices& coeffs, Execution exec) {
    if (!checked_power(coeffs.p, coeffs.n)) throw std::overflow_error("point count overflows 64 bits");
    return exec == Execution::serial ? detail::first_rank_jump_serial(coeffs) : detail::first_rank_jump_omp(coeffs);
}

std::optional<IdempotentHit> first_rank1_idempotent(const ModMatrices& annihilators, Execution exec) {
    if (!checked_power(annihilators.p, annihilators.n)) throw std::overflow_error("vector count overflows 64 bits");
    return exec == Execution::serial ? detail::first_rank1_idempotent_serial(annihilators)
                                     : detail::first_rank1_idempotent_omp(annihilators);
}

}  // namespace locmem::kernels
