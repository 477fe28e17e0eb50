#include "shadowforge/enum_kernel.hpp"

#if defined(SHADOWFORGE_HAVE_AVX2)

#include <immintrin.h>

namespace shadowforge {

// Same contract as scalar_hist_quadratic: bump hist[f(t)] for t = 0..len-1
// where f has first difference d0 at t = 0 and constant second difference dd.
// Four consecutive values ride in one 4x64 vector; the stride-4 jump
// f(t+4) - f(t) = 4*(d0 + t*dd) + 6*dd is itself linear in t, so both the
// values and their jumps advance with plain 64-bit adds.
void avx2_hist_quadratic(std::uint64_t* hist, std::int64_t v0, std::int64_t d0,
                         std::int64_t dd, std::int64_t len) {
    std::int64_t t = 0;
    if (len >= 8) {
        std::int64_t f0 = v0;
        std::int64_t f1 = f0 + d0;
        std::int64_t f2 = f1 + d0 + dd;
        std::int64_t f3 = f2 + d0 + 2 * dd;
        __m256i v = _mm256_set_epi64x(f3, f2, f1, f0);
        __m256i g = _mm256_set_epi64x(4 * d0 + 18 * dd, 4 * d0 + 14 * dd,
                                      4 * d0 + 10 * dd, 4 * d0 + 6 * dd);
        const __m256i gstep = _mm256_set1_epi64x(16 * dd);
        alignas(32) std::int64_t lane[4];
        for (; t + 4 <= len; t += 4) {
            _mm256_store_si256(reinterpret_cast<__m256i*>(lane), v);
            ++hist[lane[0]];
            ++hist[lane[1]];
            ++hist[lane[2]];
            ++hist[lane[3]];
            v = _mm256_add_epi64(v, g);
            g = _mm256_add_epi64(g, gstep);
        }
        v0 = v0 + t * d0 + (t * (t - 1) / 2) * dd;
        d0 = d0 + t * dd;
    }
    for (; t < len; ++t) {
        ++hist[v0];
        v0 += d0;
        d0 += dd;
    }
}

}  // namespace shadowforge

#endif
