#pragma once

#include "shadowforge/rational.hpp"

#include <cstdint>
#include <map>

namespace shadowforge {

/// Exact norm histogram: value of the quadratic form -> number of vectors.
using NormCounts = std::map<Rat, std::uint64_t>;

/// Selects how enumerate_by_norm runs.  Every kernel produces identical,
/// exact results; they differ only in speed:
///   - Reference: the whole bounded depth-first search in rational
///     arithmetic.  Always available, never overflows, slow.
///   - Scalar: search state scaled to 64-bit integers (exactness proven by
///     a preflight bound analysis; falls back to Reference when the bounds
///     do not fit).
///   - Avx2: Scalar with the innermost loop vectorized; requires CPU
///     support (see avx2_available), otherwise an error.
///   - Box: independent rectangular-bound enumeration for dimension <= 8,
///     used as a cross-check oracle.
///   - Auto: Avx2 when supported, else Scalar.
enum class EnumKernel { Auto, Reference, Scalar, Avx2, Box };

bool avx2_available();

/// gram = lower * diag * lower^T with unit lower-triangular `lower`.
/// Throws std::domain_error("non-positive-definite Gram") when a pivot
/// fails to be positive.
struct LdlFactors {
    RatMat lower;
    RatVec diag;
};
LdlFactors ldl_decompose(const RatMat& gram);

/// Counts the vectors u + shift (u ranging over all integer vectors) whose
/// quadratic-form value (u+shift) gram (u+shift)^T is at most max_norm,
/// grouped by exact value.  Deterministic; the kernel choice never changes
/// the result.
NormCounts enumerate_by_norm(const RatMat& gram, const RatVec& shift, const Rat& max_norm,
                             EnumKernel kernel = EnumKernel::Auto);

/// Innermost histogram loop shared by the fast kernels: bumps hist[f(t)]
/// for t = 0..len-1, where f is the integer-valued quadratic with
/// f(0) = v0, first difference d0 = f(1)-f(0) and constant second
/// difference dd.  All values are guaranteed in-range by the caller.
void scalar_hist_quadratic(std::uint64_t* hist, std::int64_t v0, std::int64_t d0,
                           std::int64_t dd, std::int64_t len);
#if defined(SHADOWFORGE_HAVE_AVX2)
void avx2_hist_quadratic(std::uint64_t* hist, std::int64_t v0, std::int64_t d0,
                         std::int64_t dd, std::int64_t len);
#endif

}  // namespace shadowforge
