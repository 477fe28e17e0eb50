#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "shadowforge/enum_kernel.hpp"
#include "shadowforge/lattice.hpp"

using namespace shadowforge;

namespace {

// Random positive-definite rational Gram matrix: D M M^T D with M unit lower
// triangular (so it is never singular) and D a positive rational diagonal.
RatMat random_gram(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    RatMat m(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < i; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(rng);
    }
    RatVec d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = rat(1, den(rng));
    RatMat g(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat s = 0;
            for (int k = 0; k < n; ++k)
                s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                     m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                s * d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)];
        }
    return g;
}

RatVec random_shift(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    RatVec s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = rat(num(rng), den(rng));
    return s;
}

std::vector<std::uint64_t> naive_quadratic_hist(std::size_t slots, std::int64_t v0,
                                                std::int64_t d0, std::int64_t dd,
                                                std::int64_t len) {
    std::vector<std::uint64_t> hist(slots, 0);
    for (std::int64_t t = 0; t < len; ++t) {
        std::int64_t v = v0 + t * d0 + t * (t - 1) / 2 * dd;
        REQUIRE(v >= 0);
        REQUIRE(v < static_cast<std::int64_t>(slots));
        ++hist[static_cast<std::size_t>(v)];
    }
    return hist;
}

}  // namespace

TEST_CASE("all kernels agree on random forms") {
    std::mt19937 rng(20240814);
    for (int iter = 0; iter < 14; ++iter) {
        int n = 1 + iter % 5;
        RatMat g = random_gram(rng, n);
        RatVec s = random_shift(rng, n);
        Rat bound = rat(2 + iter % 9, 1 + iter % 2);
        NormCounts ref = enumerate_by_norm(g, s, bound, EnumKernel::Reference);
        CAPTURE(iter);
        CHECK(enumerate_by_norm(g, s, bound, EnumKernel::Scalar) == ref);
        CHECK(enumerate_by_norm(g, s, bound, EnumKernel::Auto) == ref);
        if (avx2_available()) CHECK(enumerate_by_norm(g, s, bound, EnumKernel::Avx2) == ref);
        // the rectangular-box oracle visits the whole bounding box, so keep
        // it away from the skewest bases
        if (n <= 2) CHECK(enumerate_by_norm(g, s, bound, EnumKernel::Box) == ref);
    }
}

TEST_CASE("kernels agree on named lattices") {
    for (const char* name : {"a2", "d4", "z3", "e7"}) {
        Lattice l = builtin_lattice(name);
        RatVec zero(static_cast<std::size_t>(l.dim()), Rat(0));
        NormCounts ref = enumerate_by_norm(l.gram(), zero, Rat(6), EnumKernel::Reference);
        CAPTURE(name);
        CHECK(enumerate_by_norm(l.gram(), zero, Rat(6), EnumKernel::Scalar) == ref);
        if (l.dim() <= 4) CHECK(enumerate_by_norm(l.gram(), zero, Rat(6), EnumKernel::Box) == ref);
    }
}

TEST_CASE("known shell counts") {
    Lattice e8 = builtin_lattice("e8");
    RatVec zero8(8, Rat(0));
    NormCounts c = enumerate_by_norm(e8.gram(), zero8, Rat(4));
    CHECK(c == NormCounts{{Rat(0), 1}, {Rat(2), 240}, {Rat(4), 2160}});
    RatVec zero3(3, Rat(0));
    NormCounts z3 = enumerate_by_norm(builtin_lattice("z3").gram(), zero3, Rat(3));
    CHECK(z3 == NormCounts{{Rat(0), 1}, {Rat(1), 6}, {Rat(2), 12}, {Rat(3), 8}});
}

TEST_CASE("degenerate inputs") {
    CHECK(enumerate_by_norm({}, {}, Rat(5)) == NormCounts{{Rat(0), 1}});
    CHECK(enumerate_by_norm({{Rat(1)}}, {Rat(0)}, Rat(-1)).empty());
    CHECK_THROWS_WITH_AS(enumerate_by_norm({{Rat(1), Rat(2)}, {Rat(2), Rat(1)}},
                                           {Rat(0), Rat(0)}, Rat(1)),
                         "non-positive-definite Gram", std::domain_error);
    RatMat big(9, RatVec(9, Rat(0)));
    for (int i = 0; i < 9; ++i) big[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    CHECK_THROWS_WITH_AS(enumerate_by_norm(big, RatVec(9, Rat(0)), Rat(1), EnumKernel::Box),
                         "box enumeration supports dimension at most 8", std::invalid_argument);
}

TEST_CASE("quadratic histogram leaves match a direct evaluation") {
    // f(t) = t^2: v0 = 0, d0 = 1, dd = 2.
    std::vector<std::uint64_t> hist(600, 0);
    scalar_hist_quadratic(hist.data(), 0, 1, 2, 24);
    CHECK(hist == naive_quadratic_hist(600, 0, 1, 2, 24));

    // A downward-opening start: f(t) = (t-6)^2 + 3.
    std::vector<std::uint64_t> hist2(64, 0);
    scalar_hist_quadratic(hist2.data(), 39, -11, 2, 13);
    CHECK(hist2 == naive_quadratic_hist(64, 39, -11, 2, 13));

#if defined(SHADOWFORGE_HAVE_AVX2)
    if (avx2_available()) {
        for (std::int64_t len : {1, 2, 3, 5, 8, 9, 24, 100}) {
            std::vector<std::uint64_t> a(12000, 0), b(12000, 0);
            scalar_hist_quadratic(a.data(), 150, -21, 2, len);
            avx2_hist_quadratic(b.data(), 150, -21, 2, len);
            CAPTURE(len);
            CHECK(a == b);
        }
    }
#endif
}

TEST_CASE("ldl factorization") {
    LdlFactors f = ldl_decompose({{Rat(2), Rat(1)}, {Rat(1), Rat(2)}});
    CHECK(f.diag == RatVec{Rat(2), rat(3, 2)});
    CHECK(f.lower[1][0] == rat(1, 2));
    CHECK_THROWS_WITH_AS(ldl_decompose({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}),
                         "non-positive-definite Gram", std::domain_error);
}
